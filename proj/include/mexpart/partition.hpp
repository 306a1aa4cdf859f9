/*
 * Copyright 2026 The mexpart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace mexpart {

using Part = std::uint32_t;
using Weight = std::uint64_t;

/// An integer partition stored in normalized form: parts weakly decreasing,
/// every part at least 1. The empty partition is the unique partition of 0.
///
/// Constructors sort their input and reject zero parts, so two partitions
/// compare equal exactly when they have the same multiset of parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts);

  std::span<const Part> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  Part operator[](std::size_t k) const noexcept { return parts_[k]; }

  /// Largest part, or 0 for the empty partition.
  Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  Weight weight() const noexcept;

  /// Number of parts equal to `size`.
  std::size_t multiplicity(Part size) const noexcept;
  bool contains(Part size) const noexcept { return multiplicity(size) != 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part sequence; descending enumeration order is the
  // reverse of this.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
};

/// The maximal run of consecutive integers missing from a partition that
/// starts at its mex. A run with no finite length means no part is >= start.
struct MexSequence {
  Part start = 1;
  std::optional<Part> finite_length;

  bool is_infinite() const noexcept { return !finite_length.has_value(); }
  bool length_at_least(Part r) const noexcept {
    return is_infinite() || *finite_length >= r;
  }

  friend bool operator==(const MexSequence&, const MexSequence&) = default;
};

/// Least positive integer that is not a part.
Part mex(const Partition& p);
MexSequence mex_sequence(const Partition& p);

/// Ferrers-diagram transpose: part k of the result counts parts >= k.
Partition conjugate(const Partition& p);

/// True iff every size from 1 to the largest part occurs.
bool has_no_gaps(const Partition& p);
bool has_distinct_parts(const Partition& p);
bool has_only_odd_parts(const Partition& p);

/// Part-wise sum after padding the shorter operand with zeros.
Partition oplus(const Partition& a, const Partition& b);

/// Multiset union of the parts of both operands.
Partition merge_parts(const Partition& a, const Partition& b);

/// Glaisher: each distinct part 2^a * b (b odd) becomes 2^a copies of b.
/// Throws DomainError if a part repeats.
Partition glaisher_split(const Partition& distinct);

/// Glaisher inverse: an odd part b with multiplicity sum(e_i 2^i) becomes
/// the parts 2^i * b with e_i = 1. Throws DomainError on an even part.
Partition glaisher_merge(const Partition& odd);

}  // namespace mexpart
