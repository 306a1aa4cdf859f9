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

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "mexpart/partition.hpp"

namespace mexpart {

/// An overpartition as the pair (overlined parts, plain parts). The overlined
/// component must have distinct parts.
class Overpartition {
 public:
  Overpartition() = default;
  Overpartition(Partition overlined, Partition plain);

  const Partition& overlined() const noexcept { return overlined_; }
  const Partition& plain() const noexcept { return plain_; }
  Weight weight() const noexcept { return overlined_.weight() + plain_.weight(); }

  friend bool operator==(const Overpartition&, const Overpartition&) = default;

 private:
  Partition overlined_;
  Partition plain_;
};

enum class Color : std::uint8_t { first = 1, second = 2 };

struct ColoredPart {
  Part size = 1;
  Color color = Color::first;
  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Multiset of odd parts, each carrying one of two colors. Stored in
/// canonical order: size descending, first color before second within a size.
/// The bound on which sizes may carry the second color belongs to the family,
/// not to the object; see in_two_colored_odd().
class ColoredPartition {
 public:
  ColoredPartition() = default;
  explicit ColoredPartition(std::vector<ColoredPart> parts);

  const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  Weight weight() const noexcept;

  /// Sizes carrying the given color, as a partition.
  Partition with_color(Color c) const;

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  std::vector<ColoredPart> parts_;
};

enum class Family {
  partitions,            // p
  overpartitions,        // pbar
  mex_at_least,          // pmex: mex sequence of length >= r
  restricted_overpartitions,  // obar: plain parts > r with the parity of r+1
  no_small_even,         // pe: no even part < r, r odd
  two_colored_odd,       // po2: odd parts, sizes > r may take color 2, r even
};

/// A family together with its parameter. Construct through make(), which
/// enforces the parameter constraints.
struct FamilyId {
  Family family = Family::partitions;
  unsigned r = 0;

  static FamilyId make(Family family, unsigned r = 0);
  bool operator==(const FamilyId&) const = default;
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> family_from_name(std::string_view name) noexcept;
bool family_takes_r(Family f) noexcept;

using FamilyObject = std::variant<Partition, Overpartition, ColoredPartition>;

// Membership predicates; these are the only definitions of the filtered
// families.
bool in_mex_at_least(const Partition& p, unsigned r);
bool in_restricted_overpartitions(const Overpartition& op, unsigned r);
bool in_no_small_even(const Partition& p, unsigned r);
bool in_two_colored_odd(const ColoredPartition& c, unsigned r);
bool is_member(const FamilyId& f, const FamilyObject& obj);

// Unfiltered generators, in enumeration order.
std::vector<Partition> all_partitions(unsigned n);
std::vector<Overpartition> all_overpartitions(unsigned n);
/// Odd-part partitions of n with every part free to take either color.
std::vector<ColoredPartition> all_two_colored_odd(unsigned n);

/// Members of weight n, each once. Order is by size sequence descending,
/// ties broken by the mark sequence ascending (unmarked or first color
/// before overlined or second color) read in canonical part order.
std::vector<FamilyObject> enumerate_family(const FamilyId& f, unsigned n);
std::uint64_t count_family(const FamilyId& f, unsigned n);

// Typed shortcuts over enumerate_family for callers that know the kind.
std::vector<Partition> mex_at_least_members(unsigned r, unsigned n);
std::vector<Overpartition> restricted_overpartition_members(unsigned r, unsigned n);
std::vector<Partition> no_small_even_members(unsigned r, unsigned n);
std::vector<ColoredPartition> two_colored_odd_members(unsigned r, unsigned n);

}  // namespace mexpart
