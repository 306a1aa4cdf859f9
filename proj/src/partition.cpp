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
#include "mexpart/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "mexpart/error.hpp"

namespace mexpart {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (std::ranges::find(parts_, Part{0}) != parts_.end())
    throw DomainError("partition parts must be positive");
  std::ranges::sort(parts_, std::greater<>{});
}

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(std::vector<Part>(parts)) {}

Weight Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Weight{0});
}

std::size_t Partition::multiplicity(Part size) const noexcept {
  auto [lo, hi] = std::ranges::equal_range(parts_, size, std::greater<>{});
  return static_cast<std::size_t>(hi - lo);
}

Part mex(const Partition& p) {
  // Parts are sorted descending, so walk from the smallest one upward.
  Part candidate = 1;
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
    if (*it == candidate)
      ++candidate;
    else if (*it > candidate)
      break;
  }
  return candidate;
}

MexSequence mex_sequence(const Partition& p) {
  MexSequence seq;
  seq.start = mex(p);
  // Smallest part above the mex ends the run.
  std::optional<Part> next_present;
  for (Part part : p.parts()) {
    if (part > seq.start)
      next_present = part;
    else
      break;
  }
  if (next_present)
    seq.finite_length = *next_present - seq.start;
  return seq;
}

Partition conjugate(const Partition& p) {
  std::vector<Part> result(p.largest(), 0);
  for (Part part : p.parts())
    for (Part k = 0; k < part; ++k) ++result[k];
  return Partition(std::move(result));
}

bool has_no_gaps(const Partition& p) {
  return p.empty() || mex(p) == p.largest() + 1;
}

bool has_distinct_parts(const Partition& p) {
  return std::ranges::adjacent_find(p.parts()) == p.parts().end();
}

bool has_only_odd_parts(const Partition& p) {
  return std::ranges::all_of(p.parts(), [](Part x) { return x % 2 == 1; });
}

Partition oplus(const Partition& a, const Partition& b) {
  const auto& longer = a.size() >= b.size() ? a : b;
  const auto& shorter = a.size() >= b.size() ? b : a;
  std::vector<Part> sum(longer.parts().begin(), longer.parts().end());
  for (std::size_t k = 0; k < shorter.size(); ++k) sum[k] += shorter[k];
  return Partition(std::move(sum));
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<Part> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

Partition glaisher_split(const Partition& distinct) {
  if (!has_distinct_parts(distinct))
    throw DomainError("glaisher_split needs distinct parts");
  std::vector<Part> odd;
  for (Part part : distinct.parts()) {
    Part copies = 1;
    while (part % 2 == 0) {
      part /= 2;
      copies *= 2;
    }
    odd.insert(odd.end(), copies, part);
  }
  return Partition(std::move(odd));
}

Partition glaisher_merge(const Partition& odd) {
  if (!has_only_odd_parts(odd))
    throw DomainError("glaisher_merge needs odd parts");
  std::map<Part, std::size_t> multiplicity;
  for (Part part : odd.parts()) ++multiplicity[part];
  std::vector<Part> distinct;
  for (auto [size, count] : multiplicity) {
    for (Part scale = 1; count != 0; count >>= 1, scale *= 2)
      if (count & 1) distinct.push_back(scale * size);
  }
  return Partition(std::move(distinct));
}

}  // namespace mexpart
