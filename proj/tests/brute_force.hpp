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

// Test-only reference computations. Nothing here calls into the library: the
// objects are plain vectors and every definition is spelled out directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace brute {

using Parts = std::vector<unsigned>;  // weakly decreasing

// Partitions of n built from ascending parts and then reversed, a different
// route from the library's descending generator.
inline void ascending(unsigned remaining, unsigned min_part, Parts& prefix,
                      std::vector<Parts>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix.rbegin(), prefix.rend());
    return;
  }
  for (unsigned part = min_part; part <= remaining; ++part) {
    prefix.push_back(part);
    ascending(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<Parts> partitions(unsigned n) {
  std::vector<Parts> out;
  Parts prefix;
  ascending(n, 1, prefix, out);
  return out;
}

inline std::set<Parts> partition_set(unsigned n) {
  auto all = partitions(n);
  return {all.begin(), all.end()};
}

inline bool present(const Parts& p, unsigned x) {
  return std::find(p.begin(), p.end(), x) != p.end();
}

inline unsigned mex(const Parts& p) {
  unsigned m = 1;
  while (present(p, m)) ++m;
  return m;
}

// Run of missing integers from the mex; nullopt when it never ends.
inline std::optional<unsigned> run_length(const Parts& p) {
  const unsigned m = mex(p);
  const unsigned top = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  if (top < m) return std::nullopt;
  unsigned length = 0;
  while (!present(p, m + length)) ++length;
  return length;
}

inline bool mex_at_least(const Parts& p, unsigned r) {
  auto len = run_length(p);
  return !len || *len >= r;
}

// Conjugate by drawing the Ferrers diagram and reading its columns.
inline Parts conjugate(const Parts& p) {
  const unsigned width = p.empty() ? 0 : p.front();
  std::vector<std::vector<bool>> grid(p.size(), std::vector<bool>(width, false));
  for (std::size_t row = 0; row < p.size(); ++row)
    for (unsigned col = 0; col < p[row]; ++col) grid[row][col] = true;
  Parts result;
  for (unsigned col = 0; col < width; ++col) {
    unsigned height = 0;
    for (std::size_t row = 0; row < p.size(); ++row) height += grid[row][col] ? 1 : 0;
    result.push_back(height);
  }
  return result;
}

// Distinct-part partitions of n by scanning every subset of {1..n}.
inline std::uint64_t distinct_count(unsigned n) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    unsigned sum = 0;
    for (unsigned k = 0; k < n; ++k)
      if (mask >> k & 1) sum += k + 1;
    if (sum == n) ++count;
  }
  return count;
}

inline std::uint64_t count_if(unsigned n, const std::function<bool(const Parts&)>& pred) {
  std::uint64_t c = 0;
  for (const auto& p : partitions(n))
    if (pred(p)) ++c;
  return c;
}

}  // namespace brute
