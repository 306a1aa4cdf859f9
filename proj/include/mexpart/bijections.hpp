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

#include "mexpart/families.hpp"

namespace mexpart {

/// kappa = oplus(delta, sigma) where every delta part is > r with the parity
/// of r+1 and sigma has no gaps.
struct SigmaDecomposition {
  Partition delta;
  Partition sigma;
  unsigned r = 1;

  friend bool operator==(const SigmaDecomposition&, const SigmaDecomposition&) = default;
};

/// Splits a partition whose mex sequence is finite with length >= r.
///
/// With m the mex and i the number of parts above m, the run
/// sigma_{i+1} = m-1, then for l = i..1 sigma_l stays equal to sigma_{l+1}
/// when kappa_l - sigma_{l+1} has the parity of r+1 and otherwise steps up by
/// one. The remaining parts of kappa (all below m) complete sigma.
/// Throws DomainError for an infinite mex sequence or one shorter than r.
SigmaDecomposition sigma_decompose(const Partition& kappa, unsigned r);

// Partitions with mex sequence length >= r  <->  restricted overpartitions.
// Forward: no gaps maps to (conjugate, nothing plain); otherwise
// (conjugate(sigma), delta). Inverse: oplus(conjugate(overlined), plain).
Overpartition mex_to_overpartition(const Partition& kappa, unsigned r);
Partition overpartition_to_mex(const Overpartition& op, unsigned r);

// Odd r: partitions with no even part below r  <->  restricted overpartitions.
// Odd parts go through glaisher_merge and become overlined; even parts stay
// plain. r = 1 is the plain partition case.
Overpartition no_small_even_to_overpartition(const Partition& p, unsigned r);
Partition overpartition_to_no_small_even(const Overpartition& op, unsigned r);

// Even r: two-colored odd partitions  <->  restricted overpartitions.
// First-color parts go through glaisher_merge; second-color parts stay plain.
Overpartition colored_to_overpartition(const ColoredPartition& c, unsigned r);
ColoredPartition overpartition_to_colored(const Overpartition& op, unsigned r);

}  // namespace mexpart
