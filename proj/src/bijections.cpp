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
#include "mexpart/bijections.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "mexpart/error.hpp"
#include "mexpart/text.hpp"

namespace mexpart {

namespace {

void require_r(unsigned r) {
  if (r < 1) throw ParameterError("r must be at least 1");
}

void require_odd_r(unsigned r) {
  require_r(r);
  if (r % 2 == 0) throw ParameterError("this map needs odd r, got " + std::to_string(r));
}

void require_even_r(unsigned r) {
  require_r(r);
  if (r % 2 == 1) throw ParameterError("this map needs even r, got " + std::to_string(r));
}

void require_restricted(const Overpartition& op, unsigned r) {
  if (!in_restricted_overpartitions(op, r))
    throw DomainError("'" + to_text(op) + "' has a plain part that is not > " +
                      std::to_string(r) + " with the parity of r+1");
}

}  // namespace

SigmaDecomposition sigma_decompose(const Partition& kappa, unsigned r) {
  require_r(r);
  const MexSequence seq = mex_sequence(kappa);
  if (seq.is_infinite())
    throw DomainError("'" + to_text(kappa) + "' has no gaps; nothing to decompose");
  if (!seq.length_at_least(r))
    throw DomainError("mex sequence of '" + to_text(kappa) + "' is shorter than " +
                      std::to_string(r));

  const Part m = seq.start;
  std::size_t above = 0;
  while (above < kappa.size() && kappa[above] > m) ++above;
  if (above == 0) throw std::logic_error("finite mex sequence without a larger part");

  std::vector<Part> sigma(kappa.size());
  std::vector<Part> delta(above);
  Part next = m - 1;  // sigma_{i+1}, possibly 0
  for (std::size_t l = above; l-- > 0;) {
    const Part diff = kappa[l] - next;
    sigma[l] = diff % 2 == (r + 1) % 2 ? next : next + 1;
    delta[l] = kappa[l] - sigma[l];
    next = sigma[l];
  }
  for (std::size_t l = above; l < kappa.size(); ++l) sigma[l] = kappa[l];
  std::erase(sigma, Part{0});

  return {Partition(std::move(delta)), Partition(std::move(sigma)), r};
}

Overpartition mex_to_overpartition(const Partition& kappa, unsigned r) {
  require_r(r);
  const MexSequence seq = mex_sequence(kappa);
  if (!seq.length_at_least(r))
    throw DomainError("mex sequence of '" + to_text(kappa) + "' is shorter than " +
                      std::to_string(r));
  if (seq.is_infinite()) return Overpartition(conjugate(kappa), Partition{});
  auto split = sigma_decompose(kappa, r);
  return Overpartition(conjugate(split.sigma), std::move(split.delta));
}

Partition overpartition_to_mex(const Overpartition& op, unsigned r) {
  require_r(r);
  require_restricted(op, r);
  return oplus(conjugate(op.overlined()), op.plain());
}

Overpartition no_small_even_to_overpartition(const Partition& p, unsigned r) {
  require_odd_r(r);
  if (!in_no_small_even(p, r))
    throw DomainError("'" + to_text(p) + "' has an even part below " + std::to_string(r));
  std::vector<Part> odd, even;
  for (Part x : p.parts()) (x % 2 ? odd : even).push_back(x);
  return Overpartition(glaisher_merge(Partition(std::move(odd))), Partition(std::move(even)));
}

Partition overpartition_to_no_small_even(const Overpartition& op, unsigned r) {
  require_odd_r(r);
  require_restricted(op, r);
  return merge_parts(glaisher_split(op.overlined()), op.plain());
}

Overpartition colored_to_overpartition(const ColoredPartition& c, unsigned r) {
  require_even_r(r);
  if (!in_two_colored_odd(c, r))
    throw DomainError("'" + to_text(c) + "' has a second-color part not above " +
                      std::to_string(r));
  return Overpartition(glaisher_merge(c.with_color(Color::first)),
                       c.with_color(Color::second));
}

ColoredPartition overpartition_to_colored(const Overpartition& op, unsigned r) {
  require_even_r(r);
  require_restricted(op, r);
  std::vector<ColoredPart> parts;
  const Partition first = glaisher_split(op.overlined());
  for (Part x : first.parts()) parts.push_back({x, Color::first});
  for (Part x : op.plain().parts()) parts.push_back({x, Color::second});
  return ColoredPartition(std::move(parts));
}

}  // namespace mexpart
