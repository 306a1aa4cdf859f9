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

// Cross-checks between exhaustive enumeration, the bijections and the
// generating functions. Failures are collected, never thrown, so one run shows
// every discrepancy.

#include <string>
#include <vector>

namespace mexpart {

struct Check {
  std::string name;        // e.g. "count obar = gf"
  std::string parameters;  // e.g. "n=7 r=2"
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool overall() const noexcept;
  std::size_t failures() const noexcept;
  void append(VerificationReport other);
};

/// For 0 <= n <= max_n and 1 <= r <= max_r, compares the enumerated sizes of
/// pmex(r), obar(r) and pe(r) (odd r) or po2(r) (even r) against the series
/// coefficient of gf_pmex(r) at n. Cells run concurrently; check order is
/// (n, r) row-major regardless.
VerificationReport verify_counts(unsigned max_n, unsigned max_r);

/// For the same grid, applies inverse after forward (and forward after
/// inverse) to every object of every applicable pair of maps, checking
/// identity, weight and codomain membership.
VerificationReport verify_roundtrips(unsigned max_n, unsigned max_r);

/// Recomputes one of the six worked tables (1..6) as text. Throws
/// ParameterError for any other id.
std::string reproduce_table(int id);

/// One line per check: "PASS|FAIL <name> [<parameters>] expected=.. actual=..".
std::string format_check(const Check& check);

}  // namespace mexpart
