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

// Acceptance suite. Every criterion is exact integer combinatorics; each one
// also has a wall-clock budget. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.
//
// usage: mexpart_acceptance <path to mexpart CLI> <golden dir>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mexpart/bijections.hpp"
#include "mexpart/families.hpp"
#include "mexpart/oracle.hpp"
#include "mexpart/qseries.hpp"
#include "mexpart/text.hpp"

using namespace mexpart;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::set<std::string> text_set(const FamilyId& f, unsigned n) {
  std::set<std::string> out;
  for (const auto& obj : enumerate_family(f, n)) out.insert(to_text(obj));
  return out;
}

std::string run_command(const std::string& command, int& status) {
  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return output;
  }
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  status = ::pclose(pipe);
  return output;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent route to p(n): Euler's pentagonal-number recurrence.
Coefficient pentagonal_partition_count(unsigned n) {
  std::vector<Coefficient> p(n + 1);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(m)) break;
      const int sign = k % 2 == 1 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= static_cast<long>(m)) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

Outcome small_constants() {
  Outcome o;
  const std::set<std::string> p4{"4", "3 1", "2 2", "2 1 1", "1 1 1 1"};
  const std::set<std::string> pbar4{"4",      "~4",      "3 1",    "3 ~1",     "~3 1",
                                    "~3 ~1",  "2 2",     "~2 2",   "2 1 1",    "2 ~1 1",
                                    "~2 1 1", "~2 ~1 1", "1 1 1 1", "~1 1 1 1"};
  const std::set<std::string> po2_6{"5_1 1_1", "5_2 1_1", "3_1 3_1", "3_1 3_2", "3_2 3_2",
                                    "3_1 1_1 1_1 1_1", "3_2 1_1 1_1 1_1",
                                    "1_1 1_1 1_1 1_1 1_1 1_1"};
  const auto f_p = FamilyId::make(Family::partitions);
  const auto f_pbar = FamilyId::make(Family::overpartitions);
  const auto f_po2 = FamilyId::make(Family::two_colored_odd, 2);
  o.require(count_family(f_p, 4) == 5 && text_set(f_p, 4) == p4, "P(4)");
  o.require(count_family(f_pbar, 4) == 14 && text_set(f_pbar, 4) == pbar4, "Pbar(4)");
  o.require(count_family(f_po2, 6) == 8 && text_set(f_po2, 6) == po2_6, "Po2>2(6)");
  return o;
}

Outcome table_reproduction(const std::string& cli, const std::string& golden) {
  Outcome o;
  for (int id = 1; id <= 6; ++id) {
    int status = 0;
    const auto out = run_command("'" + cli + "' table --id " + std::to_string(id), status);
    const auto want = read_file(golden + "/table" + std::to_string(id) + ".txt");
    o.require(status == 0, "table " + std::to_string(id) + " exit status");
    o.require(!want.empty() && out == want, "table " + std::to_string(id) + " differs from golden");
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const Partition kappa{8, 7, 3, 2, 1, 1};
  o.require(to_text(mex_to_overpartition(kappa, 2)) == "~6 ~4 ~3 3 3 ~2 ~1", "t5 r=2 image");
  o.require(to_text(mex_to_overpartition(kappa, 3)) == "~6 ~4 4 4 ~3 ~1", "t5 r=3 image");
  const auto back = overpartition_to_mex(parse_overpartition("~5 5 ~3 3 3 ~2 ~1"), 2);
  o.require(back == Partition{9, 6, 5, 1, 1}, "t5inv r=2 image");
  o.require(mex_sequence(back) == MexSequence{2, 3}, "t5inv r=2 mex sequence (2,3,4)");
  return o;
}

Outcome four_way_counts() {
  Outcome o;
  const auto report = verify_counts(30, 8);
  // 31 weights x 8 values of r x 3 comparisons against the series
  o.require(report.checks.size() == 31 * 8 * 3, "check grid incomplete");
  for (const auto& c : report.checks)
    o.require(c.passed, format_check(c));
  return o;
}

Outcome roundtrips() {
  Outcome o;
  const auto report = verify_roundtrips(22, 5);
  // t5 both ways for r=1..5, then odd (r=1,3,5) or even (r=2,4) both ways
  o.require(report.checks.size() == 23 * 5 * 4, "check grid incomplete");
  for (const auto& c : report.checks) o.require(c.passed, format_check(c));
  return o;
}

Outcome classical_maps() {
  Outcome o;
  for (unsigned n = 0; n <= 25 && o.ok; ++n) {
    for (const auto& p : all_partitions(n)) {
      const auto c = conjugate(p);
      o.require(conjugate(c) == p, "involution at " + to_text(p));
      o.require(c.weight() == n, "conjugate weight at " + to_text(p));
      o.require(has_distinct_parts(p) == has_no_gaps(c), "distinct/no-gaps at " + to_text(p));
      if (has_distinct_parts(p)) {
        const auto s = glaisher_split(p);
        o.require(s.weight() == n && has_only_odd_parts(s) && glaisher_merge(s) == p,
                  "merge(split) at " + to_text(p));
      }
      if (has_only_odd_parts(p)) {
        const auto m = glaisher_merge(p);
        o.require(m.weight() == n && has_distinct_parts(m) && glaisher_split(m) == p,
                  "split(merge) at " + to_text(p));
      }
    }
  }
  return o;
}

Outcome euler_identity() {
  Outcome o;
  o.require(verify_euler(200), "verify_euler(200)");
  // Exactness past 64 bits: p(500) from the series against the pentagonal
  // recurrence.
  const auto p500 = poch_inv(1, 1, 500)[500];
  o.require(p500 == pentagonal_partition_count(500), "p(500) routes disagree");
  o.require(p500.get_str() == "2300165032574323995027", "p(500) value");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <mexpart cli> <golden dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 small constants p(4)=5, pbar(4)=14, po2>2(6)=8 with exact sets", 1.0,
       small_constants},
      {"AC2 table --id 1..6 byte-exact against golden files", 1.0,
       [&] { return table_reproduction(cli, golden); }},
      {"AC3 worked examples for the mex/overpartition maps", 1.0, worked_examples},
      {"AC4 four-way counts, n<=30, r<=8", 60.0, four_way_counts},
      {"AC5 bijection round trips and codomain membership, weight<=22", 60.0, roundtrips},
      {"AC6 conjugation and Glaisher properties, weight<=25", 60.0, classical_maps},
      {"AC7 Euler identity through degree 200, exact coefficients", 5.0, euler_identity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = "over time budget of " + std::to_string(c.budget_seconds) + "s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (outcome.ok ? "PASS " : "FAIL ") << c.name << " (" << timing << ")";
    if (!outcome.ok) std::cout << ": " << outcome.detail;
    std::cout << '\n';
    failed += outcome.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILED") << '\n';
  return failed == 0 ? 0 : 1;
}
