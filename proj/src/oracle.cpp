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
#include "mexpart/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "mexpart/bijections.hpp"
#include "mexpart/error.hpp"
#include "mexpart/families.hpp"
#include "mexpart/qseries.hpp"
#include "mexpart/text.hpp"

namespace mexpart {

bool VerificationReport::overall() const noexcept {
  return std::ranges::all_of(checks, &Check::passed);
}

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(std::ranges::count(checks, false, &Check::passed));
}

void VerificationReport::append(VerificationReport other) {
  checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                std::make_move_iterator(other.checks.end()));
}

std::string format_check(const Check& check) {
  return std::string(check.passed ? "PASS " : "FAIL ") + check.name + " [" + check.parameters +
         "] expected=" + check.expected + " actual=" + check.actual;
}

namespace {

struct Cell {
  unsigned n;
  unsigned r;
};

std::vector<Cell> grid(unsigned max_n, unsigned max_r) {
  std::vector<Cell> cells;
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned r = 1; r <= max_r; ++r) cells.push_back({n, r});
  return cells;
}

std::string params(const Cell& c) {
  return "n=" + std::to_string(c.n) + " r=" + std::to_string(c.r);
}

// Runs fn over every cell on a small worker pool; results keep cell order.
VerificationReport run_cells(const std::vector<Cell>& cells,
                             const std::function<std::vector<Check>(const Cell&)>& fn) {
  std::vector<std::vector<Check>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = fn(cells[i]);
  };
  const unsigned threads =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 16);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  VerificationReport report;
  for (auto& checks : results)
    for (auto& check : checks) report.checks.push_back(std::move(check));
  return report;
}

Check count_check(std::string name, const Cell& cell, const Coefficient& expected,
                  std::uint64_t actual) {
  const std::string want = expected.get_str();
  const std::string got = std::to_string(actual);
  return {std::move(name), params(cell), want, got, want == got};
}

template <class Src, class Fwd, class Inv, class InCodomain>
Check roundtrip(std::string name, const Cell& cell, const std::vector<Src>& domain, Fwd forward,
                Inv inverse, InCodomain in_codomain) {
  std::size_t ok = 0;
  std::string first_failure;
  for (const auto& obj : domain) {
    std::string problem;
    try {
      auto image = forward(obj);
      if (image.weight() != obj.weight())
        problem = "weight changed";
      else if (!in_codomain(image))
        problem = "image '" + to_text(image) + "' outside codomain";
      else if (!(inverse(image) == obj))
        problem = "not inverted via '" + to_text(image) + "'";
    } catch (const Error& e) {
      problem = e.what();
    }
    if (problem.empty())
      ++ok;
    else if (first_failure.empty())
      first_failure = " first='" + to_text(obj) + "': " + problem;
  }
  const std::string expected = std::to_string(domain.size());
  return {std::move(name), params(cell), expected, std::to_string(ok) + first_failure,
          ok == domain.size()};
}

}  // namespace

VerificationReport verify_counts(unsigned max_n, unsigned max_r) {
  if (max_r < 1) throw ParameterError("verify_counts needs max_r >= 1");
  std::vector<TruncatedSeries> series;
  for (unsigned r = 1; r <= max_r; ++r) series.push_back(gf_pmex(r, max_n));

  return run_cells(grid(max_n, max_r), [&](const Cell& c) {
    const Coefficient& predicted = series[c.r - 1][c.n];
    std::vector<Check> checks;
    checks.push_back(count_check("count pmex = gf", c, predicted,
                                 count_family(FamilyId::make(Family::mex_at_least, c.r), c.n)));
    checks.push_back(count_check(
        "count obar = gf", c, predicted,
        count_family(FamilyId::make(Family::restricted_overpartitions, c.r), c.n)));
    if (c.r % 2 == 1)
      checks.push_back(count_check("count pe = gf", c, predicted,
                                   count_family(FamilyId::make(Family::no_small_even, c.r), c.n)));
    else
      checks.push_back(count_check(
          "count po2 = gf", c, predicted,
          count_family(FamilyId::make(Family::two_colored_odd, c.r), c.n)));
    return checks;
  });
}

VerificationReport verify_roundtrips(unsigned max_n, unsigned max_r) {
  if (max_r < 1) throw ParameterError("verify_roundtrips needs max_r >= 1");
  return run_cells(grid(max_n, max_r), [](const Cell& c) {
    const unsigned r = c.r;
    const auto in_obar = [r](const Overpartition& op) {
      return in_restricted_overpartitions(op, r);
    };
    const auto obar = restricted_overpartition_members(r, c.n);
    std::vector<Check> checks;

    checks.push_back(roundtrip(
        "t5 inverse after forward", c, mex_at_least_members(r, c.n),
        [r](const Partition& p) { return mex_to_overpartition(p, r); },
        [r](const Overpartition& op) { return overpartition_to_mex(op, r); }, in_obar));
    checks.push_back(roundtrip(
        "t5 forward after inverse", c, obar,
        [r](const Overpartition& op) { return overpartition_to_mex(op, r); },
        [r](const Partition& p) { return mex_to_overpartition(p, r); },
        [r](const Partition& p) { return in_mex_at_least(p, r); }));

    if (r % 2 == 1) {
      checks.push_back(roundtrip(
          "odd inverse after forward", c, no_small_even_members(r, c.n),
          [r](const Partition& p) { return no_small_even_to_overpartition(p, r); },
          [r](const Overpartition& op) { return overpartition_to_no_small_even(op, r); },
          in_obar));
      checks.push_back(roundtrip(
          "odd forward after inverse", c, obar,
          [r](const Overpartition& op) { return overpartition_to_no_small_even(op, r); },
          [r](const Partition& p) { return no_small_even_to_overpartition(p, r); },
          [r](const Partition& p) { return in_no_small_even(p, r); }));
    } else {
      checks.push_back(roundtrip(
          "even inverse after forward", c, two_colored_odd_members(r, c.n),
          [r](const ColoredPartition& cp) { return colored_to_overpartition(cp, r); },
          [r](const Overpartition& op) { return overpartition_to_colored(op, r); }, in_obar));
      checks.push_back(roundtrip(
          "even forward after inverse", c, obar,
          [r](const Overpartition& op) { return overpartition_to_colored(op, r); },
          [r](const ColoredPartition& cp) { return colored_to_overpartition(cp, r); },
          [r](const ColoredPartition& cp) { return in_two_colored_odd(cp, r); }));
    }
    return checks;
  });
}

namespace {

template <class Src, class Map>
void table_rows(std::string& out, const std::vector<Src>& domain, Map map) {
  for (const auto& obj : domain) out += to_text(obj) + " -> " + to_text(map(obj)) + "\n";
}

std::vector<Partition> distinct_part_partitions(unsigned n) {
  auto all = all_partitions(n);
  std::erase_if(all, [](const Partition& p) { return !has_distinct_parts(p); });
  return all;
}

}  // namespace

std::string reproduce_table(int id) {
  std::string out;
  switch (id) {
    case 1:
      out += "# table 1: conjugation, distinct parts -> no gaps, n=6\n";
      table_rows(out, distinct_part_partitions(6), conjugate);
      break;
    case 2:
      out += "# table 2: glaisher, distinct parts -> odd parts, n=6\n";
      table_rows(out, distinct_part_partitions(6), glaisher_split);
      break;
    case 3:
      out += "# table 3: odd r=1, partitions -> overpartitions with even plain parts, n=6\n";
      table_rows(out, all_partitions(6),
                 [](const Partition& p) { return no_small_even_to_overpartition(p, 1); });
      break;
    case 4:
      out += "# table 4a: t5 r=2, pmex -> obar, n=7\n";
      table_rows(out, mex_at_least_members(2, 7),
                 [](const Partition& p) { return mex_to_overpartition(p, 2); });
      out += "# table 4b: t5inv r=3, obar -> pmex, n=7\n";
      table_rows(out, restricted_overpartition_members(3, 7),
                 [](const Overpartition& op) { return overpartition_to_mex(op, 3); });
      break;
    case 5:
      out += "# table 5: odd r=3, pe -> obar, n=8\n";
      table_rows(out, no_small_even_members(3, 8),
                 [](const Partition& p) { return no_small_even_to_overpartition(p, 3); });
      break;
    case 6:
      out += "# table 6: even r=2, po2 -> obar, n=6\n";
      table_rows(out, two_colored_odd_members(2, 6),
                 [](const ColoredPartition& c) { return colored_to_overpartition(c, 2); });
      break;
    default:
      throw ParameterError("table id must be 1..6, got " + std::to_string(id));
  }
  return out;
}

}  // namespace mexpart
