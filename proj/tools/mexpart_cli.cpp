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

// mexpart: command-line front end over the libmexpart C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mexpart/mexpart.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

void check(mexp_status status, const std::string& context = {}) {
  if (status == MEXP_OK) return;
  std::string message = context.empty() ? "" : context + ": ";
  throw UsageError{message + mexp_last_error()};
}

mexp_format parse_format(const std::string& name) {
  if (name == "text") return MEXP_FORMAT_TEXT;
  if (name == "jsonl") return MEXP_FORMAT_JSONL;
  throw UsageError{"unknown format '" + name + "' (text or jsonl)"};
}

mexp_family parse_family(const std::string& name, const std::optional<unsigned>& r) {
  mexp_family family{};
  check(mexp_family_from_name(name.c_str(), &family));
  if (mexp_family_takes_r(family) && !r)
    throw UsageError{"family " + name + " needs --r"};
  return family;
}

int run_count(const std::string& family_name, unsigned n, std::optional<unsigned> r) {
  const mexp_family family = parse_family(family_name, r);
  std::uint64_t count = 0;
  check(mexp_count(family, n, r.value_or(0), &count));
  std::cout << count << '\n';
  return kExitOk;
}

int run_enumerate(const std::string& family_name, unsigned n, std::optional<unsigned> r,
                  const std::string& format) {
  const mexp_family family = parse_family(family_name, r);
  mexp_list list = nullptr;
  check(mexp_enumerate(family, n, r.value_or(0), parse_format(format), &list));
  for (std::size_t i = 0; i < mexp_list_size(list); ++i) {
    const char* line = nullptr;
    mexp_list_get(list, i, &line);
    std::cout << line << '\n';
  }
  mexp_list_free(list);
  return kExitOk;
}

int run_map(const std::string& bijection, unsigned r, const std::string& format) {
  mexp_map map{};
  check(mexp_map_from_name(bijection.c_str(), &map));
  const mexp_format fmt = parse_format(format);
  std::string line;
  for (std::size_t line_no = 1; std::getline(std::cin, line); ++line_no) {
    mexp_text image = nullptr;
    check(mexp_map_apply(map, r, line.c_str(), fmt, &image),
          "line " + std::to_string(line_no) + " '" + line + "'");
    std::cout << mexp_text_data(image) << '\n';
    mexp_text_free(image);
  }
  return kExitOk;
}

int run_gf(unsigned r, std::optional<unsigned> degree) {
  unsigned n = 0;
  if (degree)
    n = *degree;
  else
    check(mexp_default_degree(&n));
  mexp_series series = nullptr;
  check(mexp_gf_pmex(r, n, &series));
  for (unsigned k = 0; k <= mexp_series_degree(series); ++k) {
    const char* value = nullptr;
    mexp_series_coeff(series, k, &value);
    std::cout << k << '\t' << value << '\n';
  }
  mexp_series_free(series);
  return kExitOk;
}

int run_verify(unsigned max_n, unsigned max_r, bool verbose) {
  bool passed = true;
  for (auto* runner : {&mexp_verify_counts, &mexp_verify_roundtrips}) {
    mexp_report report = nullptr;
    check(runner(max_n, max_r, &report));
    for (std::size_t i = 0; i < mexp_report_size(report); ++i) {
      mexp_check c{};
      mexp_report_check(report, i, &c);
      if (verbose || !c.passed) {
        const char* line = nullptr;
        mexp_report_line(report, i, &line);
        std::cout << line << '\n';
      }
    }
    std::cout << (runner == &mexp_verify_counts ? "counts" : "roundtrips") << ": "
              << mexp_report_size(report) - mexp_report_failures(report) << '/'
              << mexp_report_size(report) << " checks passed\n";
    passed = passed && mexp_report_passed(report);
    mexp_report_free(report);
  }
  std::cout << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kExitOk : kExitVerifyFailed;
}

int run_table(int id) {
  mexp_text text = nullptr;
  check(mexp_table(id, &text));
  std::cout << mexp_text_data(text);
  mexp_text_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mex-sequence partitions, restricted overpartitions and their bijections"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mexp_version());

  std::string family;
  std::string bijection;
  std::string format = "text";
  unsigned n = 0;
  std::optional<unsigned> r;
  std::optional<unsigned> degree;
  unsigned max_n = 22;
  unsigned max_r = 5;
  bool verbose = false;
  int table_id = 0;

  auto* count = app.add_subcommand("count", "Count the members of a family of weight n");
  count->add_option("--family", family, "p, pbar, pmex, obar, pe or po2")->required();
  count->add_option("--n", n, "Weight")->required();
  count->add_option("--r", r, "Family parameter");

  auto* enumerate = app.add_subcommand("enumerate", "List a family of weight n, one per line");
  enumerate->add_option("--family", family, "p, pbar, pmex, obar, pe or po2")->required();
  enumerate->add_option("--n", n, "Weight")->required();
  enumerate->add_option("--r", r, "Family parameter");
  enumerate->add_option("--format", format, "text or jsonl");

  auto* map = app.add_subcommand("map", "Apply a bijection to each line of standard input");
  map->add_option("--bijection", bijection, "t5, t5inv, odd, oddinv, even or eveninv")
      ->required();
  map->add_option("--r", r, "Family parameter")->required();
  map->add_option("--format", format, "text or jsonl");

  auto* gf = app.add_subcommand("gf", "Coefficients of the pmex generating function");
  gf->add_option("--r", r, "Family parameter")->required();
  gf->add_option("--degree", degree, "Truncation degree (default 64 or MEX_DEFAULT_DEGREE)");

  auto* verify = app.add_subcommand("verify", "Cross-check counts, series and bijections");
  verify->add_option("--max-n", max_n, "Largest weight")->capture_default_str();
  verify->add_option("--max-r", max_r, "Largest r")->capture_default_str();
  verify->add_flag("--verbose", verbose, "Print every check, not only failures");

  auto* table = app.add_subcommand("table", "Recompute one of the worked tables");
  table->add_option("--id", table_id, "Table number 1..6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return run_count(family, n, r);
    if (*enumerate) return run_enumerate(family, n, r, format);
    if (*map) return run_map(bijection, *r, format);
    if (*gf) return run_gf(*r, degree);
    if (*verify) return run_verify(max_n, max_r, verbose);
    if (*table) return run_table(table_id);
  } catch (const UsageError& e) {
    std::cout.flush();
    std::cerr << "mexpart: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
