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
#include "mexpart/mexpart.h"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mexpart/bijections.hpp"
#include "mexpart/error.hpp"
#include "mexpart/families.hpp"
#include "mexpart/oracle.hpp"
#include "mexpart/qseries.hpp"
#include "mexpart/text.hpp"

struct mexp_text_s {
  std::string value;
};

struct mexp_list_s {
  std::vector<std::string> items;
};

struct mexp_series_s {
  unsigned degree = 0;
  std::vector<std::string> coeffs;
};

struct mexp_report_s {
  mexpart::VerificationReport report;
  std::vector<std::string> lines;
};

namespace {

using namespace mexpart;

thread_local std::string last_error;

struct NullArgument {};

template <class... Ptrs>
void require_non_null(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

template <class F>
mexp_status guarded(F&& body) noexcept {
  try {
    body();
    return MEXP_OK;
  } catch (const NullArgument&) {
    last_error = "required argument is NULL";
    return MEXP_ERR_NULL_ARG;
  } catch (const ParseError& e) {
    last_error = e.what();
    return MEXP_ERR_PARSE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return MEXP_ERR_DOMAIN;
  } catch (const ParameterError& e) {
    last_error = e.what();
    return MEXP_ERR_PARAMETER;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return MEXP_ERR_RANGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MEXP_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return MEXP_ERR_INTERNAL;
  }
}

Family to_family(mexp_family f) {
  switch (f) {
    case MEXP_FAMILY_P: return Family::partitions;
    case MEXP_FAMILY_PBAR: return Family::overpartitions;
    case MEXP_FAMILY_PMEX: return Family::mex_at_least;
    case MEXP_FAMILY_OBAR: return Family::restricted_overpartitions;
    case MEXP_FAMILY_PE: return Family::no_small_even;
    case MEXP_FAMILY_PO2: return Family::two_colored_odd;
  }
  throw ParameterError("unknown family id " + std::to_string(static_cast<int>(f)));
}

mexp_family from_family(Family f) {
  switch (f) {
    case Family::partitions: return MEXP_FAMILY_P;
    case Family::overpartitions: return MEXP_FAMILY_PBAR;
    case Family::mex_at_least: return MEXP_FAMILY_PMEX;
    case Family::restricted_overpartitions: return MEXP_FAMILY_OBAR;
    case Family::no_small_even: return MEXP_FAMILY_PE;
    case Family::two_colored_odd: return MEXP_FAMILY_PO2;
  }
  throw std::logic_error("unmapped family");
}

constexpr std::array<std::pair<mexp_map, std::string_view>, 6> kMapNames{{
    {MEXP_MAP_T5, "t5"},
    {MEXP_MAP_T5INV, "t5inv"},
    {MEXP_MAP_ODD, "odd"},
    {MEXP_MAP_ODDINV, "oddinv"},
    {MEXP_MAP_EVEN, "even"},
    {MEXP_MAP_EVENINV, "eveninv"},
}};

std::string render(const FamilyObject& obj, mexp_format format) {
  if (format == MEXP_FORMAT_JSONL) return to_json_line(obj);
  if (format != MEXP_FORMAT_TEXT) throw ParameterError("unknown output format");
  return to_text(obj);
}

FamilyObject apply_map(mexp_map map, unsigned r, std::string_view line) {
  switch (map) {
    case MEXP_MAP_T5: return mex_to_overpartition(parse_partition(line), r);
    case MEXP_MAP_T5INV: return overpartition_to_mex(parse_overpartition(line), r);
    case MEXP_MAP_ODD: return no_small_even_to_overpartition(parse_partition(line), r);
    case MEXP_MAP_ODDINV: return overpartition_to_no_small_even(parse_overpartition(line), r);
    case MEXP_MAP_EVEN: return colored_to_overpartition(parse_colored(line), r);
    case MEXP_MAP_EVENINV: return overpartition_to_colored(parse_overpartition(line), r);
  }
  throw ParameterError("unknown map id " + std::to_string(static_cast<int>(map)));
}

mexp_report wrap_report(VerificationReport report) {
  auto handle = std::make_unique<mexp_report_s>();
  for (const auto& check : report.checks) handle->lines.push_back(format_check(check));
  handle->report = std::move(report);
  return handle.release();
}

}  // namespace

extern "C" {

const char* mexp_version(void) { return "1.0.0"; }

const char* mexp_last_error(void) { return last_error.c_str(); }

const char* mexp_status_name(mexp_status status) {
  switch (status) {
    case MEXP_OK: return "ok";
    case MEXP_ERR_NULL_ARG: return "null argument";
    case MEXP_ERR_PARAMETER: return "parameter error";
    case MEXP_ERR_PARSE: return "parse error";
    case MEXP_ERR_DOMAIN: return "domain error";
    case MEXP_ERR_RANGE: return "index out of range";
    case MEXP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

mexp_status mexp_family_from_name(const char* name, mexp_family* out) {
  return guarded([&] {
    require_non_null(name, out);
    auto family = family_from_name(name);
    if (!family) throw ParameterError(std::string("unknown family '") + name + "'");
    *out = from_family(*family);
  });
}

mexp_status mexp_map_from_name(const char* name, mexp_map* out) {
  return guarded([&] {
    require_non_null(name, out);
    for (auto [id, n] : kMapNames) {
      if (n == name) {
        *out = id;
        return;
      }
    }
    throw ParameterError(std::string("unknown bijection '") + name + "'");
  });
}

int mexp_family_takes_r(mexp_family family) {
  return family != MEXP_FAMILY_P && family != MEXP_FAMILY_PBAR;
}

const char* mexp_text_data(mexp_text text) { return text ? text->value.c_str() : nullptr; }

void mexp_text_free(mexp_text text) { delete text; }

size_t mexp_list_size(mexp_list list) { return list ? list->items.size() : 0; }

mexp_status mexp_list_get(mexp_list list, size_t index, const char** out) {
  return guarded([&] {
    require_non_null(list, out);
    *out = list->items.at(index).c_str();
  });
}

void mexp_list_free(mexp_list list) { delete list; }

mexp_status mexp_count(mexp_family family, unsigned n, unsigned r, uint64_t* out) {
  return guarded([&] {
    require_non_null(out);
    *out = count_family(FamilyId::make(to_family(family), r), n);
  });
}

mexp_status mexp_enumerate(mexp_family family, unsigned n, unsigned r, mexp_format format,
                           mexp_list* out) {
  return guarded([&] {
    require_non_null(out);
    auto list = std::make_unique<mexp_list_s>();
    for (const auto& obj : enumerate_family(FamilyId::make(to_family(family), r), n))
      list->items.push_back(render(obj, format));
    *out = list.release();
  });
}

mexp_status mexp_map_apply(mexp_map map, unsigned r, const char* line, mexp_format format,
                           mexp_text* out) {
  return guarded([&] {
    require_non_null(line, out);
    auto text = std::make_unique<mexp_text_s>();
    text->value = render(apply_map(map, r, line), format);
    *out = text.release();
  });
}

mexp_status mexp_mex_sequence(const char* partition, unsigned* start, unsigned* length,
                              int* infinite) {
  return guarded([&] {
    require_non_null(partition, start, length, infinite);
    const MexSequence seq = mex_sequence(parse_partition(partition));
    *start = seq.start;
    *length = seq.finite_length.value_or(0);
    *infinite = seq.is_infinite() ? 1 : 0;
  });
}

mexp_status mexp_default_degree(unsigned* out) {
  return guarded([&] {
    require_non_null(out);
    *out = default_degree();
  });
}

mexp_status mexp_gf_pmex(unsigned r, unsigned degree, mexp_series* out) {
  return guarded([&] {
    require_non_null(out);
    const auto series = gf_pmex(r, degree);
    auto handle = std::make_unique<mexp_series_s>();
    handle->degree = series.degree();
    for (const auto& c : series.coeffs()) handle->coeffs.push_back(c.get_str());
    *out = handle.release();
  });
}

unsigned mexp_series_degree(mexp_series series) { return series ? series->degree : 0; }

mexp_status mexp_series_coeff(mexp_series series, unsigned k, const char** out) {
  return guarded([&] {
    require_non_null(series, out);
    *out = series->coeffs.at(k).c_str();
  });
}

void mexp_series_free(mexp_series series) { delete series; }

mexp_status mexp_verify_euler(unsigned degree, int* holds) {
  return guarded([&] {
    require_non_null(holds);
    *holds = verify_euler(degree) ? 1 : 0;
  });
}

mexp_status mexp_verify_counts(unsigned max_n, unsigned max_r, mexp_report* out) {
  return guarded([&] {
    require_non_null(out);
    *out = wrap_report(verify_counts(max_n, max_r));
  });
}

mexp_status mexp_verify_roundtrips(unsigned max_n, unsigned max_r, mexp_report* out) {
  return guarded([&] {
    require_non_null(out);
    *out = wrap_report(verify_roundtrips(max_n, max_r));
  });
}

int mexp_report_passed(mexp_report report) {
  return report && report->report.overall() ? 1 : 0;
}

size_t mexp_report_size(mexp_report report) { return report ? report->report.checks.size() : 0; }

size_t mexp_report_failures(mexp_report report) {
  return report ? report->report.failures() : 0;
}

mexp_status mexp_report_check(mexp_report report, size_t index, mexp_check* out) {
  return guarded([&] {
    require_non_null(report, out);
    const Check& check = report->report.checks.at(index);
    *out = mexp_check{check.name.c_str(), check.parameters.c_str(), check.expected.c_str(),
                      check.actual.c_str(), check.passed ? 1 : 0};
  });
}

mexp_status mexp_report_line(mexp_report report, size_t index, const char** out) {
  return guarded([&] {
    require_non_null(report, out);
    *out = report->lines.at(index).c_str();
  });
}

void mexp_report_free(mexp_report report) { delete report; }

mexp_status mexp_table(int id, mexp_text* out) {
  return guarded([&] {
    require_non_null(out);
    auto text = std::make_unique<mexp_text_s>();
    text->value = reproduce_table(id);
    *out = text.release();
  });
}

}  // extern "C"
