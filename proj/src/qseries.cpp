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
#include "mexpart/qseries.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "mexpart/error.hpp"

namespace mexpart {

TruncatedSeries::TruncatedSeries(unsigned degree) : coeffs_(std::size_t{degree} + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ParameterError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(unsigned degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = 1;
  return s;
}

void TruncatedSeries::divide_by_one_minus(unsigned e) {
  // f / (1 - q^e) = g  <=>  g_k = f_k + g_{k-e}
  for (std::size_t k = e; k < coeffs_.size(); ++k) coeffs_[k] += coeffs_[k - e];
}

void TruncatedSeries::multiply_by_one_plus(unsigned e) {
  for (std::size_t k = coeffs_.size(); k-- > e;) coeffs_[k] += coeffs_[k - e];
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree())
    throw ParameterError("series degrees differ: " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  const unsigned n = a.degree();
  std::vector<Coefficient> c(std::size_t{n} + 1);
  for (unsigned i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries poch_inv(unsigned a, unsigned step, unsigned degree) {
  if (a < 1 || step < 1) throw ParameterError("poch_inv needs a >= 1 and step >= 1");
  auto s = TruncatedSeries::one(degree);
  for (unsigned e = a; e <= degree; e += step) s.divide_by_one_minus(e);
  return s;
}

TruncatedSeries poch_distinct(unsigned a, unsigned step, unsigned degree) {
  if (a < 1 || step < 1) throw ParameterError("poch_distinct needs a >= 1 and step >= 1");
  auto s = TruncatedSeries::one(degree);
  for (unsigned e = a; e <= degree; e += step) s.multiply_by_one_plus(e);
  return s;
}

TruncatedSeries gf_pmex(unsigned r, unsigned degree) {
  if (r < 1) throw ParameterError("gf_pmex needs r >= 1");
  return series_mul(poch_inv(1, 2, degree), poch_inv(r + 1, 2, degree));
}

bool verify_euler(unsigned degree) {
  return poch_distinct(1, 1, degree) == poch_inv(1, 2, degree);
}

unsigned default_degree() {
  const char* env = std::getenv("MEX_DEFAULT_DEGREE");
  if (env == nullptr) return kDefaultDegree;
  std::string_view text(env);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParameterError("MEX_DEFAULT_DEGREE must be a decimal integer, got '" +
                         std::string(text) + "'");
  return value;
}

}  // namespace mexpart
