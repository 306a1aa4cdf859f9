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

#include <gmpxx.h>

#include <vector>

namespace mexpart {

using Coefficient = mpz_class;

/// Power series in q known exactly through q^degree. Coefficients are
/// arbitrary-precision integers.
class TruncatedSeries {
 public:
  /// The zero series of the given degree.
  explicit TruncatedSeries(unsigned degree);
  /// Takes degree = coeffs.size() - 1; coeffs must be nonempty.
  explicit TruncatedSeries(std::vector<Coefficient> coeffs);

  static TruncatedSeries one(unsigned degree);

  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }
  const Coefficient& operator[](unsigned k) const { return coeffs_.at(k); }

  /// Multiplies in place by 1/(1 - q^e), a no-op when e > degree.
  void divide_by_one_minus(unsigned e);
  /// Multiplies in place by (1 + q^e), a no-op when e > degree.
  void multiply_by_one_plus(unsigned e);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Coefficient> coeffs_;
};

/// Cauchy product truncated at the common degree. Throws ParameterError when
/// the degrees differ.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// prod_{i>=0} 1/(1 - q^{a + i*step}) through q^degree, i.e. 1/(q^a; q^step).
TruncatedSeries poch_inv(unsigned a, unsigned step, unsigned degree);
/// prod_{i>=0} (1 + q^{a + i*step}) through q^degree, i.e. (-q^a; q^step).
TruncatedSeries poch_distinct(unsigned a, unsigned step, unsigned degree);

/// 1/((q;q^2)(q^{r+1};q^2)): coefficient n predicts the number of partitions
/// of n whose mex sequence has length >= r.
TruncatedSeries gf_pmex(unsigned r, unsigned degree);

/// (-q;q) and 1/(q;q^2) agree through q^degree.
bool verify_euler(unsigned degree);

inline constexpr unsigned kDefaultDegree = 64;

/// kDefaultDegree unless MEX_DEFAULT_DEGREE holds a decimal integer. Throws
/// ParameterError when the variable is set but malformed.
unsigned default_degree();

}  // namespace mexpart
