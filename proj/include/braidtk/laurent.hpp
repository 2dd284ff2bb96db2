// Copyright 2026 braidtk developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRAIDTK_LAURENT_HPP
#define BRAIDTK_LAURENT_HPP

#include <string>
#include <vector>

#include "braidtk/bigint.hpp"

namespace braidtk {

// Laurent polynomial in one variable with exact integer coefficients.
// Stored as a dense coefficient block starting at min_exp(); the ends of the
// block are always nonzero (or the polynomial is zero and the block empty).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, BigInt(1)); }
  static LaurentPoly monomial(int exponent, BigInt coefficient);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  // max_exp - min_exp; 0 for monomials and for the zero polynomial.
  int degree_span() const;
  BigInt coefficient(int exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by t^k.
  LaurentPoly shifted(int k) const;

  // Exact division by a divisor whose leading coefficient is +-1.
  // Throws internal_error if the division leaves a remainder.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

  // Unit-normalize: multiply by +-t^k so the lowest exponent is 0 and the
  // constant term is positive. Makes equality of invariants structural.
  LaurentPoly canonicalized() const;

  BigInt eval_at_one() const;

  // "1 - t + t^2" style, ascending exponents, stable for equal inputs.
  std::string to_string(const std::string& var = "t") const;

 private:
  int min_exp_ = 0;
  std::vector<BigInt> coeffs_;

  void trim();
};

}  // namespace braidtk

#endif
