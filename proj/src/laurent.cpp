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

#include "braidtk/laurent.hpp"

#include <algorithm>

#include "braidtk/errors.hpp"

namespace braidtk {

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coefficient) {
  LaurentPoly p;
  if (coefficient.is_zero()) return p;
  p.min_exp_ = exponent;
  p.coeffs_.push_back(std::move(coefficient));
  return p;
}

int LaurentPoly::degree_span() const {
  return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  int idx = exponent - min_exp_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[idx];
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<BigInt> merged(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    merged[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    merged[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(merged);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) {
    *this = zero();
    return *this;
  }
  std::vector<BigInt> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  min_exp_ += o.min_exp_;
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw value_error("division by zero polynomial");
  if (is_zero()) return zero();
  const BigInt& lead = divisor.coeffs_.back();
  if (!lead.is_one() && !(-lead).is_one())
    throw value_error("exact_div needs a +-1 leading coefficient");
  // Long division on the coefficient blocks; exponent offsets come out in
  // the final shift.
  std::vector<BigInt> rem = coeffs_;
  int span_n = static_cast<int>(coeffs_.size());
  int span_d = static_cast<int>(divisor.coeffs_.size());
  if (span_n < span_d) throw internal_error("polynomial division not exact");
  std::vector<BigInt> quot(static_cast<std::size_t>(span_n - span_d + 1));
  for (int k = span_n - span_d; k >= 0; --k) {
    BigInt q = rem[static_cast<std::size_t>(k + span_d - 1)];
    if (q.is_zero()) continue;
    if ((-lead).is_one()) q = -q;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j < span_d; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem)
    if (!c.is_zero()) throw internal_error("polynomial division not exact");
  LaurentPoly r;
  r.min_exp_ = min_exp_ - divisor.min_exp_;
  r.coeffs_ = std::move(quot);
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::canonicalized() const {
  if (is_zero()) return zero();
  LaurentPoly r = *this;
  r.min_exp_ = 0;
  if (r.coeffs_.front().sign() < 0)
    for (auto& c : r.coeffs_) c = -c;
  return r;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    int e = min_exp_ + static_cast<int>(i);
    bool neg = c.sign() < 0;
    BigInt mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string m = mag.to_decimal();
    if (e == 0) {
      out += m;
    } else {
      if (!mag.is_one()) out += m + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace braidtk
