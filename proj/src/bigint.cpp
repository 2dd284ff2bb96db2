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

#include "braidtk/bigint.hpp"

#include <algorithm>

#include "braidtk/errors.hpp"

namespace braidtk {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // Avoid overflow on INT64_MIN by working in unsigned space.
  std::uint64_t mag = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1u;
  while (mag != 0) {
    mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

BigInt BigInt::from_decimal(const std::string& text) {
  std::size_t i = 0;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') sign = -1;
    ++i;
  }
  if (i == text.size()) throw value_error("empty integer literal");
  BigInt r;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw value_error("bad digit in integer literal");
    r *= BigInt(10);
    r += BigInt(c - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> r(big.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r[big.size()] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = o;
    return *this;
  }
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, o.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    mag_ = sub_mag(mag_, o.mag_);
  } else {
    mag_ = sub_mag(o.mag_, mag_);
    sign_ = o.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (sign_ == 0 || o.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  std::vector<std::uint32_t> r(mag_.size() + o.mag_.size(), 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.mag_.size(); ++j) {
      std::uint64_t cur = r[i + j] +
                          static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] +
                          carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + o.mag_.size();
    while (carry != 0) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  mag_ = std::move(r);
  sign_ *= o.sign_;
  trim();
  return *this;
}

bool BigInt::operator==(const BigInt& o) const {
  return sign_ == o.sign_ && mag_ == o.mag_;
}

bool BigInt::operator<(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_;
  int c = cmp_mag(mag_, o.mag_);
  return sign_ >= 0 ? c < 0 : c > 0;
}

std::string BigInt::to_decimal() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> work = mag_;
  std::string digits;
  while (!work.empty()) {
    // Divide the magnitude by 10^9 and emit the remainder.
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace braidtk
