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

#ifndef BRAIDTK_BIGINT_HPP
#define BRAIDTK_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace braidtk {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Invariant certificates are exact by design, so polynomial coefficients
// must never silently overflow; this covers the add/sub/mul arithmetic the
// toolkit needs without pulling in a bignum dependency.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by intent, mirrors int use
  static BigInt from_decimal(const std::string& text);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator>(const BigInt& o) const { return o < *this; }

  std::string to_decimal() const;

 private:
  int sign_ = 0;                     // -1, 0, +1
  std::vector<std::uint32_t> mag_;   // little-endian limbs, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

}  // namespace braidtk

#endif
