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

#include "braidtk/invariants.hpp"

#include <cstdlib>
#include <unordered_map>

#include "braidtk/errors.hpp"

namespace braidtk {

int closure_components(const BraidWord& w) {
  return permutation_of(w).cycle_count();
}

std::int64_t self_linking(const BraidWord& w) {
  return w.exponent_sum() - w.strands();
}

std::int64_t bennequin_genus(const BraidWord& w) {
  if (!w.is_positive()) throw value_error("genus formula needs a positive word");
  if (closure_components(w) != 1)
    throw value_error("genus formula needs a knot closure");
  return (static_cast<std::int64_t>(w.length()) - w.strands() + 1) / 2;
}

std::vector<std::vector<LaurentPoly>> burau_reduced(const BraidWord& w) {
  const int m = w.strands() - 1;
  std::vector<std::vector<LaurentPoly>> mat(
      static_cast<std::size_t>(m), std::vector<LaurentPoly>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPoly::one();

  const LaurentPoly t = LaurentPoly::monomial(1, BigInt(1));
  const LaurentPoly t_inv = LaurentPoly::monomial(-1, BigInt(1));

  // The reduced Burau image of sigma_i^{+-1} differs from the identity in
  // column i only, so each letter is a three-column combination.
  for (int l : w.letters()) {
    int i = std::abs(l);  // 1-based generator; column i-1 in 0-based terms
    std::size_t c = static_cast<std::size_t>(i - 1);
    std::vector<LaurentPoly> newcol(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
      std::size_t rr = static_cast<std::size_t>(r);
      LaurentPoly acc;
      if (l > 0) {
        // column entries: t at row i-1, -t at row i, 1 at row i+1
        if (i >= 2) acc += t * mat[rr][c - 1];
        acc -= t * mat[rr][c];
        if (i <= m - 1) acc += mat[rr][c + 1];
      } else {
        // inverse letter: 1 at row i-1, -t^{-1} at row i, t^{-1} at row i+1
        if (i >= 2) acc += mat[rr][c - 1];
        acc -= t_inv * mat[rr][c];
        if (i <= m - 1) acc += t_inv * mat[rr][c + 1];
      }
      newcol[rr] = std::move(acc);
    }
    for (int r = 0; r < m; ++r) mat[static_cast<std::size_t>(r)][c] = std::move(newcol[static_cast<std::size_t>(r)]);
  }
  return mat;
}

namespace {

// Determinant by first-row expansion over column subsets, memoized on the
// subset mask. Fine for the desk-scale matrices the toolkit meets.
LaurentPoly det_memo(const std::vector<std::vector<LaurentPoly>>& a, int m,
                     std::uint32_t mask, int row,
                     std::unordered_map<std::uint32_t, LaurentPoly>& memo) {
  if (mask == 0) return LaurentPoly::one();
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  LaurentPoly det;
  int sign = 1;
  for (int c = 0; c < m; ++c) {
    if (!(mask & (1u << c))) continue;
    const LaurentPoly& entry = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
    if (!entry.is_zero()) {
      LaurentPoly sub = det_memo(a, m, mask & ~(1u << c), row + 1, memo);
      sub *= entry;
      if (sign < 0) sub = -sub;
      det += sub;
    }
    sign = -sign;
  }
  memo.emplace(mask, det);
  return det;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return LaurentPoly::one();
  if (m > 16) throw value_error("determinant limited to 16x16 at desk scale");
  std::unordered_map<std::uint32_t, LaurentPoly> memo;
  return det_memo(a, m, (1u << m) - 1u, 0, memo);
}

}  // namespace

LaurentPoly alexander_polynomial(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return LaurentPoly::one();
  auto burau = burau_reduced(w);
  const int m = n - 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto& e = burau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      e = -e;
      if (i == j) e += LaurentPoly::one();
    }
  }
  LaurentPoly det = determinant(burau);
  // (1 - t^n) / (1 - t) = 1 + t + ... + t^{n-1}
  LaurentPoly divisor;
  for (int j = 0; j < n; ++j) divisor += LaurentPoly::monomial(j, BigInt(1));
  return det.exact_div(divisor).canonicalized();
}

InvariantBundle invariant_bundle(const BraidWord& w) {
  InvariantBundle b;
  b.components = closure_components(w);
  b.exponent_sum = w.exponent_sum();
  b.self_linking = self_linking(w);
  if (w.is_positive() && b.components == 1) b.genus = bennequin_genus(w);
  b.alexander = alexander_polynomial(w);
  return b;
}

}  // namespace braidtk
