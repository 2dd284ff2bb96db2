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

#include "braidtk/garside.hpp"

#include <cstdlib>

#include "braidtk/errors.hpp"

namespace braidtk {

namespace {

// Finishing set of a permutation braid: generator indices i such that the
// braid has a positive word ending in sigma_i. These are the descents of the
// inverse table.
std::vector<char> finish_mask(const Permutation& a) {
  Permutation ainv = a.inverse();
  std::vector<char> mask(static_cast<std::size_t>(a.size()) + 1, 0);
  for (int i : ainv.descents()) mask[static_cast<std::size_t>(i)] = 1;
  return mask;
}

// Make the adjacent pair (a, b) left-weighted by moving head crossings of b
// into a. A generator sigma_i can move exactly when i starts b and does not
// finish a; both updates stay inside permutation braids. Returns true if
// anything moved.
bool left_weight_pair(Permutation& a, Permutation& b, int n) {
  bool changed = false;
  for (;;) {
    std::vector<char> fin = finish_mask(a);
    int pick = 0;
    for (int i : b.descents()) {
      if (!fin[static_cast<std::size_t>(i)]) {
        pick = i;
        break;
      }
    }
    if (pick == 0) return changed;
    Permutation t = Permutation::transposition(n, pick);
    a = a.then(t);   // append sigma_pick to a
    b = t.then(b);   // strip sigma_pick from the head of b
    changed = true;
  }
}

}  // namespace

GarsideNormalForm garside_normal_form(const BraidWord& w) {
  const int n = w.strands();
  GarsideNormalForm nf;
  nf.strands = n;
  if (n == 1) {
    nf.inf = 2;  // degenerate: Delta_1 is the identity
    return nf;
  }

  const Permutation delta = Permutation::half_twist(n);

  // Each positive letter is already a permutation braid. A negative letter
  // sigma_i^{-1} is Delta^{-1} . (Delta sigma_i^{-1}); hauling each Delta^{-1}
  // out to the front conjugates every factor to its left once, which on
  // permutation braids is the index flip sigma_i -> sigma_{n-i}.
  int negatives = 0;
  for (int l : w.letters())
    if (l < 0) ++negatives;

  std::vector<Permutation> factors;
  factors.reserve(w.length());
  int negs_to_right = negatives;
  for (int l : w.letters()) {
    int idx = std::abs(l);
    Permutation f = Permutation::transposition(n, idx);
    if (l < 0) {
      --negs_to_right;
      f = delta.then(f);  // Delta sigma_i^{-1} as a permutation braid
    }
    if (negs_to_right % 2 == 1) f = f.delta_conjugate();
    factors.push_back(std::move(f));
  }
  nf.inf = -negatives;

  // Repeated local left-weighting converges to the global left normal form.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j)
      if (left_weight_pair(factors[j], factors[j + 1], n)) changed = true;
  }

  // Identity factors drain to the tail and Delta factors to the head.
  while (!factors.empty() && factors.back().is_identity()) factors.pop_back();
  while (!factors.empty() && factors.front() == delta) {
    factors.erase(factors.begin());
    ++nf.inf;
  }
  for (const auto& f : factors)
    if (f.is_identity() || f == delta)
      throw internal_error("left-weighting left a trivial factor in place");

  nf.factors = std::move(factors);
  return nf;
}

BraidWord reassemble(const GarsideNormalForm& nf) {
  if (nf.strands == 1) return BraidWord(1);
  std::vector<int> letters;
  std::vector<int> delta_word = Permutation::half_twist(nf.strands).to_word();
  if (nf.inf >= 0) {
    for (int k = 0; k < nf.inf; ++k)
      letters.insert(letters.end(), delta_word.begin(), delta_word.end());
  } else {
    for (int k = 0; k < -nf.inf; ++k)
      for (std::size_t i = delta_word.size(); i-- > 0;)
        letters.push_back(-delta_word[i]);
  }
  for (const auto& f : nf.factors) {
    std::vector<int> fw = f.to_word();
    letters.insert(letters.end(), fw.begin(), fw.end());
  }
  return BraidWord(nf.strands, std::move(letters));
}

bool contains_full_twist(const BraidWord& w) {
  return garside_normal_form(w).inf >= 2;
}

}  // namespace braidtk
