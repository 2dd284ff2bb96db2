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

#ifndef BRAIDTK_INVARIANTS_HPP
#define BRAIDTK_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "braidtk/braid.hpp"
#include "braidtk/laurent.hpp"

namespace braidtk {

// Number of link components of the braid closure (cycles of the underlying
// permutation).
int closure_components(const BraidWord& w);

// Exponent sum minus strand count; conserved by conjugation and by positive
// (de)stabilization, so it certifies every move the rewrite pipeline makes.
std::int64_t self_linking(const BraidWord& w);

// Seifert genus of the closure of a positive braid whose closure is a knot:
// (crossings - strands + 1) / 2. Throws value_error otherwise.
std::int64_t bennequin_genus(const BraidWord& w);

// Reduced Burau matrix of the word, (n-1)x(n-1) over exact Laurent
// polynomials.
std::vector<std::vector<LaurentPoly>> burau_reduced(const BraidWord& w);

// One-variable Alexander polynomial of the closure, computed as
// det(I - BurauReduced(w)) * (1 - t) / (1 - t^n) in exact arithmetic and
// unit-normalized (lowest exponent 0, positive constant term). The division
// is exact for links as well as knots, so the value is invariant under
// conjugation and Markov (de)stabilization in all cases; split links may
// yield the zero polynomial.
LaurentPoly alexander_polynomial(const BraidWord& w);

struct InvariantBundle {
  int components = 0;
  std::int64_t exponent_sum = 0;
  std::int64_t self_linking = 0;
  std::optional<std::int64_t> genus;  // only for positive knot words
  LaurentPoly alexander;

  // The certificate notion of "same link evidence".
  bool matches(const InvariantBundle& o) const {
    return components == o.components && self_linking == o.self_linking &&
           alexander == o.alexander;
  }
};

InvariantBundle invariant_bundle(const BraidWord& w);

}  // namespace braidtk

#endif
