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

#include "braidtk/kauffman.hpp"

#include <cstdlib>
#include <map>
#include <vector>

#include "braidtk/errors.hpp"

namespace braidtk {

namespace {

// State of the partially smoothed closure: 2n boundary points (n at the top
// of the diagram, n on the advancing front), labelled by the arc that owns
// them. Every arc owns exactly two points. Labels are canonical
// (first-appearance order) so equal patterns merge in the map.
using Signature = std::vector<unsigned char>;

void canonicalize(Signature& sig) {
  std::vector<int> remap(sig.size() + 2, -1);
  unsigned char next = 0;
  for (auto& v : sig) {
    if (remap[v] < 0) remap[v] = next++;
    v = static_cast<unsigned char>(remap[v]);
  }
}

// Join the arcs at front positions a and b with a cup, then open a fresh arc
// across both. Returns true when the cup closed a loop.
bool cup_cap(Signature& sig, std::size_t a, std::size_t b) {
  unsigned char la = sig[a];
  unsigned char lb = sig[b];
  bool loop = la == lb;
  if (!loop) {
    for (auto& v : sig)
      if (v == lb) v = la;
  }
  unsigned char fresh = static_cast<unsigned char>(sig.size());  // above any label
  sig[a] = fresh;
  sig[b] = fresh;
  canonicalize(sig);
  return loop;
}

int closure_loops(const Signature& sig, std::size_t n) {
  // Union arcs through the closure edges top_j -- front_j; each arc has two
  // endpoints, so every resulting component is a single circle.
  std::vector<int> parent(sig.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int labels = 0;
  for (auto v : sig) labels = std::max(labels, static_cast<int>(v) + 1);
  int merges = 0;
  for (std::size_t j = 0; j < n; ++j) {
    int ra = find(sig[j]);
    int rb = find(sig[n + j]);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      ++merges;
    }
  }
  return labels - merges;
}

}  // namespace

LaurentPoly kauffman_bracket(const BraidWord& w, int crossing_cap) {
  if (static_cast<int>(w.length()) > crossing_cap)
    throw value_error("word exceeds the Kauffman bracket crossing cap");
  const std::size_t n = static_cast<std::size_t>(w.strands());

  const LaurentPoly a_pos = LaurentPoly::monomial(1, BigInt(1));
  const LaurentPoly a_neg = LaurentPoly::monomial(-1, BigInt(1));
  const LaurentPoly delta =
      LaurentPoly::monomial(2, BigInt(-1)) + LaurentPoly::monomial(-2, BigInt(-1));

  Signature start(2 * n);
  for (std::size_t j = 0; j < n; ++j) start[j] = start[n + j] = static_cast<unsigned char>(j);

  std::map<Signature, LaurentPoly> states;
  states.emplace(std::move(start), LaurentPoly::one());

  for (int l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(l));
    std::map<Signature, LaurentPoly> next;
    for (const auto& [sig, coeff] : states) {
      // Straight-through smoothing.
      {
        LaurentPoly c = coeff * (l > 0 ? a_pos : a_neg);
        auto [it, fresh] = next.emplace(sig, c);
        if (!fresh) it->second += c;
      }
      // Cup-cap smoothing at positions i, i+1 of the front.
      {
        Signature s = sig;
        bool loop = cup_cap(s, n + i - 1, n + i);
        LaurentPoly c = coeff * (l > 0 ? a_neg : a_pos);
        if (loop) c *= delta;
        auto [it, fresh] = next.emplace(std::move(s), c);
        if (!fresh) it->second += c;
      }
    }
    states = std::move(next);
  }

  LaurentPoly bracket;
  for (const auto& [sig, coeff] : states) {
    int loops = closure_loops(sig, n);
    LaurentPoly term = coeff;
    for (int k = 1; k < loops; ++k) term *= delta;
    bracket += term;
  }

  // Writhe normalization (-A^3)^{-e} makes the value a link invariant.
  std::int64_t e = w.exponent_sum();
  LaurentPoly norm = LaurentPoly::monomial(static_cast<int>(-3 * e),
                                           BigInt(e % 2 == 0 ? 1 : -1));
  return bracket * norm;
}

}  // namespace braidtk
