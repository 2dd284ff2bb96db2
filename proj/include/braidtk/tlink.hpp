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

#ifndef BRAIDTK_TLINK_HPP
#define BRAIDTK_TLINK_HPP

#include <utility>
#include <vector>

#include "braidtk/braid.hpp"

namespace braidtk {

// T-link specification: ordered pairs (r_i, s_i) with 2 <= r_1 < ... < r_k
// and s_i > 0. The closure of the standard braid
//   (s1..s_{r_1-1})^{s_1} ... (s1..s_{r_k-1})^{s_k}
// on r_k strands is the T-link.
class TLinkSpec {
 public:
  explicit TLinkSpec(std::vector<std::pair<int, int>> pairs);  // validates

  // T((2,1)), the canonical unknot presentation.
  static TLinkSpec unknot();

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int top_strands() const { return pairs_.back().first; }
  bool is_unknot_spec() const;

  bool operator==(const TLinkSpec&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Torus sub-braid B_{i,j}^r = (sigma_i ... sigma_{j-1})^r on strands i..j;
// start index 0 means the braid is anchored at strand 1.
struct TorusBraidSpec {
  int start = 0;  // i >= 0
  int end = 2;    // j > i
  int power = 1;  // r > 0
};

BraidWord standard_braid(const TLinkSpec& spec);
BraidWord torus_subbraid(const TorusBraidSpec& t, int ambient_strands);

// Closure of the standard braid has exactly one component.
bool is_knot(const TLinkSpec& spec);

// Transpose the Young diagram whose row widths are {r_i with multiplicity
// s_i}. Width-1 rows of the transpose are trivial torus factors and are
// dropped; if everything drops the unknot spec is returned. The dual spec
// presents the same link on a different strand count.
TLinkSpec transpose_dual(const TLinkSpec& spec);

}  // namespace braidtk

#endif
