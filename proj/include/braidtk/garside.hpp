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

#ifndef BRAIDTK_GARSIDE_HPP
#define BRAIDTK_GARSIDE_HPP

#include <vector>

#include "braidtk/braid.hpp"
#include "braidtk/permutation.hpp"

namespace braidtk {

// Left normal form Delta^inf . A_1 ... A_l with left-weighted permutation
// braids A_i, none equal to the identity or to Delta. Two words equal in the
// braid group produce identical (inf, factors), so this is the toolkit's
// canonical form. "Contains a positive full twist" is inf >= 2.
//
// On one strand the braid group is trivial and Delta is the identity, so the
// empty braid is Delta^k for every k; inf is reported as 2 there to keep
// full-twist queries answering true for the degenerate unknot presentations.
struct GarsideNormalForm {
  int strands = 1;
  int inf = 0;
  std::vector<Permutation> factors;

  // Number of factors (canonical length).
  int canonical_length() const { return static_cast<int>(factors.size()); }

  bool operator==(const GarsideNormalForm&) const = default;
};

GarsideNormalForm garside_normal_form(const BraidWord& w);

// Delta^inf . factors rebuilt as a braid word (negative inf gives inverse
// half-twist letters). Equal to the input word in the braid group.
BraidWord reassemble(const GarsideNormalForm& nf);

// True iff garside_normal_form(w).inf >= 2; for positive words this says w
// can be rewritten as Delta^2 . (positive word).
bool contains_full_twist(const BraidWord& w);

}  // namespace braidtk

#endif
