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

#ifndef BRAIDTK_OBSTRUCTION_HPP
#define BRAIDTK_OBSTRUCTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidtk/braid.hpp"
#include "braidtk/satellite.hpp"
#include "braidtk/tlink.hpp"

namespace braidtk {

// A positive braid on p strands with a full twist whose closure is a knot
// must have more than p(p-1) + p - 2 crossings.
std::int64_t crossings_lower_bound(int p);

// Exhaustive check of the counting argument behind the bound: every positive
// word full_twist(p) . w with |w| <= p - 2 closes to at least two link
// components.
struct LemmaCrossingsReport {
  int strands = 0;
  std::vector<std::int64_t> words_per_length;  // index = |w|
  std::int64_t words_checked = 0;
  int min_components = 0;
  bool passed = false;
};

LemmaCrossingsReport verify_lemma_crossings_bruteforce(int p);

// Two positive braids on the same strand count presenting the same knot have
// the same crossing number (Bennequin genus formula). The "same knot"
// precondition is proxied by equal Alexander polynomials; callers are
// expected to supply words with a shared construction provenance.
bool equal_crossings_check(const BraidWord& w1, const BraidWord& w2);

enum class Verdict { certified_not_tknot, inconclusive };

// An external fact the certificate imports rather than proves.
struct CitedAssumption {
  std::string fact;
  std::string citation;
};

struct NotTKnotCertificate {
  std::vector<std::pair<int, int>> lower_pairs;
  int a = 0;
  int b = 0;
  int k = 0;
  TLinkSpec pattern_spec = TLinkSpec::unknot();
  BraidWord companion;
  bool pattern_is_knot = false;
  BraidWord satellite_word;            // constructed only when the pattern is a knot
  std::int64_t braid_index = 0;        // ab, imported from the cited facts
  std::int64_t minimal_crossings = 0;  // crossing count of the induced braid
  std::int64_t bound = 0;              // ab(ab-1) + (ab-2)
  Verdict verdict = Verdict::inconclusive;
  std::vector<CitedAssumption> assumptions;

  bool certified() const { return verdict == Verdict::certified_not_tknot; }
};

std::string certificate_json(const NotTKnotCertificate& cert);

// Builds the satellite with pattern T(lower..., (b,(a-1)(a+1)b+k)) and
// companion T(a,a+1), cross-checks the crossing formula against the
// constructed word, and certifies "not a T-knot" exactly when the pattern is
// a knot and the count is at most the bound; anything else is inconclusive.
NotTKnotCertificate not_tknot_certificate(
    const std::vector<std::pair<int, int>>& lower_pairs, int a, int b, int k);

// The k = 1, no-lower-pairs family: certified for every a, b >= 2.
NotTKnotCertificate corollary_family(int a, int b);

}  // namespace braidtk

#endif
