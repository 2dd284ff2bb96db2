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

#include "braidtk/obstruction.hpp"

#include "braidtk/errors.hpp"
#include "braidtk/invariants.hpp"

namespace braidtk {

std::int64_t crossings_lower_bound(int p) {
  if (p < 2) throw value_error("the crossing bound needs p >= 2");
  return static_cast<std::int64_t>(p) * (p - 1) + p - 2;
}

LemmaCrossingsReport verify_lemma_crossings_bruteforce(int p) {
  if (p < 2 || p > 6)
    throw value_error("brute-force check supported for 2 <= p <= 6");
  LemmaCrossingsReport report;
  report.strands = p;
  report.min_components = p;
  report.words_per_length.assign(static_cast<std::size_t>(p - 1), 0);
  report.passed = true;

  const BraidWord twist = full_twist(p);
  std::vector<int> word;
  // Depth-first enumeration of all positive words w with |w| <= p - 2.
  auto visit = [&](auto&& self) -> void {
    const std::size_t len = word.size();
    ++report.words_per_length[len];
    ++report.words_checked;
    int comps = closure_components(compose(twist, BraidWord(p, word)));
    report.min_components = std::min(report.min_components, comps);
    if (comps < 2) report.passed = false;
    if (len == static_cast<std::size_t>(p - 2)) return;
    for (int i = 1; i < p; ++i) {
      word.push_back(i);
      self(self);
      word.pop_back();
    }
  };
  visit(visit);
  return report;
}

bool equal_crossings_check(const BraidWord& w1, const BraidWord& w2) {
  if (!w1.is_positive() || !w2.is_positive())
    throw value_error("crossing comparison needs positive words");
  if (w1.strands() != w2.strands())
    throw value_error("crossing comparison needs equal strand counts");
  if (closure_components(w1) != 1 || closure_components(w2) != 1)
    throw value_error("crossing comparison needs knot closures");
  if (alexander_polynomial(w1) != alexander_polynomial(w2))
    throw value_error("crossing comparison needs the same knot (Alexander proxy)");
  return w1.length() == w2.length();
}

NotTKnotCertificate not_tknot_certificate(
    const std::vector<std::pair<int, int>>& lower_pairs, int a, int b, int k) {
  if (a < 2 || b < 2) throw value_error("certificate needs a >= 2 and b >= 2");
  if (k < 1) throw value_error("certificate needs k >= 1");

  NotTKnotCertificate cert;
  cert.lower_pairs = lower_pairs;
  cert.a = a;
  cert.b = b;
  cert.k = k;
  {
    std::vector<std::pair<int, int>> pattern_pairs = lower_pairs;
    pattern_pairs.push_back({b, (a - 1) * (a + 1) * b + k});
    cert.pattern_spec = TLinkSpec(std::move(pattern_pairs));
  }
  cert.companion = standard_braid(TLinkSpec({{a, a + 1}}));
  cert.pattern_is_knot = is_knot(cert.pattern_spec);
  cert.braid_index = static_cast<std::int64_t>(a) * b;
  cert.bound = crossings_lower_bound(a * b);
  cert.minimal_crossings = static_cast<std::int64_t>(a * b - b) * b * (a + 1) +
                           static_cast<std::int64_t>(k) * (b - 1);
  for (const auto& [c, d] : lower_pairs)
    cert.minimal_crossings += static_cast<std::int64_t>(d) * (c - 1);

  if (cert.pattern_is_knot) {
    SatelliteFamilyInstance inst = satellite_family_instance(lower_pairs, a, b, k);
    cert.satellite_word = satellite_braid(inst.spec);
    if (inst.predicted_crossings != cert.minimal_crossings ||
        static_cast<std::int64_t>(cert.satellite_word.length()) != cert.minimal_crossings)
      throw internal_error("satellite crossing formula disagrees with construction");
    if (!cert.satellite_word.is_positive())
      throw internal_error("satellite construction lost positivity");
    if (closure_components(cert.satellite_word) != 1)
      throw internal_error("satellite closure is not a knot");
  }

  cert.assumptions = {
      {"the torus knot T(a,a+1) has braid index a", "Franks-Williams"},
      {"the satellite of a braid-index-a companion with winding number b has braid index ab",
       "Williams"},
      {"a positive braid with a full twist realizes the braid index",
       "Franks-Williams"},
  };
  // Chain: any positive full-twist braid for the satellite lives on ab
  // strands; equal strand counts force equal crossing counts (genus formula);
  // the induced braid has minimal_crossings of them, so a count at most the
  // bound contradicts the full-twist lower bound.
  cert.verdict = cert.pattern_is_knot && cert.minimal_crossings <= cert.bound
                     ? Verdict::certified_not_tknot
                     : Verdict::inconclusive;
  return cert;
}

NotTKnotCertificate corollary_family(int a, int b) {
  if (a < 2 || b < 2) throw value_error("corollary family needs a, b >= 2");
  return not_tknot_certificate({}, a, b, 1);
}

}  // namespace braidtk
