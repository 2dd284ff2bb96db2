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

#ifndef BRAIDTK_SATELLITE_HPP
#define BRAIDTK_SATELLITE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidtk/braid.hpp"
#include "braidtk/tlink.hpp"

namespace braidtk {

// Framing convention for the satellite embedding. seifert_zero sends the
// standard (null-homologous) longitude of the pattern torus to the standard
// longitude of the companion neighbourhood, which costs a correction of
// -e(companion) full twists on the cable strands. blackboard skips the
// correction and reproduces the untwisted cabling convention older results
// were implicitly using.
enum class Framing { seifert_zero, blackboard };

struct SatelliteSpec {
  BraidWord companion;  // closure must be a knot
  BraidWord pattern;    // on cable_width strands, permutation a single cycle
  int cable_width = 2;  // b >= 2
  Framing framing = Framing::seifert_zero;
};

// Throws value_error when the spec invariants fail.
void validate(const SatelliteSpec& spec);

std::string format_satellite(const SatelliteSpec& spec);
SatelliteSpec parse_satellite(const std::string& text);

// Replace every crossing of w by the b*b same-sign block crossing braid:
// the cabled word on n*b strands. cable(w, 1) == w.
BraidWord cable(const BraidWord& w, int b);

// Zero-framing correction (s1..s_{b-1})^{-b*e} for companion exponent sum e;
// empty for blackboard framing. Needs b >= 2.
BraidWord framing_correction(int b, std::int64_t companion_exponent_sum,
                             Framing framing);

// cable(companion, b) . pattern . framing_correction, free-reduced so the
// pattern's top torus power cancels the correction syntactically.
BraidWord satellite_braid(const SatelliteSpec& spec);

struct SatelliteFamilyInstance {
  SatelliteSpec spec;
  TLinkSpec pattern_spec;
  std::int64_t predicted_crossings = 0;
};

// Companion T(a, a+1), pattern T((c_1,d_1),...,(c_n,d_n),(b,(a-1)(a+1)b+k))
// with zero framing; the satellite braid is positive with exactly
// (ab-b)b(a+1) + k(b-1) + sum d_i(c_i-1) crossings.
SatelliteFamilyInstance satellite_family_instance(
    const std::vector<std::pair<int, int>>& lower_pairs, int a, int b, int k);

}  // namespace braidtk

#endif
