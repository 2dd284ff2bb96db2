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

#ifndef BRAIDTK_FORMATS_HPP
#define BRAIDTK_FORMATS_HPP

#include <string>

#include "braidtk/braid.hpp"
#include "braidtk/tlink.hpp"

namespace braidtk {

// Braid text format, two lines:
//   n=<strands>
//   <space-separated signed generator indices>
// e.g. "n=3\n1 2 1 2\n" for (sigma_1 sigma_2)^2. Round-trips bit-exactly.
std::string format_braid(const BraidWord& w);
BraidWord parse_braid(const std::string& text);

// T-link text format: T((r1,s1),(r2,s2),...). The parser reports the byte
// position of the first offending token and enforces the ordering invariant.
std::string format_tlink(const TLinkSpec& spec);
TLinkSpec parse_tlink(const std::string& text);

}  // namespace braidtk

#endif
