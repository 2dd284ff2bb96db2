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

#ifndef BRAIDTK_KAUFFMAN_HPP
#define BRAIDTK_KAUFFMAN_HPP

#include "braidtk/braid.hpp"
#include "braidtk/laurent.hpp"

namespace braidtk {

// Writhe-normalized Kauffman bracket of the braid closure, a Laurent
// polynomial in the frame variable A with the unknot normalized to 1. This
// is the Jones polynomial in disguise (t = A^-4) and serves as a second,
// fully independent oracle at desk scale: the state sum is folded letter by
// letter with states memoized on the arc-connection pattern, but it is still
// exponential in spirit and hard-capped by `crossing_cap`.
LaurentPoly kauffman_bracket(const BraidWord& w, int crossing_cap = 16);

}  // namespace braidtk

#endif
