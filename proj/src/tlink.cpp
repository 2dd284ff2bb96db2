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

#include "braidtk/tlink.hpp"

#include <algorithm>

#include "braidtk/errors.hpp"

namespace braidtk {

TLinkSpec::TLinkSpec(std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw value_error("T-link spec needs at least one pair");
  int prev = 1;
  for (const auto& [r, s] : pairs_) {
    if (r < 2) throw value_error("T-link strand parameters start at 2");
    if (r <= prev) throw value_error("T-link strand parameters must strictly increase");
    if (s < 1) throw value_error("T-link powers must be positive");
    prev = r;
  }
}

TLinkSpec TLinkSpec::unknot() { return TLinkSpec({{2, 1}}); }

bool TLinkSpec::is_unknot_spec() const {
  return pairs_.size() == 1 && pairs_[0] == std::pair<int, int>{2, 1};
}

BraidWord standard_braid(const TLinkSpec& spec) {
  const int n = spec.top_strands();
  std::vector<int> letters;
  for (const auto& [r, s] : spec.pairs())
    for (int rep = 0; rep < s; ++rep)
      for (int i = 1; i < r; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord torus_subbraid(const TorusBraidSpec& t, int ambient_strands) {
  if (t.start < 0 || t.end <= t.start) throw value_error("torus braid needs start < end");
  if (t.power < 1) throw value_error("torus braid power must be positive");
  if (t.end > ambient_strands)
    throw value_error("torus braid does not fit the ambient strand count");
  const int first = std::max(t.start, 1);
  std::vector<int> letters;
  for (int rep = 0; rep < t.power; ++rep)
    for (int i = first; i < t.end; ++i) letters.push_back(i);
  return BraidWord(ambient_strands, std::move(letters));
}

bool is_knot(const TLinkSpec& spec) {
  return permutation_of(standard_braid(spec)).cycle_count() == 1;
}

TLinkSpec transpose_dual(const TLinkSpec& spec) {
  // Row widths with multiplicity, i.e. the partition sorted descending.
  std::vector<int> parts;
  for (const auto& [r, s] : spec.pairs())
    for (int rep = 0; rep < s; ++rep) parts.push_back(r);
  std::sort(parts.rbegin(), parts.rend());

  const int widest = parts.front();
  std::vector<std::pair<int, int>> dual;  // built widest-first
  for (int col = 1; col <= widest; ++col) {
    int height = 0;
    for (int p : parts) {
      if (p >= col)
        ++height;
      else
        break;
    }
    if (height < 2) continue;  // width-1 rows of the transpose are trivial
    if (!dual.empty() && dual.back().first == height)
      dual.back().second += 1;
    else
      dual.push_back({height, 1});
  }
  if (dual.empty()) return TLinkSpec::unknot();
  std::reverse(dual.begin(), dual.end());
  return TLinkSpec(std::move(dual));
}

}  // namespace braidtk
