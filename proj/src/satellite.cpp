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

#include "braidtk/satellite.hpp"

#include <cstdlib>

#include "braidtk/errors.hpp"
#include "braidtk/formats.hpp"
#include "braidtk/invariants.hpp"

namespace braidtk {

void validate(const SatelliteSpec& spec) {
  if (spec.cable_width < 2) throw value_error("cable width must be at least 2");
  if (closure_components(spec.companion) != 1)
    throw value_error("companion closure must be a knot");
  if (spec.pattern.strands() != spec.cable_width)
    throw value_error("pattern strand count must equal the cable width");
  if (permutation_of(spec.pattern).cycle_count() != 1)
    throw value_error("pattern permutation must be a single cycle");
}

BraidWord cable(const BraidWord& w, int b) {
  if (b < 1) throw value_error("cable width must be positive");
  std::vector<int> letters;
  letters.reserve(w.length() * static_cast<std::size_t>(b) * static_cast<std::size_t>(b));
  for (int l : w.letters()) {
    const int i = std::abs(l);
    const int base = b * (i - 1);
    // Block transposition of strand bundles [base+1..base+b] and
    // [base+b+1..base+2b] with b*b same-sign crossings.
    std::vector<int> block;
    block.reserve(static_cast<std::size_t>(b) * static_cast<std::size_t>(b));
    for (int row = 1; row <= b; ++row)
      for (int col = 0; col < b; ++col) block.push_back(base + b - row + 1 + col);
    if (l > 0) {
      letters.insert(letters.end(), block.begin(), block.end());
    } else {
      for (std::size_t j = block.size(); j-- > 0;) letters.push_back(-block[j]);
    }
  }
  return BraidWord(w.strands() * b, std::move(letters));
}

BraidWord framing_correction(int b, std::int64_t companion_exponent_sum,
                             Framing framing) {
  if (b < 2) throw value_error("framing correction needs cable width >= 2");
  if (framing == Framing::blackboard) return BraidWord(b);
  std::vector<int> letters;
  for (std::int64_t rep = 0; rep < b * companion_exponent_sum; ++rep)
    for (int i = b - 1; i >= 1; --i) letters.push_back(-i);
  return BraidWord(b, std::move(letters));
}

BraidWord satellite_braid(const SatelliteSpec& spec) {
  validate(spec);
  const int b = spec.cable_width;
  const int total = spec.companion.strands() * b;
  BraidWord word = cable(spec.companion, b);
  // Pattern and correction act on the first b strands of the cable; the
  // letters embed unchanged.
  word = compose(word, BraidWord(total, spec.pattern.letters()));
  BraidWord corr = framing_correction(b, spec.companion.exponent_sum(), spec.framing);
  word = compose(word, BraidWord(total, corr.letters()));
  return word;
}

SatelliteFamilyInstance satellite_family_instance(
    const std::vector<std::pair<int, int>>& lower_pairs, int a, int b, int k) {
  if (a < 2 || b < 2) throw value_error("family needs a >= 2 and b >= 2");
  if (k < 1) throw value_error("family needs k >= 1");
  for (const auto& [c, d] : lower_pairs) {
    if (c >= b)
      throw value_error("lower pairs must have strand parameter below b");
    (void)d;
  }
  std::vector<std::pair<int, int>> pattern_pairs = lower_pairs;
  const int top_power = (a - 1) * (a + 1) * b + k;
  pattern_pairs.push_back({b, top_power});
  TLinkSpec pattern_spec{std::move(pattern_pairs)};
  if (!is_knot(pattern_spec))
    throw value_error("pattern T-link is not a knot: " + format_tlink(pattern_spec));

  SatelliteSpec spec;
  spec.companion = standard_braid(TLinkSpec({{a, a + 1}}));
  spec.pattern = standard_braid(pattern_spec);
  spec.cable_width = b;
  spec.framing = Framing::seifert_zero;

  std::int64_t predicted = static_cast<std::int64_t>(a) * b - b;
  predicted *= static_cast<std::int64_t>(b) * (a + 1);
  predicted += static_cast<std::int64_t>(k) * (b - 1);
  for (const auto& [c, d] : lower_pairs)
    predicted += static_cast<std::int64_t>(d) * (c - 1);
  return {std::move(spec), std::move(pattern_spec), predicted};
}

std::string format_satellite(const SatelliteSpec& spec) {
  auto braid_inline = [](const BraidWord& w) {
    std::string text = format_braid(w);
    // single-line form: newlines become "; " separators
    std::string out = "braid(";
    for (char c : text) {
      if (c == '\n')
        out += "; ";
      else
        out += c;
    }
    while (out.size() >= 2 && out.compare(out.size() - 2, 2, "; ") == 0)
      out.erase(out.size() - 2);
    return out + ")";
  };
  std::string out = "sat(companion=" + braid_inline(spec.companion);
  out += ", pattern=" + braid_inline(spec.pattern);
  out += ", b=" + std::to_string(spec.cable_width);
  out += ", framing=";
  out += spec.framing == Framing::seifert_zero ? "seifert_zero" : "blackboard";
  out += ")";
  return out;
}

namespace {

BraidWord parse_braid_inline(const std::string& text, std::size_t offset) {
  if (text.compare(0, 6, "braid(") != 0 || text.back() != ')')
    throw parse_error("expected braid(n=<k>; letters)", offset);
  std::string body = text.substr(6, text.size() - 7);
  for (auto& c : body)
    if (c == ';') c = '\n';
  return parse_braid(body);
}

}  // namespace

SatelliteSpec parse_satellite(const std::string& text) {
  // sat(companion=braid(...), pattern=braid(...), b=<int>, framing=<tag>)
  auto field = [&](const std::string& key) -> std::pair<std::string, std::size_t> {
    std::size_t at = text.find(key + "=");
    if (at == std::string::npos)
      throw parse_error("missing field '" + key + "'", 0);
    std::size_t start = at + key.size() + 1;
    std::size_t depth = 0;
    std::size_t end = start;
    for (; end < text.size(); ++end) {
      char c = text[end];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
    }
    return {text.substr(start, end - start), start};
  };

  if (text.compare(0, 4, "sat(") != 0 || text.back() != ')')
    throw parse_error("expected sat(...)", 0);
  auto [companion_text, cat] = field("companion");
  auto [pattern_text, pat] = field("pattern");
  auto [b_text, bat] = field("b");
  auto [framing_text, fat] = field("framing");

  SatelliteSpec spec;
  spec.companion = parse_braid_inline(companion_text, cat);
  spec.pattern = parse_braid_inline(pattern_text, pat);
  spec.cable_width = std::stoi(b_text);
  if (framing_text == "seifert_zero")
    spec.framing = Framing::seifert_zero;
  else if (framing_text == "blackboard")
    spec.framing = Framing::blackboard;
  else
    throw parse_error("unknown framing tag", fat);
  validate(spec);
  return spec;
}

}  // namespace braidtk
