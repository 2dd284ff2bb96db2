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

#include "braidtk/rewrite.hpp"

#include <algorithm>

#include "braidtk/errors.hpp"

namespace braidtk {

namespace {

// Accumulated prefix twist block (s_{R-1} ... s_{R-width+1})^power, kept
// top-aligned at the current top strand R as the cascade descends.
struct TwistBlock {
  int width;
  int power;
};

void append_block(std::vector<int>& letters, const TwistBlock& b, int top) {
  for (int rep = 0; rep < b.power; ++rep)
    for (int i = top - 1; i >= top - b.width + 1; --i) letters.push_back(i);
}

BraidWord assemble(const std::vector<TwistBlock>& blocks,
                   const std::vector<std::pair<int, int>>& pairs) {
  const int top = pairs.back().first;
  std::vector<int> letters;
  for (const auto& b : blocks) append_block(letters, b, top);
  for (const auto& [r, s] : pairs)
    for (int rep = 0; rep < s; ++rep)
      for (int i = 1; i < r; ++i) letters.push_back(i);
  return BraidWord(top, std::move(letters));
}

}  // namespace

BraidWord strand_reduction_step(const BraidWord& b, int p, int q) {
  const int r = b.strands();
  if (!(0 < q && q <= r && r < p))
    throw value_error("strand reduction needs 0 < q <= r < p");
  if (!b.is_positive())
    throw value_error("strand reduction expects a positive braid");
  std::vector<int> letters;
  if (q > 1) {
    for (int rep = 0; rep < p - r; ++rep)
      for (int i = r - 1; i >= r - q + 1; --i) letters.push_back(i);
  }
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  const int reps = q > 1 ? q : 1;
  for (int rep = 0; rep < reps; ++rep)
    for (int i = 1; i < r; ++i) letters.push_back(i);
  return BraidWord(r, std::move(letters));
}

TLinkSpec absorb_trailing_power_one(const TLinkSpec& spec) {
  const auto& pairs = spec.pairs();
  if (pairs.back().second != 1)
    throw value_error("absorb step needs a trailing power of 1");
  if (pairs.size() == 1) return TLinkSpec::unknot();
  std::vector<std::pair<int, int>> rest(pairs.begin(), pairs.end() - 1);
  rest.back().second += 1;
  return TLinkSpec(std::move(rest));
}

PipelineResult cascade_pipeline(const TLinkSpec& spec) {
  auto pairs = spec.pairs();
  if (pairs.size() < 2)
    throw value_error("cascade needs a pair below the top one");
  if (pairs.back().second <= 1)
    throw value_error("cascade needs top power q > 1");
  if (pairs[pairs.size() - 2].first < pairs.back().second)
    throw value_error("cascade needs next strand parameter >= top power");

  PipelineResult out;
  std::vector<TwistBlock> blocks;
  for (;;) {
    const int top_r = pairs.back().first;
    const int top_s = pairs.back().second;
    if (top_s >= top_r) break;  // the top torus power is itself a full twist

    const std::size_t m = pairs.size();
    const int r_low = m >= 2 ? pairs[m - 2].first : 0;
    // Cascade into the next pair while it can absorb the power; otherwise
    // one last reduction to top_s strands exposes (s1..s_{q-1})^q = Delta^2.
    const int rt = r_low >= top_s ? r_low : top_s;

    if (!blocks.empty())
      out.steps.push_back({"cyclic-push",
                           {{"blocks", static_cast<std::int64_t>(blocks.size())},
                            {"to_strands", rt}}});
    out.steps.push_back({"isopote", {{"r", rt}, {"p", top_r}, {"q", top_s}}});

    blocks.push_back({top_s, top_r - rt});
    pairs.pop_back();
    if (!pairs.empty() && pairs.back().first == rt)
      pairs.back().second += top_s;
    else
      pairs.push_back({rt, top_s});
  }
  out.word = assemble(blocks, pairs);
  return out;
}

BraidWord duality_transform(const std::vector<TorusBraidSpec>& lower, int p,
                            int q) {
  if (!(p > q && q > 1))
    throw value_error("duality transform needs p > q > 1");
  std::vector<int> letters;
  for (const auto& sub : lower) {
    if (sub.start != 0)
      throw value_error(
          "duality transform only supports bottom-anchored torus sub-braids");
    if (sub.power < 1) throw value_error("torus braid power must be positive");
    if (sub.end > q)
      throw value_error("lower torus braid wider than the top power q");
    for (int rep = 0; rep < sub.power; ++rep)
      for (int i = 1; i < sub.end; ++i) letters.push_back(i);
  }
  // The deformation of the top braid (s1..s_{p-1})^q to (s1..s_{q-1})^p on
  // q strands, realized word-for-word by the strand-reduction isotopy with
  // the lower braids riding on the first q strands. The trailing
  // (s1..s_{q-1})^q is the full twist Delta^2.
  return strand_reduction_step(BraidWord(q, std::move(letters)), p, q);
}

bool RewriteCertificate::valid() const {
  return output_word.is_positive() && garside_inf >= 2 && fulltwist_witness &&
         input_invariants.matches(output_invariants);
}

RewriteCertificate fulltwist_presentation(const TLinkSpec& spec) {
  std::vector<RewriteStep> steps;
  auto work = spec.pairs();
  BraidWord out;
  bool degenerate = false;

  for (;;) {
    const std::size_t m = work.size();
    const auto [p, q] = work.back();
    if (q == 1) {
      if (m == 1) {
        // T((p,1)) closes to the unknot; present it on a single strand.
        steps.push_back({"isopote", {{"r", 1}, {"p", p}, {"q", 1}}});
        out = BraidWord(1);
        degenerate = true;
        break;
      }
      steps.push_back({"isopote", {{"r", work[m - 2].first}, {"p", p}, {"q", 1}}});
      TLinkSpec absorbed = absorb_trailing_power_one(TLinkSpec(work));
      work = absorbed.pairs();
      continue;
    }
    if (q >= p) {
      // The standard braid already carries (s1..s_{p-1})^p = Delta^2.
      out = standard_braid(TLinkSpec(work));
      break;
    }
    const int r_low = m >= 2 ? work[m - 2].first : 0;
    if (q >= r_low) {
      std::vector<TorusBraidSpec> lower;
      for (std::size_t i = 0; i + 1 < m; ++i)
        lower.push_back({0, work[i].first, work[i].second});
      out = duality_transform(lower, p, q);
      steps.push_back({"duality", {{"p", p}, {"q", q}}});
      break;
    }
    PipelineResult cascade = cascade_pipeline(TLinkSpec(work));
    steps.insert(steps.end(), cascade.steps.begin(), cascade.steps.end());
    out = cascade.word;
    break;
  }

  int inf = 2;
  if (!degenerate) {
    GarsideNormalForm nf = garside_normal_form(out);
    if (nf.inf < 2)
      throw internal_error("rewrite produced a word without a full twist");
    inf = nf.inf;
    // Re-express the output with the full twist as a literal prefix.
    const int n = out.strands();
    std::vector<int> letters = full_twist(n).letters();
    GarsideNormalForm rest = nf;
    rest.inf -= 2;
    const BraidWord tail = reassemble(rest);
    letters.insert(letters.end(), tail.letters().begin(), tail.letters().end());
    out = BraidWord(n, std::move(letters));
  }
  steps.push_back({"garside-extraction", {{"inf", inf}}});

  RewriteCertificate cert{spec,
                          standard_braid(spec),
                          out,
                          std::move(steps),
                          InvariantBundle{},
                          InvariantBundle{},
                          inf,
                          inf >= 2,
                          degenerate};
  cert.input_invariants = invariant_bundle(cert.input_word);
  cert.output_invariants = invariant_bundle(cert.output_word);
  if (!cert.valid())
    throw internal_error("rewrite certificate failed validation for " +
                         std::to_string(spec.pairs().size()) + "-pair T-link");
  return cert;
}

}  // namespace braidtk
