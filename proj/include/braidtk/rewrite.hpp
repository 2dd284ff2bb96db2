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

#ifndef BRAIDTK_REWRITE_HPP
#define BRAIDTK_REWRITE_HPP

#include <map>
#include <string>
#include <vector>

#include "braidtk/braid.hpp"
#include "braidtk/garside.hpp"
#include "braidtk/invariants.hpp"
#include "braidtk/tlink.hpp"

namespace braidtk {

// One named move of the rewrite pipeline, with enough parameters to replay
// it deterministically.
struct RewriteStep {
  std::string name;  // "isopote" | "cyclic-push" | "duality" | "garside-extraction"
  std::map<std::string, std::int64_t> params;

  bool operator==(const RewriteStep&) const = default;
};

// Evidence that a rewrite preserved the closure link and produced a positive
// braid containing a positive full twist.
struct RewriteCertificate {
  TLinkSpec input_spec;
  BraidWord input_word;
  BraidWord output_word;
  std::vector<RewriteStep> steps;
  InvariantBundle input_invariants;
  InvariantBundle output_invariants;
  int garside_inf = 0;
  bool fulltwist_witness = false;
  // The unknot admits no positive full-twist braid on two or more strands;
  // it is presented as the empty braid on one strand instead.
  bool degenerate_unknot = false;

  bool valid() const;
};

std::string certificate_json(const RewriteCertificate& cert);

// Strand-reduction isotopy: for B on r strands and 0 < q <= r < p, the
// closure of B . (s1..s_{p-1})^q equals the closure of
//   (s_{r-1} .. s_{r-q+1})^{p-r} . B . (s1..s_{r-1})^q     (q > 1)
//   B . (s1..s_{r-1})                                       (q = 1)
// on r strands. Drops exactly p - r crossings and p - r strands, so the
// self-linking defect is conserved.
BraidWord strand_reduction_step(const BraidWord& b, int p, int q);

// q = 1 absorption at the T-link level: T(..., (r_n, s_n), (p, 1)) is the
// T-link T(..., (r_n, s_n + 1)). A single pair collapses to the unknot.
TLinkSpec absorb_trailing_power_one(const TLinkSpec& spec);

struct PipelineResult {
  BraidWord word;
  std::vector<RewriteStep> steps;
};

// Iterated rewrite for specs whose next-to-top strand parameter is at least
// the top power: cascades strand reductions downward, accumulating top-aligned
// twist blocks and merging torus powers, until the running power reaches the
// running strand count and the word carries a visible full twist.
PipelineResult cascade_pipeline(const TLinkSpec& spec);

// Duality move for a positive braid shaped as bottom-anchored torus
// sub-braids of width at most q below the top torus braid (s1..s_{p-1})^q,
// p > q > 1: the top braid deforms to (s1..s_{q-1})^p on q strands with the
// sub-braids carried below it, which contains a full twist since p > q.
// Sub-braids with a nonzero start index are rejected; the toolkit only
// implements the bottom-anchored case the full-twist theorem needs.
BraidWord duality_transform(const std::vector<TorusBraidSpec>& lower, int p,
                            int q);

// Dispatcher: every T-link gets a positive braid with at least one positive
// full twist, with the Delta^2 prefix made syntactically explicit and the
// whole rewrite certified by the invariant bundle.
RewriteCertificate fulltwist_presentation(const TLinkSpec& spec);

}  // namespace braidtk

#endif
