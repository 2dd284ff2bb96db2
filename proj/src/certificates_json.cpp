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

#include <json.hpp>

#include "braidtk/formats.hpp"
#include "braidtk/obstruction.hpp"
#include "braidtk/rewrite.hpp"

namespace braidtk {

namespace {

nlohmann::json bundle_json(const InvariantBundle& b) {
  nlohmann::json j;
  j["components"] = b.components;
  j["exponent_sum"] = b.exponent_sum;
  j["self_linking"] = b.self_linking;
  if (b.genus)
    j["genus"] = *b.genus;
  else
    j["genus"] = nullptr;
  j["alexander"] = b.alexander.to_string();
  return j;
}

}  // namespace

std::string certificate_json(const RewriteCertificate& cert) {
  nlohmann::json j;
  j["input_spec"] = format_tlink(cert.input_spec);
  j["input_braid"] = format_braid(cert.input_word);
  j["output_braid"] = format_braid(cert.output_word);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : cert.steps) {
    nlohmann::json step;
    step["name"] = s.name;
    step["params"] = s.params;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["invariants"] = {{"input", bundle_json(cert.input_invariants)},
                     {"output", bundle_json(cert.output_invariants)}};
  j["garside_inf"] = cert.garside_inf;
  j["fulltwist"] = cert.fulltwist_witness;
  j["degenerate_unknot"] = cert.degenerate_unknot;
  j["valid"] = cert.valid();
  return j.dump(2);
}

std::string certificate_json(const NotTKnotCertificate& cert) {
  nlohmann::json j;
  nlohmann::json params;
  nlohmann::json lower = nlohmann::json::array();
  for (const auto& [c, d] : cert.lower_pairs) lower.push_back({c, d});
  params["lower_pairs"] = std::move(lower);
  params["a"] = cert.a;
  params["b"] = cert.b;
  params["k"] = cert.k;
  j["params"] = std::move(params);
  j["pattern"] = format_tlink(cert.pattern_spec);
  j["companion"] = format_braid(cert.companion);
  j["braid_index"] = cert.braid_index;
  j["minimal_crossings"] = cert.minimal_crossings;
  j["bound"] = cert.bound;
  j["verdict"] = cert.certified() ? "certified_not_tknot" : "inconclusive";
  nlohmann::json assumptions = nlohmann::json::array();
  for (const auto& asm_ : cert.assumptions)
    assumptions.push_back({{"fact", asm_.fact}, {"citation", asm_.citation}});
  j["assumptions"] = std::move(assumptions);
  nlohmann::json inv;
  inv["pattern_is_knot"] = cert.pattern_is_knot;
  if (cert.pattern_is_knot) {
    inv["components"] = closure_components(cert.satellite_word);
    inv["self_linking"] = self_linking(cert.satellite_word);
    inv["satellite_crossings"] = static_cast<std::int64_t>(cert.satellite_word.length());
    inv["satellite_strands"] = cert.satellite_word.strands();
    inv["genus"] = bennequin_genus(cert.satellite_word);
  }
  j["invariants"] = std::move(inv);
  return j.dump(2);
}

}  // namespace braidtk
