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

#include "braidtk.h"

#include <cstring>
#include <string>

#include "braidtk/catalog.hpp"
#include "braidtk/errors.hpp"
#include "braidtk/formats.hpp"
#include "braidtk/garside.hpp"
#include "braidtk/invariants.hpp"
#include "braidtk/kauffman.hpp"
#include "braidtk/obstruction.hpp"
#include "braidtk/rewrite.hpp"
#include "braidtk/satellite.hpp"
#include "braidtk/tlink.hpp"

struct btk_braid {
  braidtk::BraidWord word;
};

struct btk_tlink {
  braidtk::TLinkSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Run `fn`, translating exceptions into status codes and the thread-local
// error message.
template <typename Fn>
btk_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return BTK_OK;
  } catch (const braidtk::parse_error& e) {
    g_last_error = e.what();
    return BTK_ERR_PARSE;
  } catch (const braidtk::internal_error& e) {
    g_last_error = e.what();
    return BTK_ERR_INTERNAL;
  } catch (const braidtk::value_error& e) {
    g_last_error = e.what();
    return BTK_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BTK_ERR_INTERNAL;
  }
}

btk_status require(bool cond, const char* message) {
  if (cond) return BTK_OK;
  g_last_error = message;
  return BTK_ERR_INVALID_ARGUMENT;
}

std::vector<std::pair<int, int>> lower_pairs_from_text(const char* lower_spec) {
  if (lower_spec == nullptr || *lower_spec == '\0') return {};
  return braidtk::parse_tlink(lower_spec).pairs();
}

}  // namespace

extern "C" {

const char* btk_version(void) { return "1.0.0"; }

const char* btk_last_error(void) { return g_last_error.c_str(); }

void btk_string_free(char* s) { delete[] s; }

/* ---- braid words ------------------------------------------------------- */

btk_status btk_braid_parse(const char* text, btk_braid** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new btk_braid{braidtk::parse_braid(text)}; });
}

btk_status btk_braid_from_letters(int strands, const int32_t* letters,
                                  int32_t count, btk_braid** out) {
  if (auto st = require(out && (letters || count == 0) && count >= 0, "null argument"))
    return st;
  return guarded([&] {
    std::vector<int> ls(letters, letters + count);
    *out = new btk_braid{braidtk::BraidWord(strands, std::move(ls))};
  });
}

btk_status btk_braid_format(const btk_braid* w, char** out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(braidtk::format_braid(w->word)); });
}

void btk_braid_free(btk_braid* w) { delete w; }

int32_t btk_braid_strands(const btk_braid* w) { return w ? w->word.strands() : 0; }

int32_t btk_braid_length(const btk_braid* w) {
  return w ? static_cast<int32_t>(w->word.length()) : 0;
}

btk_status btk_braid_letters(const btk_braid* w, int32_t* buffer, int32_t size) {
  if (auto st = require(w && buffer, "null argument")) return st;
  if (auto st = require(size >= static_cast<int32_t>(w->word.length()),
                        "buffer too small"))
    return st;
  for (std::size_t i = 0; i < w->word.length(); ++i)
    buffer[i] = w->word.letters()[i];
  return BTK_OK;
}

int32_t btk_braid_is_positive(const btk_braid* w) {
  return w && w->word.is_positive() ? 1 : 0;
}

btk_status btk_braid_compose(const btk_braid* a, const btk_braid* b, btk_braid** out) {
  if (auto st = require(a && b && out, "null argument")) return st;
  return guarded([&] { *out = new btk_braid{braidtk::compose(a->word, b->word)}; });
}

btk_status btk_braid_inverse(const btk_braid* w, btk_braid** out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = new btk_braid{braidtk::inverse(w->word)}; });
}

btk_status btk_braid_conjugate(const btk_braid* w, const btk_braid* g, btk_braid** out) {
  if (auto st = require(w && g && out, "null argument")) return st;
  return guarded([&] { *out = new btk_braid{braidtk::conjugate(w->word, g->word)}; });
}

btk_status btk_braid_destabilize(const btk_braid* w, btk_braid** out) {
  if (auto st = require(w && out, "null argument")) return st;
  auto result = braidtk::destabilize(w->word);
  if (!result) {
    g_last_error = "destabilization precondition failed";
    return BTK_ERR_PRECONDITION;
  }
  *out = new btk_braid{std::move(*result)};
  return BTK_OK;
}

btk_status btk_braid_full_twist(int32_t strands, btk_braid** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] { *out = new btk_braid{braidtk::full_twist(strands)}; });
}

btk_status btk_braid_permutation(const btk_braid* w, int32_t* buffer, int32_t size) {
  if (auto st = require(w && buffer, "null argument")) return st;
  if (auto st = require(size >= w->word.strands(), "buffer too small")) return st;
  return guarded([&] {
    auto p = braidtk::permutation_of(w->word);
    for (int i = 0; i < p.size(); ++i) buffer[i] = p.image(i) + 1;
  });
}

/* ---- invariants --------------------------------------------------------- */

btk_status btk_braid_components(const btk_braid* w, int32_t* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = braidtk::closure_components(w->word); });
}

btk_status btk_braid_exponent_sum(const btk_braid* w, int64_t* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = w->word.exponent_sum(); });
}

btk_status btk_braid_self_linking(const btk_braid* w, int64_t* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = braidtk::self_linking(w->word); });
}

btk_status btk_braid_genus(const btk_braid* w, int64_t* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = braidtk::bennequin_genus(w->word); });
}

btk_status btk_braid_alexander(const btk_braid* w, char** out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(braidtk::alexander_polynomial(w->word).to_string());
  });
}

btk_status btk_braid_garside_inf(const btk_braid* w, int32_t* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = braidtk::garside_normal_form(w->word).inf; });
}

btk_status btk_braid_contains_full_twist(const btk_braid* w, int32_t* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = braidtk::contains_full_twist(w->word) ? 1 : 0; });
}

btk_status btk_braid_kauffman(const btk_braid* w, int32_t crossing_cap, char** out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(braidtk::kauffman_bracket(w->word, crossing_cap).to_string("A"));
  });
}

/* ---- T-links ------------------------------------------------------------ */

btk_status btk_tlink_parse(const char* text, btk_tlink** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new btk_tlink{braidtk::parse_tlink(text)}; });
}

btk_status btk_tlink_from_pairs(const int32_t* rs_pairs, int32_t pair_count,
                                btk_tlink** out) {
  if (auto st = require(rs_pairs && out && pair_count > 0, "null argument")) return st;
  return guarded([&] {
    std::vector<std::pair<int, int>> pairs;
    for (int32_t i = 0; i < pair_count; ++i)
      pairs.push_back({rs_pairs[2 * i], rs_pairs[2 * i + 1]});
    *out = new btk_tlink{braidtk::TLinkSpec(std::move(pairs))};
  });
}

btk_status btk_tlink_format(const btk_tlink* t, char** out) {
  if (auto st = require(t && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(braidtk::format_tlink(t->spec)); });
}

void btk_tlink_free(btk_tlink* t) { delete t; }

int32_t btk_tlink_pair_count(const btk_tlink* t) {
  return t ? static_cast<int32_t>(t->spec.pairs().size()) : 0;
}

btk_status btk_tlink_pairs(const btk_tlink* t, int32_t* buffer, int32_t size) {
  if (auto st = require(t && buffer, "null argument")) return st;
  if (auto st = require(size >= 2 * btk_tlink_pair_count(t), "buffer too small"))
    return st;
  int32_t i = 0;
  for (const auto& [r, s] : t->spec.pairs()) {
    buffer[i++] = r;
    buffer[i++] = s;
  }
  return BTK_OK;
}

btk_status btk_tlink_standard_braid(const btk_tlink* t, btk_braid** out) {
  if (auto st = require(t && out, "null argument")) return st;
  return guarded([&] { *out = new btk_braid{braidtk::standard_braid(t->spec)}; });
}

btk_status btk_tlink_is_knot(const btk_tlink* t, int32_t* out) {
  if (auto st = require(t && out, "null argument")) return st;
  return guarded([&] { *out = braidtk::is_knot(t->spec) ? 1 : 0; });
}

btk_status btk_tlink_transpose_dual(const btk_tlink* t, btk_tlink** out) {
  if (auto st = require(t && out, "null argument")) return st;
  return guarded([&] { *out = new btk_tlink{braidtk::transpose_dual(t->spec)}; });
}

/* ---- full-twist rewrite pipeline ---------------------------------------- */

btk_status btk_fulltwist_certificate(const btk_tlink* t, char** json_out) {
  if (auto st = require(t && json_out, "null argument")) return st;
  return guarded([&] {
    auto cert = braidtk::fulltwist_presentation(t->spec);
    *json_out = copy_string(braidtk::certificate_json(cert));
  });
}

btk_status btk_fulltwist_braid(const btk_tlink* t, btk_braid** out) {
  if (auto st = require(t && out, "null argument")) return st;
  return guarded([&] {
    *out = new btk_braid{braidtk::fulltwist_presentation(t->spec).output_word};
  });
}

/* ---- satellites ---------------------------------------------------------- */

btk_status btk_satellite_braid(const btk_braid* companion, const btk_braid* pattern,
                               int32_t cable_width, btk_framing framing,
                               btk_braid** out) {
  if (auto st = require(companion && pattern && out, "null argument")) return st;
  return guarded([&] {
    braidtk::SatelliteSpec spec;
    spec.companion = companion->word;
    spec.pattern = pattern->word;
    spec.cable_width = cable_width;
    spec.framing = framing == BTK_FRAMING_BLACKBOARD ? braidtk::Framing::blackboard
                                                     : braidtk::Framing::seifert_zero;
    *out = new btk_braid{braidtk::satellite_braid(spec)};
  });
}

btk_status btk_family_instance(const char* lower_spec, int32_t a, int32_t b,
                               int32_t k, btk_braid** out_braid,
                               int64_t* out_predicted_crossings) {
  if (auto st = require(out_braid && out_predicted_crossings, "null argument"))
    return st;
  return guarded([&] {
    auto inst = braidtk::satellite_family_instance(lower_pairs_from_text(lower_spec), a, b, k);
    *out_predicted_crossings = inst.predicted_crossings;
    *out_braid = new btk_braid{braidtk::satellite_braid(inst.spec)};
  });
}

/* ---- obstruction certificates -------------------------------------------- */

btk_status btk_not_tknot_certificate(const char* lower_spec, int32_t a, int32_t b,
                                     int32_t k, char** json_out, int32_t* verdict_out) {
  if (auto st = require(json_out && verdict_out, "null argument")) return st;
  return guarded([&] {
    auto cert =
        braidtk::not_tknot_certificate(lower_pairs_from_text(lower_spec), a, b, k);
    *json_out = copy_string(braidtk::certificate_json(cert));
    *verdict_out = cert.certified() ? 1 : 0;
  });
}

btk_status btk_corollary_family(int32_t a, int32_t b, char** json_out,
                                int32_t* verdict_out) {
  if (auto st = require(json_out && verdict_out, "null argument")) return st;
  return guarded([&] {
    auto cert = braidtk::corollary_family(a, b);
    *json_out = copy_string(braidtk::certificate_json(cert));
    *verdict_out = cert.certified() ? 1 : 0;
  });
}

/* ---- catalog -------------------------------------------------------------- */

btk_status btk_catalog_append(const char* path, const char* kind,
                              const char* payload_json, char** id_out,
                              int32_t* appended_out) {
  if (auto st = require(path && kind && payload_json && id_out && appended_out,
                        "null argument"))
    return st;
  return guarded([&] {
    braidtk::Catalog catalog(path);
    auto [id, appended] = catalog.append(kind, payload_json);
    *id_out = copy_string(id);
    *appended_out = appended ? 1 : 0;
  });
}

}  // extern "C"
