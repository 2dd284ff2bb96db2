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

// Exercises the public shared-library surface exactly the way an external
// client would: through braidtk.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <json.hpp>
#include <string>

#include "braidtk.h"

namespace {

struct Braid {
  btk_braid* handle = nullptr;
  ~Braid() { btk_braid_free(handle); }
};

struct TLink {
  btk_tlink* handle = nullptr;
  ~TLink() { btk_tlink_free(handle); }
};

struct Str {
  char* value = nullptr;
  ~Str() { btk_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::strlen(btk_version()) > 0);
}

TEST_CASE("braid construction from letters") {
  Braid braid;
  int32_t letters[3] = {1, -2, 1};
  REQUIRE(btk_braid_from_letters(3, letters, 3, &braid.handle) == BTK_OK);
  CHECK(btk_braid_strands(braid.handle) == 3);
  CHECK(btk_braid_is_positive(braid.handle) == 0);
  Braid bad;
  CHECK(btk_braid_from_letters(2, letters, 3, &bad.handle) ==
        BTK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("braid handles round-trip through text") {
  Braid braid;
  REQUIRE(btk_braid_parse("n=3\n1 2 1 2", &braid.handle) == BTK_OK);
  CHECK(btk_braid_strands(braid.handle) == 3);
  CHECK(btk_braid_length(braid.handle) == 4);
  CHECK(btk_braid_is_positive(braid.handle) == 1);

  Str text;
  REQUIRE(btk_braid_format(braid.handle, &text.value) == BTK_OK);
  CHECK(text.str() == "n=3\n1 2 1 2\n");

  int32_t letters[4];
  REQUIRE(btk_braid_letters(braid.handle, letters, 4) == BTK_OK);
  CHECK(letters[0] == 1);
  CHECK(letters[3] == 2);

  int32_t images[3];
  REQUIRE(btk_braid_permutation(braid.handle, images, 3) == BTK_OK);
  CHECK(images[0] == 2);
  CHECK(images[1] == 3);
  CHECK(images[2] == 1);
}

TEST_CASE("parse failures set status and message") {
  Braid braid;
  CHECK(btk_braid_parse("nope", &braid.handle) == BTK_ERR_PARSE);
  CHECK(std::strlen(btk_last_error()) > 0);
  CHECK(btk_braid_parse(nullptr, &braid.handle) == BTK_ERR_INVALID_ARGUMENT);

  TLink spec;
  CHECK(btk_tlink_parse("T((3,1),(2,2))", &spec.handle) == BTK_ERR_PARSE);
  CHECK(std::string(btk_last_error()).find("increase") != std::string::npos);
}

TEST_CASE("group operations") {
  Braid a, b, composed, inv, conj, twist;
  REQUIRE(btk_braid_parse("n=2\n1", &a.handle) == BTK_OK);
  REQUIRE(btk_braid_parse("n=2\n1 1", &b.handle) == BTK_OK);
  REQUIRE(btk_braid_compose(a.handle, b.handle, &composed.handle) == BTK_OK);
  CHECK(btk_braid_length(composed.handle) == 3);
  REQUIRE(btk_braid_inverse(a.handle, &inv.handle) == BTK_OK);
  int32_t letter = 0;
  REQUIRE(btk_braid_letters(inv.handle, &letter, 1) == BTK_OK);
  CHECK(letter == -1);
  REQUIRE(btk_braid_conjugate(b.handle, a.handle, &conj.handle) == BTK_OK);
  CHECK(btk_braid_length(conj.handle) == 2);
  REQUIRE(btk_braid_full_twist(3, &twist.handle) == BTK_OK);
  CHECK(btk_braid_length(twist.handle) == 6);

  Braid mismatch;
  CHECK(btk_braid_compose(a.handle, twist.handle, &mismatch.handle) ==
        BTK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("destabilize signals its precondition") {
  Braid stable, reduced;
  REQUIRE(btk_braid_parse("n=3\n1 1 2", &stable.handle) == BTK_OK);
  REQUIRE(btk_braid_destabilize(stable.handle, &reduced.handle) == BTK_OK);
  CHECK(btk_braid_strands(reduced.handle) == 2);

  Braid blocked, out;
  REQUIRE(btk_braid_parse("n=3\n2 2", &blocked.handle) == BTK_OK);
  CHECK(btk_braid_destabilize(blocked.handle, &out.handle) == BTK_ERR_PRECONDITION);
}

TEST_CASE("invariants through the C surface") {
  Braid trefoil;
  REQUIRE(btk_braid_parse("n=2\n1 1 1", &trefoil.handle) == BTK_OK);

  int32_t components = 0;
  REQUIRE(btk_braid_components(trefoil.handle, &components) == BTK_OK);
  CHECK(components == 1);

  int64_t e = 0, sl = 0, genus = 0;
  REQUIRE(btk_braid_exponent_sum(trefoil.handle, &e) == BTK_OK);
  CHECK(e == 3);
  REQUIRE(btk_braid_self_linking(trefoil.handle, &sl) == BTK_OK);
  CHECK(sl == 1);
  REQUIRE(btk_braid_genus(trefoil.handle, &genus) == BTK_OK);
  CHECK(genus == 1);

  Str alexander;
  REQUIRE(btk_braid_alexander(trefoil.handle, &alexander.value) == BTK_OK);
  CHECK(alexander.str() == "1 - t + t^2");

  int32_t inf = 0, has_twist = 0;
  REQUIRE(btk_braid_garside_inf(trefoil.handle, &inf) == BTK_OK);
  CHECK(inf == 3);
  REQUIRE(btk_braid_contains_full_twist(trefoil.handle, &has_twist) == BTK_OK);
  CHECK(has_twist == 1);

  Str bracket;
  REQUIRE(btk_braid_kauffman(trefoil.handle, 16, &bracket.value) == BTK_OK);
  CHECK(bracket.str() == "-A^-16 + A^-12 + A^-4");

  Braid hopf;
  REQUIRE(btk_braid_parse("n=2\n1 1", &hopf.handle) == BTK_OK);
  CHECK(btk_braid_genus(hopf.handle, &genus) == BTK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("tlink surface") {
  TLink spec;
  REQUIRE(btk_tlink_parse("T((2,2),(3,2))", &spec.handle) == BTK_OK);
  CHECK(btk_tlink_pair_count(spec.handle) == 2);
  int32_t pairs[4];
  REQUIRE(btk_tlink_pairs(spec.handle, pairs, 4) == BTK_OK);
  CHECK(pairs[0] == 2);
  CHECK(pairs[3] == 2);

  Str text;
  REQUIRE(btk_tlink_format(spec.handle, &text.value) == BTK_OK);
  CHECK(text.str() == "T((2,2),(3,2))");

  Braid braid;
  REQUIRE(btk_tlink_standard_braid(spec.handle, &braid.handle) == BTK_OK);
  Str braid_text;
  REQUIRE(btk_braid_format(braid.handle, &braid_text.value) == BTK_OK);
  CHECK(braid_text.str() == "n=3\n1 1 1 2 1 2\n");

  int32_t knot = 0;
  REQUIRE(btk_tlink_is_knot(spec.handle, &knot) == BTK_OK);
  CHECK(knot == 1);

  TLink dual;
  REQUIRE(btk_tlink_transpose_dual(spec.handle, &dual.handle) == BTK_OK);
  Str dual_text;
  REQUIRE(btk_tlink_format(dual.handle, &dual_text.value) == BTK_OK);
  CHECK(dual_text.str() == "T((2,1),(4,2))");

  int32_t rs[4] = {2, 2, 3, 2};
  TLink built;
  REQUIRE(btk_tlink_from_pairs(rs, 2, &built.handle) == BTK_OK);
  Str built_text;
  REQUIRE(btk_tlink_format(built.handle, &built_text.value) == BTK_OK);
  CHECK(built_text.str() == "T((2,2),(3,2))");
}

TEST_CASE("fulltwist certificate surface") {
  TLink spec;
  REQUIRE(btk_tlink_parse("T((2,2),(3,2))", &spec.handle) == BTK_OK);

  Str json_text;
  REQUIRE(btk_fulltwist_certificate(spec.handle, &json_text.value) == BTK_OK);
  auto parsed = nlohmann::json::parse(json_text.str());
  CHECK(parsed["valid"] == true);
  CHECK(parsed["garside_inf"] == 5);
  CHECK(parsed["output_braid"] == "n=2\n1 1 1 1 1\n");

  Braid output;
  REQUIRE(btk_fulltwist_braid(spec.handle, &output.handle) == BTK_OK);
  CHECK(btk_braid_length(output.handle) == 5);
  CHECK(btk_braid_strands(output.handle) == 2);
}

TEST_CASE("satellite and certificate surface") {
  Braid companion, pattern, satellite;
  REQUIRE(btk_braid_parse("n=2\n1 1 1", &companion.handle) == BTK_OK);
  REQUIRE(btk_braid_parse("n=2\n1 1 1 1 1 1 1", &pattern.handle) == BTK_OK);
  REQUIRE(btk_satellite_braid(companion.handle, pattern.handle, 2,
                              BTK_FRAMING_SEIFERT_ZERO, &satellite.handle) == BTK_OK);
  CHECK(btk_braid_length(satellite.handle) == 13);

  Braid family;
  int64_t predicted = 0;
  REQUIRE(btk_family_instance(nullptr, 2, 2, 1, &family.handle, &predicted) == BTK_OK);
  CHECK(predicted == 13);
  CHECK(btk_braid_length(family.handle) == 13);

  Braid lowered;
  REQUIRE(btk_family_instance("T((2,2))", 2, 3, 1, &lowered.handle, &predicted) ==
          BTK_OK);
  CHECK(predicted == 31);
  Braid rejected;
  CHECK(btk_family_instance("T((2,1))", 2, 3, 1, &rejected.handle, &predicted) ==
        BTK_ERR_INVALID_ARGUMENT);

  Str cert;
  int32_t verdict = -1;
  REQUIRE(btk_not_tknot_certificate(nullptr, 2, 2, 1, &cert.value, &verdict) == BTK_OK);
  CHECK(verdict == 1);
  auto parsed = nlohmann::json::parse(cert.str());
  CHECK(parsed["minimal_crossings"] == 13);

  Str inconclusive;
  REQUIRE(btk_not_tknot_certificate(nullptr, 3, 2, 10, &inconclusive.value, &verdict) ==
          BTK_OK);
  CHECK(verdict == 0);

  Str corollary;
  REQUIRE(btk_corollary_family(3, 2, &corollary.value, &verdict) == BTK_OK);
  CHECK(verdict == 1);
  CHECK(nlohmann::json::parse(corollary.str())["pattern"] == "T((2,17))");
}

TEST_CASE("catalog surface") {
  auto path = std::filesystem::temp_directory_path() / "braidtk_capi_catalog.jsonl";
  std::filesystem::remove(path);
  Str id1, id2;
  int32_t appended = -1;
  REQUIRE(btk_catalog_append(path.string().c_str(), "certificate", R"({"a":1})",
                             &id1.value, &appended) == BTK_OK);
  CHECK(appended == 1);
  REQUIRE(btk_catalog_append(path.string().c_str(), "certificate", R"({"a":1})",
                             &id2.value, &appended) == BTK_OK);
  CHECK(appended == 0);
  CHECK(id1.str() == id2.str());
  std::filesystem::remove(path);
}
