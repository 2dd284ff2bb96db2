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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "braidtk/errors.hpp"
#include "braidtk/formats.hpp"
#include "braidtk/invariants.hpp"
#include "braidtk/tlink.hpp"

using namespace braidtk;

TEST_CASE("tlink spec validation") {
  CHECK_THROWS_AS(TLinkSpec({}), value_error);
  CHECK_THROWS_AS(TLinkSpec({{1, 1}}), value_error);
  CHECK_THROWS_AS(TLinkSpec({{3, 1}, {2, 2}}), value_error);
  CHECK_THROWS_AS(TLinkSpec({{2, 0}}), value_error);
  CHECK_THROWS_AS(TLinkSpec({{2, 1}, {2, 1}}), value_error);
  CHECK(TLinkSpec::unknot().is_unknot_spec());
}

TEST_CASE("standard braid") {
  CHECK(standard_braid(TLinkSpec({{2, 3}})) == BraidWord(2, {1, 1, 1}));
  CHECK(standard_braid(TLinkSpec({{2, 1}})) == BraidWord(2, {1}));
  auto w = standard_braid(TLinkSpec({{2, 2}, {3, 2}}));
  CHECK(w == BraidWord(3, {1, 1, 1, 2, 1, 2}));
  CHECK(w.length() == 6);
}

TEST_CASE("standard braid length formula") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, int>> pairs;
    int r = 1;
    int count = 1 + static_cast<int>(rng() % 3);
    std::size_t expected = 0;
    for (int i = 0; i < count; ++i) {
      r += 1 + static_cast<int>(rng() % 3);
      int s = 1 + static_cast<int>(rng() % 5);
      pairs.push_back({r, s});
      expected += static_cast<std::size_t>(s) * static_cast<std::size_t>(r - 1);
    }
    CHECK(standard_braid(TLinkSpec(pairs)).length() == expected);
  }
}

TEST_CASE("torus sub-braids") {
  CHECK(torus_subbraid({0, 3, 2}, 3) == BraidWord(3, {1, 2, 1, 2}));
  CHECK(torus_subbraid({2, 3, 4}, 4) == BraidWord(4, {2, 2, 2, 2}));
  CHECK(torus_subbraid({0, 2, 1}, 5) == BraidWord(5, {1}));
  CHECK_THROWS_AS(torus_subbraid({0, 4, 1}, 3), value_error);
}

TEST_CASE("is_knot") {
  CHECK(is_knot(TLinkSpec({{2, 3}})));
  CHECK_FALSE(is_knot(TLinkSpec({{2, 2}})));
  CHECK_FALSE(is_knot(TLinkSpec({{2, 1}, {3, 2}})));

  // pure torus specs: knot iff gcd(p, q) = 1
  for (int p = 2; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q)
      CHECK(is_knot(TLinkSpec({{p, q}})) == (std::gcd(p, q) == 1));
}

TEST_CASE("transpose duality examples") {
  CHECK(transpose_dual(TLinkSpec({{2, 3}})) == TLinkSpec({{3, 2}}));
  CHECK(transpose_dual(TLinkSpec({{2, 2}, {3, 2}})) == TLinkSpec({{2, 1}, {4, 2}}));
  CHECK(transpose_dual(TLinkSpec({{5, 1}})) == TLinkSpec::unknot());
  CHECK(transpose_dual(TLinkSpec::unknot()) == TLinkSpec::unknot());
}

TEST_CASE("transpose duality is involutive away from width-1 drops") {
  // The dual has no width-1 rows exactly when the top multiplicity is >= 2;
  // there the double transpose is the identity.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, int>> pairs;
    int r = 1;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      r += 1 + static_cast<int>(rng() % 3);
      pairs.push_back({r, 1 + static_cast<int>(rng() % 4)});
    }
    pairs.back().second += 1;  // force s_k >= 2
    TLinkSpec spec(pairs);
    CHECK(transpose_dual(transpose_dual(spec)) == spec);
  }
}

TEST_CASE("duality preserves the link invariants") {
  // specs with r_k <= 5 and total power <= 6
  std::vector<int> universe = {2, 3, 4, 5};
  long checked = 0;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> rset;
    for (int bit = 0; bit < 4; ++bit)
      if (mask & (1 << bit)) rset.push_back(universe[static_cast<std::size_t>(bit)]);
    std::vector<int> s(rset.size(), 1);
    for (;;) {
      int total = std::accumulate(s.begin(), s.end(), 0);
      if (total <= 6) {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < rset.size(); ++i) pairs.push_back({rset[i], s[i]});
        TLinkSpec spec(pairs);
        auto wa = standard_braid(spec);
        auto wb = standard_braid(transpose_dual(spec));
        CHECK(alexander_polynomial(wa) == alexander_polynomial(wb));
        CHECK(closure_components(wa) == closure_components(wb));
        CHECK(self_linking(wa) == self_linking(wb));
        ++checked;
      }
      std::size_t pos = 0;
      while (pos < s.size() && s[pos] == 6) {
        s[pos] = 1;
        ++pos;
      }
      if (pos == s.size()) break;
      ++s[pos];
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("tlink text format") {
  CHECK(format_tlink(TLinkSpec({{2, 2}, {3, 2}})) == "T((2,2),(3,2))");
  CHECK(parse_tlink("T((2,2),(3,2))") == TLinkSpec({{2, 2}, {3, 2}}));
  CHECK(parse_tlink(" T( (2,3) ) ") == TLinkSpec({{2, 3}}));

  CHECK_THROWS_AS(parse_tlink("T((3,1),(2,2))"), parse_error);
  CHECK_THROWS_AS(parse_tlink("T((1,1))"), parse_error);
  CHECK_THROWS_AS(parse_tlink("T((2,3)"), parse_error);
  CHECK_THROWS_AS(parse_tlink("T((2,3)) trailing"), parse_error);

  // diagnostics carry the offending position
  try {
    parse_tlink("T((3,1),(2,2))");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 8);
  }

  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<int, int>> pairs;
    int r = 1;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      r += 1 + static_cast<int>(rng() % 4);
      pairs.push_back({r, 1 + static_cast<int>(rng() % 9)});
    }
    TLinkSpec spec(pairs);
    CHECK(parse_tlink(format_tlink(spec)) == spec);
  }
}

TEST_CASE("parsers survive junk input") {
  std::mt19937 rng(59);
  const std::string alphabet = "T(),0123456789 -n=\nx";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string junk;
    int len = static_cast<int>(rng() % 24);
    for (int i = 0; i < len; ++i)
      junk.push_back(alphabet[rng() % alphabet.size()]);
    try {
      (void)parse_tlink(junk);
    } catch (const parse_error&) {
    }
    try {
      (void)parse_braid(junk);
    } catch (const parse_error&) {
    } catch (const value_error&) {
    }
  }
  CHECK(true);  // no crash, no unexpected exception type
}
