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

#include "braidtk/formats.hpp"

#include <cctype>

#include "braidtk/errors.hpp"

namespace braidtk {

namespace {

// Minimal cursor over a text buffer; keeps the byte offset for diagnostics.
struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(char c, const char* what) {
    if (peek() != c) throw parse_error(std::string("expected ") + what, pos);
    ++pos;
  }
  long read_int() {
    skip_ws();
    std::size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    std::size_t digits = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw parse_error("expected an integer", start);
    return std::stol(text.substr(start, pos - start));
  }
};

}  // namespace

std::string format_braid(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.strands()) + "\n";
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters()[i]);
  }
  out += '\n';
  return out;
}

BraidWord parse_braid(const std::string& text) {
  Cursor cur{text};
  cur.skip_ws();
  if (text.compare(cur.pos, 2, "n=") != 0)
    throw parse_error("expected 'n=<strands>'", cur.pos);
  cur.pos += 2;
  long strands = cur.read_int();
  if (strands < 1) throw parse_error("strand count must be positive", cur.pos);
  std::vector<int> letters;
  for (;;) {
    cur.skip_ws();
    if (cur.done()) break;
    std::size_t at = cur.pos;
    long v = cur.read_int();
    if (v == 0 || std::labs(v) >= strands)
      throw parse_error("letter index out of range", at);
    letters.push_back(static_cast<int>(v));
  }
  return BraidWord(static_cast<int>(strands), std::move(letters));
}

std::string format_tlink(const TLinkSpec& spec) {
  std::string out = "T(";
  bool first = true;
  for (const auto& [r, s] : spec.pairs()) {
    if (!first) out += ',';
    first = false;
    out += '(' + std::to_string(r) + ',' + std::to_string(s) + ')';
  }
  out += ')';
  return out;
}

TLinkSpec parse_tlink(const std::string& text) {
  Cursor cur{text};
  cur.skip_ws();
  cur.expect('T', "'T'");
  cur.skip_ws();
  cur.expect('(', "'('");
  std::vector<std::pair<int, int>> pairs;
  for (;;) {
    cur.skip_ws();
    std::size_t pair_at = cur.pos;
    cur.expect('(', "'('");
    long r = cur.read_int();
    cur.skip_ws();
    cur.expect(',', "','");
    long s = cur.read_int();
    cur.skip_ws();
    cur.expect(')', "')'");
    if (r < 2) throw parse_error("strand parameter must be at least 2", pair_at);
    if (s < 1) throw parse_error("power must be positive", pair_at);
    if (!pairs.empty() && r <= pairs.back().first)
      throw parse_error("strand parameters must strictly increase", pair_at);
    pairs.push_back({static_cast<int>(r), static_cast<int>(s)});
    cur.skip_ws();
    if (cur.peek() == ',') {
      ++cur.pos;
      continue;
    }
    break;
  }
  cur.expect(')', "')'");
  cur.skip_ws();
  if (!cur.done()) throw parse_error("trailing input after spec", cur.pos);
  return TLinkSpec(std::move(pairs));
}

}  // namespace braidtk
