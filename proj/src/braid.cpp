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

#include "braidtk/braid.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidtk/errors.hpp"

namespace braidtk {

namespace {

void validate_letters(int strands, const std::vector<int>& letters) {
  for (int l : letters) {
    int idx = std::abs(l);
    if (l == 0 || idx >= strands)
      throw value_error("letter index out of range for strand count");
  }
}

std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw value_error("braid needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw value_error("braid needs at least one strand");
  validate_letters(strands_, letters_);
}

bool BraidWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](int l) { return l > 0; });
}

std::int64_t BraidWord::exponent_sum() const {
  std::int64_t e = 0;
  for (int l : letters_) e += l > 0 ? 1 : -1;
  return e;
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands())
    throw value_error("strand-count mismatch in composition");
  std::vector<int> cat = w1.letters();
  cat.insert(cat.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strands(), free_reduce(cat));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> inv(w.letters().rbegin(), w.letters().rend());
  for (int& l : inv) l = -l;
  return BraidWord(w.strands(), std::move(inv));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  if (w.strands() != g.strands())
    throw value_error("strand-count mismatch in conjugation");
  return compose(compose(inverse(g), w), g);
}

Permutation permutation_of(const BraidWord& w) {
  std::vector<int> img(static_cast<std::size_t>(w.strands()));
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<int>(i);
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    // The strand currently ending at position i trades places with i+1.
    for (auto& v : img) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return Permutation(std::move(img));
}

BraidWord full_twist(int n) {
  if (n < 2) throw value_error("full twist needs at least two strands");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

std::optional<BraidWord> destabilize(const BraidWord& w) {
  int top = w.strands() - 1;
  if (top < 1) return std::nullopt;
  std::size_t pos = 0;
  int count = 0;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (std::abs(w.letters()[i]) == top) {
      ++count;
      pos = i;
      if (w.letters()[i] < 0) return std::nullopt;
    }
  }
  if (count != 1) return std::nullopt;
  // Rotate the sole sigma_{n-1} to the tail (a conjugation of the closure)
  // and drop it together with the now-unused strand.
  std::vector<int> rest;
  rest.reserve(w.letters().size() - 1);
  for (std::size_t i = pos + 1; i < w.letters().size(); ++i) rest.push_back(w.letters()[i]);
  for (std::size_t i = 0; i < pos; ++i) rest.push_back(w.letters()[i]);
  return BraidWord(w.strands() - 1, free_reduce(rest));
}

}  // namespace braidtk
