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

#ifndef BRAIDTK_BRAID_HPP
#define BRAIDTK_BRAID_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "braidtk/permutation.hpp"

namespace braidtk {

// Braid word on n strands: letters are signed generator indices, +i for
// sigma_i and -i for its inverse, read left to right / top to bottom.
// Words are immutable values; every operation returns a fresh word.
class BraidWord {
 public:
  BraidWord() : strands_(1) {}
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);  // validates indices

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool is_positive() const;
  std::int64_t exponent_sum() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Concatenation with eager free reduction (adjacent sigma_i sigma_i^{-1}
// pairs cancel). Throws value_error on strand-count mismatch.
BraidWord compose(const BraidWord& w1, const BraidWord& w2);

// Reverse the word and flip all signs.
BraidWord inverse(const BraidWord& w);

// g^{-1} . w . g, free-reduced. The closure link is unchanged.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

// Image of each start position after traversing the word; sigma_i acts as
// the transposition (i, i+1) regardless of sign.
Permutation permutation_of(const BraidWord& w);

// (sigma_1 ... sigma_{n-1})^n, the positive full twist Delta^2. Needs n >= 2.
BraidWord full_twist(int n);

// Positive Markov destabilization: requires that generator sigma_{n-1}
// occurs exactly once and positively. Returns the word on n-1 strands with
// that crossing removed (the word is rotated so the crossing is last), or
// nullopt when the precondition fails.
std::optional<BraidWord> destabilize(const BraidWord& w);

}  // namespace braidtk

#endif
