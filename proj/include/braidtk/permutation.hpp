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

#ifndef BRAIDTK_PERMUTATION_HPP
#define BRAIDTK_PERMUTATION_HPP

#include <vector>

namespace braidtk {

// Permutation on n strand positions, stored as the image table
// start position -> end position (0-based internally). Compositions read in
// diagram order, top to bottom, matching braid words read left to right.
class Permutation {
 public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);  // validates bijectivity

  // Adjacent transposition swapping positions i, i+1 (generator index i is
  // 1-based, matching sigma_i).
  static Permutation transposition(int n, int i);
  // Image of the half twist Delta: i -> n+1-i.
  static Permutation half_twist(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  // Diagram composition: this first, then `after`.
  Permutation then(const Permutation& after) const;
  Permutation inverse() const;

  bool is_identity() const;
  int cycle_count() const;
  int inversions() const;

  // Generator indices i (1-based) with image(i) > image(i+1); these are the
  // letters a permutation braid can start with.
  std::vector<int> descents() const;

  // Conjugate by the half twist: sigma_i -> sigma_{n-i} on words.
  Permutation delta_conjugate() const;

  // A positive word for the permutation braid, one letter per inversion.
  std::vector<int> to_word() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace braidtk

#endif
