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

#include "braidtk/permutation.hpp"

#include <numeric>

#include "braidtk/errors.hpp"

namespace braidtk {

Permutation::Permutation(int n) {
  if (n < 1) throw value_error("permutation needs at least one point");
  img_.resize(static_cast<std::size_t>(n));
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
      throw value_error("image table is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  if (img_.empty()) throw value_error("permutation needs at least one point");
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw value_error("transposition index out of range");
  Permutation p(n);
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::half_twist(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = n - 1 - i;
  return p;
}

Permutation Permutation::then(const Permutation& after) const {
  if (size() != after.size()) throw value_error("size mismatch in composition");
  Permutation r(size());
  for (int i = 0; i < size(); ++i)
    r.img_[static_cast<std::size_t>(i)] = after.image(image(i));
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(size());
  for (int i = 0; i < size(); ++i)
    r.img_[static_cast<std::size_t>(image(i))] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image(i) != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(img_.size(), 0);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = image(j))
      seen[static_cast<std::size_t>(j)] = 1;
  }
  return cycles;
}

int Permutation::inversions() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (image(i) > image(j)) ++inv;
  return inv;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (image(i - 1) > image(i)) d.push_back(i);
  return d;
}

Permutation Permutation::delta_conjugate() const {
  Permutation w = half_twist(size());
  return w.then(*this).then(w);
}

std::vector<int> Permutation::to_word() const {
  // Bubble the image table back to identity; each recorded swap is one letter
  // and the recording order is the word order (diagram composition).
  std::vector<int> table = img_;
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < size(); ++i) {
      if (table[static_cast<std::size_t>(i - 1)] > table[static_cast<std::size_t>(i)]) {
        std::swap(table[static_cast<std::size_t>(i - 1)], table[static_cast<std::size_t>(i)]);
        word.push_back(i);
        moved = true;
      }
    }
  }
  return word;
}

}  // namespace braidtk
