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

#ifndef BRAIDTK_ERRORS_HPP
#define BRAIDTK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidtk {

// Base class for all braidtk exceptions.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected input: bad arguments or a violated operation precondition.
class value_error : public error {
 public:
  using error::error;
};

// Malformed text input; carries the byte offset of the offending token.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Broken internal invariant. Reaching this is a bug, not a user error.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace braidtk

#endif
