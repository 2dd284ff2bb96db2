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

#ifndef BRAIDTK_CATALOG_HPP
#define BRAIDTK_CATALOG_HPP

#include <mutex>
#include <set>
#include <string>

namespace braidtk {

// Append-only JSON-lines store for computed records. Every line is
//   {"id": <hash>, "kind": <tag>, "payload": <record>, "timestamp": <UTC>}
// where id is a content hash of kind + payload, so appends are idempotent.
// Appends are serialized through one writer per Catalog instance.
class Catalog {
 public:
  explicit Catalog(std::string path);

  // Returns the entry id and whether a new line was written (false when the
  // id was already present).
  std::pair<std::string, bool> append(const std::string& kind,
                                      const std::string& payload_json);

  const std::string& path() const { return path_; }
  std::size_t size() const { return ids_.size(); }

  static std::string content_hash(const std::string& kind,
                                  const std::string& canonical_payload);

 private:
  std::string path_;
  std::set<std::string> ids_;
  std::mutex write_mutex_;
};

}  // namespace braidtk

#endif
