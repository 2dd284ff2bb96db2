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

#include "braidtk/catalog.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>

#include <json.hpp>

#include "braidtk/errors.hpp"

namespace braidtk {

Catalog::Catalog(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      if (j.contains("id")) ids_.insert(j["id"].get<std::string>());
    } catch (const nlohmann::json::exception&) {
      throw value_error("catalog file holds a malformed line: " + path_);
    }
  }
}

std::string Catalog::content_hash(const std::string& kind,
                                  const std::string& canonical_payload) {
  // FNV-1a 64; plenty for a desk-scale dedup key.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(kind);
  mix("\n");
  mix(canonical_payload);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::pair<std::string, bool> Catalog::append(const std::string& kind,
                                             const std::string& payload_json) {
  nlohmann::json payload;
  try {
    payload = nlohmann::json::parse(payload_json);
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("catalog payload is not valid JSON: ") + e.what());
  }
  const std::string canonical = payload.dump();
  const std::string id = content_hash(kind, canonical);

  std::lock_guard<std::mutex> lock(write_mutex_);
  if (ids_.count(id)) return {id, false};

  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::tm tm_utc{};
  gmtime_r(&tt, &tm_utc);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);

  nlohmann::json line;
  line["id"] = id;
  line["kind"] = kind;
  line["payload"] = std::move(payload);
  line["timestamp"] = stamp;

  std::ofstream out(path_, std::ios::app);
  if (!out) throw value_error("cannot open catalog for writing: " + path_);
  out << line.dump() << "\n";
  ids_.insert(id);
  return {id, true};
}

}  // namespace braidtk
