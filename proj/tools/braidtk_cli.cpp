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

// braidtk command-line front end. Talks to the toolkit exclusively through
// the C API in braidtk.h; JSON handling and the result catalog live here.
//
// Exit codes: 0 success/certified, 1 inconclusive verdict, 2 input error,
// 3 internal invariant failure.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidtk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct StringOut {
  char* value = nullptr;
  ~StringOut() { btk_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

int status_exit(btk_status st) {
  switch (st) {
    case BTK_OK:
      return kExitOk;
    case BTK_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

int fail(btk_status st) {
  std::cerr << "error: " << btk_last_error() << "\n";
  return status_exit(st);
}

struct CatalogSink {
  std::string path;
  bool enabled = true;

  int append(const std::string& kind, const std::string& payload) const {
    if (!enabled) return kExitOk;
    StringOut id;
    int32_t appended = 0;
    btk_status st =
        btk_catalog_append(path.c_str(), kind.c_str(), payload.c_str(), &id.value, &appended);
    if (st != BTK_OK) return fail(st);
    std::cerr << "catalog: " << (appended ? "appended " : "already present ")
              << id.str() << "\n";
    return kExitOk;
  }
};

std::string braid_text(const btk_braid* w) {
  StringOut text;
  if (btk_braid_format(w, &text.value) != BTK_OK) return "";
  return text.str();
}

// Compare the normalized Kauffman brackets of two braids when both are under
// the cap. Returns nullopt when skipped.
std::optional<bool> kauffman_equal(const btk_braid* a, const btk_braid* b, int cap) {
  StringOut ka, kb;
  if (btk_braid_kauffman(a, cap, &ka.value) != BTK_OK) return std::nullopt;
  if (btk_braid_kauffman(b, cap, &kb.value) != BTK_OK) return std::nullopt;
  return ka.str() == kb.str();
}

int cmd_braid(const std::string& spec_text) {
  btk_tlink* spec = nullptr;
  if (btk_status st = btk_tlink_parse(spec_text.c_str(), &spec)) return fail(st);
  std::unique_ptr<btk_tlink, decltype(&btk_tlink_free)> spec_guard(spec, btk_tlink_free);
  btk_braid* braid = nullptr;
  if (btk_status st = btk_tlink_standard_braid(spec, &braid)) return fail(st);
  std::unique_ptr<btk_braid, decltype(&btk_braid_free)> braid_guard(braid, btk_braid_free);
  std::cout << braid_text(braid);
  return kExitOk;
}

int cmd_fulltwist(const std::string& spec_text, bool verify_full,
                  const CatalogSink& catalog) {
  btk_tlink* spec = nullptr;
  if (btk_status st = btk_tlink_parse(spec_text.c_str(), &spec)) return fail(st);
  std::unique_ptr<btk_tlink, decltype(&btk_tlink_free)> spec_guard(spec, btk_tlink_free);

  StringOut json_text;
  if (btk_status st = btk_fulltwist_certificate(spec, &json_text.value)) return fail(st);
  auto cert = nlohmann::json::parse(json_text.str());

  if (verify_full) {
    btk_braid* input = nullptr;
    btk_braid* output = nullptr;
    if (btk_status st = btk_tlink_standard_braid(spec, &input)) return fail(st);
    std::unique_ptr<btk_braid, decltype(&btk_braid_free)> ig(input, btk_braid_free);
    if (btk_status st = btk_fulltwist_braid(spec, &output)) return fail(st);
    std::unique_ptr<btk_braid, decltype(&btk_braid_free)> og(output, btk_braid_free);
    auto equal = kauffman_equal(input, output, 16);
    nlohmann::json kj;
    kj["checked"] = equal.has_value();
    if (equal.has_value()) {
      kj["equal"] = *equal;
    } else {
      kj["skipped"] = "over the crossing cap";
    }
    cert["kauffman"] = kj;
    if (equal.has_value() && !*equal) {
      std::cerr << "error: Kauffman oracle disagrees with the certificate\n";
      return kExitInternal;
    }
  }

  std::cout << cert.dump(2) << "\n";
  if (int rc = catalog.append("tlink_fulltwist", cert.dump())) return rc;
  return cert["valid"].get<bool>() ? kExitOk : kExitInternal;
}

int cmd_satellite(const std::string& lower, int a, int b, int k,
                  const std::string& framing, bool verify_full,
                  const CatalogSink& catalog) {
  nlohmann::json record;
  record["params"] = {{"lower", lower}, {"a", a}, {"b", b}, {"k", k}};
  record["framing"] = framing;

  btk_braid* braid = nullptr;
  int64_t predicted = 0;
  if (framing == "seifert_zero") {
    if (btk_status st = btk_family_instance(lower.empty() ? nullptr : lower.c_str(), a,
                                            b, k, &braid, &predicted))
      return fail(st);
  } else {
    // Untwisted cabling: rebuild companion and pattern, skip the correction.
    std::string pattern_spec = lower.empty()
                                   ? "T((" + std::to_string(b) + "," +
                                         std::to_string((a - 1) * (a + 1) * b + k) + "))"
                                   : lower.substr(0, lower.size() - 1) + ",(" +
                                         std::to_string(b) + "," +
                                         std::to_string((a - 1) * (a + 1) * b + k) + "))";
    std::string companion_spec =
        "T((" + std::to_string(a) + "," + std::to_string(a + 1) + "))";
    btk_tlink* pt = nullptr;
    btk_tlink* ct = nullptr;
    if (btk_status st = btk_tlink_parse(pattern_spec.c_str(), &pt)) return fail(st);
    std::unique_ptr<btk_tlink, decltype(&btk_tlink_free)> ptg(pt, btk_tlink_free);
    if (btk_status st = btk_tlink_parse(companion_spec.c_str(), &ct)) return fail(st);
    std::unique_ptr<btk_tlink, decltype(&btk_tlink_free)> ctg(ct, btk_tlink_free);
    btk_braid* pattern = nullptr;
    btk_braid* companion = nullptr;
    if (btk_status st = btk_tlink_standard_braid(pt, &pattern)) return fail(st);
    std::unique_ptr<btk_braid, decltype(&btk_braid_free)> pg(pattern, btk_braid_free);
    if (btk_status st = btk_tlink_standard_braid(ct, &companion)) return fail(st);
    std::unique_ptr<btk_braid, decltype(&btk_braid_free)> cg(companion, btk_braid_free);
    if (btk_status st = btk_satellite_braid(companion, pattern, b,
                                            BTK_FRAMING_BLACKBOARD, &braid))
      return fail(st);
  }
  std::unique_ptr<btk_braid, decltype(&btk_braid_free)> bg(braid, btk_braid_free);

  std::cout << braid_text(braid);
  record["braid"] = braid_text(braid);
  record["constructed_crossings"] = btk_braid_length(braid);
  std::cout << "constructed_crossings: " << btk_braid_length(braid) << "\n";
  if (framing == "seifert_zero") {
    record["predicted_crossings"] = predicted;
    bool match = predicted == btk_braid_length(braid);
    record["match"] = match;
    std::cout << "predicted_crossings: " << predicted << "\n";
    std::cout << "match: " << (match ? "true" : "false") << "\n";
    std::cout << "framing: seifert_zero\n";
    if (!match) return kExitInternal;
  } else {
    std::cout << "framing: blackboard (Birman-Williams untwisted convention, "
                 "no longitude correction)\n";
  }
  if (verify_full) {
    StringOut bracket;
    if (btk_braid_kauffman(braid, 16, &bracket.value) == BTK_OK) {
      std::cout << "kauffman: " << bracket.str() << "\n";
      record["kauffman"] = bracket.str();
    } else {
      std::cout << "kauffman: skipped (over the crossing cap)\n";
    }
  }
  if (int rc = catalog.append("satellite", record.dump())) return rc;
  return kExitOk;
}

struct SweepRange {
  int lo = 0;
  int hi = -1;
};

bool parse_range(const std::string& token, std::string& name, SweepRange& range) {
  auto eq = token.find('=');
  if (eq == std::string::npos) return false;
  name = token.substr(0, eq);
  std::string body = token.substr(eq + 1);
  auto dots = body.find("..");
  try {
    if (dots == std::string::npos) {
      range.lo = range.hi = std::stoi(body);
    } else {
      range.lo = std::stoi(body.substr(0, dots));
      range.hi = std::stoi(body.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return range.lo <= range.hi;
}

int cmd_certify(const std::string& lower, int a, int b, int k,
                const std::vector<std::string>& sweep_tokens, int jobs,
                const CatalogSink& catalog) {
  struct Instance {
    int a, b, k;
  };
  std::vector<Instance> instances;
  if (sweep_tokens.empty()) {
    instances.push_back({a, b, k});
  } else {
    SweepRange ra{a, a}, rb{b, b}, rk{k, k};
    for (const auto& token : sweep_tokens) {
      std::string name;
      SweepRange range;
      if (!parse_range(token, name, range) ||
          (name != "a" && name != "b" && name != "k")) {
        std::cerr << "error: bad sweep token '" << token << "' (want a=LO..HI)\n";
        return kExitInput;
      }
      (name == "a" ? ra : name == "b" ? rb : rk) = range;
    }
    for (int va = ra.lo; va <= ra.hi; ++va)
      for (int vb = rb.lo; vb <= rb.hi; ++vb)
        for (int vk = rk.lo; vk <= rk.hi; ++vk) instances.push_back({va, vb, vk});
  }

  struct Result {
    btk_status status = BTK_ERR_INTERNAL;
    std::string json;
    int verdict = 0;
    std::string error;
  };
  std::vector<Result> results(instances.size());

  // Fan the instances out; the catalog writer stays on this thread.
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      const auto& inst = instances[i];
      StringOut json_text;
      int32_t verdict = 0;
      btk_status st =
          btk_not_tknot_certificate(lower.empty() ? nullptr : lower.c_str(), inst.a,
                                    inst.b, inst.k, &json_text.value, &verdict);
      results[i].status = st;
      results[i].verdict = verdict;
      if (st == BTK_OK)
        results[i].json = json_text.str();
      else
        results[i].error = btk_last_error();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int exit_code = kExitOk;
  int certified = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& res = results[i];
    if (res.status != BTK_OK) {
      std::cerr << "error: (a=" << instances[i].a << ", b=" << instances[i].b
                << ", k=" << instances[i].k << "): " << res.error << "\n";
      exit_code = std::max(exit_code, status_exit(res.status));
      continue;
    }
    std::cout << res.json << "\n";
    if (int rc = catalog.append("certificate", res.json))
      exit_code = std::max(exit_code, rc);
    if (res.verdict)
      ++certified;
    else
      exit_code = std::max(exit_code, kExitInconclusive);
  }
  std::cerr << certified << "/" << results.size() << " certified\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidtk: T-link braids, full-twist rewrites, satellites and "
               "not-a-T-knot certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(btk_version()));

  std::string catalog_path = "braidtk_catalog.jsonl";
  if (const char* env = std::getenv("BRAIDTK_CATALOG")) catalog_path = env;
  bool no_catalog = false;
  app.add_option("--catalog", catalog_path, "Catalog file (JSON lines)");
  app.add_flag("--no-catalog", no_catalog, "Do not record results");

  std::string spec_text;
  std::string verify;
  std::string lower;
  std::string framing = "seifert_zero";
  int a = 2, b = 2, k = 1;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  std::vector<std::string> sweep_tokens;

  auto* braid_cmd = app.add_subcommand("braid", "Print the standard braid of a T-link");
  braid_cmd->add_option("spec", spec_text, "T-link spec, e.g. T((2,3))")->required();

  auto* fulltwist_cmd =
      app.add_subcommand("fulltwist", "Rewrite a T-link into a positive braid "
                                      "with a full twist and certify it");
  fulltwist_cmd->add_option("spec", spec_text, "T-link spec")->required();
  fulltwist_cmd->add_option("--verify", verify,
                            "'full' additionally runs the Kauffman oracle");

  auto* satellite_cmd = app.add_subcommand(
      "satellite", "Build the satellite braid with companion T(a,a+1)");
  satellite_cmd->add_option("--a", a, "Companion parameter a >= 2")->required();
  satellite_cmd->add_option("--b", b, "Cable width b >= 2")->required();
  satellite_cmd->add_option("--k", k, "Pattern offset k >= 1")->required();
  satellite_cmd->add_option("--lower", lower, "Lower pattern pairs, e.g. T((2,1))");
  satellite_cmd->add_option("--framing", framing, "seifert_zero | blackboard")
      ->check(CLI::IsMember({"seifert_zero", "blackboard"}));
  satellite_cmd->add_option("--verify", verify, "'full' prints the Kauffman bracket");

  auto* certify_cmd = app.add_subcommand(
      "certify", "Emit not-a-T-knot certificates for satellite parameters");
  certify_cmd->add_option("--a", a, "Companion parameter a >= 2");
  certify_cmd->add_option("--b", b, "Cable width b >= 2");
  certify_cmd->add_option("--k", k, "Pattern offset k >= 1");
  certify_cmd->add_option("--lower", lower, "Lower pattern pairs, e.g. T((2,1))");
  certify_cmd->add_option("--sweep", sweep_tokens,
                          "Ranges like a=2..4 b=2..4 (k defaults to 1)");
  certify_cmd->add_option("--jobs", jobs, "Worker threads for sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  CatalogSink catalog{catalog_path, !no_catalog};
  const bool verify_full = verify == "full";

  if (braid_cmd->parsed()) return cmd_braid(spec_text);
  if (fulltwist_cmd->parsed()) return cmd_fulltwist(spec_text, verify_full, catalog);
  if (satellite_cmd->parsed())
    return cmd_satellite(lower, a, b, k, framing, verify_full, catalog);
  if (certify_cmd->parsed())
    return cmd_certify(lower, a, b, k, sweep_tokens, jobs, catalog);
  return kExitInput;
}
