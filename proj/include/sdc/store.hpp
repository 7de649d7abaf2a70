// Copyright 2026 The sdcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// A directory of analyzed codes. Each entry is two files: <name>.json with the
// construction record and the enumerator report, and <name>.gen with the
// generator matrix in the plain 0/1 text format.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/analysis.hpp"
#include "sdc/gf2.hpp"
#include "sdc/json.hpp"

namespace sdc {

/// Environment variable naming the default store directory.
inline constexpr std::string_view kStoreEnv = "SDCODES_STORE";
inline constexpr std::string_view kDefaultStoreDir = "sdcodes-store";

struct CodeStoreEntry {
  std::string name;
  /// How the code was built, e.g. {"kind": "graph", "graph": "cube", ...}.
  Json provenance = Json::object();
  BinaryMatrix generator;
  EnumeratorReport report;
};

Json to_json(const CodeStoreEntry& entry);

class CodeStore {
 public:
  explicit CodeStore(std::filesystem::path dir);

  /// $SDCODES_STORE when set, otherwise ./sdcodes-store.
  static std::filesystem::path default_path();

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// Writes (or replaces) an entry; creates the directory on first use.
  void put(const CodeStoreEntry& entry) const;
  /// Throws if absent or unreadable.
  CodeStoreEntry get(std::string_view name) const;
  bool contains(std::string_view name) const;
  /// Sorted entry names.
  std::vector<std::string> names() const;

 private:
  std::filesystem::path dir_;
};

/// Names are restricted to [A-Za-z0-9_.-] and may not start with '.'.
bool is_valid_entry_name(std::string_view name);

/// Re-runs the analysis of the stored generator and compares it with the
/// stored report.
bool verify_entry(const CodeStoreEntry& entry, unsigned threads = 1);

}  // namespace sdc
