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


#include "sdc/store.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sdc/error.hpp"

namespace sdc {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, p);
}

void require_name(std::string_view name) {
  if (!is_valid_entry_name(name)) throw Error("invalid store entry name '" + std::string(name) + "'");
}

}  // namespace

bool is_valid_entry_name(std::string_view name) {
  if (name.empty() || name.front() == '.') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-' || c == '.';
  });
}

Json to_json(const CodeStoreEntry& entry) {
  Json j;
  j["name"] = entry.name;
  j["provenance"] = entry.provenance;
  j["n"] = entry.generator.cols();
  j["k"] = entry.generator.rows();
  j["generator_file"] = entry.name + ".gen";
  j["report"] = to_json(entry.report);
  return j;
}

CodeStore::CodeStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path CodeStore::default_path() {
  if (const char* env = std::getenv(std::string(kStoreEnv).c_str()); env && *env) return env;
  return fs::path(kDefaultStoreDir);
}

void CodeStore::put(const CodeStoreEntry& entry) const {
  require_name(entry.name);
  fs::create_directories(dir_);
  write_file(dir_ / (entry.name + ".gen"), entry.generator.to_text());
  write_file(dir_ / (entry.name + ".json"), to_json(entry).dump(2) + "\n");
}

CodeStoreEntry CodeStore::get(std::string_view name) const {
  require_name(name);
  const fs::path meta = dir_ / (std::string(name) + ".json");
  if (!fs::exists(meta)) throw Error("no stored code named '" + std::string(name) + "' in " + dir_.string());
  Json j;
  try {
    j = Json::parse(read_file(meta));
  } catch (const Json::exception& e) {
    throw Error("corrupt store entry " + meta.string() + ": " + e.what());
  }
  CodeStoreEntry entry;
  entry.name = j.at("name").get<std::string>();
  entry.provenance = j.at("provenance");
  entry.generator = BinaryMatrix::parse(read_file(dir_ / j.at("generator_file").get<std::string>()));
  entry.report = report_from_json(j.at("report"));
  if (entry.generator.cols() != j.at("n").get<std::size_t>() ||
      entry.generator.rows() != j.at("k").get<std::size_t>())
    throw Error("store entry " + entry.name + ": generator shape disagrees with metadata");
  return entry;
}

bool CodeStore::contains(std::string_view name) const {
  return is_valid_entry_name(name) && fs::exists(dir_ / (std::string(name) + ".json"));
}

std::vector<std::string> CodeStore::names() const {
  std::vector<std::string> out;
  if (!fs::is_directory(dir_)) return out;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_entry(const CodeStoreEntry& entry, unsigned threads) {
  return analyze(BinaryCode(entry.generator), {.threads = threads}) == entry.report;
}

}  // namespace sdc
