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


#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "sdc/error.hpp"
#include "sdc/graph.hpp"
#include "sdc/store.hpp"

using namespace sdc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sdc-store-test-" + std::to_string(std::random_device{}()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

CodeStoreEntry cube_entry(std::string name) {
  const auto g = builtin_graph("cube");
  const auto code = graph_to_selfdual_code(g, 4, 5);
  return {std::move(name), Json{{"kind", "graph"}, {"graph", "cube"}}, code.generator(), analyze(code)};
}

}  // namespace

TEST_SUITE("store") {

TEST_CASE("entries round trip") {
  TempDir tmp;
  const CodeStore store(tmp.path / "nested");
  CHECK(store.names().empty());
  const auto e = cube_entry("cube-4-5");
  store.put(e);
  store.put(cube_entry("a.first"));
  CHECK(store.contains("cube-4-5"));
  CHECK_FALSE(store.contains("missing"));
  CHECK(store.names() == std::vector<std::string>{"a.first", "cube-4-5"});
  const auto back = store.get("cube-4-5");
  CHECK(back.name == e.name);
  CHECK(back.provenance == e.provenance);
  CHECK(back.generator == e.generator);
  CHECK(back.report == e.report);
  CHECK(verify_entry(back));
  CHECK_THROWS_AS(store.get("missing"), Error);
}

TEST_CASE("verification catches a wrong report") {
  auto e = cube_entry("x");
  e.report.distribution.counts[4] = 13;
  CHECK_FALSE(verify_entry(e));
}

TEST_CASE("entry names") {
  CHECK(is_valid_entry_name("K1"));
  CHECK(is_valid_entry_name("search_A2-17.hit"));
  CHECK_FALSE(is_valid_entry_name(""));
  CHECK_FALSE(is_valid_entry_name(".hidden"));
  CHECK_FALSE(is_valid_entry_name("a/b"));
  CHECK_FALSE(is_valid_entry_name("a b"));
  TempDir tmp;
  CHECK_THROWS_AS(CodeStore(tmp.path).put(cube_entry("../escape")), Error);
}

TEST_CASE("a generator of the wrong shape is rejected") {
  TempDir tmp;
  const CodeStore store(tmp.path);
  store.put(cube_entry("c"));
  std::ofstream(tmp.path / "c.gen") << "1100\n0011\n";
  CHECK_THROWS_AS(store.get("c"), Error);
}

TEST_CASE("default location") {
  ::setenv(std::string(kStoreEnv).c_str(), "/tmp/somewhere", 1);
  CHECK(CodeStore::default_path() == fs::path("/tmp/somewhere"));
  ::unsetenv(std::string(kStoreEnv).c_str());
  CHECK(CodeStore::default_path() == fs::path(kDefaultStoreDir));
}

}
