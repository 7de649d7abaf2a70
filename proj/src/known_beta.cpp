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


#include <algorithm>
#include <map>

#include "known_beta_data.hpp"
#include "sdc/analysis.hpp"
#include "sdc/json.hpp"

namespace sdc {

namespace {

const std::map<Family, std::vector<int>>& registry() {
  static const std::map<Family, std::vector<int>> table = [] {
    std::map<Family, std::vector<int>> t;
    const Json data = Json::parse(kKnownBetaJson);
    for (const auto& [name, entry] : data.at("families").items()) {
      auto known = entry.at("known").get<std::vector<int>>();
      std::sort(known.begin(), known.end());
      known.erase(std::unique(known.begin(), known.end()), known.end());
      t[family_from_string(name)] = std::move(known);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::vector<int> known_betas(Family family) {
  const auto it = registry().find(family);
  return it == registry().end() ? std::vector<int>{} : it->second;
}

bool novelty_check(Family family, std::optional<int> beta) {
  if (family == Family::None || !beta) return false;
  const auto known = known_betas(family);
  return !std::binary_search(known.begin(), known.end(), *beta);
}

}  // namespace sdc
