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


#include "sdc/json.hpp"

#include <string>

#include "sdc/error.hpp"

namespace sdc {

Json to_json(const WeightDistribution& dist) {
  Json j = Json::object();
  for (std::size_t w = 0; w < dist.counts.size(); ++w)
    if (dist.counts[w]) j[std::to_string(w)] = dist.counts[w];
  return j;
}

WeightDistribution distribution_from_json(const Json& j, std::size_t length) {
  WeightDistribution dist(length);
  for (const auto& [key, value] : j.items()) {
    const std::size_t w = std::stoul(key);
    if (w > length) throw Error("distribution weight " + key + " exceeds length");
    dist.counts[w] = value.get<std::uint64_t>();
  }
  return dist;
}

Json to_json(const EnumeratorReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d ? Json(*r.d) : Json(nullptr);
  j["type"] = r.type ? Json(std::string(to_string(*r.type))) : Json(nullptr);
  j["family"] = std::string(to_string(r.family));
  j["beta"] = r.beta ? Json(*r.beta) : Json(nullptr);
  j["a12_pair"] = r.a12_pair ? Json(*r.a12_pair) : Json(nullptr);
  j["novelty"] = r.novelty;
  j["distribution"] = to_json(r.distribution);
  j["warnings"] = r.warnings;
  return j;
}

EnumeratorReport report_from_json(const Json& j) {
  EnumeratorReport r;
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  if (!j.at("d").is_null()) r.d = j.at("d").get<std::size_t>();
  if (!j.at("type").is_null()) r.type = j.at("type") == "I" ? CodeType::I : CodeType::II;
  r.family = family_from_string(j.at("family").get<std::string>());
  if (!j.at("beta").is_null()) r.beta = j.at("beta").get<int>();
  if (!j.at("a12_pair").is_null()) r.a12_pair = j.at("a12_pair").get<std::uint64_t>();
  r.novelty = j.at("novelty").get<bool>();
  r.distribution = distribution_from_json(j.at("distribution"), r.n);
  if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

}  // namespace sdc
