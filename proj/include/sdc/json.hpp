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


// JSON forms of the analysis results. Field names are fixed:
// n, k, d, type, family, beta, a12_pair, novelty, distribution (sparse
// weight -> count map), warnings.

#pragma once

#include <json.hpp>

#include "sdc/analysis.hpp"

namespace sdc {

using Json = nlohmann::ordered_json;

Json to_json(const WeightDistribution& dist);
WeightDistribution distribution_from_json(const Json& j, std::size_t length);

Json to_json(const EnumeratorReport& report);
EnumeratorReport report_from_json(const Json& j);

}  // namespace sdc
