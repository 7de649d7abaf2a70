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


// Reproduction harness for the published tables: every row is rebuilt from
// its printed data, analyzed and compared with the printed invariants.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/analysis.hpp"
#include "sdc/json.hpp"
#include "sdc/r2.hpp"

namespace sdc {

enum class RowStatus { Match, Mismatch, ErrataFlagged, Repaired };
std::string_view to_string(RowStatus s);

struct RowReport {
  std::string row;
  /// Base matrix (lift rows), base lift (extension rows) or "" (pair rows).
  std::string base;
  /// Input as printed: hex string or X notation; "K1/L2" style for pairs.
  std::string input;
  /// The edited input that was analyzed, when a repair was applied.
  std::optional<std::string> used;
  std::optional<std::string> edit;
  Json expected = Json::object();
  /// Null when nothing could be measured.
  Json measured;
  RowStatus status = RowStatus::Mismatch;
  std::vector<std::string> notes;
  double seconds = 0;
};

struct ReproductionReport {
  /// "1", "2", "3" or "equivalence".
  std::string table;
  std::vector<RowReport> rows;

  std::size_t count(RowStatus s) const;
  /// No row is a mismatch.
  bool ok() const;
};

/// Timings are only written when requested, so that the default output is
/// byte-identical between runs.
Json to_json(const ReproductionReport& report, bool timings = false);
Json to_json(const std::vector<ReproductionReport>& reports, bool timings = false);

struct ReproOptions {
  unsigned threads = 1;
  /// Run the repair search on registered errata rows.
  bool repair = false;
};

/// Rebuilds table rows. Lift results are cached, so tables sharing codes
/// (the pair table and the extensions) do not enumerate them twice.
class Reproducer {
 public:
  explicit Reproducer(ReproOptions options = {});

  ReproductionReport table1();
  ReproductionReport table2();
  ReproductionReport table3();
  ReproductionReport equivalence();
  /// "1", "2", "3", "equivalence" or "all" (in that order).
  std::vector<ReproductionReport> run(std::string_view table);

  struct ResolvedLift {
    RowReport row;
    /// Present when the row reproduced (as printed or repaired).
    std::optional<R2Matrix> k;
    std::optional<EnumeratorReport> report;
  };
  /// A row of Table 1 or 2, evaluated once.
  const ResolvedLift& lift(std::string_view name);

 private:
  ReproOptions options_;
  std::map<std::string, ResolvedLift, std::less<>> lifts_;
};

/// 0 when no row is a mismatch, 1 otherwise.
int exit_code(const std::vector<ReproductionReport>& reports);

}  // namespace sdc
