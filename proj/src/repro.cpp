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


#include "sdc/repro.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "sdc/error.hpp"
#include "sdc/extension.hpp"
#include "sdc/lift.hpp"
#include "sdc/tables.hpp"

namespace sdc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Evaluation {
  std::optional<R2Matrix> k;
  std::optional<EnumeratorReport> report;
  std::string failure;
  std::vector<std::string> notes;
};

Evaluation evaluate_hex(std::string_view hex, const BinaryMatrix& a, unsigned threads) {
  Evaluation ev;
  std::vector<LiftCandidate> completions;
  try {
    completions = complete_lower(decode_upper(hex), a);
  } catch (const Error& e) {
    ev.failure = e.what();
    return ev;
  }
  ev.k = completions.front().k;
  ev.report = analyze(gray_image(*ev.k), {.threads = threads});
  if (completions.size() > 1) {
    ev.notes.push_back(std::to_string(completions.size()) + " completions of the upper triangle");
    for (std::size_t i = 1; i < completions.size(); ++i) {
      const auto other = analyze(gray_image(completions[i].k), {.threads = threads});
      if (other.distribution != ev.report->distribution || other.a12_pair != ev.report->a12_pair)
        ev.notes.push_back("completion " + std::to_string(i + 1) +
                           " has a different weight distribution or A12 invariant");
    }
  }
  return ev;
}

bool matches(const EnumeratorReport& r, Family family, int beta) {
  return r.d == std::optional<std::size_t>{12} && r.family == family && r.beta == std::optional<int>{beta};
}

std::string summary(const EnumeratorReport& r) {
  std::string s = "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                  (r.d ? std::to_string(*r.d) : std::string("-")) + "]";
  if (r.family != Family::None) {
    s += " " + std::string(to_string(r.family));
    if (r.beta) s += " beta=" + std::to_string(*r.beta);
  }
  return s;
}

Json expected_json(Family family, int beta) {
  Json j;
  j["family"] = std::string(to_string(family));
  j["beta"] = beta;
  return j;
}

RowStatus unresolved_status(const RowReport& base) {
  return base.status == RowStatus::Mismatch ? RowStatus::Mismatch : RowStatus::ErrataFlagged;
}

}  // namespace

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::ErrataFlagged: return "errata-flagged";
    case RowStatus::Repaired: return "repaired";
  }
  return "?";
}

std::size_t ReproductionReport::count(RowStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const RowReport& r) { return r.status == s; }));
}

bool ReproductionReport::ok() const { return count(RowStatus::Mismatch) == 0; }

Json to_json(const ReproductionReport& report, bool timings) {
  Json j;
  j["table"] = report.table;
  Json sum;
  sum["rows"] = report.rows.size();
  for (RowStatus s : {RowStatus::Match, RowStatus::Mismatch, RowStatus::ErrataFlagged, RowStatus::Repaired})
    sum[std::string(to_string(s))] = report.count(s);
  j["summary"] = sum;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["row"] = r.row;
    row["base"] = r.base;
    row["input"] = r.input;
    row["used"] = r.used ? Json(*r.used) : Json(nullptr);
    row["edit"] = r.edit ? Json(*r.edit) : Json(nullptr);
    row["expected"] = r.expected;
    row["measured"] = r.measured;
    row["status"] = std::string(to_string(r.status));
    row["notes"] = r.notes;
    if (timings) row["seconds"] = r.seconds;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const std::vector<ReproductionReport>& reports, bool timings) {
  Json j;
  j["ok"] = exit_code(reports) == 0;
  Json tables = Json::array();
  for (const auto& r : reports) tables.push_back(to_json(r, timings));
  j["tables"] = std::move(tables);
  return j;
}

int exit_code(const std::vector<ReproductionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); }) ? 0 : 1;
}

Reproducer::Reproducer(ReproOptions options) : options_(options) {}

const Reproducer::ResolvedLift& Reproducer::lift(std::string_view name) {
  if (auto it = lifts_.find(name); it != lifts_.end()) return it->second;

  const LiftRow& spec = lift_row(name);
  const auto start = Clock::now();
  const BinaryMatrix a = base_matrix(spec.base);
  ResolvedLift res;
  RowReport& row = res.row;
  row.row = spec.name;
  row.base = spec.base;
  row.input = spec.upper_hex;
  row.expected = expected_json(spec.family, spec.beta);

  Evaluation ev = evaluate_hex(spec.upper_hex, a, options_.threads);
  row.notes = ev.notes;
  if (ev.report) row.measured = to_json(*ev.report);

  if (ev.report && matches(*ev.report, spec.family, spec.beta)) {
    row.status = RowStatus::Match;
    res.k = std::move(ev.k);
    res.report = std::move(ev.report);
  } else {
    row.notes.push_back("as printed: " + (ev.report ? summary(*ev.report) : ev.failure));
    const Erratum* erratum = find_erratum(spec.name);
    if (!erratum) {
      row.status = RowStatus::Mismatch;
    } else {
      row.status = RowStatus::ErrataFlagged;
      row.notes.push_back("registered erratum: " + std::string(erratum->symptom));
      if (options_.repair) {
        const FamilyTarget target{spec.family, spec.beta};
        std::vector<RepairCandidate> found;
        try {
          found = erratum->repair == ErratumRepair::Substitution
                      ? repair_substitution(spec.upper_hex, a, target, options_.threads)
                      : repair_hex(spec.upper_hex, a, target, options_.threads);
        } catch (const Error& e) {
          row.notes.push_back(std::string("repair search failed: ") + e.what());
        }
        if (found.size() == 1) {
          row.status = RowStatus::Repaired;
          row.used = found.front().upper_hex;
          row.edit = found.front().edit;
          row.measured = to_json(found.front().report);
          res.k = complete_lower(decode_upper(*row.used), a).front().k;
          res.report = found.front().report;
        } else if (found.empty()) {
          row.notes.push_back("repair search found no candidate");
        } else {
          row.notes.push_back("repair ambiguous: " + std::to_string(found.size()) + " candidates");
          for (const auto& c : found) row.notes.push_back("candidate " + c.upper_hex + " (" + c.edit + ")");
        }
      }
    }
  }
  row.seconds = seconds_since(start);
  return lifts_.emplace(std::string(name), std::move(res)).first->second;
}

ReproductionReport Reproducer::table1() {
  ReproductionReport out{"1", {}};
  for (const auto& r : sdc::table1()) out.rows.push_back(lift(r.name).row);
  return out;
}

ReproductionReport Reproducer::table2() {
  ReproductionReport out{"2", {}};
  for (const auto& r : sdc::table2()) out.rows.push_back(lift(r.name).row);
  return out;
}

ReproductionReport Reproducer::equivalence() {
  ReproductionReport out{"equivalence", {}};
  for (const auto& e : equivalence_table()) {
    const auto start = Clock::now();
    RowReport row;
    row.row = std::string(e.k_code) + "/" + std::string(e.l_code);
    row.input = row.row;
    row.expected = expected_json(e.family, e.beta);
    row.expected["a12_pair"] = {e.k_a12, e.l_a12};

    const ResolvedLift& kl = lift(e.k_code);
    const ResolvedLift& ll = lift(e.l_code);
    if (!kl.report || !ll.report) {
      for (const ResolvedLift* r : {&kl, &ll})
        if (!r->report) row.notes.push_back(r->row.row + " not reproduced (" +
                                            std::string(to_string(r->row.status)) + ")");
      const bool mismatch = unresolved_status(kl.row) == RowStatus::Mismatch ||
                            unresolved_status(ll.row) == RowStatus::Mismatch;
      row.status = mismatch ? RowStatus::Mismatch : RowStatus::ErrataFlagged;
    } else {
      const EnumeratorReport& kr = *kl.report;
      const EnumeratorReport& lr = *ll.report;
      row.measured["family"] = {std::string(to_string(kr.family)), std::string(to_string(lr.family))};
      row.measured["beta"] = {kr.beta ? Json(*kr.beta) : Json(nullptr), lr.beta ? Json(*lr.beta) : Json(nullptr)};
      row.measured["a12_pair"] = {kr.a12_pair ? Json(*kr.a12_pair) : Json(nullptr),
                                  lr.a12_pair ? Json(*lr.a12_pair) : Json(nullptr)};
      const bool values = matches(kr, e.family, e.beta) && matches(lr, e.family, e.beta) &&
                          kr.a12_pair == std::optional<std::uint64_t>{e.k_a12} &&
                          lr.a12_pair == std::optional<std::uint64_t>{e.l_a12};
      const bool repaired = kl.row.status == RowStatus::Repaired || ll.row.status == RowStatus::Repaired;
      for (const ResolvedLift* r : {&kl, &ll})
        if (r->row.status == RowStatus::Repaired)
          row.notes.push_back("uses repaired " + r->row.row + " (" + r->row.edit.value_or("") + ")");
      if (kr.a12_pair && lr.a12_pair)
        row.notes.push_back(*kr.a12_pair != *lr.a12_pair ? "A12 differ: the codes are inequivalent"
                                                         : "A12 equal: inconclusive");
      for (auto [code, r, printed] : {std::tuple{e.k_code, &kr, e.k_a12}, std::tuple{e.l_code, &lr, e.l_a12}})
        if (r->a12_pair != std::optional<std::uint64_t>{printed})
          row.notes.push_back(std::string(code) + ": measured A12 " +
                              (r->a12_pair ? std::to_string(*r->a12_pair) : std::string("-")) +
                              ", printed " + std::to_string(printed));
      row.status = values ? (repaired ? RowStatus::Repaired : RowStatus::Match) : RowStatus::Mismatch;
    }
    row.seconds = seconds_since(start);
    out.rows.push_back(std::move(row));
  }
  return out;
}

ReproductionReport Reproducer::table3() {
  ReproductionReport out{"3", {}};
  for (const auto& e : sdc::table3()) {
    const auto start = Clock::now();
    RowReport row;
    row.row = e.name;
    row.base = e.base_code;
    row.input = e.x;
    row.expected = expected_json(e.family, e.beta);

    const ResolvedLift& base = lift(e.base_code);
    if (!base.k) {
      row.notes.push_back("base " + base.row.row + " not reproduced (" +
                          std::string(to_string(base.row.status)) + ")");
      row.status = unresolved_status(base.row);
      row.seconds = seconds_since(start);
      out.rows.push_back(std::move(row));
      continue;
    }
    const BinaryMatrix g = build_gray_generator(*base.k, kTable3Layout);
    auto run = [&](std::string_view x) -> std::optional<EnumeratorReport> {
      try {
        return analyze(extend(g, expand_x(x, g.cols())), {.threads = options_.threads});
      } catch (const Error& err) {
        row.notes.push_back(std::string(x) + ": " + err.what());
        return std::nullopt;
      }
    };
    const bool base_repaired = base.row.status == RowStatus::Repaired;
    if (base_repaired)
      row.notes.push_back("uses repaired " + base.row.row + " (" + base.row.edit.value_or("") + ")");

    const auto printed = run(e.x);
    if (printed) row.measured = to_json(*printed);
    if (printed && matches(*printed, e.family, e.beta)) {
      row.status = base_repaired ? RowStatus::Repaired : RowStatus::Match;
    } else {
      if (printed) row.notes.push_back("as printed: " + summary(*printed));
      const Erratum* erratum = find_erratum(e.name);
      if (!erratum) {
        row.status = RowStatus::Mismatch;
      } else {
        row.status = RowStatus::ErrataFlagged;
        row.notes.push_back("registered erratum: " + std::string(erratum->symptom));
        if (options_.repair) {
          std::vector<std::pair<std::string, EnumeratorReport>> found;
          for (const auto& variant : repetition_variants(e.x))
            if (auto r = run(variant); r && matches(*r, e.family, e.beta)) found.emplace_back(variant, *r);
          if (found.size() == 1) {
            row.status = RowStatus::Repaired;
            row.used = found.front().first;
            row.edit = "complement the repetition digit";
            row.measured = to_json(found.front().second);
          } else {
            row.notes.push_back(found.empty() ? "repair search found no candidate"
                                              : "repair ambiguous: " + std::to_string(found.size()) +
                                                    " candidates");
          }
        }
      }
    }
    row.seconds = seconds_since(start);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<ReproductionReport> Reproducer::run(std::string_view table) {
  if (table == "1") return {table1()};
  if (table == "2") return {table2()};
  if (table == "3") return {table3()};
  if (table == "equivalence") return {equivalence()};
  if (table == "all") return {table1(), table2(), table3(), equivalence()};
  throw Error("unknown table '" + std::string(table) + "' (1, 2, 3, equivalence, all)");
}

}  // namespace sdc
