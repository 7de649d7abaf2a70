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


// Acceptance runner: one PASS/FAIL line per criterion. Expected values and
// time limits are fixed here, independent of the library's table data.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sdc/analysis.hpp"
#include "sdc/graph.hpp"
#include "sdc/json.hpp"
#include "sdc/repro.hpp"
#include "properties.hpp"

#ifndef SDCODES_CLI
#error "SDCODES_CLI must name the command-line tool"
#endif

using namespace sdc;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kGraphSeconds = 1.0;
constexpr double kFacePairSeconds = 1.0;
constexpr double kLiftSeconds = 60.0;
constexpr double kPairSeconds = 120.0;
constexpr double kExtensionSeconds = 180.0;

constexpr std::size_t kEnumeratorInstances = 100;
constexpr std::size_t kGrayPairs = 1000;
constexpr std::size_t kExtensionInstances = 100;
constexpr std::size_t kRingTriples = 16 * 16 * 16;

struct Expected {
  const char* row;
  const char* family;
  int beta;
};

constexpr std::array<Expected, 5> kLifts1 = {{
    {"K1", "W64_1", 20}, {"K2", "W64_1", 24}, {"K3", "W64_1", 26}, {"K4", "W64_1", 30}, {"K5", "W64_2", 26},
}};

constexpr std::array<Expected, 15> kLifts2 = {{
    {"L1", "W64_1", 16}, {"L2", "W64_1", 20}, {"L3", "W64_1", 24},  {"L4", "W64_1", 26},
    {"L5", "W64_1", 28}, {"L6", "W64_1", 30}, {"L7", "W64_1", 34},  {"L8", "W64_1", 38},
    {"L9", "W64_2", 3},  {"L10", "W64_2", 7}, {"L11", "W64_2", 11}, {"L12", "W64_2", 15},
    {"L13", "W64_2", 26}, {"L14", "W64_2", 27}, {"L15", "W64_2", 35},
}};

constexpr std::array<Expected, 10> kExtensions = {{
    {"C1", "W66_1", 13}, {"C2", "W66_1", 57}, {"C3", "W66_3", 24}, {"C4", "W66_3", 25},
    {"C5", "W66_3", 26}, {"C6", "W66_3", 27}, {"C7", "W66_3", 39}, {"C8", "W66_3", 40},
    {"C9", "W66_3", 41}, {"C10", "W66_3", 42},
}};

struct Pair {
  const char* k;
  std::uint64_t k_a12;
  const char* l;
  std::uint64_t l_a12;
};

constexpr std::array<Pair, 5> kPairs = {{
    {"K1", 15732, "L2", 14964},
    {"K2", 16488, "L3", 17264},
    {"K3", 17676, "L4", 17898},
    {"K4", 20544, "L6", 19890},
    {"K5", 18876, "L13", 19680},
}};

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;
  void fail(std::string why) {
    pass = false;
    details.push_back("x " + why);
  }
  void note(std::string what) { details.push_back("  " + what); }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << "\n";
  for (const auto& d : v.details) std::cout << "       " << d << "\n";
  std::cout.flush();
  if (!v.pass) ++failures;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << s << " s";
  return o.str();
}

// ---- 1, 2: graph codes ----------------------------------------------------

Verdict graph_pipeline() {
  Verdict v;
  const std::map<std::string, std::map<std::size_t, std::uint64_t>> expected = {
      {"cube", {{0, 1}, {4, 14}, {8, 1}}},
      {"G1", {{0, 1}, {4, 28}, {8, 198}, {12, 28}, {16, 1}}},
      {"G2", {{0, 1}, {4, 12}, {6, 64}, {8, 102}, {10, 64}, {12, 12}, {16, 1}}},
  };
  const std::map<std::string, std::pair<std::size_t, CodeType>> shape = {
      {"cube", {8, CodeType::II}}, {"G1", {16, CodeType::II}}, {"G2", {16, CodeType::I}}};
  const auto start = Clock::now();
  for (const auto& [name, weights] : expected) {
    const auto g = builtin_graph(name);
    const auto [f1, f2] = default_face_pair(g);
    const auto report = analyze(graph_to_selfdual_code(g, f1, f2));
    std::map<std::size_t, std::uint64_t> got;
    for (std::size_t w = 0; w < report.distribution.counts.size(); ++w)
      if (report.distribution.counts[w]) got[w] = report.distribution.counts[w];
    const auto [n, type] = shape.at(name);
    if (got != weights || report.n != n || report.k != n / 2 || report.d != std::optional<std::size_t>{4} ||
        report.type != type)
      v.fail(name + ": got [" + std::to_string(report.n) + "," + std::to_string(report.k) + "] " +
             report.distribution.to_polynomial());
    else
      v.note(name + ": [" + std::to_string(n) + "," + std::to_string(n / 2) + ",4] Type " +
             std::string(to_string(type)) + ", " + report.distribution.to_polynomial());
  }
  const double t = seconds_since(start);
  if (t >= kGraphSeconds) v.fail("took " + fmt(t) + ", limit " + fmt(kGraphSeconds));
  v.note("runtime " + fmt(t));
  return v;
}

Verdict face_pairs() {
  Verdict v;
  const auto start = Clock::now();
  for (const auto& name : builtin_graph_names()) {
    const auto g = builtin_graph(name);
    const auto color = three_face_coloring(g);
    const auto [d1, d2] = default_face_pair(g);
    const auto reference = graph_to_selfdual_code(g, d1, d2).generator();
    std::size_t pairs = 0;
    for (std::size_t f1 = 0; f1 < g.faces.size(); ++f1)
      for (std::size_t f2 = f1 + 1; f2 < g.faces.size(); ++f2) {
        if (color[f1] == color[f2]) continue;
        ++pairs;
        BinaryMatrix stacked = reference;
        const auto other = graph_to_selfdual_code(g, f1, f2).generator();
        for (std::size_t i = 0; i < other.rows(); ++i) stacked.append_row(other.row(i));
        if (rank(stacked) != reference.rows())
          v.fail(name + ": faces " + std::to_string(f1 + 1) + "," + std::to_string(f2 + 1) +
                 " give a different row space");
      }
    v.note(name + ": " + std::to_string(pairs) + " face pairs");
  }
  const double t = seconds_since(start);
  if (t >= kFacePairSeconds) v.fail("took " + fmt(t) + ", limit " + fmt(kFacePairSeconds));
  v.note("runtime " + fmt(t));
  return v;
}

// ---- 3 to 6: table reproduction -------------------------------------------

const RowReport* find_row(const std::vector<ReproductionReport>& reports, const std::string& table,
                          const std::string& row) {
  for (const auto& t : reports)
    if (t.table == table)
      for (const auto& r : t.rows)
        if (r.row == row) return &r;
  return nullptr;
}

std::string describe(const RowReport& r) {
  std::string s = r.row + ": " + std::string(to_string(r.status));
  if (r.measured.is_object() && r.measured.contains("d")) {
    s += ", measured d=" + r.measured["d"].dump() + " " + r.measured["family"].dump() + " beta=" +
         r.measured["beta"].dump();
  }
  if (r.edit) s += " [" + *r.edit + "]";
  for (const auto& n : r.notes) s += "; " + n;
  return s;
}

bool invariants_match(const RowReport& r, std::size_t n, const Expected& e) {
  const Json& m = r.measured;
  return m.is_object() && m["n"] == n && m["k"] == n / 2 && m["d"] == 12 && m["type"] == "I" &&
         m["family"] == e.family && m["beta"] == e.beta;
}

void check_row(Verdict& v, const RowReport* r, const Expected& e, std::size_t n, double limit,
               bool accept_repair) {
  if (!r) {
    v.fail(std::string(e.row) + ": missing");
    return;
  }
  const bool repaired_ok = accept_repair && r->status == RowStatus::Repaired && invariants_match(*r, n, e);
  const bool flagged_ok = accept_repair && r->status == RowStatus::ErrataFlagged;
  if ((r->status == RowStatus::Match && invariants_match(*r, n, e)) || repaired_ok || flagged_ok) {
    if (r->seconds > limit)
      v.fail(std::string(e.row) + ": " + fmt(r->seconds) + ", limit " + fmt(limit));
    if (repaired_ok || flagged_ok) v.note(describe(*r) + " (accepted for a malformed row)");
    return;
  }
  v.fail(describe(*r) + " (expected " + e.family + " beta=" + std::to_string(e.beta) + ")");
}

Verdict table1(const std::vector<ReproductionReport>& reports) {
  Verdict v;
  double total = 0;
  for (const auto& e : kLifts1) {
    const auto* r = find_row(reports, "1", e.row);
    check_row(v, r, e, 64, kLiftSeconds, false);
    if (r) total += r->seconds;
  }
  v.note("total " + fmt(total));
  return v;
}

Verdict table2(const std::vector<ReproductionReport>& reports) {
  Verdict v;
  double total = 0;
  for (const auto& e : kLifts2) {
    const std::string name = e.row;
    const bool malformed = name == "L8" || name == "L14";
    const auto* r = find_row(reports, "2", e.row);
    if (malformed && r && r->status != RowStatus::ErrataFlagged && r->status != RowStatus::Repaired) {
      v.fail(name + ": malformed row not flagged (" + std::string(to_string(r->status)) + ")");
      continue;
    }
    check_row(v, r, e, 64, kLiftSeconds, malformed);
    if (r) total += r->seconds;
  }
  v.note("total " + fmt(total));
  return v;
}

Verdict pairs(const std::vector<ReproductionReport>& reports) {
  Verdict v;
  for (const auto& p : kPairs) {
    const std::string label = std::string(p.k) + "/" + p.l;
    const auto* r = find_row(reports, "equivalence", label);
    if (!r) {
      v.fail(label + ": missing");
      continue;
    }
    double t = r->seconds;
    for (const auto* name : {p.k, p.l}) {
      const auto* lift = find_row(reports, name[0] == 'K' ? "1" : "2", name);
      if (lift) t += lift->seconds;
    }
    const Json& m = r->measured;
    const bool values = m.is_object() && m["a12_pair"] == Json::array({p.k_a12, p.l_a12});
    if (r->status != RowStatus::Match || !values)
      v.fail(describe(*r) + " (expected " + std::to_string(p.k_a12) + "/" + std::to_string(p.l_a12) + ")");
    else if (t > kPairSeconds)
      v.fail(label + ": " + fmt(t) + ", limit " + fmt(kPairSeconds));
  }
  return v;
}

Verdict table3(const std::vector<ReproductionReport>& reports) {
  Verdict v;
  double total = 0;
  for (const auto& e : kExtensions) {
    const auto* r = find_row(reports, "3", e.row);
    check_row(v, r, e, 66, kExtensionSeconds, false);
    if (r) total += r->seconds;
  }
  v.note("total " + fmt(total));
  return v;
}

// ---- 7: properties --------------------------------------------------------

Verdict properties() {
  using namespace sdc::testing;
  Verdict v;
  auto take = [&](const char* name, const PropertyResult& r, std::size_t minimum) {
    if (!r.ok())
      for (const auto& f : r.failures) v.fail(std::string(name) + ": " + f);
    if (r.checked < minimum)
      v.fail(std::string(name) + ": " + std::to_string(r.checked) + " instances, need " + std::to_string(minimum));
    v.note(std::string(name) + ": " + std::to_string(r.checked) + " instances, " +
           std::to_string(r.failures.size()) + " failures");
  };
  take("enumerator vs oracle", check_enumerator(kEnumeratorInstances), kEnumeratorInstances);
  take("gray orthogonality", check_gray_orthogonality(kGrayPairs), kGrayPairs);
  take("completions", check_completions(), 1);
  take("extension", check_extension(kExtensionInstances), kExtensionInstances);
  take("ring axioms", check_ring_axioms(), kRingTriples);
  return v;
}

// ---- 8: determinism -------------------------------------------------------

std::optional<std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(SDCODES_CLI) + " " + args;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return std::nullopt;
  std::string out;
  std::array<char, 65536> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  ::pclose(p);
  return out;
}

Verdict determinism(const std::vector<ReproductionReport>& reports) {
  Verdict v;
  const std::string reference = to_json(reports).dump(2) + "\n";
  const std::array<unsigned, 3> threads = {1, 1, std::max(4u, std::thread::hardware_concurrency())};
  for (unsigned t : threads) {
    const auto start = Clock::now();
    const auto out = run_cli("--json --no-store --threads " + std::to_string(t) + " reproduce all --repair");
    if (!out) {
      v.fail("could not start " + std::string(SDCODES_CLI));
      continue;
    }
    if (*out != reference)
      v.fail("--threads " + std::to_string(t) + ": output differs from the in-process report (" +
             std::to_string(out->size()) + " vs " + std::to_string(reference.size()) + " bytes)");
    else
      v.note("--threads " + std::to_string(t) + ": identical, " + std::to_string(out->size()) + " bytes, " +
             fmt(seconds_since(start)));
  }
  return v;
}

}  // namespace

int main() {
  report(1, "graph pipeline: cube, G1, G2 weight distributions", graph_pipeline());
  report(2, "face-pair independence", face_pairs());

  std::cout << "reproducing all tables (single thread, repair on)...\n" << std::flush;
  Reproducer reproducer({.threads = 1, .repair = true});
  const auto reports = reproducer.run("all");

  report(3, "lifts of A1: [64,32,12] Type I with the listed beta", table1(reports));
  report(4, "lifts of A2: listed beta, malformed rows flagged", table2(reports));
  report(5, "A12 pair invariants of the beta-matched pairs", pairs(reports));
  report(6, "length-66 extensions: [66,33,12] with the listed beta", table3(reports));
  report(7, "property suites", properties());
  report(8, "byte-identical JSON across runs and thread counts", determinism(reports));

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
