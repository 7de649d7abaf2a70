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


// sdcodes: command-line front end.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sdc/analysis.hpp"
#include "sdc/error.hpp"
#include "sdc/extension.hpp"
#include "sdc/graph.hpp"
#include "sdc/json.hpp"
#include "sdc/lift.hpp"
#include "sdc/repro.hpp"
#include "sdc/store.hpp"
#include "sdc/tables.hpp"

namespace fs = std::filesystem;
using namespace sdc;

namespace {

struct Globals {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;
  std::string store;
  bool no_store = false;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

void print_report(const EnumeratorReport& r) {
  std::cout << "code      [" << r.n << "," << r.k << "," << (r.d ? std::to_string(*r.d) : "-") << "]";
  if (r.type) std::cout << " Type " << to_string(*r.type);
  else std::cout << " not self-dual";
  std::cout << "\n";
  std::cout << "family    " << to_string(r.family);
  if (r.beta) std::cout << "  beta=" << *r.beta;
  if (r.family != Family::None) std::cout << (r.novelty ? "  (not in the known-beta registry)" : "  (known)");
  std::cout << "\n";
  if (r.a12_pair) std::cout << "A12 pair  " << *r.a12_pair << "\n";
  std::cout << "weights   " << r.distribution.to_polynomial() << "\n";
  for (const auto& w : r.warnings) std::cout << "warning   " << w << "\n";
}

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {}

  CodeStore store() const {
    return CodeStore(g_.store.empty() ? CodeStore::default_path() : fs::path(g_.store));
  }

  // Stores the entry unless disabled; returns the path note for text output.
  std::optional<std::string> save(const CodeStoreEntry& entry) const {
    if (g_.no_store) return std::nullopt;
    const CodeStore s = store();
    s.put(entry);
    return (s.dir() / entry.name).string();
  }

  void emit(const Json& j, const EnumeratorReport& report, const std::optional<std::string>& stored,
            const std::vector<std::string>& header = {}) const {
    if (g_.json) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    for (const auto& line : header) std::cout << line << "\n";
    print_report(report);
    if (stored) std::cout << "stored    " << *stored << "\n";
  }

  const Globals& g() const { return g_; }

 private:
  const Globals& g_;
};

// ---- graph2code ------------------------------------------------------------

struct Graph2CodeArgs {
  std::string graph;
  std::vector<std::size_t> faces;
  std::string name;
};

int cmd_graph2code(const Session& s, const Graph2CodeArgs& a) {
  const auto names = builtin_graph_names();
  const bool builtin = std::find(names.begin(), names.end(), a.graph) != names.end();
  PlanarBicubicGraph g = builtin ? builtin_graph(a.graph) : parse_graph(read_text(a.graph));
  if (g.name.empty()) g.name = fs::path(a.graph).stem().string();

  const ValidationReport v = validate(g);
  if (!v.ok()) {
    for (const auto& f : v.failures) std::cerr << "invalid graph: " << f << "\n";
    return 2;
  }
  std::pair<std::size_t, std::size_t> pair;
  if (a.faces.empty()) {
    pair = default_face_pair(g);
  } else {
    if (a.faces.size() != 2 || a.faces[0] == 0 || a.faces[1] == 0)
      throw Error("--faces takes two 1-based face numbers");
    pair = {a.faces[0] - 1, a.faces[1] - 1};
  }
  const FaceColoring coloring = three_face_coloring(g);
  const BinaryCode code = graph_to_selfdual_code(g, pair.first, pair.second);
  const EnumeratorReport report = analyze(code, {.threads = s.g().threads});
  const StandardForm sf = standard_form(code.generator());

  CodeStoreEntry entry;
  entry.name = a.name.empty() ? g.name : a.name;
  entry.provenance = {{"kind", "graph"},
                      {"graph", g.name},
                      {"faces", {pair.first + 1, pair.second + 1}},
                      {"coloring", coloring}};
  entry.generator = code.generator();
  entry.report = report;
  const auto stored = s.save(entry);

  bool lrm = false;
  try {
    lrm = is_lrm(sf.redundancy());
  } catch (const Error&) {
  }
  Json j;
  j["graph"] = g.name;
  j["vertices"] = g.vertices;
  j["edges"] = g.edges.size();
  j["faces"] = g.faces.size();
  j["face_pair"] = {pair.first + 1, pair.second + 1};
  j["coloring"] = coloring;
  j["standard_form_lrm"] = lrm;
  j["report"] = to_json(report);
  std::ostringstream colors;
  for (std::size_t f = 0; f < coloring.size(); ++f) colors << (f ? " " : "") << coloring[f];
  s.emit(j, report, stored,
         {"graph     " + g.name + ": V=" + std::to_string(g.vertices) + " E=" + std::to_string(g.edges.size()) +
              " F=" + std::to_string(g.faces.size()),
          "coloring  " + colors.str(),
          "faces     deleted f" + std::to_string(pair.first + 1) + ", f" + std::to_string(pair.second + 1),
          std::string("LRM       ") + (lrm ? "standard form is lift-ready" : "standard form is not lift-ready")});
  return 0;
}

// ---- lift ------------------------------------------------------------------

struct LiftArgs {
  std::string base;
  std::string hex;
  bool random = false;
  std::uint64_t seed = 1;
  bool repair = false;
  std::string family;
  std::optional<int> beta;
  std::string name;
  std::string layout = "standard";
};

BinaryMatrix load_base(const std::string& base) {
  if (base == "A1" || base == "A2") return base_matrix(base);
  return BinaryMatrix::parse(read_text(base));
}

int cmd_lift(const Session& s, const LiftArgs& a) {
  const BinaryMatrix base = load_base(a.base);
  const GrayLayout layout = gray_layout_from_string(a.layout);
  Json prov = {{"kind", "lift"}, {"base", a.base}};
  std::vector<std::string> header;
  std::string hex;
  std::string default_name;
  std::optional<FamilyTarget> expected;

  if (a.random) {
    if (!a.hex.empty()) throw Error("give either a hex string or --random, not both");
    const RandomLift r = random_lift(base, a.seed);
    hex = r.upper_hex;
    prov["kind"] = "seed";
    prov["seed"] = r.seed;
    prov["rng"] = std::string(kLiftRng);
    prov["attempts"] = r.attempts;
    default_name = "lift-" + std::string(a.base == "A1" || a.base == "A2" ? a.base : "base") + "-seed" +
                   std::to_string(a.seed);
    header.push_back("seed      " + std::to_string(r.seed) + " (" + std::string(kLiftRng) + ", " +
                     std::to_string(r.attempts) + " attempt(s))");
  } else {
    if (a.hex.empty()) throw Error("a hex string, a table row name or --random is required");
    hex = a.hex;
    const bool table_row = std::any_of(table1().begin(), table1().end(), [&](auto& r) { return r.name == a.hex; }) ||
                           std::any_of(table2().begin(), table2().end(), [&](auto& r) { return r.name == a.hex; });
    if (table_row) {
      const LiftRow& row = lift_row(a.hex);
      hex = row.upper_hex;
      expected = FamilyTarget{row.family, row.beta};
      default_name = std::string(row.name);
      prov["table_row"] = a.hex;
      header.push_back("row       " + a.hex + " (printed: " + hex + ")");
    } else {
      default_name = "lift-" + hex.substr(0, std::min<std::size_t>(8, hex.size()));
    }
  }
  if (!a.family.empty()) {
    if (!a.beta) throw Error("--family needs --beta");
    expected = FamilyTarget{family_from_string(a.family), *a.beta};
  }

  if (a.repair) {
    if (!expected) throw Error("--repair needs an expected family and beta (--family, --beta)");
    bool printed_ok = false;
    if (hex.size() == kUpperDigits) {
      try {
        const auto ks = complete_lower(decode_upper(hex), base);
        const auto r = analyze(gray_image(ks.front().k, layout), {.threads = s.g().threads});
        printed_ok = r.family == expected->family && r.beta == std::optional<int>{expected->beta};
      } catch (const Error&) {
      }
    }
    if (!printed_ok) {
      const auto found = hex.size() == kUpperDigits
                             ? repair_substitution(hex, base, *expected, s.g().threads)
                             : repair_hex(hex, base, *expected, s.g().threads);
      if (found.empty()) throw Error("repair: no candidate reproduces the expected family and beta");
      if (found.size() > 1) {
        std::cerr << "repair ambiguous, " << found.size() << " candidates:\n";
        for (const auto& c : found) std::cerr << "  " << c.upper_hex << "  (" << c.edit << ")\n";
        return 2;
      }
      header.push_back("repaired  " + found.front().edit + " -> " + found.front().upper_hex);
      prov["printed"] = hex;
      prov["edit"] = found.front().edit;
      hex = found.front().upper_hex;
    }
  }

  R2Matrix upper;
  try {
    upper = decode_upper(hex);
  } catch (const HexLengthError& e) {
    throw Error(std::string(e.what()) + "; malformed table string, rerun with --repair");
  }
  const auto completions = complete_lower(upper, base);
  const R2Matrix& k = completions.front().k;
  const BinaryMatrix g = build_gray_generator(k, layout);
  const EnumeratorReport report = analyze(BinaryCode(g), {.threads = s.g().threads});

  prov["hex"] = hex;
  prov["completions"] = completions.size();
  prov["layout"] = std::string(to_string(layout));
  CodeStoreEntry entry{a.name.empty() ? default_name : a.name, prov, g, report};
  const auto stored = s.save(entry);

  Json j;
  j["base"] = a.base;
  j["hex"] = hex;
  j["provenance"] = prov;
  j["completions"] = completions.size();
  j["k"] = k.to_hex();
  j["report"] = to_json(report);
  header.push_back("hex       " + hex);
  header.push_back("complete  " + std::to_string(completions.size()) + " completion(s)");
  std::istringstream rows(k.to_hex());
  for (std::string line; std::getline(rows, line);) header.push_back("K         " + line);
  s.emit(j, report, stored, header);
  return 0;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const Session& s, const std::string& source) {
  BinaryMatrix m;
  std::string origin;
  if (fs::exists(source)) {
    m = BinaryMatrix::parse(read_text(source));
    origin = source;
  } else {
    m = s.store().get(source).generator;
    origin = "store entry " + source;
  }
  const BinaryCode code = BinaryCode::spanned_by(m);
  if (code.dimension() > kMaxEnumerationDimension)
    throw Error("dimension " + std::to_string(code.dimension()) + " exceeds the enumeration limit of " +
                std::to_string(kMaxEnumerationDimension));
  const EnumeratorReport report = analyze(code, {.threads = s.g().threads});
  std::vector<std::string> header = {"source    " + origin};
  if (code.dimension() < m.rows())
    header.push_back("note      " + std::to_string(m.rows() - code.dimension()) + " dependent row(s) dropped");
  s.emit(to_json(report), report, std::nullopt, header);
  return 0;
}

// ---- extend ----------------------------------------------------------------

struct ExtendArgs {
  std::string base;
  std::string x;
  std::string name;
  std::string layout = std::string(to_string(kTable3Layout));
};

int cmd_extend(const Session& s, const ExtendArgs& a) {
  BinaryMatrix g;
  Json prov = {{"kind", "extension"}, {"base", a.base}, {"x", a.x}};
  const bool table_row = std::any_of(table1().begin(), table1().end(), [&](auto& r) { return r.name == a.base; }) ||
                         std::any_of(table2().begin(), table2().end(), [&](auto& r) { return r.name == a.base; });
  if (table_row) {
    Reproducer rep({.threads = s.g().threads, .repair = true});
    const auto& lift = rep.lift(a.base);
    if (!lift.k) throw Error("table lift " + a.base + " does not reproduce");
    const GrayLayout layout = gray_layout_from_string(a.layout);
    g = build_gray_generator(*lift.k, layout);
    prov["layout"] = std::string(to_string(layout));
    prov["hex"] = lift.row.used.value_or(lift.row.input);
  } else {
    g = s.store().get(a.base).generator;
  }
  const BitVector x = expand_x(a.x, g.cols());
  const BinaryCode code = extend(g, x);
  const EnumeratorReport report = analyze(code, {.threads = s.g().threads});
  prov["x_bits"] = x.to_string();
  CodeStoreEntry entry{a.name.empty() ? "ext-" + a.base : a.name, prov, code.generator(), report};
  const auto stored = s.save(entry);
  Json j;
  j["provenance"] = prov;
  j["report"] = to_json(report);
  s.emit(j, report, stored, {"base      " + a.base, "X         " + x.to_string()});
  return 0;
}

// ---- reproduce -------------------------------------------------------------

struct ReproduceArgs {
  std::string table;
  bool repair = false;
  bool timings = false;
  std::string output;
};

std::string measured_summary(const Json& m) {
  if (m.is_null()) return "-";
  if (m.contains("a12_pair") && m["a12_pair"].is_array()) return "A12 " + m["a12_pair"].dump();
  std::string s = "d=" + (m["d"].is_null() ? std::string("-") : m["d"].dump());
  if (m["family"] != "none") s += " " + m["family"].get<std::string>() + " beta=" + m["beta"].dump();
  if (!m["a12_pair"].is_null()) s += " A12=" + m["a12_pair"].dump();
  return s;
}

int cmd_reproduce(const Session& s, const ReproduceArgs& a) {
  Reproducer rep({.threads = s.g().threads, .repair = a.repair});
  const auto reports = rep.run(a.table);
  const Json j = to_json(reports, a.timings);
  if (!a.output.empty()) {
    std::ofstream out(a.output, std::ios::binary);
    if (!out) throw Error("cannot write " + a.output);
    out << j.dump(2) << "\n";
  }
  if (s.g().json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& t : reports) {
      std::cout << "table " << t.table << ": " << t.count(RowStatus::Match) << " match, "
                << t.count(RowStatus::Mismatch) << " mismatch, " << t.count(RowStatus::ErrataFlagged)
                << " errata-flagged, " << t.count(RowStatus::Repaired) << " repaired\n";
      for (const auto& r : t.rows) {
        std::cout << "  " << std::left << std::setw(8) << r.row << std::setw(16) << to_string(r.status)
                  << measured_summary(r.measured);
        if (r.edit) std::cout << "  [" << *r.edit << "]";
        if (a.timings) std::cout << "  " << std::fixed << std::setprecision(2) << r.seconds << "s";
        std::cout << "\n";
        if (r.status != RowStatus::Match)
          for (const auto& n : r.notes) std::cout << "            " << n << "\n";
      }
    }
  }
  if (a.timings && s.g().json)
    for (const auto& t : reports)
      for (const auto& r : t.rows) std::cerr << t.table << " " << r.row << " " << r.seconds << "s\n";
  return exit_code(reports);
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::string base;
  std::size_t budget = 16;
  std::uint64_t first_seed = 1;
  std::size_t min_distance = 12;
  std::vector<std::string> targets;
};

int cmd_search(const Session& s, const SearchArgs& a) {
  const BinaryMatrix base = load_base(a.base);
  SearchCriteria criteria;
  criteria.min_distance = a.min_distance;
  for (const auto& t : a.targets) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw Error("target '" + t + "' must look like W64_1:16");
    criteria.targets.push_back({family_from_string(t.substr(0, colon)), std::stoi(t.substr(colon + 1))});
  }
  const auto hits = search_lifts(base, criteria,
                                 {.first_seed = a.first_seed, .budget = a.budget, .threads = s.g().threads});
  const std::string stamp = utc_timestamp();
  Json out = Json::array();
  for (const auto& h : hits) {
    Json prov = {{"kind", "seed"}, {"base", a.base},         {"seed", h.seed},
                 {"rng", std::string(kLiftRng)}, {"hex", h.upper_hex}, {"timestamp", stamp}};
    const auto k = complete_lower(decode_upper(h.upper_hex), base).front().k;
    CodeStoreEntry entry{"search-" + a.base + "-seed" + std::to_string(h.seed), prov, build_gray_generator(k),
                         h.report};
    const auto stored = s.save(entry);
    Json j = prov;
    j["family"] = std::string(to_string(h.report.family));
    j["beta"] = h.report.beta ? Json(*h.report.beta) : Json(nullptr);
    j["a12_pair"] = h.report.a12_pair ? Json(*h.report.a12_pair) : Json(nullptr);
    j["novelty"] = h.report.novelty;
    out.push_back(j);
    if (!s.g().json) {
      std::cout << "seed " << h.seed << "  " << h.upper_hex << "\n";
      print_report(h.report);
      if (stored) std::cout << "stored    " << *stored << "\n";
    }
  }
  if (s.g().json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << hits.size() << " hit(s) in " << a.budget << " seed(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual codes from bicubic planar graphs, R2 lifts and extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--threads", globals.threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", globals.json, "Print JSON instead of text");
  app.add_option("--store", globals.store,
                 "Code store directory (default: $" + std::string(kStoreEnv) + " or ./" +
                     std::string(kDefaultStoreDir) + ")");
  app.add_flag("--no-store", globals.no_store, "Do not write to the code store");

  Graph2CodeArgs g2c;
  auto* c_g2c = app.add_subcommand("graph2code", "Self-dual code of a bicubic planar graph");
  c_g2c->add_option("graph", g2c.graph, "Built-in graph (cube, G1, G2) or graph file")->required();
  c_g2c->add_option("--faces", g2c.faces, "Two 1-based faces of different colors to delete")->expected(2);
  c_g2c->add_option("--name", g2c.name, "Store entry name");

  LiftArgs lift;
  auto* c_lift = app.add_subcommand("lift", "Lift [I8 | A] to R2 and analyze the Gray image");
  c_lift->add_option("base", lift.base, "A1, A2 or an 8x8 matrix file")->required();
  c_lift->add_option("hex", lift.hex, "36-digit upper triangle or a table row name (K1..K5, L1..L15)");
  c_lift->add_flag("--random", lift.random, "Draw a random lift");
  c_lift->add_option("--seed", lift.seed, "Seed for --random");
  c_lift->add_flag("--repair", lift.repair, "Repair a malformed or misprinted string");
  c_lift->add_option("--family", lift.family, "Expected family for --repair (W64_1, W64_2)");
  c_lift->add_option("--beta", lift.beta, "Expected beta for --repair");
  c_lift->add_option("--name", lift.name, "Store entry name");
  c_lift->add_option("--layout", lift.layout, "Gray image layout: standard or swapped-uv");

  std::string analyze_src;
  auto* c_an = app.add_subcommand("analyze", "Analyze a generator matrix");
  c_an->add_option("generator", analyze_src, "Matrix file or store entry name")->required();

  ExtendArgs ext;
  auto* c_ext = app.add_subcommand("extend", "Building-up extension to length n + 2");
  c_ext->add_option("base", ext.base, "Store entry name or table lift name (K1..L15)")->required();
  c_ext->add_option("x", ext.x, "X as bits, optionally ending in 1^{m} or 0^{m}")->required();
  c_ext->add_option("--name", ext.name, "Store entry name");
  c_ext->add_option("--layout", ext.layout, "Gray layout for table lifts (default swapped-uv)");

  ReproduceArgs repro;
  auto* c_rep = app.add_subcommand("reproduce", "Rebuild a published table and compare");
  c_rep->add_option("table", repro.table, "1, 2, 3, equivalence or all")->required();
  c_rep->add_flag("--repair", repro.repair, "Run the repair search on registered errata rows");
  c_rep->add_flag("--timings", repro.timings, "Report per-row runtimes");
  c_rep->add_option("--output", repro.output, "Also write the JSON report to this file");

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Random lift search");
  c_search->add_option("base", search.base, "A1, A2 or an 8x8 matrix file")->required();
  c_search->add_option("--budget", search.budget, "Number of seeds to try");
  c_search->add_option("--first-seed", search.first_seed, "First seed");
  c_search->add_option("--min-distance", search.min_distance, "Required minimum distance");
  c_search->add_option("--target", search.targets, "Accepted FAMILY:BETA, repeatable (e.g. W64_1:16)");

  CLI11_PARSE(app, argc, argv);

  const Session session(globals);
  try {
    if (*c_g2c) return cmd_graph2code(session, g2c);
    if (*c_lift) return cmd_lift(session, lift);
    if (*c_an) return cmd_analyze(session, analyze_src);
    if (*c_ext) return cmd_extend(session, ext);
    if (*c_rep) return cmd_reproduce(session, repro);
    if (*c_search) return cmd_search(session, search);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
