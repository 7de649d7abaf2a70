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


#include "sdc/lift.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "sdc/extension.hpp"

namespace sdc {

namespace {

void require_order(const BinaryMatrix& a) {
  if (a.rows() != kLiftOrder || a.cols() != kLiftOrder)
    throw Error("lift base must be 8x8, got " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()));
}

void require_self_dual_base(const BinaryMatrix& a) {
  if (a.rows() != a.cols()) throw Error("base matrix A must be square");
  if (!is_self_dual(BinaryCode(systematic_generator(a))))
    throw Error("[I | A] does not generate a self-dual code");
}

bool invertible(BinaryMatrix m) { return rank(m) == m.rows(); }

// One row's system: unknown t is bit (1 + t % 3) of entry K(k, t / 3);
// equation e is component (1 + e % 3) of <row e / 3, row k>.
struct RowSystem {
  std::size_t unknowns = 0;
  std::vector<std::uint32_t> rows;  // coefficient bits, rhs in bit `unknowns`
};

R2 with_bit(R2 e, std::size_t bit, bool value) {
  std::uint8_t nib = e.nibble();
  if (value)
    nib |= static_cast<std::uint8_t>(1u << bit);
  else
    nib &= static_cast<std::uint8_t>(~(1u << bit));
  return R2::from_nibble(nib);
}

// Non-unit components (u, v, uv) of <row_i, row_k> for i < k, packed 3 per i.
std::uint32_t residual(const R2Matrix& k, std::size_t row) {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < row; ++i) {
    const R2 p = inner_product(k.row(i), k.row(row));
    r |= static_cast<std::uint32_t>(p.nibble() >> 1) << (3 * i);
  }
  return r;
}

RowSystem build_system(R2Matrix& k, std::size_t row) {
  RowSystem sys;
  sys.unknowns = 3 * row;
  for (std::size_t j = 0; j < row; ++j)
    for (std::size_t bit = 1; bit < 4; ++bit) k(row, j) = with_bit(k(row, j), bit, false);
  const std::uint32_t constant = residual(k, row);
  std::vector<std::uint32_t> columns(sys.unknowns);
  for (std::size_t t = 0; t < sys.unknowns; ++t) {
    R2& e = k(row, t / 3);
    e = with_bit(e, 1 + t % 3, true);
    columns[t] = residual(k, row) ^ constant;
    e = with_bit(e, 1 + t % 3, false);
  }
  sys.rows.assign(sys.unknowns, 0);
  for (std::size_t eq = 0; eq < sys.unknowns; ++eq) {
    for (std::size_t t = 0; t < sys.unknowns; ++t)
      if ((columns[t] >> eq) & 1u) sys.rows[eq] |= 1u << t;
    if ((constant >> eq) & 1u) sys.rows[eq] |= 1u << sys.unknowns;
  }
  return sys;
}

// Affine solution set of a GF(2) system: particular solution plus a null basis.
struct AffineSolutions {
  std::uint32_t particular = 0;
  std::vector<std::uint32_t> null_basis;
};

std::optional<AffineSolutions> solve(RowSystem sys) {
  const std::size_t n = sys.unknowns;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < sys.rows.size(); ++c) {
    std::size_t p = r;
    while (p < sys.rows.size() && !((sys.rows[p] >> c) & 1u)) ++p;
    if (p == sys.rows.size()) continue;
    std::swap(sys.rows[r], sys.rows[p]);
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
      if (i != r && ((sys.rows[i] >> c) & 1u)) sys.rows[i] ^= sys.rows[r];
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < sys.rows.size(); ++i)
    if ((sys.rows[i] >> n) & 1u) return std::nullopt;

  AffineSolutions sol;
  for (std::size_t i = 0; i < r; ++i)
    if ((sys.rows[i] >> n) & 1u) sol.particular |= 1u << pivot_col[i];
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    std::uint32_t v = 1u << c;
    for (std::size_t i = 0; i < r; ++i)
      if ((sys.rows[i] >> c) & 1u) v |= 1u << pivot_col[i];
    sol.null_basis.push_back(v);
  }
  return sol;
}

void apply_solution(R2Matrix& k, std::size_t row, std::uint32_t bits) {
  for (std::size_t t = 0; t < 3 * row; ++t)
    k(row, t / 3) = with_bit(k(row, t / 3), 1 + t % 3, (bits >> t) & 1u);
}

// All completions, or the first inconsistent row.
struct CompletionOutcome {
  std::vector<R2Matrix> completions;
  std::optional<std::size_t> failed_row;
};

CompletionOutcome try_complete(const R2Matrix& upper, const BinaryMatrix& a) {
  R2Matrix start = upper;
  for (std::size_t i = 0; i < kLiftOrder; ++i)
    for (std::size_t j = 0; j < i; ++j) start(i, j) = a(i, j) ? r2::kOne : r2::kZero;

  std::vector<R2Matrix> partial{start};
  for (std::size_t row = 1; row < kLiftOrder; ++row) {
    std::vector<R2Matrix> next;
    for (auto& k : partial) {
      const auto sol = solve(build_system(k, row));
      if (!sol) continue;
      const std::size_t nullity = sol->null_basis.size();
      if (nullity > 16 || next.size() + (std::size_t{1} << nullity) > kMaxCompletions)
        throw Error("more than " + std::to_string(kMaxCompletions) + " completions");
      for (std::uint32_t m = 0; m < (1u << nullity); ++m) {
        std::uint32_t bits = sol->particular;
        for (std::size_t b = 0; b < nullity; ++b)
          if ((m >> b) & 1u) bits ^= sol->null_basis[b];
        R2Matrix completed = k;
        apply_solution(completed, row, bits);
        next.push_back(std::move(completed));
      }
    }
    if (next.empty()) return {{}, row};
    partial = std::move(next);
  }
  return {std::move(partial), std::nullopt};
}

void check_projection(const R2Matrix& upper, const BinaryMatrix& a) {
  for (std::size_t i = 0; i < kLiftOrder; ++i)
    for (std::size_t j = i; j < kLiftOrder; ++j)
      if (upper(i, j).a() != a(i, j))
        throw Error("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                    upper(i, j).to_hex() + " does not project onto A(" + std::to_string(i + 1) +
                    "," + std::to_string(j + 1) + ") = " + (a(i, j) ? "1" : "0"));
}

bool projects_onto(const R2Matrix& upper, const BinaryMatrix& a) {
  for (std::size_t i = 0; i < kLiftOrder; ++i)
    for (std::size_t j = i; j < kLiftOrder; ++j)
      if (upper(i, j).a() != a(i, j)) return false;
  return true;
}

}  // namespace

bool is_lrm(const BinaryMatrix& a) {
  require_self_dual_base(a);
  for (std::size_t s = 1; s <= a.rows(); ++s)
    if (!invertible(a.block(0, 0, s, s))) return false;
  return true;
}

R2Matrix decode_upper(std::string_view hex) {
  if (hex.size() != kUpperDigits) throw HexLengthError(hex.size(), kUpperDigits);
  R2Matrix k(kLiftOrder, kLiftOrder);
  std::size_t p = 0;
  for (std::size_t i = 0; i < kLiftOrder; ++i)
    for (std::size_t j = i; j < kLiftOrder; ++j) k(i, j) = R2::from_hex(hex[p++]);
  return k;
}

std::string encode_upper(const R2Matrix& k) {
  std::string s;
  s.reserve(kUpperDigits);
  for (std::size_t i = 0; i < kLiftOrder; ++i)
    for (std::size_t j = i; j < kLiftOrder; ++j) s += k(i, j).to_hex();
  return s;
}

std::vector<LiftCandidate> complete_lower(const R2Matrix& upper, const BinaryMatrix& a) {
  require_order(a);
  require_self_dual_base(a);
  check_projection(upper, a);
  auto outcome = try_complete(upper, a);
  if (outcome.failed_row) throw CompletionError(*outcome.failed_row);
  std::vector<LiftCandidate> out;
  out.reserve(outcome.completions.size());
  for (auto& k : outcome.completions) {
    if (!is_self_dual_r2(k) || k.projection() != a)
      throw Error("internal: completion violates K K^T = I or pi(K) = A");
    out.push_back({a, std::move(k)});
  }
  return out;
}

RandomLift random_lift(const BinaryMatrix& a, std::uint64_t seed, std::size_t max_attempts) {
  require_order(a);
  require_self_dual_base(a);
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    R2Matrix upper(kLiftOrder, kLiftOrder);
    for (std::size_t i = 0; i < kLiftOrder; ++i)
      for (std::size_t j = i; j < kLiftOrder; ++j) {
        const auto free_bits = static_cast<std::uint8_t>(rng() & 0x7);
        upper(i, j) = R2::from_nibble(static_cast<std::uint8_t>((free_bits << 1) | a(i, j)));
      }
    auto outcome = try_complete(upper, a);
    if (outcome.failed_row) continue;
    RandomLift lift;
    lift.candidate = {a, std::move(outcome.completions.front())};
    lift.seed = seed;
    lift.attempts = attempt;
    lift.upper_hex = encode_upper(upper);
    return lift;
  }
  throw Error("random lift: no completion within " + std::to_string(max_attempts) + " attempts");
}

namespace {

bool meets(const EnumeratorReport& r, const SearchCriteria& c) {
  if (!r.d || *r.d < c.min_distance) return false;
  if (c.targets.empty()) return true;
  return std::any_of(c.targets.begin(), c.targets.end(), [&](const FamilyTarget& t) {
    return r.family == t.family && r.beta == std::optional<int>{t.beta};
  });
}

// Parallel map over [0, count) with results kept in index order.
template <typename T, typename F>
std::vector<T> ordered_map(std::size_t count, unsigned threads, F&& fn) {
  std::vector<T> out(count);
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
      });
  }
  return out;
}

// Analysis of a lift's Gray image, skipping the full walk when a light word
// already rules out the required minimum distance.
std::optional<EnumeratorReport> screen_and_analyze(const R2Matrix& k, std::size_t min_distance) {
  const BinaryCode code = gray_image(k);
  if (min_distance > 1 && has_light_word(code, min_distance, 4)) return std::nullopt;
  return analyze(code);
}

}  // namespace

std::vector<Discovery> search_lifts(const BinaryMatrix& a, const SearchCriteria& criteria,
                                    const SearchOptions& options) {
  require_order(a);
  require_self_dual_base(a);
  auto hits = ordered_map<std::optional<Discovery>>(
      options.budget, options.threads, [&](std::size_t i) -> std::optional<Discovery> {
        const std::uint64_t seed = options.first_seed + i;
        const RandomLift lift = random_lift(a, seed);
        auto report = screen_and_analyze(lift.candidate.k, criteria.min_distance);
        if (!report || !meets(*report, criteria)) return std::nullopt;
        return Discovery{seed, lift.upper_hex, std::move(*report)};
      });

  std::vector<Discovery> out;
  std::set<std::pair<std::vector<std::uint64_t>, std::uint64_t>> seen;
  for (auto& hit : hits) {
    if (!hit) continue;
    const auto key = std::make_pair(hit->report.distribution.counts, hit->report.a12_pair.value_or(0));
    if (!seen.insert(key).second) continue;
    // re-verify from the recorded hex
    const auto completions = complete_lower(decode_upper(hit->upper_hex), a);
    const EnumeratorReport again = analyze(gray_image(completions.front().k));
    if (again != hit->report || !meets(again, criteria))
      throw Error("internal: search hit for seed " + std::to_string(hit->seed) +
                  " did not re-verify");
    out.push_back(std::move(*hit));
  }
  return out;
}

namespace {

std::vector<RepairCandidate> evaluate_edits(const std::map<std::string, std::string>& edits,
                                            const BinaryMatrix& a, const FamilyTarget& expected,
                                            unsigned threads) {
  std::vector<std::pair<std::string, R2Matrix>> viable;
  for (const auto& [s, edit] : edits) {
    R2Matrix upper = decode_upper(s);
    if (!projects_onto(upper, a)) continue;
    auto outcome = try_complete(upper, a);
    for (auto& k : outcome.completions) viable.emplace_back(s, std::move(k));
  }

  auto reports = ordered_map<std::optional<EnumeratorReport>>(
      viable.size(), threads, [&](std::size_t i) { return screen_and_analyze(viable[i].second, 12); });

  std::vector<RepairCandidate> out;
  for (std::size_t i = 0; i < viable.size(); ++i) {
    const auto& r = reports[i];
    if (!r || r->family != expected.family || r->beta != std::optional<int>{expected.beta}) continue;
    out.push_back({viable[i].first, edits.at(viable[i].first), *r});
  }
  return out;
}

constexpr std::string_view kHexDigits = "0123456789ABCDEF";

}  // namespace

std::vector<RepairCandidate> repair_hex(std::string_view hex, const BinaryMatrix& a,
                                        const FamilyTarget& expected, unsigned threads) {
  require_order(a);
  require_self_dual_base(a);
  if (hex.size() != kUpperDigits - 1 && hex.size() != kUpperDigits + 1)
    throw Error("repair applies to strings of 35 or 37 digits, got " + std::to_string(hex.size()));

  // candidate string -> first edit producing it
  std::map<std::string, std::string> edits;
  if (hex.size() == kUpperDigits - 1) {
    for (std::size_t p = 0; p <= hex.size(); ++p)
      for (char digit : kHexDigits) {
        std::string s(hex);
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(p), digit);
        edits.emplace(s, std::string("insert ") + digit + " at position " + std::to_string(p + 1));
      }
  } else {
    for (std::size_t p = 0; p < hex.size(); ++p) {
      std::string s(hex);
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(p));
      edits.emplace(s, std::string("delete ") + hex[p] + " at position " + std::to_string(p + 1));
    }
  }
  return evaluate_edits(edits, a, expected, threads);
}

std::vector<RepairCandidate> repair_substitution(std::string_view hex, const BinaryMatrix& a,
                                                 const FamilyTarget& expected, unsigned threads) {
  require_order(a);
  require_self_dual_base(a);
  if (hex.size() != kUpperDigits)
    throw HexLengthError(hex.size(), kUpperDigits);
  std::map<std::string, std::string> edits;
  for (std::size_t p = 0; p < hex.size(); ++p)
    for (char digit : kHexDigits) {
      if (digit == std::toupper(static_cast<unsigned char>(hex[p]))) continue;
      std::string s(hex);
      s[p] = digit;
      edits.emplace(s, std::string("replace ") + hex[p] + " by " + digit + " at position " +
                           std::to_string(p + 1));
    }
  return evaluate_edits(edits, a, expected, threads);
}

}  // namespace sdc
