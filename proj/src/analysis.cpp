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


#include "sdc/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "sdc/error.hpp"

namespace sdc {

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::optional<std::size_t> WeightDistribution::min_distance() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w]) return w;
  return std::nullopt;
}

std::string WeightDistribution::to_polynomial() const {
  std::string s;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (!counts[w]) continue;
    if (!s.empty()) s += '+';
    if (w == 0) {
      s += std::to_string(counts[w]);
      continue;
    }
    if (counts[w] != 1) s += std::to_string(counts[w]);
    s += "z^" + std::to_string(w);
  }
  return s;
}

namespace {

constexpr std::size_t kTableBits = 8;

// Rows of the walk, stored as plain words.
template <std::size_t W>
using Word = std::array<std::uint64_t, W>;

template <std::size_t W>
Word<W> to_word(const BitVector& v) {
  Word<W> w{};
  for (std::size_t i = 0; i < W; ++i) w[i] = v.word(i);
  return w;
}

template <std::size_t W>
BitVector from_word(const Word<W>& w, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, (w[i >> 6] >> (i & 63)) & 1u);
  return v;
}

template <std::size_t W>
void xor_into(Word<W>& a, const Word<W>& b) {
  for (std::size_t i = 0; i < W; ++i) a[i] ^= b[i];
}

// The walk's input after peeling off the all-ones word when the code has it.
struct WalkPlan {
  std::size_t n = 0;
  std::vector<BitVector> rows;
  bool with_complements = false;
};

WalkPlan plan_walk(const BinaryCode& code) {
  WalkPlan plan;
  plan.n = code.length();
  const auto& g = code.generator();
  if (plan.n == 0 || g.rows() == 0) {
    for (std::size_t i = 0; i < g.rows(); ++i) plan.rows.push_back(g.row(i));
    return plan;
  }
  const BitVector ones = BitVector::ones(plan.n);
  if (!code.contains(ones)) {
    for (std::size_t i = 0; i < g.rows(); ++i) plan.rows.push_back(g.row(i));
    return plan;
  }
  // Clear coordinate 0 from every row with the all-ones word; the cleared
  // rows span a complement of <ones> inside the code.
  BinaryMatrix cleared(0, plan.n);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    BitVector r = g.row(i);
    if (r.get(0)) r ^= ones;
    cleared.append_row(r);
  }
  const BinaryCode rest = BinaryCode::spanned_by(cleared);
  for (std::size_t i = 0; i < rest.dimension(); ++i) plan.rows.push_back(rest.generator().row(i));
  plan.with_complements = true;
  return plan;
}

template <std::size_t W>
struct BlockResult {
  std::vector<std::uint64_t> hist;
  std::vector<Word<W>> collected;
  bool overflow = false;
};

template <std::size_t W, bool Collect>
class Walker {
 public:
  Walker(const WalkPlan& plan, const EnumerationOptions& options)
      : n_(plan.n), complements_(plan.with_complements), cap_(options.collect_cap) {
    if (options.collect_weight) target_ = *options.collect_weight;
    const std::size_t m = plan.rows.size();
    const std::size_t low = std::min(m, kTableBits);
    table_size_ = std::size_t{1} << low;
    for (std::size_t w = 0; w < W; ++w) table_[w].assign(table_size_, 0);
    // table entry j is the XOR of the low rows selected by the bits of j
    for (std::size_t j = 1; j < table_size_; ++j) {
      const std::size_t bit = static_cast<std::size_t>(std::countr_zero(j));
      const Word<W> r = to_word<W>(plan.rows[bit]);
      for (std::size_t w = 0; w < W; ++w) table_[w][j] = table_[w][j & (j - 1)] ^ r[w];
    }
    for (std::size_t i = low; i < m; ++i) high_.push_back(to_word<W>(plan.rows[i]));
    if (complements_) {
      ones_ = to_word<W>(BitVector::ones(n_));
    }
  }

  std::size_t high_rows() const { return high_.size(); }

  // Block `block` of 2^split: the top `split` high rows are fixed to the bits
  // of `block`, the remaining high rows are walked in Gray order.
  BlockResult<W> run_block(std::size_t block, std::size_t split) const {
    BlockResult<W> out;
    out.hist.assign(n_ + 1, 0);
    const std::size_t free_rows = high_.size() - split;
    Word<W> base{};
    for (std::size_t i = 0; i < split; ++i)
      if ((block >> i) & 1u) xor_into(base, high_[free_rows + i]);

    // four sub-histograms break the store-to-load chain on repeated weights
    std::array<std::array<std::uint32_t, 132>, 4> sub{};
    std::array<std::uint8_t, std::size_t{1} << kTableBits> cnt{};
    std::uint64_t pending = 0;
    const std::uint64_t steps = std::uint64_t{1} << free_rows;
    for (std::uint64_t step = 0;; ) {
      count_row(base, cnt);
      std::size_t j = 0;
      for (; j + 4 <= table_size_; j += 4) {
        ++sub[0][cnt[j]];
        ++sub[1][cnt[j + 1]];
        ++sub[2][cnt[j + 2]];
        ++sub[3][cnt[j + 3]];
      }
      for (; j < table_size_; ++j) ++sub[0][cnt[j]];
      if constexpr (Collect) collect(base, cnt, out);
      pending += table_size_;
      // 2^32 guards the 32-bit sub-histogram counters
      if (pending >= (std::uint64_t{1} << 31)) {
        flush(sub, out.hist);
        pending = 0;
      }
      if (++step == steps) break;
      xor_into(base, high_[static_cast<std::size_t>(std::countr_zero(step))]);
    }
    flush(sub, out.hist);
    return out;
  }

 private:
  void count_row(const Word<W>& base, std::array<std::uint8_t, 256>& cnt) const {
    if constexpr (W == 1) {
      const std::uint64_t b0 = base[0];
      const std::uint64_t* t0 = table_[0].data();
      for (std::size_t j = 0; j < table_size_; ++j)
        cnt[j] = static_cast<std::uint8_t>(std::popcount(b0 ^ t0[j]));
    } else {
      const std::uint64_t b0 = base[0], b1 = base[1];
      const std::uint64_t* t0 = table_[0].data();
      const std::uint64_t* t1 = table_[1].data();
      for (std::size_t j = 0; j < table_size_; ++j)
        cnt[j] = static_cast<std::uint8_t>(std::popcount(b0 ^ t0[j]) + std::popcount(b1 ^ t1[j]));
    }
  }

  void collect(const Word<W>& base, const std::array<std::uint8_t, 256>& cnt,
               BlockResult<W>& out) const {
    // target weights are rare; a branch-free scan rules most rows out
    const auto t1 = static_cast<std::uint8_t>(target_);
    const auto t2 = static_cast<std::uint8_t>(complements_ ? n_ - target_ : target_);
    std::uint8_t any = 0;
    for (std::size_t j = 0; j < table_size_; ++j) any |= (cnt[j] == t1) | (cnt[j] == t2);
    if (!any) return;
    for (std::size_t j = 0; j < table_size_; ++j) {
      const std::size_t w = cnt[j];
      const bool direct = w == target_;
      const bool complement = complements_ && n_ - w == target_;
      if (!direct && !complement) continue;
      if (out.overflow) continue;
      Word<W> word = base;
      for (std::size_t i = 0; i < W; ++i) word[i] ^= table_[i][j];
      if (direct) push(word, out);
      if (complement) {
        Word<W> c = word;
        xor_into(c, ones_);
        push(c, out);
      }
    }
  }

  void push(const Word<W>& word, BlockResult<W>& out) const {
    if (out.overflow) return;
    if (out.collected.size() >= cap_) {
      out.overflow = true;
      out.collected.clear();
      return;
    }
    out.collected.push_back(word);
  }

  void flush(std::array<std::array<std::uint32_t, 132>, 4>& sub,
             std::vector<std::uint64_t>& hist) const {
    for (std::size_t w = 0; w <= n_; ++w) {
      const std::uint64_t c = std::uint64_t{sub[0][w]} + sub[1][w] + sub[2][w] + sub[3][w];
      if (!c) continue;
      hist[w] += c;
      if (complements_) hist[n_ - w] += c;
    }
    for (auto& s : sub) s.fill(0);
  }

  std::size_t n_;
  bool complements_;
  std::size_t cap_;
  std::size_t target_ = ~std::size_t{0};
  std::size_t table_size_ = 1;
  std::array<std::vector<std::uint64_t>, W> table_;
  std::vector<Word<W>> high_;
  Word<W> ones_{};
};

unsigned choose_split(unsigned threads, unsigned requested, std::size_t high_rows) {
  unsigned split = requested;
  if (split == 0 && threads > 1) split = static_cast<unsigned>(std::bit_width(threads - 1)) + 3;
  return static_cast<unsigned>(std::min<std::size_t>(split, high_rows));
}

template <std::size_t W, bool Collect>
EnumerationResult run_walk(const WalkPlan& plan, const EnumerationOptions& options) {
  const Walker<W, Collect> walker(plan, options);
  const unsigned split = choose_split(options.threads, options.split_bits, walker.high_rows());
  const std::size_t blocks = std::size_t{1} << split;
  std::vector<BlockResult<W>> results(blocks);

  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, options.threads), blocks));
  if (nthreads == 1) {
    for (std::size_t b = 0; b < blocks; ++b) results[b] = walker.run_block(b, split);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < blocks; b = next++) results[b] = walker.run_block(b, split);
      });
  }

  // merge in block order
  EnumerationResult out;
  out.distribution = WeightDistribution(plan.n);
  for (auto& r : results) {
    for (std::size_t w = 0; w <= plan.n; ++w) out.distribution.counts[w] += r.hist[w];
    if constexpr (Collect) {
      if (r.overflow) out.collect_overflow = true;
      if (!out.collect_overflow)
        for (const auto& word : r.collected) out.collected.push_back(from_word<W>(word, plan.n));
      if (out.collected.size() > options.collect_cap) out.collect_overflow = true;
    }
  }
  if (out.collect_overflow)
    out.collected.clear();
  else
    std::sort(out.collected.begin(), out.collected.end());
  if constexpr (Collect) {
    if (!out.collect_overflow && out.collected.size() != out.distribution[*options.collect_weight])
      throw Error("internal: collected " + std::to_string(out.collected.size()) +
                  " words of weight " + std::to_string(*options.collect_weight) + ", counted " +
                  std::to_string(out.distribution[*options.collect_weight]));
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_code(const BinaryCode& code, const EnumerationOptions& options) {
  if (code.dimension() > kMaxEnumerationDimension)
    throw Error("exhaustive enumeration is limited to dimension " +
                std::to_string(kMaxEnumerationDimension) + ", got " +
                std::to_string(code.dimension()));
  const WalkPlan plan = plan_walk(code);
  const bool collect = options.collect_weight.has_value();
  if (plan.n <= 64)
    return collect ? run_walk<1, true>(plan, options) : run_walk<1, false>(plan, options);
  return collect ? run_walk<2, true>(plan, options) : run_walk<2, false>(plan, options);
}

WeightDistribution weight_distribution(const BinaryCode& code, unsigned threads) {
  EnumerationOptions options;
  options.threads = threads;
  return enumerate_code(code, options).distribution;
}

WeightDistribution naive_distribution_oracle(const BinaryCode& code) {
  const std::size_t k = code.dimension();
  if (k > kMaxOracleDimension)
    throw Error("naive enumeration is limited to dimension " +
                std::to_string(kMaxOracleDimension));
  WeightDistribution dist(code.length());
  const auto& g = code.generator();
  for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
    BitVector word(code.length());
    for (std::size_t i = 0; i < k; ++i)
      if ((msg >> i) & 1u) word ^= g.row(i);
    ++dist.counts[word.weight()];
  }
  return dist;
}

std::string_view to_string(CodeType t) { return t == CodeType::I ? "I" : "II"; }

CodeType classify_type(const WeightDistribution& dist) {
  bool doubly_even = true;
  for (std::size_t w = 0; w < dist.counts.size(); ++w) {
    if (!dist.counts[w]) continue;
    if (w % 2) throw Error("odd weight " + std::to_string(w) + " present; code is not self-dual");
    if (w % 4) doubly_even = false;
  }
  return doubly_even ? CodeType::II : CodeType::I;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::W64_1: return "W64_1";
    case Family::W64_2: return "W64_2";
    case Family::W66_1: return "W66_1";
    case Family::W66_2: return "W66_2";
    case Family::W66_3: return "W66_3";
    case Family::None: break;
  }
  return "none";
}

Family family_from_string(std::string_view s) {
  for (Family f : {Family::W64_1, Family::W64_2, Family::W66_1, Family::W66_2, Family::W66_3})
    if (to_string(f) == s) return f;
  if (s == "none") return Family::None;
  throw Error("unknown weight-enumerator family '" + std::string(s) + "'");
}

namespace {

struct FamilyShape {
  Family family;
  std::int64_t a12_base, a12_step, a14_base, a14_step;
  int beta_min, beta_max;
};

constexpr FamilyShape kShapes[] = {
    {Family::W64_1, 1312, 16, 22016, -64, 14, 284},
    {Family::W64_2, 1312, 16, 23040, -64, 0, 277},
    {Family::W66_1, 858, 8, 18678, -24, 0, 778},
    {Family::W66_3, 858, 8, 18166, -24, 14, 756},
};

const FamilyShape& shape_of(Family f) {
  for (const auto& s : kShapes)
    if (s.family == f) return s;
  throw Error("family " + std::string(to_string(f)) + " has no beta parameter");
}

void require_shape(const WeightDistribution& dist, std::size_t n, std::size_t k) {
  if (dist.length != n) throw Error("distribution has length " + std::to_string(dist.length));
  if (dist.total() != (std::uint64_t{1} << k))
    throw Error("distribution does not count 2^" + std::to_string(k) + " codewords");
  if (dist.min_distance() != std::optional<std::size_t>{12})
    throw Error("minimum distance is not 12");
}

FamilyMatch match_beta_families(const WeightDistribution& dist, Family first, Family second) {
  const auto a12 = static_cast<std::int64_t>(dist[12]);
  const auto a14 = static_cast<std::int64_t>(dist[14]);
  for (Family f : {first, second}) {
    const FamilyShape& s = shape_of(f);
    const std::int64_t excess = a12 - s.a12_base;
    if (excess < 0 || excess % s.a12_step != 0)
      throw Error("A12 = " + std::to_string(a12) + " gives a non-integral or negative beta");
    const auto beta = static_cast<int>(excess / s.a12_step);
    if (a14 != s.a14_base + s.a14_step * beta) continue;
    FamilyMatch m{f, beta, {}};
    if (beta < s.beta_min || beta > s.beta_max)
      m.warnings.push_back("beta = " + std::to_string(beta) + " outside the admissible range " +
                           std::to_string(s.beta_min) + ".." + std::to_string(s.beta_max) +
                           " of " + std::string(to_string(f)));
    return m;
  }
  throw Error("A14 = " + std::to_string(a14) + " matches neither " +
              std::string(to_string(first)) + " nor " + std::string(to_string(second)));
}

}  // namespace

FamilyMatch classify_w64(const WeightDistribution& dist) {
  require_shape(dist, 64, 32);
  if (classify_type(dist) != CodeType::I) throw Error("W64 families describe Type I codes");
  return match_beta_families(dist, Family::W64_1, Family::W64_2);
}

FamilyMatch classify_w66(const WeightDistribution& dist) {
  require_shape(dist, 66, 33);
  if (dist[12] == 1690 && dist[14] == 7990) return {Family::W66_2, std::nullopt, {}};
  return match_beta_families(dist, Family::W66_1, Family::W66_3);
}

std::pair<std::int64_t, std::int64_t> family_coefficients(Family f, std::optional<int> beta) {
  if (f == Family::W66_2) return {1690, 7990};
  if (!beta) throw Error("family " + std::string(to_string(f)) + " requires beta");
  const FamilyShape& s = shape_of(f);
  return {s.a12_base + s.a12_step * *beta, s.a14_base + s.a14_step * *beta};
}

std::uint64_t count_pairs_at_distance(std::span<const BitVector> words, std::size_t distance) {
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if ((words[i] ^ words[j]).weight() == distance) ++pairs;
  return pairs;
}

std::uint64_t pair_invariant_A12(const BinaryCode& code, unsigned threads, std::size_t cap) {
  EnumerationOptions options;
  options.threads = threads;
  options.collect_weight = 12;
  options.collect_cap = cap;
  const auto result = enumerate_code(code, options);
  if (result.distribution.min_distance() != std::optional<std::size_t>{12})
    throw Error("pair invariant A12 requires minimum distance 12");
  if (result.collect_overflow)
    throw Error("more than " + std::to_string(cap) + " weight-12 codewords");
  return count_pairs_at_distance(result.collected, 12);
}

EnumeratorReport analyze(const BinaryCode& code, const AnalysisOptions& options) {
  EnumerationOptions eo;
  eo.threads = options.threads;
  eo.split_bits = options.split_bits;
  eo.collect_cap = options.pair_cap;
  if (options.pair_invariant) eo.collect_weight = 12;
  const auto result = enumerate_code(code, eo);

  EnumeratorReport r;
  r.n = code.length();
  r.k = code.dimension();
  r.distribution = result.distribution;
  r.d = result.distribution.min_distance();
  if (is_self_dual(code)) r.type = classify_type(result.distribution);

  if (r.type && r.d == std::optional<std::size_t>{12}) {
    try {
      std::optional<FamilyMatch> m;
      if (r.n == 64 && *r.type == CodeType::I) m = classify_w64(r.distribution);
      if (r.n == 66) m = classify_w66(r.distribution);
      if (m) {
        r.family = m->family;
        r.beta = m->beta;
        r.warnings = m->warnings;
        r.novelty = novelty_check(r.family, r.beta);
      }
    } catch (const Error& e) {
      r.warnings.push_back(e.what());
    }
  }
  if (options.pair_invariant && r.d == std::optional<std::size_t>{12}) {
    if (result.collect_overflow)
      r.warnings.push_back("too many weight-12 words for the pair invariant");
    else
      r.a12_pair = count_pairs_at_distance(result.collected, 12);
  }
  return r;
}

bool has_light_word(const BinaryCode& code, std::size_t bound, std::size_t max_rows) {
  const StandardForm sf = standard_form(code.generator());
  const auto& g = sf.matrix;
  const std::size_t k = g.rows();
  // depth-first over row subsets of size <= max_rows
  BitVector acc(g.cols());
  auto recurse = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
    for (std::size_t i = start; i < k; ++i) {
      acc ^= g.row(i);
      if (acc.weight() < bound) return true;
      if (depth + 1 < max_rows && self(self, i + 1, depth + 1)) return true;
      acc ^= g.row(i);
    }
    return false;
  };
  return recurse(recurse, 0, 0);
}

}  // namespace sdc
