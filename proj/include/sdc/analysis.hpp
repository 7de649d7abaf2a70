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


// Exhaustive weight enumeration and the invariants read off it: minimum
// distance, Type I/II, the extremal weight-enumerator family with its beta
// parameter, and the pair-distance invariant of the minimum-weight words.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc {

struct WeightDistribution {
  std::size_t length = 0;
  /// counts[w] is the number of codewords of weight w, w = 0..length.
  std::vector<std::uint64_t> counts;

  WeightDistribution() = default;
  explicit WeightDistribution(std::size_t n) : length(n), counts(n + 1, 0) {}

  std::uint64_t operator[](std::size_t w) const { return w < counts.size() ? counts[w] : 0; }
  std::uint64_t total() const;
  /// Smallest positive weight present; empty for the zero code.
  std::optional<std::size_t> min_distance() const;
  /// "1+28z^4+198z^8+..."
  std::string to_polynomial() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

struct EnumerationOptions {
  unsigned threads = 1;
  /// The message space is split into 2^split_bits blocks by fixing the top
  /// message bits. 0 lets the enumerator choose from the thread count.
  unsigned split_bits = 0;
  /// Collect every codeword of this weight while enumerating.
  std::optional<std::size_t> collect_weight;
  std::size_t collect_cap = 1'000'000;
};

struct EnumerationResult {
  WeightDistribution distribution;
  /// Sorted; empty when nothing was requested or the cap overflowed.
  std::vector<BitVector> collected;
  bool collect_overflow = false;
};

inline constexpr std::size_t kMaxEnumerationDimension = 33;
inline constexpr std::size_t kMaxOracleDimension = 20;

/// Walks all 2^k codewords in reflected Gray order (one row XOR and a
/// population count per step). Codes containing the all-ones word are walked
/// over a complement of it and each word is counted together with its
/// complement. Throws when k exceeds kMaxEnumerationDimension.
EnumerationResult enumerate_code(const BinaryCode& code, const EnumerationOptions& options = {});

WeightDistribution weight_distribution(const BinaryCode& code, unsigned threads = 1);

/// Message-by-message encoding; the reference the fast walk is tested against.
WeightDistribution naive_distribution_oracle(const BinaryCode& code);

enum class CodeType { I, II };
std::string_view to_string(CodeType t);

/// II iff every weight present is divisible by 4. Throws if an odd weight is
/// present.
CodeType classify_type(const WeightDistribution& dist);

enum class Family { None, W64_1, W64_2, W66_1, W66_2, W66_3 };
std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

struct FamilyMatch {
  Family family = Family::None;
  std::optional<int> beta;
  std::vector<std::string> warnings;
};

/// Extremal singly-even [64,32,12]:
///   W64,1: A12 = 1312 + 16b, A14 = 22016 - 64b
///   W64,2: A12 = 1312 + 16b, A14 = 23040 - 64b
/// Throws when the distribution is not of that shape or fits neither family.
FamilyMatch classify_w64(const WeightDistribution& dist);

/// Extremal [66,33,12]:
///   W66,1: A12 = 858 + 8b, A14 = 18678 - 24b
///   W66,2: A12 = 1690,     A14 = 7990
///   W66,3: A12 = 858 + 8b, A14 = 18166 - 24b
FamilyMatch classify_w66(const WeightDistribution& dist);

/// (A12, A14) implied by a family and beta.
std::pair<std::int64_t, std::int64_t> family_coefficients(Family f, std::optional<int> beta);

/// Unordered pairs of the given words at Hamming distance exactly `distance`.
std::uint64_t count_pairs_at_distance(std::span<const BitVector> words, std::size_t distance);

/// Pairs of weight-12 codewords at distance 12. Throws if d != 12 or the
/// number of weight-12 words exceeds `cap`.
std::uint64_t pair_invariant_A12(const BinaryCode& code, unsigned threads = 1,
                                 std::size_t cap = 1'000'000);

/// True iff (family, beta) is absent from the registry of previously known
/// extremal weight enumerators.
bool novelty_check(Family family, std::optional<int> beta);
/// The registry's known beta values for a family.
std::vector<int> known_betas(Family family);

struct EnumeratorReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  /// Empty when the code is not self-dual.
  std::optional<CodeType> type;
  Family family = Family::None;
  std::optional<int> beta;
  std::optional<std::uint64_t> a12_pair;
  bool novelty = false;
  WeightDistribution distribution;
  std::vector<std::string> warnings;

  friend bool operator==(const EnumeratorReport&, const EnumeratorReport&) = default;
};

struct AnalysisOptions {
  unsigned threads = 1;
  unsigned split_bits = 0;
  bool pair_invariant = true;
  std::size_t pair_cap = 1'000'000;
};

/// Full analysis in one enumeration pass.
EnumeratorReport analyze(const BinaryCode& code, const AnalysisOptions& options = {});

/// Cheap rejection test: looks for a nonzero codeword of weight below `bound`
/// among combinations of at most `max_rows` rows of a systematic generator.
/// A true result is a proof that d < bound; false proves nothing.
bool has_light_word(const BinaryCode& code, std::size_t bound, std::size_t max_rows);

}  // namespace sdc
