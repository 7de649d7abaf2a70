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


// Lifts of a binary self-dual code [I8 | A] to R2: the lift-ready check, the
// 36-digit upper-triangle hex codec, completion of the lower triangle from the
// orthogonality relations, seeded random lifts, lift search, and repair of
// table strings with a missing or extra digit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/analysis.hpp"
#include "sdc/error.hpp"
#include "sdc/gf2.hpp"
#include "sdc/r2.hpp"

namespace sdc {

inline constexpr std::size_t kLiftOrder = 8;
inline constexpr std::size_t kUpperDigits = kLiftOrder * (kLiftOrder + 1) / 2;
inline constexpr std::size_t kMaxCompletions = std::size_t{1} << 16;

/// Raised when the orthogonality system for some row has no solution.
class CompletionError : public Error {
 public:
  explicit CompletionError(std::size_t row)
      : Error("no completion: orthogonality system for row " + std::to_string(row + 1) +
              " is inconsistent"),
        row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// A lift K of the base A: pi(K) = A and K K^T = I.
struct LiftCandidate {
  BinaryMatrix base;
  R2Matrix k;
};

/// True iff every leading principal submatrix of A is invertible over GF(2).
/// Throws if [I | A] does not generate a self-dual code.
bool is_lrm(const BinaryMatrix& a);

/// Row-wise upper triangle (row 1: 8 digits, row 2: 7 digits, ...). Entries
/// below the diagonal are left zero. Throws HexLengthError on a wrong length.
R2Matrix decode_upper(std::string_view hex);
std::string encode_upper(const R2Matrix& k);

/// Completes the strictly lower triangle. Base bits come from A; the u, v and
/// uv bits of row k are solved from <row_i, row_k> = 0 for i < k, rows in
/// ascending order. Returns every solution (at most kMaxCompletions).
/// Throws CompletionError when a row's system is inconsistent, Error when the
/// given upper entries do not project onto A.
std::vector<LiftCandidate> complete_lower(const R2Matrix& upper, const BinaryMatrix& a);

/// Seeded random lift: random u, v, uv bits on the upper triangle, then
/// completion; retried with fresh triangles until one completes.
struct RandomLift {
  LiftCandidate candidate;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  std::string upper_hex;
};

/// Name of the pseudo-random generator behind random_lift.
inline constexpr std::string_view kLiftRng = "std::mt19937_64";

RandomLift random_lift(const BinaryMatrix& a, std::uint64_t seed, std::size_t max_attempts = 1000);

struct FamilyTarget {
  Family family = Family::None;
  int beta = 0;
  friend bool operator==(const FamilyTarget&, const FamilyTarget&) = default;
};

struct SearchCriteria {
  std::size_t min_distance = 12;
  /// Empty accepts any family.
  std::vector<FamilyTarget> targets;
};

struct Discovery {
  std::uint64_t seed = 0;
  std::string upper_hex;
  EnumeratorReport report;
};

struct SearchOptions {
  std::uint64_t first_seed = 1;
  std::size_t budget = 16;
  unsigned threads = 1;
};

/// Tries seeds first_seed .. first_seed + budget - 1. Hits are deduplicated by
/// (weight distribution, A12 invariant) and re-verified from their hex string.
std::vector<Discovery> search_lifts(const BinaryMatrix& a, const SearchCriteria& criteria,
                                    const SearchOptions& options = {});

struct RepairCandidate {
  std::string upper_hex;
  /// "insert X at position p", "delete X at position p" or
  /// "replace X by Y at position p" (1-based).
  std::string edit;
  EnumeratorReport report;
};

/// For a 35-digit string tries every insertion, for a 37-digit string every
/// deletion, and keeps the results whose completed lift has a Gray image in
/// the expected family with the expected beta. Throws for other lengths.
std::vector<RepairCandidate> repair_hex(std::string_view hex, const BinaryMatrix& a,
                                        const FamilyTarget& expected, unsigned threads = 1);

/// Single-digit substitutions of a 36-digit string, kept under the same rule
/// as repair_hex.
std::vector<RepairCandidate> repair_substitution(std::string_view hex, const BinaryMatrix& a,
                                                 const FamilyTarget& expected,
                                                 unsigned threads = 1);

}  // namespace sdc
