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


// Published construction data: the two lift-ready base matrices, the R2 lifts
// of Tables 1 and 2 (upper triangles as printed), the length-66 extensions of
// Table 3 and the pair-invariant comparison table.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "sdc/analysis.hpp"
#include "sdc/extension.hpp"
#include "sdc/gf2.hpp"

namespace sdc {

/// "A1" (from G1) or "A2" (from G2): the redundancy part of [I8 | A].
BinaryMatrix base_matrix(std::string_view name);

struct LiftRow {
  std::string_view name;       // K1..K5, L1..L15
  std::string_view base;       // A1 or A2
  std::string_view upper_hex;  // as printed, possibly malformed
  Family family;
  int beta;
};

struct ExtensionRow {
  std::string_view name;       // C1..C10
  std::string_view base_code;  // a row name of Table 1 or 2
  std::string_view x;          // notation accepted by expand_x
  Family family;
  int beta;
};

struct EquivalenceRow {
  std::string_view k_code;
  std::uint64_t k_a12;
  std::string_view l_code;
  std::uint64_t l_a12;
  Family family;
  int beta;
};

std::span<const LiftRow> table1();
std::span<const LiftRow> table2();
std::span<const ExtensionRow> table3();
/// Coordinates the X vectors of table3() refer to.
inline constexpr GrayLayout kTable3Layout = GrayLayout::SwappedUV;
std::span<const EquivalenceRow> equivalence_table();

/// A printed row known not to reproduce as printed, and the class of edit the
/// repair search tries for it.
enum class ErratumRepair {
  Insertion,     // one digit missing
  Deletion,      // one digit extra
  Substitution,  // one digit wrong
  Repetition,    // repetition digit of X complemented
};
std::string_view to_string(ErratumRepair r);

struct Erratum {
  std::string_view row;
  ErratumRepair repair;
  std::string_view symptom;
};

std::span<const Erratum> errata();
/// nullptr when the row is not a registered erratum.
const Erratum* find_erratum(std::string_view row);

/// Looks a lift up by name in Tables 1 and 2. Throws if unknown.
const LiftRow& lift_row(std::string_view name);

}  // namespace sdc
