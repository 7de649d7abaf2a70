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


#include "sdc/tables.hpp"

#include <array>

#include "sdc/error.hpp"

namespace sdc {

BinaryMatrix base_matrix(std::string_view name) {
  if (name == "A1")
    return BinaryMatrix::from_rows({"10000011", "01000011", "00100011", "00010011", "00001011",
                                    "00000111", "11111110", "11111101"});
  if (name == "A2")
    return BinaryMatrix::from_rows({"10011110", "01011110", "00111110", "00010011", "00001011",
                                    "00000111", "11111101", "11100011"});
  throw Error("unknown base matrix '" + std::string(name) + "' (known: A1, A2)");
}

namespace {

constexpr std::array kTable1 = {
    LiftRow{"K1", "A1", "9C08E4D754E88B1162CFB96AF71AF7B35585", Family::W64_1, 20},
    LiftRow{"K2", "A1", "9A8C663FF2A4855D2463516C7D943F95BB8B", Family::W64_1, 24},
    LiftRow{"K3", "A1", "D24022373664C1D1AC671120799C7759FB0F", Family::W64_1, 26},
    LiftRow{"K4", "A1", "9E4CEEF332A0C55D6CE755A83D5C3FD9F78B", Family::W64_1, 30},
    LiftRow{"K5", "A1", "9A8C6273FEECC119A8E75D6CF51CF3513F87", Family::W64_2, 26},
};

// As printed. K1, L4, L8 and L14 are registered errata below.
constexpr std::array kTable2 = {
    LiftRow{"L1", "A2", "5EA3BBDE945739ADDBB3436ABF7237B5105B", Family::W64_1, 16},
    LiftRow{"L2", "A2", "F4ED975832719FA15953274813383F97DC7F", Family::W64_1, 20},
    LiftRow{"L3", "A2", "DAE7379AD85FBDE1D3BB0BAA33F6FFF5D0DF", Family::W64_1, 24},
    LiftRow{"L4", "A2", "5A2B7796DC53F1E99FBBCFAAB77B37F1D097", Family::W64_1, 26},
    LiftRow{"L5", "A2", "5E2F335610D7FDA557FF0BAEF3F237F59813", Family::W64_1, 28},
    LiftRow{"L6", "A2", "D6A3BBDED05739A99BB34FAABF323F3D1C13", Family::W64_1, 30},
    LiftRow{"L7", "A2", "3C211FD8B23D1FAD115F670C5BB83F9F94F3", Family::W64_1, 34},
    LiftRow{"L8", "A2", "5205997E1A77550739D9AA92817F01B5358B9", Family::W64_1, 38},
    LiftRow{"L9", "A2", "742D979876F15F2599936F041BFCBF135437", Family::W64_2, 3},
    LiftRow{"L10", "A2", "16055DB29A3B990771952D6013B09F53D0B5", Family::W64_2, 7},
    LiftRow{"L11", "A2", "3C295F50FA399B619D9F6F481BF83B57D8BF", Family::W64_2, 11},
    LiftRow{"L12", "A2", "56491536127F9147B55DE5241FF0D757587D", Family::W64_2, 15},
    LiftRow{"L13", "A2", "5A23B31AD8177DA55B7BC7A6BB7AFF71981B", Family::W64_2, 26},
    LiftRow{"L14", "A2", "DEC1D9F2D63FD94B9D5A12CD330D35B1C3D", Family::W64_2, 27},
    LiftRow{"L15", "A2", "1023DB7472337DAD9995ED485DB2D3715457", Family::W64_2, 35},
};

// C1 and C4 are printed on two 32-bit lines, concatenated top line first.
// C6 is a registered erratum.
constexpr std::array kTable3 = {
    ExtensionRow{"C1", "L9", "00100110100110000010100011011000"
                             "00100101110100001100000011110001", Family::W66_1, 13},
    ExtensionRow{"C2", "L15", "01101100110101100100110101100011" "1^{32}", Family::W66_1, 57},
    ExtensionRow{"C3", "L1", "00010000111100101101111111100001" "1^{32}", Family::W66_3, 24},
    ExtensionRow{"C4", "L1", "01111110101011011111000101000011"
                             "00111110001000011000101001110100", Family::W66_3, 25},
    ExtensionRow{"C5", "K1", "00100011001001110101011010001101" "1^{32}", Family::W66_3, 26},
    ExtensionRow{"C6", "L1", "11011000100101000100111110110110" "0^{32}", Family::W66_3, 27},
    ExtensionRow{"C7", "K4", "01011011011101111111000111011100" "1^{32}", Family::W66_3, 39},
    ExtensionRow{"C8", "L4", "00110110101011010110001010110110" "1^{32}", Family::W66_3, 40},
    ExtensionRow{"C9", "K3", "00100110110111100100010101111001" "1^{32}", Family::W66_3, 41},
    ExtensionRow{"C10", "K3", "10101101100111011001110110010101" "1^{32}", Family::W66_3, 42},
};

constexpr std::array kEquivalence = {
    EquivalenceRow{"K1", 15732, "L2", 14964, Family::W64_1, 20},
    EquivalenceRow{"K2", 16488, "L3", 17264, Family::W64_1, 24},
    EquivalenceRow{"K3", 17676, "L4", 17898, Family::W64_1, 26},
    EquivalenceRow{"K4", 20544, "L6", 19890, Family::W64_1, 30},
    EquivalenceRow{"K5", 18876, "L13", 19680, Family::W64_2, 26},
};

constexpr std::array kErrata = {
    Erratum{"K1", ErratumRepair::Substitution,
            "printed upper triangle gives a Gray image of minimum distance 8"},
    Erratum{"L4", ErratumRepair::Substitution,
            "printed entry (5,6) is B, whose constant part disagrees with A2(5,6) = 0"},
    Erratum{"L8", ErratumRepair::Deletion, "printed with 37 digits"},
    Erratum{"L14", ErratumRepair::Insertion, "printed with 35 digits"},
    Erratum{"C6", ErratumRepair::Repetition,
            "printed X gives an extension of minimum distance 10"},
};

}  // namespace

std::string_view to_string(ErratumRepair r) {
  switch (r) {
    case ErratumRepair::Insertion: return "insertion";
    case ErratumRepair::Deletion: return "deletion";
    case ErratumRepair::Substitution: return "substitution";
    case ErratumRepair::Repetition: return "repetition";
  }
  return "?";
}

std::span<const Erratum> errata() { return kErrata; }

const Erratum* find_erratum(std::string_view row) {
  for (const auto& e : kErrata)
    if (e.row == row) return &e;
  return nullptr;
}

std::span<const LiftRow> table1() { return kTable1; }
std::span<const LiftRow> table2() { return kTable2; }
std::span<const ExtensionRow> table3() { return kTable3; }
std::span<const EquivalenceRow> equivalence_table() { return kEquivalence; }

const LiftRow& lift_row(std::string_view name) {
  for (const auto& r : kTable1)
    if (r.name == name) return r;
  for (const auto& r : kTable2)
    if (r.name == name) return r;
  throw Error("unknown table code '" + std::string(name) + "'");
}

}  // namespace sdc
