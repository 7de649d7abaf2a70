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

// Bit-packed linear algebra over GF(2). Vectors hold at most 128 bits in two
// machine words; bit i of a vector is coordinate i (leftmost when printed).

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

class BitVector {
 public:
  static constexpr std::size_t kMaxBits = 128;
  static constexpr std::size_t kWords = 2;

  BitVector() = default;
  explicit BitVector(std::size_t n);

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t n);

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const noexcept { return get(i); }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const noexcept {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  bool is_zero() const noexcept { return (words_[0] | words_[1]) == 0; }

  std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }
  const std::array<std::uint64_t, kWords>& words() const noexcept { return words_; }

  /// Coordinates [offset, offset + len) as a new vector of length len.
  BitVector slice(std::size_t offset, std::size_t len) const;
  /// Concatenation (*this, other).
  BitVector concat(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

  std::string to_string() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
  std::size_t size_ = 0;
};

/// Standard inner product, sum of x_i y_i mod 2. Throws on length mismatch.
bool inner_product(const BitVector& x, const BitVector& y);

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  /// All rows must have equal length.
  explicit BinaryMatrix(std::vector<BitVector> rows);

  static BinaryMatrix identity(std::size_t n);
  /// One row per line of '0'/'1' characters; blank and '#' lines are skipped.
  static BinaryMatrix parse(std::string_view text);
  /// Rows given as '0'/'1' strings, convenient for literals.
  static BinaryMatrix from_rows(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  std::span<const BitVector> row_span() const noexcept { return rows_; }

  bool operator()(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }

  void append_row(const BitVector& r);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  BinaryMatrix transpose() const;
  /// [*this | right]
  BinaryMatrix hconcat(const BinaryMatrix& right) const;
  BinaryMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const;
  /// Output column j is input column order[j].
  BinaryMatrix permute_columns(std::span<const std::size_t> order) const;
  BinaryMatrix without_rows(std::span<const std::size_t> drop) const;

  bool is_zero() const noexcept;

  friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  std::string to_text() const;

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

std::size_t rank(const BinaryMatrix& m);

/// Row-reduces to [I_k | A]. column_order[j] is the input column placed at
/// output column j.
struct StandardForm {
  BinaryMatrix matrix;
  std::vector<std::size_t> column_order;

  BinaryMatrix redundancy() const {
    return matrix.block(0, matrix.rows(), matrix.rows(), matrix.cols() - matrix.rows());
  }
};

/// Gaussian elimination with greedy leftmost pivots; columns are swapped only
/// when the current diagonal position has no pivot. Throws when m is not full
/// row rank.
StandardForm standard_form(const BinaryMatrix& m);

/// Linear code given as the row space of a generator with independent rows.
class BinaryCode {
 public:
  BinaryCode() = default;
  /// Throws if the rows are dependent.
  explicit BinaryCode(BinaryMatrix generator);
  /// Keeps a maximal independent subset of rows.
  static BinaryCode spanned_by(const BinaryMatrix& rows);

  const BinaryMatrix& generator() const noexcept { return generator_; }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }

  bool contains(const BitVector& v) const;

 private:
  BinaryMatrix generator_;
};

/// True iff G * G^T = 0 and k = n / 2.
bool is_self_dual(const BinaryCode& code);

/// [I_k | A] for a k x k redundancy part A.
BinaryMatrix systematic_generator(const BinaryMatrix& redundancy);

}  // namespace sdc
