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


// Arithmetic in R2 = F2 + uF2 + vF2 + uvF2 (u^2 = v^2 = 0, uv = vu), the
// hexadecimal codec, the Gray map and the projection onto F2.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc {

/// One element a + ub + vc + uvd, stored as the nibble (d,c,b,a) from the high
/// bit down. The nibble value is exactly the hex digit used in printed tables.
class R2 {
 public:
  constexpr R2() = default;
  static constexpr R2 from_nibble(std::uint8_t nibble) { return R2(nibble & 0xF); }
  static constexpr R2 from_parts(bool a, bool b, bool c, bool d) {
    return R2(static_cast<std::uint8_t>(a | (b << 1) | (c << 2) | (d << 3)));
  }
  /// Throws on characters outside 0-9, A-F, a-f.
  static R2 from_hex(char digit);

  constexpr std::uint8_t nibble() const noexcept { return bits_; }
  constexpr bool a() const noexcept { return bits_ & 1; }
  constexpr bool b() const noexcept { return (bits_ >> 1) & 1; }
  constexpr bool c() const noexcept { return (bits_ >> 2) & 1; }
  constexpr bool d() const noexcept { return (bits_ >> 3) & 1; }

  constexpr bool is_unit() const noexcept { return a(); }
  constexpr bool is_zero() const noexcept { return bits_ == 0; }
  char to_hex() const noexcept { return "0123456789ABCDEF"[bits_]; }

  friend constexpr R2 operator+(R2 x, R2 y) noexcept { return R2(x.bits_ ^ y.bits_); }
  friend constexpr R2 operator-(R2 x, R2 y) noexcept { return x + y; }
  friend R2 operator*(R2 x, R2 y) noexcept;
  R2& operator+=(R2 y) noexcept { return *this = *this + y; }
  R2& operator*=(R2 y) noexcept { return *this = *this * y; }
  friend constexpr bool operator==(R2, R2) = default;

  /// Product by direct polynomial expansion; the lookup table behind
  /// operator* is generated from this.
  static constexpr R2 multiply_expanded(R2 x, R2 y) noexcept {
    const bool a = x.a() & y.a();
    const bool b = (x.a() & y.b()) ^ (x.b() & y.a());
    const bool c = (x.a() & y.c()) ^ (x.c() & y.a());
    const bool d = (x.a() & y.d()) ^ (x.b() & y.c()) ^ (x.c() & y.b()) ^ (x.d() & y.a());
    return from_parts(a, b, c, d);
  }

 private:
  constexpr explicit R2(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

namespace r2 {
inline constexpr R2 kZero = R2::from_nibble(0x0);
inline constexpr R2 kOne = R2::from_nibble(0x1);
inline constexpr R2 kU = R2::from_nibble(0x2);
inline constexpr R2 kV = R2::from_nibble(0x4);
inline constexpr R2 kUV = R2::from_nibble(0x8);
/// The multiples used to expand an R2 code into its F2 span, in row order.
inline constexpr std::array<R2, 4> kSpanMultipliers = {kOne, kU, kV, kUV};
}  // namespace r2

using R2Vector = std::vector<R2>;

R2 inner_product(std::span<const R2> x, std::span<const R2> y);
R2Vector scale(R2 s, std::span<const R2> x);

/// Most significant entry first, one digit per element.
R2Vector parse_hex_vector(std::string_view digits);
std::string to_hex(std::span<const R2> x);

/// phi(a + ub + vc + uvd) = (d, c+d, b+d, a+b+c+d), four n-bit blocks.
/// Requires 4n <= 128.
BitVector gray_map(std::span<const R2> x);
/// Component-wise a-part.
BitVector projection(std::span<const R2> x);

class R2Matrix {
 public:
  R2Matrix() = default;
  R2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static R2Matrix identity(std::size_t n);
  /// Lifts a binary matrix entry-wise (b = c = d = 0).
  static R2Matrix embed(const BinaryMatrix& m);
  /// One hex string per row.
  static R2Matrix from_hex_rows(std::span<const std::string_view> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  R2 operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  R2& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const R2> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<R2> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  R2Matrix transpose() const;
  /// [*this | right]
  R2Matrix hconcat(const R2Matrix& right) const;
  BinaryMatrix projection() const;

  friend R2Matrix operator*(const R2Matrix& x, const R2Matrix& y);
  friend bool operator==(const R2Matrix&, const R2Matrix&) = default;

  /// Rows as hex strings joined by newlines.
  std::string to_hex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R2> data_;
};

/// The ring automorphism exchanging u and v. phi(swap_uv(x)) is phi(x) with
/// its two middle blocks exchanged: (d, b+d, c+d, a+b+c+d).
constexpr R2 swap_uv(R2 x) noexcept { return R2::from_parts(x.a(), x.c(), x.b(), x.d()); }
R2Matrix swap_uv(const R2Matrix& m);

/// True iff K * K^T = I over R2, i.e. [I | K] generates a self-dual code.
bool is_self_dual_r2(const R2Matrix& k);

}  // namespace sdc
