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


#include "sdc/r2.hpp"

#include "sdc/error.hpp"

namespace sdc {

namespace {

constexpr std::array<std::array<R2, 16>, 16> make_product_table() {
  std::array<std::array<R2, 16>, 16> table{};
  for (std::uint8_t x = 0; x < 16; ++x)
    for (std::uint8_t y = 0; y < 16; ++y)
      table[x][y] = R2::multiply_expanded(R2::from_nibble(x), R2::from_nibble(y));
  return table;
}

constexpr auto kProductTable = make_product_table();

static_assert(R2::multiply_expanded(r2::kU, r2::kU) == r2::kZero);
static_assert(R2::multiply_expanded(r2::kU, r2::kV) == r2::kUV);

}  // namespace

R2 operator*(R2 x, R2 y) noexcept { return kProductTable[x.nibble()][y.nibble()]; }

R2 R2::from_hex(char digit) {
  if (digit >= '0' && digit <= '9') return from_nibble(static_cast<std::uint8_t>(digit - '0'));
  if (digit >= 'A' && digit <= 'F') return from_nibble(static_cast<std::uint8_t>(digit - 'A' + 10));
  if (digit >= 'a' && digit <= 'f') return from_nibble(static_cast<std::uint8_t>(digit - 'a' + 10));
  throw Error(std::string("invalid hex digit '") + digit + "'");
}

R2 inner_product(std::span<const R2> x, std::span<const R2> y) {
  if (x.size() != y.size()) throw Error("R2 inner product of vectors with different lengths");
  R2 sum;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return sum;
}

R2Vector scale(R2 s, std::span<const R2> x) {
  R2Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i];
  return out;
}

R2Vector parse_hex_vector(std::string_view digits) {
  R2Vector out;
  out.reserve(digits.size());
  for (char ch : digits) out.push_back(R2::from_hex(ch));
  return out;
}

std::string to_hex(std::span<const R2> x) {
  std::string s;
  s.reserve(x.size());
  for (R2 e : x) s += e.to_hex();
  return s;
}

BitVector gray_map(std::span<const R2> x) {
  const std::size_t n = x.size();
  if (4 * n > BitVector::kMaxBits) throw Error("Gray image longer than 128 bits");
  BitVector out(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const R2 e = x[i];
    out.set(i, e.d());
    out.set(n + i, e.c() ^ e.d());
    out.set(2 * n + i, e.b() ^ e.d());
    out.set(3 * n + i, e.a() ^ e.b() ^ e.c() ^ e.d());
  }
  return out;
}

BitVector projection(std::span<const R2> x) {
  BitVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.set(i, x[i].a());
  return out;
}

R2Matrix R2Matrix::identity(std::size_t n) {
  R2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = r2::kOne;
  return m;
}

R2Matrix R2Matrix::embed(const BinaryMatrix& b) {
  R2Matrix m(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j)) m(i, j) = r2::kOne;
  return m;
}

R2Matrix R2Matrix::from_hex_rows(std::span<const std::string_view> rows) {
  if (rows.empty()) return {};
  R2Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error("hex matrix rows have unequal lengths");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = R2::from_hex(rows[i][j]);
  }
  return m;
}

R2Matrix R2Matrix::transpose() const {
  R2Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

R2Matrix R2Matrix::hconcat(const R2Matrix& right) const {
  if (rows_ != right.rows_) throw Error("hconcat of R2 matrices with different row counts");
  R2Matrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

BinaryMatrix R2Matrix::projection() const {
  BinaryMatrix b(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b.set(i, j, (*this)(i, j).a());
  return b;
}

R2Matrix operator*(const R2Matrix& x, const R2Matrix& y) {
  if (x.cols() != y.rows()) throw Error("R2 matrix product dimension mismatch");
  R2Matrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t t = 0; t < x.cols(); ++t) {
      const R2 s = x(i, t);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += s * y(t, j);
    }
  return out;
}

std::string R2Matrix::to_hex() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += '\n';
    s += sdc::to_hex(row(i));
  }
  return s;
}

R2Matrix swap_uv(const R2Matrix& m) {
  R2Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = swap_uv(m(i, j));
  return out;
}

bool is_self_dual_r2(const R2Matrix& k) {
  if (k.rows() != k.cols()) return false;
  return k * k.transpose() == R2Matrix::identity(k.rows());
}

}  // namespace sdc
