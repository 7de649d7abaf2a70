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

#include "sdc/gf2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sdc/error.hpp"

namespace sdc {

namespace {

void check_length(std::size_t n) {
  if (n > BitVector::kMaxBits)
    throw Error("vector length " + std::to_string(n) + " exceeds the 128-bit limit");
}

}  // namespace

BitVector::BitVector(std::size_t n) : size_(n) { check_length(n); }

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw Error(std::string("invalid bit character '") + bits[i] + "'");
  }
  return v;
}

BitVector BitVector::ones(std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i);
  return v;
}

BitVector BitVector::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > size_) throw Error("slice out of range");
  BitVector out(len);
  for (std::size_t i = 0; i < len; ++i) out.set(i, get(offset + i));
  return out;
}

BitVector BitVector::concat(const BitVector& other) const {
  BitVector out(size_ + other.size_);
  out.words_ = words_;
  for (std::size_t i = 0; i < other.size_; ++i) out.set(size_ + i, other.get(i));
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  words_[0] ^= other.words_[0];
  words_[1] ^= other.words_[1];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  words_[0] &= other.words_[0];
  words_[1] &= other.words_[1];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool inner_product(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size())
    throw Error("inner product of vectors with lengths " + std::to_string(x.size()) + " and " +
                std::to_string(y.size()));
  return (x & y).weight() & 1u;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, BitVector(cols)), cols_(cols) {
  check_length(cols);
}

BinaryMatrix::BinaryMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) cols_ = rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw Error("matrix rows have unequal lengths");
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<BitVector> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    rows.push_back(BitVector::from_string(line));
  }
  return BinaryMatrix(std::move(rows));
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(BitVector::from_string(r));
  return BinaryMatrix(std::move(out));
}

void BinaryMatrix::append_row(const BitVector& r) {
  if (rows_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error("appended row has wrong length");
  rows_.push_back(r);
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

void BinaryMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& r : rows_) {
    const bool va = r.get(a), vb = r.get(b);
    r.set(a, vb);
    r.set(b, va);
  }
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (rows_[i].get(j)) t.set(j, i);
  return t;
}

BinaryMatrix BinaryMatrix::hconcat(const BinaryMatrix& right) const {
  if (rows() != right.rows()) throw Error("hconcat of matrices with different row counts");
  std::vector<BitVector> out;
  out.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) out.push_back(rows_[i].concat(right.rows_[i]));
  BinaryMatrix m(std::move(out));
  m.cols_ = cols_ + right.cols_;
  return m;
}

BinaryMatrix BinaryMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                 std::size_t ncols) const {
  if (row0 + nrows > rows() || col0 + ncols > cols_) throw Error("block out of range");
  BinaryMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) b.rows_[i] = rows_[row0 + i].slice(col0, ncols);
  return b;
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const std::size_t> order) const {
  if (order.size() != cols_) throw Error("column permutation has wrong size");
  BinaryMatrix out(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, rows_[i].get(order[j]));
  return out;
}

BinaryMatrix BinaryMatrix::without_rows(std::span<const std::size_t> drop) const {
  BinaryMatrix out;
  out.cols_ = cols_;
  for (std::size_t i = 0; i < rows(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.rows_.push_back(rows_[i]);
  return out;
}

bool BinaryMatrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  BinaryMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (a(i, t)) out.rows_[i] ^= b.rows_[t];
  return out;
}

std::string BinaryMatrix::to_text() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

std::size_t rank(const BinaryMatrix& m) {
  std::vector<BitVector> basis;  // kept with distinct leading bits
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitVector v = m.row(i);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (v.get(lead[b])) v ^= basis[b];
    if (v.is_zero()) continue;
    std::size_t p = 0;
    while (!v.get(p)) ++p;
    basis.push_back(v);
    lead.push_back(p);
  }
  return basis.size();
}

StandardForm standard_form(const BinaryMatrix& m) {
  BinaryMatrix work = m;
  const std::size_t k = work.rows(), n = work.cols();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (std::size_t r = 0; r < k; ++r) {
    // leftmost column >= r with a 1 somewhere in rows >= r
    std::size_t pivot_row = k, pivot_col = n;
    for (std::size_t c = r; c < n && pivot_row == k; ++c)
      for (std::size_t i = r; i < k; ++i)
        if (work(i, c)) {
          pivot_row = i;
          pivot_col = c;
          break;
        }
    if (pivot_row == k)
      throw Error("standard form requires full row rank; rank is " + std::to_string(r) +
                  " < " + std::to_string(k));
    work.swap_rows(r, pivot_row);
    if (pivot_col != r) {
      work.swap_columns(r, pivot_col);
      std::swap(order[r], order[pivot_col]);
    }
    for (std::size_t i = 0; i < k; ++i)
      if (i != r && work(i, r)) work.row(i) ^= work.row(r);
  }
  return {std::move(work), std::move(order)};
}

BinaryCode::BinaryCode(BinaryMatrix generator) : generator_(std::move(generator)) {
  if (rank(generator_) != generator_.rows())
    throw Error("generator rows are linearly dependent");
}

BinaryCode BinaryCode::spanned_by(const BinaryMatrix& rows) {
  BinaryMatrix kept;
  std::vector<BitVector> reduced;
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    BitVector v = rows.row(i);
    for (std::size_t b = 0; b < reduced.size(); ++b)
      if (v.get(lead[b])) v ^= reduced[b];
    if (v.is_zero()) continue;
    std::size_t p = 0;
    while (!v.get(p)) ++p;
    reduced.push_back(v);
    lead.push_back(p);
    kept.append_row(rows.row(i));
  }
  if (kept.rows() == 0) kept = BinaryMatrix(0, rows.cols());
  return BinaryCode(std::move(kept));
}

bool BinaryCode::contains(const BitVector& v) const {
  if (v.size() != length()) return false;
  BinaryMatrix extended = generator_;
  extended.append_row(v);
  return rank(extended) == dimension();
}

bool is_self_dual(const BinaryCode& code) {
  const std::size_t n = code.length();
  if (n % 2 != 0 || code.dimension() != n / 2) return false;
  const auto& g = code.generator();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.rows(); ++j)
      if (inner_product(g.row(i), g.row(j))) return false;
  return true;
}

BinaryMatrix systematic_generator(const BinaryMatrix& redundancy) {
  return BinaryMatrix::identity(redundancy.rows()).hconcat(redundancy);
}

}  // namespace sdc
