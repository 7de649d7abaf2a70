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


// Independent reference implementations for the tests: slow, obvious
// versions of the library's fast paths, and random instance generators.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sdc/gf2.hpp"
#include "sdc/r2.hpp"

namespace sdc::testing {

using Rng = std::mt19937_64;

/// Product computed on monomials: an element is a set of terms u^i v^j with
/// i, j in {0, 1}; terms with an exponent of 2 vanish.
inline R2 monomial_product(R2 x, R2 y) {
  // term index t = i + 2j: 1 -> a, u -> b, v -> c, uv -> d
  const bool xs[4] = {x.a(), x.b(), x.c(), x.d()};
  const bool ys[4] = {y.a(), y.b(), y.c(), y.d()};
  bool out[4] = {false, false, false, false};
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      if (!xs[s] || !ys[t]) continue;
      const int i = (s & 1) + (t & 1), j = (s >> 1) + (t >> 1);
      if (i > 1 || j > 1) continue;
      out[i + 2 * j] ^= true;
    }
  return R2::from_parts(out[0], out[1], out[2], out[3]);
}

inline R2 inverse_by_search(R2 x) {
  for (int n = 0; n < 16; ++n) {
    const R2 y = R2::from_nibble(static_cast<std::uint8_t>(n));
    if (monomial_product(x, y) == r2::kOne) return y;
  }
  return r2::kZero;
}

/// Gray image by the defining formula, one coordinate at a time.
inline std::vector<bool> gray_oracle(const std::vector<R2>& x) {
  const std::size_t n = x.size();
  std::vector<bool> out(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool a = x[i].a(), b = x[i].b(), c = x[i].c(), d = x[i].d();
    out[i] = d;
    out[n + i] = c ^ d;
    out[2 * n + i] = b ^ d;
    out[3 * n + i] = a ^ b ^ c ^ d;
  }
  return out;
}

/// Every codeword, by summing each subset of the rows.
inline std::set<BitVector> all_codewords(const BinaryMatrix& g) {
  std::set<BitVector> words;
  const std::size_t k = g.rows();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    BitVector w(g.cols());
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1u) w ^= g.row(i);
    words.insert(w);
  }
  return words;
}

inline std::size_t span_size_rank(const BinaryMatrix& g) {
  const std::size_t size = all_codewords(g).size();
  std::size_t r = 0;
  while ((std::size_t{1} << r) < size) ++r;
  return r;
}

/// Determinant over GF(2) by cofactor expansion along the first row.
inline bool determinant_oracle(const std::vector<std::vector<bool>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return true;
  if (n == 1) return m[0][0];
  bool det = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (!m[0][j]) continue;
    std::vector<std::vector<bool>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<bool> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    det ^= determinant_oracle(minor);
  }
  return det;
}

/// Every leading principal minor is nonzero.
inline bool lrm_oracle(const BinaryMatrix& a) {
  for (std::size_t s = 1; s <= a.rows(); ++s) {
    std::vector<std::vector<bool>> m(s, std::vector<bool>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) m[i][j] = a(i, j);
    if (!determinant_oracle(m)) return false;
  }
  return true;
}

inline R2 random_r2(Rng& rng) {
  return R2::from_nibble(static_cast<std::uint8_t>(rng() & 0xF));
}

inline R2Vector random_r2_vector(Rng& rng, std::size_t n) {
  R2Vector v(n);
  for (auto& e : v) e = random_r2(rng);
  return v;
}

/// x has a unit at some position j; y is corrected there so that <x, y> = 0.
inline std::pair<R2Vector, R2Vector> random_orthogonal_pair(Rng& rng, std::size_t n) {
  R2Vector x = random_r2_vector(rng, n), y = random_r2_vector(rng, n);
  const std::size_t j = rng() % n;
  if (!x[j].is_unit()) x[j] += r2::kOne;
  R2 ip = r2::kZero;
  for (std::size_t i = 0; i < n; ++i) ip += monomial_product(x[i], y[i]);
  y[j] += monomial_product(ip, inverse_by_search(x[j]));
  return {x, y};
}

inline BinaryMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  BinaryMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng() & 1u);
  return m;
}

/// Random k x n generator of rank k.
inline BinaryMatrix random_full_rank(Rng& rng, std::size_t k, std::size_t n) {
  for (;;) {
    BinaryMatrix m = random_matrix(rng, k, n);
    if (rank(m) == k) return m;
  }
}

inline BinaryMatrix random_row_mix(Rng& rng, BinaryMatrix g) {
  for (std::size_t step = 0; step < 4 * g.rows(); ++step) {
    const std::size_t i = rng() % g.rows(), j = rng() % g.rows();
    if (i != j) g.row(i) ^= g.row(j);
  }
  for (std::size_t i = g.rows(); i > 1; --i) g.swap_rows(i - 1, rng() % i);
  return g;
}

inline BinaryMatrix random_column_shuffle(Rng& rng, const BinaryMatrix& g) {
  std::vector<std::size_t> order(g.cols());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::shuffle(order.begin(), order.end(), rng);
  return g.permute_columns(order);
}

inline const BinaryMatrix& extended_hamming() {
  static const BinaryMatrix h = BinaryMatrix::from_rows(
      {"10001011", "01000111", "00101110", "00011101"});
  return h;
}

/// Direct sum of repetition blocks [1 1] and extended Hamming blocks with
/// total length n (even), then shuffled columns and a random basis.
inline BinaryMatrix random_self_dual(Rng& rng, std::size_t n) {
  std::vector<BitVector> rows;
  std::size_t used = 0;
  while (used < n) {
    if (n - used >= 8 && rng() % 3 == 0) {
      for (std::size_t i = 0; i < 4; ++i) {
        BitVector r(n);
        for (std::size_t j = 0; j < 8; ++j) r.set(used + j, extended_hamming()(i, j));
        rows.push_back(r);
      }
      used += 8;
    } else {
      BitVector r(n);
      r.set(used);
      r.set(used + 1);
      rows.push_back(r);
      used += 2;
    }
  }
  return random_row_mix(rng, random_column_shuffle(rng, BinaryMatrix(std::move(rows))));
}

inline BitVector random_odd_vector(Rng& rng, std::size_t n) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1u);
  if (x.weight() % 2 == 0) x.flip(rng() % n);
  return x;
}

}  // namespace sdc::testing
