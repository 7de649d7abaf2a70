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


#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sdc/error.hpp"
#include "sdc/gf2.hpp"
#include "support.hpp"

using namespace sdc;
using namespace sdc::testing;

TEST_SUITE("gf2") {

TEST_CASE("bit vectors parse, print and slice") {
  const auto v = BitVector::from_string("1011000001");
  CHECK(v.size() == 10);
  CHECK(v.weight() == 4);
  CHECK(v.to_string() == "1011000001");
  CHECK(v.slice(2, 3).to_string() == "110");
  CHECK(v.concat(BitVector::from_string("01")).to_string() == "101100000101");
  CHECK_THROWS_AS(BitVector::from_string("10x"), Error);
  CHECK_THROWS_AS(BitVector(129), Error);
  CHECK(BitVector::ones(128).weight() == 128);
}

TEST_CASE("concat crosses the word boundary") {
  const auto a = BitVector::ones(60);
  const auto b = BitVector::from_string("10101010101");
  const auto c = a.concat(b);
  CHECK(c.size() == 71);
  CHECK(c.slice(60, 11) == b);
  CHECK(c.weight() == 66);
}

TEST_CASE("inner product") {
  CHECK(inner_product(BitVector::from_string("1100"), BitVector::from_string("1010")));
  CHECK_FALSE(inner_product(BitVector::from_string("1100"), BitVector::from_string("1110")));
  CHECK_THROWS_AS(inner_product(BitVector(3), BitVector(4)), Error);
}

TEST_CASE("rank agrees with the size of the span") {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 1 + rng() % 10, n = 1 + rng() % 12;
    const auto m = random_matrix(rng, k, n);
    CHECK(rank(m) == span_size_rank(m));
  }
}

TEST_CASE("matrix product and transpose") {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_matrix(rng, 5, 7), b = random_matrix(rng, 7, 4);
    const auto p = a * b;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        bool s = false;
        for (std::size_t l = 0; l < 7; ++l) s ^= a(i, l) && b(l, j);
        CHECK(p(i, j) == s);
      }
    CHECK(a.transpose().transpose() == a);
  }
}

TEST_CASE("parse skips blanks and comments") {
  const auto m = BinaryMatrix::parse("# generator\n 1100 \n\n0011\r\n");
  CHECK(m == BinaryMatrix::from_rows({"1100", "0011"}));
  CHECK_THROWS_AS(BinaryMatrix::parse("110\n1100\n"), Error);
}

TEST_CASE("standard form spans the permuted row space") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng() % 8, n = k + rng() % 8;
    const auto g = random_full_rank(rng, k, n);
    const auto sf = standard_form(g);
    CHECK(sf.matrix.block(0, 0, k, k) == BinaryMatrix::identity(k));
    auto order = sf.column_order;
    std::sort(order.begin(), order.end());
    std::vector<std::size_t> iota(n);
    std::iota(iota.begin(), iota.end(), std::size_t{0});
    CHECK(order == iota);
    CHECK(all_codewords(sf.matrix) == all_codewords(g.permute_columns(sf.column_order)));
  }
}

TEST_CASE("standard form keeps columns when the leading block is invertible") {
  const auto g = BinaryMatrix::from_rows({"1101", "0110"});
  const auto sf = standard_form(g);
  CHECK(sf.column_order == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(sf.matrix == BinaryMatrix::from_rows({"1011", "0110"}));
}

TEST_CASE("standard form rejects dependent rows") {
  CHECK_THROWS_AS(standard_form(BinaryMatrix::from_rows({"1100", "1100"})), Error);
}

TEST_CASE("codes") {
  const BinaryCode h(extended_hamming());
  CHECK(h.dimension() == 4);
  CHECK(is_self_dual(h));
  CHECK(h.contains(BitVector::ones(8)));
  CHECK_FALSE(h.contains(BitVector::from_string("10000000")));
  CHECK_THROWS_AS(BinaryCode(BinaryMatrix::from_rows({"11", "11"})), Error);
  CHECK(BinaryCode::spanned_by(BinaryMatrix::from_rows({"1100", "1100", "0011"})).dimension() == 2);
  CHECK_FALSE(is_self_dual(BinaryCode(BinaryMatrix::from_rows({"1100"}))));
  CHECK_FALSE(is_self_dual(BinaryCode(BinaryMatrix::from_rows({"10", }))));
  CHECK(systematic_generator(BinaryMatrix::from_rows({"1"})) == BinaryMatrix::from_rows({"11"}));
}

TEST_CASE("random self-dual generators are self-dual") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) CHECK(is_self_dual(BinaryCode(random_self_dual(rng, 2 + 2 * (rng() % 20)))));
}

}
