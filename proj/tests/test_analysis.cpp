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

#include "sdc/analysis.hpp"
#include "sdc/error.hpp"
#include "sdc/json.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace sdc;
using namespace sdc::testing;

namespace {

/// A distribution with the given A12 and A14 and the rest of the 2^k words
/// parked at weight 16 and n.
WeightDistribution shaped(std::size_t n, std::uint64_t a12, std::uint64_t a14) {
  WeightDistribution d(n);
  d.counts[0] = 1;
  d.counts[n] = 1;
  d.counts[12] = a12;
  d.counts[14] = a14;
  d.counts[16] = (std::uint64_t{1} << (n / 2)) - 2 - a12 - a14;
  return d;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("gray walk matches the message-by-message oracle") {
  const auto res = check_enumerator();
  CHECK(res.checked >= 100);
  CHECK(res.ok());
}

TEST_CASE("thread and split settings do not change the result") {
  Rng rng(9);
  const BinaryCode code(random_self_dual(rng, 40));
  EnumerationOptions base;
  base.collect_weight = 6;
  const auto reference = enumerate_code(code, base);
  for (unsigned split = 0; split <= 8; ++split)
    for (unsigned threads : {1u, 3u}) {
      EnumerationOptions o = base;
      o.split_bits = split;
      o.threads = threads;
      const auto r = enumerate_code(code, o);
      CHECK(r.distribution == reference.distribution);
      CHECK(r.collected == reference.collected);
    }
}

TEST_CASE("collected words are exactly the words of that weight") {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const auto g = t % 2 ? random_self_dual(rng, 24) : random_full_rank(rng, 10, 30);
    const std::size_t w = 2 * (1 + rng() % 6);
    EnumerationOptions o;
    o.collect_weight = w;
    const auto r = enumerate_code(BinaryCode(g), o);
    std::vector<BitVector> expected;
    for (const auto& c : all_codewords(g))
      if (c.weight() == w) expected.push_back(c);
    std::sort(expected.begin(), expected.end());
    CHECK(r.collected == expected);
    CHECK(r.distribution[w] == expected.size());
  }
}

TEST_CASE("collection cap") {
  EnumerationOptions o;
  o.collect_weight = 4;
  o.collect_cap = 3;
  const auto r = enumerate_code(BinaryCode(extended_hamming()), o);
  CHECK(r.collect_overflow);
  CHECK(r.collected.empty());
}

TEST_CASE("dimension limits") {
  Rng rng(11);
  CHECK_THROWS_AS(enumerate_code(BinaryCode(random_full_rank(rng, 34, 70))), Error);
  CHECK_THROWS_AS(naive_distribution_oracle(BinaryCode(random_full_rank(rng, 21, 30))), Error);
}

TEST_CASE("type classification") {
  const auto h = weight_distribution(BinaryCode(extended_hamming()));
  CHECK(h.to_polynomial() == "1+14z^4+z^8");
  CHECK(classify_type(h) == CodeType::II);
  const auto rep = weight_distribution(BinaryCode(BinaryMatrix::from_rows({"11"})));
  CHECK(classify_type(rep) == CodeType::I);
  const auto odd = weight_distribution(BinaryCode(BinaryMatrix::from_rows({"111"})));
  CHECK_THROWS_AS(classify_type(odd), Error);
}

TEST_CASE("length 64 families") {
  auto m = classify_w64(shaped(64, 1312 + 16 * 20, 22016 - 64 * 20));
  CHECK(m.family == Family::W64_1);
  CHECK(m.beta == 20);
  CHECK(m.warnings.empty());
  m = classify_w64(shaped(64, 1312 + 16 * 26, 23040 - 64 * 26));
  CHECK(m.family == Family::W64_2);
  CHECK(m.beta == 26);
  CHECK_THROWS_AS(classify_w64(shaped(64, 1312 + 16 * 20, 22016)), Error);
  CHECK_THROWS_AS(classify_w64(shaped(64, 1313, 22016)), Error);
  CHECK_THROWS_AS(classify_w66(shaped(64, 1312, 22016)), Error);
}

TEST_CASE("length 66 families") {
  auto m = classify_w66(shaped(66, 858 + 8 * 13, 18678 - 24 * 13));
  CHECK(m.family == Family::W66_1);
  CHECK(m.beta == 13);
  m = classify_w66(shaped(66, 858 + 8 * 40, 18166 - 24 * 40));
  CHECK(m.family == Family::W66_3);
  CHECK(m.beta == 40);
  m = classify_w66(shaped(66, 1690, 7990));
  CHECK(m.family == Family::W66_2);
  CHECK_FALSE(m.beta);
}

TEST_CASE("family coefficients") {
  CHECK(family_coefficients(Family::W64_1, 20) == std::pair<std::int64_t, std::int64_t>{1632, 20736});
  CHECK(family_coefficients(Family::W64_2, 3) == std::pair<std::int64_t, std::int64_t>{1360, 22848});
  CHECK(family_coefficients(Family::W66_3, 27) == std::pair<std::int64_t, std::int64_t>{1074, 17518});
  CHECK(family_coefficients(Family::W66_2, std::nullopt) == std::pair<std::int64_t, std::int64_t>{1690, 7990});
  CHECK_THROWS_AS(family_coefficients(Family::W64_1, std::nullopt), Error);
  for (Family f : {Family::None, Family::W64_1, Family::W64_2, Family::W66_1, Family::W66_2, Family::W66_3})
    CHECK(family_from_string(to_string(f)) == f);
}

TEST_CASE("novelty against the registry") {
  CHECK_FALSE(novelty_check(Family::W64_1, 14));
  CHECK_FALSE(novelty_check(Family::W64_1, 74));
  CHECK(novelty_check(Family::W64_1, 20));
  CHECK(novelty_check(Family::W64_2, 3));
  CHECK_FALSE(novelty_check(Family::W64_2, 16));
  CHECK(novelty_check(Family::W66_3, 24));
  CHECK_FALSE(novelty_check(Family::W66_3, 57));
  CHECK(novelty_check(Family::W66_1, 13));
  const auto known = known_betas(Family::W64_1);
  CHECK(std::is_sorted(known.begin(), known.end()));
}

TEST_CASE("pairs at a distance") {
  const std::vector<BitVector> words = {BitVector::from_string("1100"), BitVector::from_string("0011"),
                                        BitVector::from_string("1010"), BitVector::from_string("0101")};
  CHECK(count_pairs_at_distance(words, 4) == 2);
  CHECK(count_pairs_at_distance(words, 2) == 4);
  CHECK_THROWS_AS(pair_invariant_A12(BinaryCode(extended_hamming())), Error);
}

TEST_CASE("report of a small code") {
  const auto r = analyze(BinaryCode(extended_hamming()));
  CHECK(r.n == 8);
  CHECK(r.k == 4);
  CHECK(r.d == std::optional<std::size_t>{4});
  CHECK(r.type == CodeType::II);
  CHECK(r.family == Family::None);
  CHECK_FALSE(r.a12_pair);
  const auto back = report_from_json(to_json(r));
  CHECK(back == r);
  const auto nsd = analyze(BinaryCode(BinaryMatrix::from_rows({"1110", "0111"})));
  CHECK_FALSE(nsd.type);
}

TEST_CASE("light word screen") {
  const BinaryCode h(extended_hamming());
  CHECK(has_light_word(h, 5, 2));
  CHECK_FALSE(has_light_word(h, 4, 4));
}

}
