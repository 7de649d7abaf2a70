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


#include "sdc/extension.hpp"

#include <cctype>

#include "sdc/error.hpp"

namespace sdc {

std::string_view to_string(GrayLayout layout) {
  return layout == GrayLayout::Standard ? "standard" : "swapped-uv";
}

GrayLayout gray_layout_from_string(std::string_view s) {
  if (s == "standard") return GrayLayout::Standard;
  if (s == "swapped-uv") return GrayLayout::SwappedUV;
  throw Error("unknown Gray layout '" + std::string(s) + "' (standard, swapped-uv)");
}

BinaryMatrix build_gray_generator(const R2Matrix& k, GrayLayout layout) {
  R2Matrix full = R2Matrix::identity(k.rows()).hconcat(k);
  if (layout == GrayLayout::SwappedUV) full = swap_uv(full);
  BinaryMatrix g(0, 4 * full.cols());
  for (R2 m : r2::kSpanMultipliers)
    for (std::size_t i = 0; i < full.rows(); ++i) g.append_row(gray_map(scale(m, full.row(i))));
  if (rank(g) != g.rows())
    throw Error("Gray generator has rank " + std::to_string(rank(g)) + " < " +
                std::to_string(g.rows()) + "; the R2 code is not free");
  return g;
}

BinaryCode gray_image(const R2Matrix& k, GrayLayout layout) {
  return BinaryCode(build_gray_generator(k, layout));
}

BitVector expand_x(std::string_view notation, std::size_t n) {
  std::string bits;
  for (std::size_t i = 0; i < notation.size();) {
    const char ch = notation[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != '0' && ch != '1') throw Error(std::string("unexpected character '") + ch + "' in X");
    if (i + 1 < notation.size() && notation[i + 1] == '^') {
      std::size_t j = i + 2;
      const bool braced = j < notation.size() && notation[j] == '{';
      if (braced) ++j;
      std::size_t count = 0, digits = 0;
      while (j < notation.size() && std::isdigit(static_cast<unsigned char>(notation[j]))) {
        count = count * 10 + static_cast<std::size_t>(notation[j] - '0');
        ++j;
        ++digits;
      }
      if (digits == 0) throw Error("repetition without a count in X");
      if (braced) {
        if (j >= notation.size() || notation[j] != '}') throw Error("unterminated '{' in X");
        ++j;
      }
      bits.append(count, ch);
      i = j;
      continue;
    }
    bits += ch;
    ++i;
  }
  if (bits.size() != n)
    throw Error("X expands to " + std::to_string(bits.size()) + " bits, expected " +
                std::to_string(n));
  return BitVector::from_string(bits);
}

std::vector<std::string> repetition_variants(std::string_view notation) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < notation.size(); ++i)
    if (notation[i + 1] == '^' && (notation[i] == '0' || notation[i] == '1')) {
      std::string v(notation);
      v[i] = notation[i] == '0' ? '1' : '0';
      out.push_back(std::move(v));
    }
  return out;
}

BinaryCode extend(const BinaryMatrix& g, const BitVector& x) {
  const std::size_t n = g.cols();
  if (x.size() != n) throw Error("X has length " + std::to_string(x.size()) + ", expected " + std::to_string(n));
  if (x.weight() % 2 == 0) throw Error("X must satisfy <X,X> = 1, i.e. have odd weight");
  if (!is_self_dual(BinaryCode(g))) throw Error("extension requires a self-dual base code");

  BinaryMatrix out(0, n + 2);
  out.append_row(BitVector::from_string("10").concat(x));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const bool y = inner_product(g.row(i), x);
    BitVector head(2);
    head.set(0, y);
    head.set(1, y);
    out.append_row(head.concat(g.row(i)));
  }
  BinaryCode code(std::move(out));
  if (!is_self_dual(code)) throw Error("extension output is not self-dual");
  return code;
}

}  // namespace sdc
