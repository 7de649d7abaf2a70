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


// Gray-image generators of R2 lifts and the building-up extension of a binary
// self-dual code from length n to n + 2.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/gf2.hpp"
#include "sdc/r2.hpp"

namespace sdc {

/// Coordinate order of a Gray image. Standard is phi as defined; SwappedUV
/// exchanges the two middle n-bit blocks, which is phi applied after the
/// automorphism u <-> v. The length-66 extension table is stated in SwappedUV
/// coordinates.
enum class GrayLayout { Standard, SwappedUV };
std::string_view to_string(GrayLayout layout);
GrayLayout gray_layout_from_string(std::string_view s);

/// 4k x 4n generator: the Gray images of the rows of [I | K], then of their
/// u-, v- and uv-multiples, stacked in that order. Throws if the rows are
/// dependent.
BinaryMatrix build_gray_generator(const R2Matrix& k, GrayLayout layout = GrayLayout::Standard);

/// The binary code generated by build_gray_generator(k).
BinaryCode gray_image(const R2Matrix& k, GrayLayout layout = GrayLayout::Standard);

/// Literal bits followed by optional repetition groups "1^{m}" / "0^{m}"
/// (also accepted without braces). Whitespace is ignored. Throws unless the
/// expansion has exactly n bits.
BitVector expand_x(std::string_view notation, std::size_t n);

/// The notation with the digit of one repetition group complemented, one
/// variant per group ("0^{32}" <-> "1^{32}").
std::vector<std::string> repetition_variants(std::string_view notation);

/// Extends the self-dual code generated by g (k x n) to length n + 2 with the
/// vector x of odd weight:
///
///   ( 1    0   | x   )
///   ( y_i  y_i | r_i )   y_i = <r_i, x>
///
/// The unit c of the general construction is 1, the only unit of F2.
/// Throws on even-weight x or a non-self-dual g; the output's self-duality is
/// checked before returning.
BinaryCode extend(const BinaryMatrix& g, const BitVector& x);

}  // namespace sdc
