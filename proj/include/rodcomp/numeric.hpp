// Copyright 2026 the rodcomp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "rodcomp/errors.hpp"

namespace rodcomp {

// All exact arithmetic runs on arbitrary-precision integers; nothing in the
// core library touches floating point except the volume constants.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

using Vec3 = std::array<Int, 3>;
using Rat3 = std::array<Rat, 3>;

/// Rational constructor that tolerates negative/zero denominators
/// (boost::rational rejects negative denominators for multiprecision types).
Rat make_rat(Int num, Int den);

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/// gcd(|a|,|b|), gcd(0,0) = 0.
Int gcd_int(Int a, Int b);

/// Extended gcd: returns g = gcd(|a|,|b|) >= 0 and (x, y) with a*x + b*y = g.
/// Deterministic (standard iterative algorithm).
struct Egcd {
  Int g, x, y;
};
Egcd egcd(Int a, Int b);

/// Floor division (quotient rounded toward -infinity); requires b > 0.
Int floor_div(const Int& a, const Int& b);

/// Floor remainder in [0, b); requires b > 0.
Int floor_mod(const Int& a, const Int& b);

// Exact 3-vector helpers.
Vec3 cross(const Vec3& a, const Vec3& b);
Int dot(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
Vec3 negate(const Vec3& v);

/// gcd of the absolute values of the entries.
Int content(const Vec3& v);

/// Reduces x into [0,1).
Rat mod_one(const Rat& x);

/// Parses "num/den" or "num" (den > 0 after normalization; "1/0" is an
/// error here, projective slopes have their own parser).
Rat parse_rational(std::string_view text);

/// Canonical "num/den" or "num" when den == 1.
std::string format_rational(const Rat& r);

std::string format_int(const Int& v);
Int parse_int(std::string_view text);

}  // namespace rodcomp
