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

#include "rodcomp/numeric.hpp"

#include <sstream>
#include <utility>

namespace rodcomp {

Rat make_rat(Int num, Int den) {
  if (den == 0) {
    throw InvalidInputError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Egcd egcd(Int a, Int b) {
  // Invariants: old_r = a*old_x + b*old_y, r = a*x + b*y.
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division keeps the invariant
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_x - q * x;
    old_x = std::move(x);
    x = std::move(tmp);
    tmp = old_y - q * y;
    old_y = std::move(y);
    y = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return Egcd{std::move(old_r), std::move(old_x), std::move(old_y)};
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
              a[0] * b[1] - a[1] * b[0]};
}

Int dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Vec3 add(const Vec3& a, const Vec3& b) {
  return Vec3{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 sub(const Vec3& a, const Vec3& b) {
  return Vec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 negate(const Vec3& v) { return Vec3{-v[0], -v[1], -v[2]}; }

Int content(const Vec3& v) { return gcd_int(gcd_int(v[0], v[1]), v[2]); }

Rat mod_one(const Rat& x) {
  Int fl = floor_div(x.numerator(), x.denominator());
  return x - Rat(fl);
}

Int parse_int(std::string_view text) {
  if (text.empty()) {
    throw InvalidInputError("empty integer literal");
  }
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) {
    throw InvalidInputError("malformed integer literal '" + std::string(text) + "'");
  }
  Int value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw InvalidInputError("malformed integer literal '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return neg ? Int(-value) : value;
}

Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text));
  }
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw InvalidInputError("rational '" + std::string(text) + "' has zero denominator");
  }
  return make_rat(std::move(num), std::move(den));
}

std::string format_int(const Int& v) { return v.str(); }

std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) {
    return r.numerator().str();
  }
  return r.numerator().str() + "/" + r.denominator().str();
}

}  // namespace rodcomp
