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

#include "rodcomp/farey.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>
#include <utility>

namespace rodcomp {

Slope::Slope(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) {
    throw InvalidInputError("slope (0, 0) is not a point of P^1(Q)");
  }
  Int g = gcd_int(p_, q_);
  p_ /= g;
  q_ /= g;
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

bool operator<(const Slope& a, const Slope& b) {
  if (a.is_infinity()) {
    return !b.is_infinity();
  }
  if (b.is_infinity()) {
    return false;
  }
  return a.p_ * b.q_ < b.p_ * a.q_;
}

std::string Slope::str() const { return p_.str() + "/" + q_.str(); }

Slope Slope::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Slope(parse_int(text), 1);
  }
  return Slope(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool is_neighbor(const Slope& x, const Slope& y) {
  return abs_int(x.num() * y.den() - x.den() * y.num()) == 1;
}

Moebius2::Moebius2(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (abs_int(det()) != 1) {
    throw InvalidInputError("Moebius map must have determinant +-1");
  }
}

Moebius2 Moebius2::inverse() const {
  if (det() == 1) {
    return Moebius2(d_, -b_, -c_, a_);
  }
  return Moebius2(-d_, b_, c_, -a_);
}

bool Moebius2::same_class(const Moebius2& other) const {
  bool eq = a_ == other.a_ && b_ == other.b_ && c_ == other.c_ && d_ == other.d_;
  bool neg = a_ == -other.a_ && b_ == -other.b_ && c_ == -other.c_ && d_ == -other.d_;
  return eq || neg;
}

Slope apply_moebius(const Moebius2& m, const Slope& x) {
  return Slope(m.a() * x.num() + m.b() * x.den(), m.c() * x.num() + m.d() * x.den());
}

Moebius2 complete_to_unimodular_2(const Int& p, const Int& q) {
  if (gcd_int(p, q) != 1) {
    throw InvalidInputError("cannot complete non-coprime pair (" + p.str() + ", " +
                            q.str() + ") to a unimodular matrix");
  }
  if (q == 0) {
    return Moebius2(p, 0, 0, 1);  // p = +-1
  }
  if (p == 0) {
    return Moebius2(0, -1, q, 0);  // q = +-1
  }
  Egcd e = egcd(p, q);
  // First column (p, q), second (e.y, -e.x); det = -(p*e.x + q*e.y) = -1.
  return Moebius2(p, e.y, q, -e.x);
}

void FareyPath::validate() const {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!is_neighbor(vertices[i], vertices[i + 1])) {
      throw InternalError("Farey path vertices " + vertices[i].str() + " and " +
                          vertices[i + 1].str() + " are not neighbors");
    }
  }
  if (!vertices.empty() &&
      edge_count() != farey_distance(vertices.front(), vertices.back())) {
    throw InternalError("Farey path is not geodesic");
  }
}

namespace detail {

std::vector<Int> shortest_integer_cf(Int p, Int q) {
  if (q <= 0) {
    throw InternalError("shortest_integer_cf requires a positive denominator");
  }
  // Regular expansion: all partial quotients after the first are >= 1 and
  // the last is >= 2 whenever there is more than one.
  std::vector<Int> cf;
  while (q != 0) {
    Int a = floor_div(p, q);
    cf.push_back(a);
    Int r = p - a * q;
    p = std::move(q);
    q = std::move(r);
  }
  // Singularization: [..., A, s, B, tail] with s = +-1 rewrites to
  // [..., A+s, -(B+s), -tail], shortening by one; a trailing +-1 folds into
  // its predecessor. Tail negation can re-expose new +-1 entries (and the
  // occasional 0, which merges its neighbors), so rescan from the left
  // until no quotient of absolute value <= 1 remains past position 0.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < cf.size(); ++i) {
      if (cf[i] == 1 || cf[i] == -1) {
        Int s = cf[i];
        if (i + 1 == cf.size()) {
          cf[i - 1] += s;
          cf.pop_back();
        } else {
          cf[i - 1] += s;
          cf[i + 1] = -(cf[i + 1] + s);
          cf.erase(cf.begin() + static_cast<std::ptrdiff_t>(i));
          for (std::size_t j = i + 1; j < cf.size(); ++j) {
            cf[j] = -cf[j];
          }
        }
        changed = true;
        break;
      }
      if (cf[i] == 0) {
        if (i + 1 == cf.size()) {
          throw InternalError("trailing zero partial quotient");
        }
        cf[i - 1] += cf[i + 1];
        cf.erase(cf.begin() + static_cast<std::ptrdiff_t>(i),
                 cf.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return cf;
}

}  // namespace detail

std::size_t farey_distance(const Slope& x, const Slope& y) {
  if (x == y) {
    return 0;
  }
  // Send y to infinity by a unimodular map; the distance becomes the length
  // of a shortest integer continued fraction of the image of x.
  Moebius2 to_y = complete_to_unimodular_2(y.num(), y.den());
  Slope xi = apply_moebius(to_y.inverse(), x);
  return detail::shortest_integer_cf(xi.num(), xi.den()).size();
}

FareyPath farey_geodesic_path(const Slope& x, const Slope& y) {
  FareyPath path;
  if (x == y) {
    path.vertices = {x};
    return path;
  }
  Moebius2 to_y = complete_to_unimodular_2(y.num(), y.den());
  Slope xi = apply_moebius(to_y.inverse(), x);
  std::vector<Int> cf = detail::shortest_integer_cf(xi.num(), xi.den());
  // Convergents of the shortest expansion, prefixed with infinity, are the
  // geodesic from infinity to the image of x; map back and reverse.
  std::vector<Slope> verts;
  verts.reserve(cf.size() + 1);
  verts.push_back(Slope::infinity());
  Int h1 = 1, h2 = 0;  // h_{i-1}, h_{i-2}
  Int k1 = 0, k2 = 1;
  for (const Int& a : cf) {
    Int h = a * h1 + h2;
    Int k = a * k1 + k2;
    verts.emplace_back(h, k);
    h2 = std::move(h1);
    h1 = std::move(h);
    k2 = std::move(k1);
    k1 = std::move(k);
  }
  path.vertices.reserve(verts.size());
  for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
    path.vertices.push_back(apply_moebius(to_y, *it));
  }
  return path;
}

namespace {

using std::int64_t;

int64_t floor_div_i64(int64_t a, int64_t b) {
  int64_t q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

struct SmallSlope {
  int64_t p, q;  // canonical: q > 0, or (1, 0)
};

SmallSlope canonical_small(int64_t p, int64_t q) {
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return SmallSlope{p, q};
}

int64_t key_of(const SmallSlope& s, int64_t cap) {
  return (s.p + cap) * (cap + 1) + s.q;
}

// Enumerates the neighbors of a canonical slope inside the cap box.
// Neighbors of p/q are (r0 + t*p)/(s0 + t*q) for any base solution of
// p*s - q*r = 1; the determinant -1 family is the same set projectively.
template <typename Fn>
void for_each_neighbor(const SmallSlope& v, int64_t cap, Fn&& fn) {
  if (v.q == 0) {  // infinity: neighbors are exactly the integers
    for (int64_t n = -cap; n <= cap; ++n) {
      fn(SmallSlope{n, 1});
    }
    return;
  }
  Egcd e = egcd(Int(v.p), Int(v.q));
  int64_t r0 = -static_cast<int64_t>(e.y);
  int64_t s0 = static_cast<int64_t>(e.x);
  int64_t t_min = floor_div_i64(-cap - s0 + v.q - 1, v.q);  // ceil((-cap - s0)/q)
  int64_t t_max = floor_div_i64(cap - s0, v.q);
  for (int64_t t = t_min; t <= t_max; ++t) {
    int64_t r = r0 + t * v.p;
    int64_t s = s0 + t * v.q;
    if (r > cap || r < -cap) {
      continue;
    }
    fn(canonical_small(r, s));
  }
}

}  // namespace

namespace detail {

std::optional<std::size_t> farey_bfs_distance(const Slope& x, const Slope& y,
                                              int64_t cap) {
  SmallSlope src{static_cast<int64_t>(x.num()), static_cast<int64_t>(x.den())};
  SmallSlope dst{static_cast<int64_t>(y.num()), static_cast<int64_t>(y.den())};
  if (src.p == dst.p && src.q == dst.q) {
    return 0;
  }
  int64_t dst_key = key_of(dst, cap);
  std::unordered_map<int64_t, std::size_t> dist;
  std::deque<SmallSlope> queue;
  dist.emplace(key_of(src, cap), 0);
  queue.push_back(src);
  while (!queue.empty()) {
    SmallSlope u = queue.front();
    queue.pop_front();
    std::size_t du = dist.at(key_of(u, cap));
    std::optional<std::size_t> found;
    for_each_neighbor(u, cap, [&](const SmallSlope& w) {
      int64_t kw = key_of(w, cap);
      if (dist.emplace(kw, du + 1).second) {
        if (kw == dst_key) {
          found = du + 1;
        }
        queue.push_back(w);
      }
    });
    if (found) {
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace detail

std::size_t farey_distance_oracle(const Slope& x, const Slope& y, const Int& cap,
                                  std::int64_t max_cap) {
  if (cap < 1) {
    throw InvalidInputError("oracle cap must be >= 1");
  }
  if (max_cap < 1) {
    throw InvalidInputError("oracle maximum cap must be >= 1");
  }
  Int coord_bound = abs_int(x.num());
  coord_bound = std::max(coord_bound, x.den());
  coord_bound = std::max(coord_bound, abs_int(y.num()));
  coord_bound = std::max(coord_bound, y.den());
  Int start = std::max(cap, Int(coord_bound + 1));
  if (start > max_cap) {
    throw ResourceLimitError("oracle cap " + start.str() + " exceeds the maximum " +
                             std::to_string(max_cap));
  }
  int64_t c = static_cast<int64_t>(start);
  std::optional<std::size_t> prev = detail::farey_bfs_distance(x, y, c);
  while (true) {
    if (c > max_cap / 2) {
      throw ResourceLimitError("oracle distance did not stabilize below cap " +
                               std::to_string(max_cap));
    }
    c *= 2;
    std::optional<std::size_t> next = detail::farey_bfs_distance(x, y, c);
    if (prev && next && *prev == *next) {
      return *next;
    }
    prev = next;
  }
}

}  // namespace rodcomp
