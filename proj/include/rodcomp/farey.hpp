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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rodcomp/numeric.hpp"

namespace rodcomp {

/// A point of the rational projective line P^1(Q) in canonical form:
/// gcd(|p|,|q|) = 1 and q > 0, except infinity which is (1, 0).
class Slope {
 public:
  /// Canonicalizes an arbitrary integer pair; (0,0) is invalid.
  Slope(Int p, Int q);

  static Slope infinity() { return Slope(1, 0); }
  static Slope zero() { return Slope(0, 1); }

  const Int& num() const { return p_; }
  const Int& den() const { return q_; }
  bool is_infinity() const { return q_ == 0; }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  /// Orders by the value p/q in (-inf, +inf], with infinity FIRST
  /// (the vertical slope takes the angle -pi/2 in the half-open range).
  friend bool operator<(const Slope& a, const Slope& b);

  /// "p/q", with "1/0" for infinity.
  std::string str() const;
  /// Accepts "p/q" or "p"; any integer pair is canonicalized.
  static Slope parse(std::string_view text);

 private:
  Int p_, q_;
};

/// Farey neighbors: |p*s - q*r| = 1, i.e. the closed geodesics meet once.
bool is_neighbor(const Slope& x, const Slope& y);

/// Element of GL_2(Z) acting on P^1(Q); |ad - bc| = 1 enforced, the class
/// is taken up to global sign.
class Moebius2 {
 public:
  Moebius2(Int a, Int b, Int c, Int d);
  static Moebius2 identity() { return Moebius2(1, 0, 0, 1); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }
  Int det() const { return a_ * d_ - b_ * c_; }

  Moebius2 inverse() const;
  /// Equality in PGL_2(Z) (up to global sign).
  bool same_class(const Moebius2& other) const;

 private:
  Int a_, b_, c_, d_;
};

/// Canonical slope of [a*p + b*q : c*p + d*q].
Slope apply_moebius(const Moebius2& m, const Slope& x);

/// Unimodular matrix with first column (p, q), built from the extended
/// Euclidean algorithm; requires gcd(|p|,|q|) = 1.
Moebius2 complete_to_unimodular_2(const Int& p, const Int& q);

/// Path in the Farey graph; vertices() of a geodesic path returned by
/// farey_geodesic_path are pairwise-consecutive neighbors and the edge
/// count equals the Farey distance of its endpoints.
struct FareyPath {
  std::vector<Slope> vertices;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  /// Checks both structural invariants; throws InternalError on violation.
  void validate() const;
};

/// Exact distance in the Farey graph, via reduction to distance-to-infinity
/// and a shortest integer continued fraction.
std::size_t farey_distance(const Slope& x, const Slope& y);

/// Deterministic geodesic from x to y (edge count = farey_distance(x, y)).
FareyPath farey_geodesic_path(const Slope& x, const Slope& y);

/// Default hard maximum for the oracle's cap doubling; can be overridden by
/// the RODCOMP_ORACLE_MAX_CAP environment variable (CLI) or the parameter.
inline constexpr std::int64_t kDefaultOracleMaxCap = 65536;

/// Independent BFS oracle: distance between x and y inside the subgraph of
/// slopes with |p| <= cap and q <= cap. The cap is doubled until two
/// consecutive doublings agree; that stabilized value is returned.
/// Throws ResourceLimitError when the cap would exceed max_cap.
std::size_t farey_distance_oracle(const Slope& x, const Slope& y, const Int& cap,
                                  std::int64_t max_cap = kDefaultOracleMaxCap);

namespace detail {
/// Shortest integer continued fraction of p/q (q >= 1), derived from the
/// regular expansion by repeated singularization of partial quotients
/// equal to +-1. The number of partial quotients equals the Farey distance
/// from p/q to infinity.
std::vector<Int> shortest_integer_cf(Int p, Int q);

/// Single BFS distance at a fixed cap (no doubling); exposed for tests.
std::optional<std::size_t> farey_bfs_distance(const Slope& x, const Slope& y,
                                              std::int64_t cap);
}  // namespace detail

}  // namespace rodcomp
