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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rodcomp/farey.hpp"
#include "rodcomp/lattice.hpp"
#include "rodcomp/unimodular.hpp"

namespace rodcomp {

/// k <= 3 primitive integer direction vectors, linearly independent over Q.
class DirectionFamily {
 public:
  explicit DirectionFamily(std::vector<Vec3> vectors);

  int k() const { return static_cast<int>(vectors_.size()); }
  const std::vector<Vec3>& vectors() const { return vectors_; }
  const Vec3& at(int i) const { return vectors_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Vec3> vectors_;
};

/// A matrix A with |det A| = 1 and A * v_i = signs[i] * w_i for all i.
/// The invariants are asserted on construction.
struct EquivalenceWitness {
  IntMatrix3 matrix;
  std::vector<int> signs;  // each +1 or -1

  static EquivalenceWitness checked(IntMatrix3 m, std::vector<int> signs,
                                    const DirectionFamily& v, const DirectionFamily& w);
};

// GL_3(Z)-orbit tests for direction-subspace families. The search runs over
// det = +-1 and quotients by global sign in reporting, since A and -A induce
// the same map on subspaces. Primitivity forces A * v_i = +-w_i: with
// A integral, A v_i = c w_i has integer c (w_i primitive), and A^{-1}
// integral gives integer 1/c, so c = +-1.

/// k = 3: for each sign pattern the candidate matrix is unique over Q;
/// accept iff it is integral with |det| = 1.
std::optional<EquivalenceWitness> equivalent_k3(const DirectionFamily& v,
                                                const DirectionFamily& w);

/// k = 2: accept iff v_i -> e_i w_i maps the saturation of span(v) onto the
/// saturation of span(w) with determinant +-1 in lattice bases; on success
/// the map is extended to Z^3 through basis completions.
std::optional<EquivalenceWitness> equivalent_k2(const DirectionFamily& v,
                                                const DirectionFamily& w);

/// k = 1: always succeeds (every two single-geodesic complements are
/// homeomorphic); the witness is B_w * B_v^{-1} for basis completions.
EquivalenceWitness equivalent_k1(const DirectionFamily& v, const DirectionFamily& w);

/// Dispatch on k = family size.
std::optional<EquivalenceWitness> equivalent_families(const DirectionFamily& v,
                                                      const DirectionFamily& w);

/// Result of the decision procedure on two rod collections.
struct HomeoReport {
  int k = 0;
  bool homeomorphic = false;
  std::optional<EquivalenceWitness> witness;
  /// Matching used when permutations are allowed: component i of the first
  /// collection corresponds to component matching[i] of the second.
  std::vector<int> matching;
  bool permutations_allowed = false;
  /// Re-verified witness facts (|det|, per-component mapping checks).
  std::vector<std::string> verification;
};

/// Decides homeomorphism of the rod complements via the direction families.
/// Requires 1 <= k <= 3 rods on each side, equal k, linearly independent
/// directions and pairwise disjoint rods within each side.
HomeoReport homeo_decision(const std::vector<Rod>& a, const std::vector<Rod>& b,
                           bool allow_permutation);

/// 2D analog on slope pairs: A * g_i = e_i * h_i over the sign patterns up
/// to global sign; accept iff integral with |det| = 1. The slopes within
/// each pair must be distinct.
std::optional<Moebius2> equivalent_pairs_2d(const Slope& g1, const Slope& g2,
                                            const Slope& h1, const Slope& h2);

/// Exhaustive oracle: enumerates integer matrices with entries in
/// [-bound, bound] in row-major lexicographic order, keeps |det| = 1, and
/// tests the subspace-mapping condition A * v_i parallel to w_i. Returns the
/// first (lexicographically smallest) witness; "none" is conclusive only
/// relative to the bound.
std::optional<EquivalenceWitness> brute_force_orbit_search(const DirectionFamily& v,
                                                           const DirectionFamily& w,
                                                           int bound);

}  // namespace rodcomp
