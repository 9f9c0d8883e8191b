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

#include <string>
#include <vector>

#include "rodcomp/farey.hpp"
#include "rodcomp/numeric.hpp"

namespace rodcomp {

/// True for every nonzero rational vector: rational coordinates always span
/// a one-dimensional Q-vector space, so the projected geodesic closes up.
/// Kept as an explicit guard; throws on the zero vector.
bool direction_is_closed(const Rat3& d);

/// Primitive integer vector spanning the same line: clear denominators,
/// divide by the gcd, make the first nonzero entry positive.
Vec3 primitive_direction(const Rat3& d);

/// Sign-canonical form of a nonzero integer vector (first nonzero entry
/// positive); requires a primitive input elsewhere.
Vec3 canonical_sign(Vec3 v);

/// Closed geodesic in T^3 = R^3/Z^3: a rational base point taken mod Z^3
/// and a primitive integer direction, sign-canonical (geodesics are
/// unoriented). Non-primitive directions are rejected.
class Rod {
 public:
  Rod(const Rat3& base, const Vec3& direction);

  const Rat3& base() const { return base_; }
  const Vec3& direction() const { return dir_; }

  bool is_vertical() const;    // direction (0,0,1)
  bool is_horizontal() const;  // direction (p,q,0)
  /// Height s of a horizontal rod = third base coordinate in [0,1).
  const Rat& height() const { return base_[2]; }

  friend bool operator==(const Rod& a, const Rod& b) {
    return a.base_ == b.base_ && a.dir_ == b.dir_;
  }

 private:
  Rat3 base_;
  Vec3 dir_;
};

/// Totally geodesic 2-torus: base point and two direction vectors.
struct FlatTorus2 {
  Rat3 base;
  Vec3 dir1;
  Vec3 dir2;
};

/// True iff dir1, dir2 are linearly independent (rationality is structural),
/// so the plane projects to a totally geodesic 2-torus.
bool plane_projects_to_torus(const FlatTorus2& t);

/// Exact disjointness of the images in T^3. Parallel rods are disjoint
/// unless their images coincide; non-parallel rods intersect iff
/// (d1 x d2) . (b1 - b2) is an integer divisible by the content of d1 x d2.
bool rods_disjoint(const Rod& r1, const Rod& r2);

/// Same image in T^3 (requires parallel directions).
bool rods_coincident(const Rod& r1, const Rod& r2);

/// Slope [p:q] of a rod with direction (p, q, 0); throws otherwise.
Slope slope_of_horizontal(const Rod& r);

/// Ordered rod family: one vertical rod plus horizontal rods sorted by
/// strictly increasing height in (0,1), consecutive slopes distinct
/// (cyclically), all rods pairwise disjoint.
struct StratifiedConfig {
  std::vector<Rod> horizontal;  // sorted by height
  Rod vertical;

  std::vector<Slope> slopes() const;
};

/// One named validity check with its outcome, for itemized reports.
struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Runs every stratified-configuration check and reports them all.
std::vector<CheckItem> stratified_checks(const std::vector<Rod>& rods);

/// Validates and assembles a StratifiedConfig (rods given in any order);
/// throws InvalidInputError describing the first failed check. Requires at
/// least 3 rods, exactly one of them vertical.
StratifiedConfig validate_stratified(const std::vector<Rod>& rods);

}  // namespace rodcomp
