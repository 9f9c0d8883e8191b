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
#include <string>
#include <utility>
#include <vector>

#include "rodcomp/farey.hpp"
#include "rodcomp/lattice.hpp"

namespace rodcomp {

/// Which statement produced a bound; the corollaries carry an upper factor
/// of 2*v8 per slope-pair distance instead of the stratified v8.
enum class BoundStatement {
  kStratified,         // one octahedron per Farey edge
  kThreeRodOrthogonal, // upper factor 2*v8
  kFlowOrbits,         // upper factor 2*v8, cyclic ordered sum
};

const char* bound_statement_name(BoundStatement s);

/// Volume bounds in the shape "S/2 * (1/K1) <= Vol <= octahedra * v8".
/// K1 is a non-explicit universal constant and stays symbolic: the lower
/// bound is reported as an exact rational in units of 1/K1.
struct VolumeBounds {
  std::size_t farey_sum = 0;       // S, sum of Farey distances
  Rat lower_coeff;                 // exactly farey_sum / 2, in units of 1/K1
  std::size_t upper_octahedra = 0; // regular ideal octahedron count
  std::string upper_numeric_str;   // upper_octahedra * v8 at `digits` decimals
  double upper_numeric = 0.0;
  int digits = 12;
  BoundStatement statement = BoundStatement::kStratified;
};

/// v8 = 8 * Lob(pi/4), the volume of the regular ideal octahedron, as a
/// decimal string with `digits` places after the point (1 <= digits <= 50).
/// Internally cross-checked against 4 * Catalan from an independent series;
/// disagreement beyond 1e-12 raises InternalError.
std::string v8_constant(int digits);

/// |8*Lob(pi/4) - 4*Catalan| between the two internal series routes.
double v8_cross_check_error();

double v8_double();

/// Bounds for a validated stratified configuration:
/// S = sum of d_F over consecutive horizontal slopes, cyclically closed
/// (the slope after the last horizontal rod is the first one again).
VolumeBounds stratified_bounds(const StratifiedConfig& c, int digits = 12);

/// Three linearly independent rods where some signed permutation matrix
/// sends direction 3 to (0,0,1) and directions 1, 2 into the plane z = 0.
/// d = d_F of the two induced slopes; bounds d/2 * (1/K1) and 2*d*v8.
/// Throws UnsupportedCaseError when no signed permutation realizes this.
VolumeBounds three_rod_orthogonal_bounds(const Rod& r1, const Rod& r2, const Rod& r3,
                                         int digits = 12);

/// The drilling data behind the upper bound: between consecutive rods the
/// interior vertices of the Farey geodesic are materialized as auxiliary
/// horizontal rods at evenly spaced heights.
struct DrillStep {
  std::size_t from_index = 0;  // indices into the sorted horizontal rods
  std::size_t to_index = 0;
  FareyPath path;
  std::vector<Rod> auxiliary;  // one rod per interior path vertex
};

struct DrillPlan {
  std::vector<DrillStep> steps;
  std::size_t total_octahedra = 0;  // = sum of path edge counts = farey_sum
};

/// Builds the drill plan and verifies that the augmented configuration is
/// pairwise disjoint.
DrillPlan drill_plan(const StratifiedConfig& c);

/// Orders >= 2 distinct slopes by the exact value p/q with the vertical
/// slope [1:0] first, then sums d_F cyclically; bounds S/2 * (1/K1) and
/// 2*v8*S. Throws on duplicates or fewer than 2 slopes.
std::pair<std::vector<Slope>, VolumeBounds> flow_orbit_bounds(std::vector<Slope> slopes,
                                                              int digits = 12);

}  // namespace rodcomp
