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

#include "rodcomp/volume.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rodcomp/unimodular.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

namespace rodcomp {

namespace {

using Real = boost::multiprecision::cpp_dec_float_100;

// Lob(pi/4) = (1/2) * sum_{n>=1} sin(n*pi/2)/n^2; the sine pattern 1,0,-1,0
// reduces it to the alternating series (1/2) * sum_k (-1)^k/(2k+1)^2.
// Direct partial sums converge like 1/N, far too slowly for 50 digits, so
// the sum is accelerated with the Cohen-Rodriguez Villegas-Zagier scheme
// for alternating series of totally monotone terms; n terms give roughly
// n*log10(3+sqrt(8)) = 0.76*n digits.
Real lobachevsky_quarter_pi(unsigned n_terms) {
  const Real n(n_terms);
  Real d = pow(Real(3) + sqrt(Real(8)), n);
  d = (d + 1 / d) / 2;
  Real b = -1;
  Real c = -d;
  Real s = 0;
  for (unsigned k = 0; k < n_terms; ++k) {
    const Real ak = Real(1) / (Real(2 * k + 1) * Real(2 * k + 1));
    c = b - c;
    s += c * ak;
    b *= (Real(k) + n) * (Real(k) - n) / ((Real(k) + Real(0.5)) * (Real(k) + 1));
  }
  return s / d / 2;
}

// Catalan's constant through its standard alternating series
// sum_k (-1)^k/(2k+1)^2, summed smallest-term-first; the tail after K terms
// is below 1/(2K+1)^2.
long double catalan_alternating_naive() {
  constexpr long k_terms = 2'500'000;
  long double sum = 0.0L;
  for (long k = k_terms - 1; k >= 0; --k) {
    const long double term = 1.0L / ((2.0L * k + 1) * (2.0L * k + 1));
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

// Catalan's constant through the geometrically convergent identity
// G = (pi/8) log(2 + sqrt(3)) + (3/8) sum_k (k!)^2 / ((2k)! (2k+1)^2);
// used as a third route for the high-digit consistency check.
Real catalan_fast() {
  Real k_fact = 1;
  Real tk_fact = 1;
  Real sum = 1;
  const Real lim("1e-95");
  for (unsigned k = 1;; ++k) {
    k_fact *= k;
    tk_fact *= (2 * k) * (2 * k - 1);
    const Real term = k_fact * k_fact / (tk_fact * (2 * k + 1) * (2 * k + 1));
    sum += term;
    if (term < lim) {
      break;
    }
  }
  const Real pi = boost::math::constants::pi<Real>();
  return pi * log(Real(2) + sqrt(Real(3))) / 8 + 3 * sum / 8;
}

const Real& v8_full() {
  static const Real value = [] {
    // 140 accelerated terms give ~106 digits, beyond the working precision.
    const Real lob = lobachevsky_quarter_pi(140);
    const Real v8 = 8 * lob;
    const long double g_naive = catalan_alternating_naive();
    const long double diff =
        std::abs(static_cast<long double>(v8) - 4 * g_naive);
    if (diff > 1e-12L) {
      throw InternalError("octahedron volume series disagree beyond 1e-12");
    }
    if (abs(v8 - 4 * catalan_fast()) > Real("1e-90")) {
      throw InternalError("octahedron volume high-precision routes disagree");
    }
    return v8;
  }();
  return value;
}

void check_digits(int digits) {
  if (digits < 1 || digits > 50) {
    throw InvalidInputError("digits must be between 1 and 50");
  }
}

VolumeBounds make_bounds(std::size_t farey_sum, std::size_t octahedra, int digits,
                         BoundStatement statement) {
  check_digits(digits);
  VolumeBounds b;
  b.farey_sum = farey_sum;
  b.lower_coeff = make_rat(Int(farey_sum), 2);
  b.upper_octahedra = octahedra;
  const Real numeric = Real(octahedra) * v8_full();
  b.upper_numeric_str = numeric.str(digits, std::ios_base::fixed);
  b.upper_numeric = static_cast<double>(numeric);
  b.digits = digits;
  b.statement = statement;
  return b;
}

}  // namespace

const char* bound_statement_name(BoundStatement s) {
  switch (s) {
    case BoundStatement::kStratified:
      return "stratified-theorem";
    case BoundStatement::kThreeRodOrthogonal:
      return "three-rod-orthogonal-corollary";
    case BoundStatement::kFlowOrbits:
      return "flow-orbit-corollary";
  }
  return "unknown";
}

std::string v8_constant(int digits) {
  check_digits(digits);
  return v8_full().str(digits, std::ios_base::fixed);
}

double v8_cross_check_error() {
  const long double g_naive = catalan_alternating_naive();
  return static_cast<double>(
      std::abs(static_cast<long double>(v8_full()) - 4 * g_naive));
}

double v8_double() { return static_cast<double>(v8_full()); }

VolumeBounds stratified_bounds(const StratifiedConfig& c, int digits) {
  const std::vector<Slope> slopes = c.slopes();
  const std::size_t h = slopes.size();
  std::size_t sum = 0;
  for (std::size_t i = 0; i < h; ++i) {
    // Cyclic convention: the slope after the last horizontal rod is the
    // first one again.
    sum += farey_distance(slopes[i], slopes[(i + 1) % h]);
  }
  return make_bounds(sum, sum, digits, BoundStatement::kStratified);
}

namespace {

struct SignedPerm {
  std::array<int, 3> perm;
  std::array<int, 3> sign;

  Vec3 apply(const Vec3& v) const {
    Vec3 out;
    for (std::size_t r = 0; r < 3; ++r) {
      out[r] = Int(sign[r]) * v[static_cast<std::size_t>(perm[r])];
    }
    return out;
  }
};

// All 48 signed permutation matrices in a fixed deterministic order.
std::vector<SignedPerm> signed_permutations() {
  std::vector<SignedPerm> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    for (int s0 : {1, -1})
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          out.push_back(SignedPerm{p, {s0, s1, s2}});
        }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

VolumeBounds three_rod_orthogonal_bounds(const Rod& r1, const Rod& r2, const Rod& r3,
                                         int digits) {
  const Vec3& d1 = r1.direction();
  const Vec3& d2 = r2.direction();
  const Vec3& d3 = r3.direction();
  if (det3(IntMatrix3::from_columns(d1, d2, d3)) == 0) {
    throw InvalidInputError("the three rod directions must be linearly independent");
  }
  for (const auto* a : {&r1, &r2}) {
    for (const auto* b : {&r2, &r3}) {
      if (a != b && !rods_disjoint(*a, *b)) {
        throw InvalidInputError("rods must be pairwise disjoint");
      }
    }
  }
  static const std::vector<SignedPerm> perms = signed_permutations();
  const Vec3 vertical{0, 0, 1};
  for (const auto& sp : perms) {
    if (sp.apply(d3) != vertical) {
      continue;
    }
    Vec3 a = sp.apply(d1);
    Vec3 b = sp.apply(d2);
    if (a[2] != 0 || b[2] != 0) {
      continue;
    }
    std::size_t d = farey_distance(Slope(a[0], a[1]), Slope(b[0], b[1]));
    return make_bounds(d, 2 * d, digits, BoundStatement::kThreeRodOrthogonal);
  }
  throw UnsupportedCaseError(
      "no signed permutation maps direction 3 to (0,0,1) with directions 1 and 2 "
      "in the plane z = 0");
}

DrillPlan drill_plan(const StratifiedConfig& c) {
  const std::vector<Slope> slopes = c.slopes();
  const std::size_t h = slopes.size();
  const Rat& vx = c.vertical.base()[0];
  const Rat& vy = c.vertical.base()[1];

  DrillPlan plan;
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t j = (i + 1) % h;
    DrillStep step;
    step.from_index = i;
    step.to_index = j;
    step.path = farey_geodesic_path(slopes[i], slopes[j]);
    const Rat s_lo = c.horizontal[i].height();
    // The closing pair wraps past height 1.
    const Rat s_hi =
        j > i ? c.horizontal[j].height() : c.horizontal[j].height() + Rat(1);
    const std::size_t interior = step.path.vertices.size() - 2;
    for (std::size_t t = 1; t <= interior; ++t) {
      const Slope& s = step.path.vertices[t];
      const Rat height =
          s_lo + (s_hi - s_lo) * make_rat(Int(t), Int(interior + 1));
      // Base point off the vertical rod's circle: the offset (1/2, 0) misses
      // every slope circle with odd q, and (0, 1/2) those with even q.
      Rat bx = vx, by = vy;
      if (s.den() % 2 != 0) {
        bx += make_rat(1, 2);
      } else {
        by += make_rat(1, 2);
      }
      step.auxiliary.emplace_back(Rat3{bx, by, height}, Vec3{s.num(), s.den(), 0});
    }
    plan.total_octahedra += step.path.edge_count();
    plan.steps.push_back(std::move(step));
  }

  // The construction guarantees disjointness; verify anyway.
  std::vector<Rod> all;
  all.push_back(c.vertical);
  all.insert(all.end(), c.horizontal.begin(), c.horizontal.end());
  for (const auto& step : plan.steps) {
    all.insert(all.end(), step.auxiliary.begin(), step.auxiliary.end());
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!rods_disjoint(all[i], all[j])) {
        throw InternalError("drill plan produced intersecting rods");
      }
    }
  }
  return plan;
}

std::pair<std::vector<Slope>, VolumeBounds> flow_orbit_bounds(std::vector<Slope> slopes,
                                                              int digits) {
  if (slopes.size() < 2) {
    throw InvalidInputError("flow orbit bounds need at least 2 distinct slopes");
  }
  // Exact angle ordering: arctan(p/q) is monotone in p/q, and the vertical
  // slope [1:0] sorts first (angle -pi/2 in the half-open range).
  std::sort(slopes.begin(), slopes.end());
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
    if (slopes[i] == slopes[i + 1]) {
      throw InvalidInputError("slopes must be pairwise distinct (nonparallel curves), "
                              "got " + slopes[i].str() + " twice");
    }
  }
  std::size_t sum = 0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    sum += farey_distance(slopes[i], slopes[(i + 1) % slopes.size()]);
  }
  VolumeBounds b = make_bounds(sum, 2 * sum, digits, BoundStatement::kFlowOrbits);
  return {std::move(slopes), std::move(b)};
}

}  // namespace rodcomp
