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

#include "rodcomp/homeo.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace rodcomp {

DirectionFamily::DirectionFamily(std::vector<Vec3> vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty() || vectors_.size() > 3) {
    throw UnsupportedCaseError(
        "direction families must have 1 to 3 components (theorem hypothesis)");
  }
  for (const auto& v : vectors_) {
    if (is_zero(v) || content(v) != 1) {
      throw InvalidInputError("direction family vectors must be primitive");
    }
  }
  bool independent = true;
  if (vectors_.size() == 2) {
    independent = !is_zero(cross(vectors_[0], vectors_[1]));
  } else if (vectors_.size() == 3) {
    independent =
        det3(IntMatrix3::from_columns(vectors_[0], vectors_[1], vectors_[2])) != 0;
  }
  if (!independent) {
    throw UnsupportedCaseError(
        "direction vectors must be linearly independent (theorem hypothesis)");
  }
}

EquivalenceWitness EquivalenceWitness::checked(IntMatrix3 m, std::vector<int> signs,
                                               const DirectionFamily& v,
                                               const DirectionFamily& w) {
  if (abs_int(det3(m)) != 1) {
    throw InternalError("witness matrix is not unimodular");
  }
  if (static_cast<int>(signs.size()) != v.k() || v.k() != w.k()) {
    throw InternalError("witness sign count mismatch");
  }
  for (int i = 0; i < v.k(); ++i) {
    Vec3 image = m.apply(v.at(i));
    Vec3 expect = signs[static_cast<std::size_t>(i)] == 1 ? w.at(i) : negate(w.at(i));
    if (image != expect) {
      throw InternalError("witness does not map direction " + std::to_string(i));
    }
  }
  return EquivalenceWitness{std::move(m), std::move(signs)};
}

namespace {

// Whether num * adj / den is integral; fills `out` when it is.
bool integral_quotient(const IntMatrix3& num, const Int& den, IntMatrix3& out) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (num.at(r, c) % den != 0) {
        return false;
      }
      out.at(r, c) = num.at(r, c) / den;
    }
  }
  return true;
}

IntMatrix3 scale_columns(const IntMatrix3& m, int e0, int e1, int e2) {
  auto flip = [](Vec3 v, int e) { return e == 1 ? v : negate(v); };
  return IntMatrix3::from_columns(flip(m.column(0), e0), flip(m.column(1), e1),
                                  flip(m.column(2), e2));
}

}  // namespace

std::optional<EquivalenceWitness> equivalent_k3(const DirectionFamily& v,
                                                const DirectionFamily& w) {
  if (v.k() != 3 || w.k() != 3) {
    throw InvalidInputError("equivalent_k3 requires families of three directions");
  }
  IntMatrix3 vm = IntMatrix3::from_columns(v.at(0), v.at(1), v.at(2));
  IntMatrix3 wm = IntMatrix3::from_columns(w.at(0), w.at(1), w.at(2));
  Int dv = det3(vm);
  if (abs_int(dv) != abs_int(det3(wm))) {
    return std::nullopt;  // |det A| = |det W| / |det V| could not be 1
  }
  IntMatrix3 adj_v = adjugate(vm);
  // A v_i = e_i w_i forces A = W diag(e) V^{-1}; e_1 = +1 up to global sign.
  for (std::array<int, 3> e : {std::array<int, 3>{1, 1, 1}, std::array<int, 3>{1, 1, -1},
                               std::array<int, 3>{1, -1, 1}, std::array<int, 3>{1, -1, -1}}) {
    IntMatrix3 numerator = scale_columns(wm, e[0], e[1], e[2]) * adj_v;
    IntMatrix3 a;
    if (!integral_quotient(numerator, dv, a)) {
      continue;
    }
    if (abs_int(det3(a)) != 1) {
      continue;
    }
    return EquivalenceWitness::checked(std::move(a), {e[0], e[1], e[2]}, v, w);
  }
  return std::nullopt;
}

namespace {

// Integer coordinates of v in a rank-2 basis (v must lie in the saturation).
std::array<Int, 2> coords_in_basis(const std::vector<Vec3>& basis, const Vec3& v) {
  const Vec3& b0 = basis[0];
  const Vec3& b1 = basis[1];
  for (int r = 0; r < 3; ++r) {
    for (int s = r + 1; s < 3; ++s) {
      auto ri = static_cast<std::size_t>(r), si = static_cast<std::size_t>(s);
      Int minor = b0[ri] * b1[si] - b0[si] * b1[ri];
      if (minor == 0) {
        continue;
      }
      Int x0 = v[ri] * b1[si] - v[si] * b1[ri];
      Int x1 = b0[ri] * v[si] - b0[si] * v[ri];
      if (x0 % minor != 0 || x1 % minor != 0) {
        break;  // not in the lattice spanned by the basis
      }
      x0 /= minor;
      x1 /= minor;
      Vec3 check{b0[0] * x0 + b1[0] * x1, b0[1] * x0 + b1[1] * x1,
                 b0[2] * x0 + b1[2] * x1};
      if (check != v) {
        break;
      }
      return {x0, x1};
    }
  }
  throw InternalError("vector is not an integer combination of the sublattice basis");
}

}  // namespace

std::optional<EquivalenceWitness> equivalent_k2(const DirectionFamily& v,
                                                const DirectionFamily& w) {
  if (v.k() != 2 || w.k() != 2) {
    throw InvalidInputError("equivalent_k2 requires families of two directions");
  }
  Sublattice lv = saturate({v.at(0), v.at(1)});
  Sublattice lw = saturate({w.at(0), w.at(1)});
  auto x0 = coords_in_basis(lv.basis, v.at(0));
  auto x1 = coords_in_basis(lv.basis, v.at(1));
  auto y0 = coords_in_basis(lw.basis, w.at(0));
  auto y1 = coords_in_basis(lw.basis, w.at(1));
  Int dx = x0[0] * x1[1] - x0[1] * x1[0];  // nonzero: v spans the plane
  // Sign patterns up to global sign; phi: v_i -> e_i w_i must map the
  // saturation onto the saturation with determinant +-1 in these bases.
  for (std::array<int, 2> e : {std::array<int, 2>{1, 1}, std::array<int, 2>{1, -1}}) {
    std::array<Int, 2> z0{y0[0] * e[0], y0[1] * e[0]};
    std::array<Int, 2> z1{y1[0] * e[1], y1[1] * e[1]};
    // M = Z * adj(X) / det(X), 2x2.
    std::array<std::array<Int, 2>, 2> num;
    num[0][0] = z0[0] * x1[1] - z1[0] * x0[1];
    num[0][1] = -z0[0] * x1[0] + z1[0] * x0[0];
    num[1][0] = z0[1] * x1[1] - z1[1] * x0[1];
    num[1][1] = -z0[1] * x1[0] + z1[1] * x0[0];
    bool integral = true;
    std::array<std::array<Int, 2>, 2> m;
    for (int r = 0; r < 2 && integral; ++r) {
      for (int c = 0; c < 2 && integral; ++c) {
        auto rr = static_cast<std::size_t>(r), cc = static_cast<std::size_t>(c);
        integral = num[rr][cc] % dx == 0;
        if (integral) {
          m[rr][cc] = num[rr][cc] / dx;
        }
      }
    }
    if (!integral || abs_int(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 1) {
      continue;
    }
    // Extend to Z^3: basis vectors map through M, third completion vector to
    // the third completion vector.
    IntMatrix3 cv = complete_sublattice_to_basis(lv);
    IntMatrix3 cw = complete_sublattice_to_basis(lw);
    Vec3 img0 = add(
        Vec3{lw.basis[0][0] * m[0][0], lw.basis[0][1] * m[0][0], lw.basis[0][2] * m[0][0]},
        Vec3{lw.basis[1][0] * m[1][0], lw.basis[1][1] * m[1][0], lw.basis[1][2] * m[1][0]});
    Vec3 img1 = add(
        Vec3{lw.basis[0][0] * m[0][1], lw.basis[0][1] * m[0][1], lw.basis[0][2] * m[0][1]},
        Vec3{lw.basis[1][0] * m[1][1], lw.basis[1][1] * m[1][1], lw.basis[1][2] * m[1][1]});
    IntMatrix3 d = IntMatrix3::from_columns(img0, img1, cw.column(2));
    IntMatrix3 a = d * cv.inverse_unimodular();
    return EquivalenceWitness::checked(std::move(a), {e[0], e[1]}, v, w);
  }
  return std::nullopt;
}

EquivalenceWitness equivalent_k1(const DirectionFamily& v, const DirectionFamily& w) {
  if (v.k() != 1 || w.k() != 1) {
    throw InvalidInputError("equivalent_k1 requires single directions");
  }
  IntMatrix3 bv = complete_primitive_to_basis(v.at(0));
  IntMatrix3 bw = complete_primitive_to_basis(w.at(0));
  IntMatrix3 a = bw * bv.inverse_unimodular();
  return EquivalenceWitness::checked(std::move(a), {1}, v, w);
}

std::optional<EquivalenceWitness> equivalent_families(const DirectionFamily& v,
                                                      const DirectionFamily& w) {
  if (v.k() != w.k()) {
    throw InvalidInputError("families have different component counts");
  }
  switch (v.k()) {
    case 1:
      return equivalent_k1(v, w);
    case 2:
      return equivalent_k2(v, w);
    default:
      return equivalent_k3(v, w);
  }
}

HomeoReport homeo_decision(const std::vector<Rod>& a, const std::vector<Rod>& b,
                           bool allow_permutation) {
  if (a.size() != b.size()) {
    throw UnsupportedCaseError("rod collections have different component counts");
  }
  if (a.empty() || a.size() > 3) {
    throw UnsupportedCaseError(
        "the classification applies to 1 to 3 linearly independent closed geodesics");
  }
  for (const auto* side : {&a, &b}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        if (!rods_disjoint((*side)[i], (*side)[j])) {
          throw InvalidInputError("rods " + std::to_string(i) + " and " +
                                  std::to_string(j) +
                                  " are not disjoint (theorem hypothesis)");
        }
      }
    }
  }
  auto directions = [](const std::vector<Rod>& rods) {
    std::vector<Vec3> out;
    out.reserve(rods.size());
    for (const auto& r : rods) {
      out.push_back(r.direction());
    }
    return out;
  };
  DirectionFamily va(directions(a));
  std::vector<Vec3> wb = directions(b);

  HomeoReport report;
  report.k = va.k();
  report.permutations_allowed = allow_permutation;

  std::vector<int> perm(wb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Vec3> permuted;
    permuted.reserve(wb.size());
    for (int idx : perm) {
      permuted.push_back(wb[static_cast<std::size_t>(idx)]);
    }
    DirectionFamily wfam(std::move(permuted));
    if (auto witness = equivalent_families(va, wfam)) {
      report.homeomorphic = true;
      report.witness = witness;
      report.matching = perm;
      Int det = det3(witness->matrix);
      report.verification.push_back("det(A) = " + det.str());
      for (int i = 0; i < va.k(); ++i) {
        std::ostringstream os;
        os << "A * d" << i << " = " << (witness->signs[static_cast<std::size_t>(i)] == 1 ? "+" : "-")
           << "d'" << perm[static_cast<std::size_t>(i)] << " verified";
        report.verification.push_back(os.str());
      }
      return report;
    }
    if (!allow_permutation) {
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  report.homeomorphic = false;
  return report;
}

std::optional<Moebius2> equivalent_pairs_2d(const Slope& g1, const Slope& g2,
                                            const Slope& h1, const Slope& h2) {
  if (g1 == g2 || h1 == h2) {
    throw InvalidInputError("slope pairs must consist of distinct projective classes");
  }
  Int det_g = g1.num() * g2.den() - g1.den() * g2.num();
  for (int e : {1, -1}) {
    // A [g1 g2] = [h1 e*h2]; A = H adj(G) / det(G).
    Int h1p = h1.num(), h1q = h1.den();
    Int h2p = h2.num() * e, h2q = h2.den() * e;
    Int a = h1p * g2.den() - h2p * g1.den();
    Int b = -h1p * g2.num() + h2p * g1.num();
    Int c = h1q * g2.den() - h2q * g1.den();
    Int d = -h1q * g2.num() + h2q * g1.num();
    if (a % det_g != 0 || b % det_g != 0 || c % det_g != 0 || d % det_g != 0) {
      continue;
    }
    a /= det_g;
    b /= det_g;
    c /= det_g;
    d /= det_g;
    if (abs_int(a * d - b * c) != 1) {
      continue;
    }
    return Moebius2(a, b, c, d);
  }
  return std::nullopt;
}

namespace {

// Enumerates every 3x3 integer matrix with entries in [-bound, bound] and
// |det| = 1. The row-major entry tuple is emitted in lexicographically
// ascending order after sorting, so scans return the smallest witness.
using PackedMatrix = std::array<std::int8_t, 9>;

std::shared_ptr<const std::vector<PackedMatrix>> unimodular_matrices(int bound) {
  static std::mutex mtx;
  static std::map<int, std::shared_ptr<const std::vector<PackedMatrix>>> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(bound);
    if (it != cache.end()) {
      return it->second;
    }
  }
  auto list = std::make_shared<std::vector<PackedMatrix>>();
  const auto lo = static_cast<std::int64_t>(-bound);
  const auto hi = static_cast<std::int64_t>(bound);
  for (std::int64_t d = lo; d <= hi; ++d)
    for (std::int64_t e = lo; e <= hi; ++e)
      for (std::int64_t f = lo; f <= hi; ++f)
        for (std::int64_t g = lo; g <= hi; ++g)
          for (std::int64_t h = lo; h <= hi; ++h)
            for (std::int64_t i = lo; i <= hi; ++i) {
              const std::int64_t m1 = e * i - f * h;
              const std::int64_t m2 = d * i - f * g;
              const std::int64_t m3 = d * h - e * g;
              for (std::int64_t a = lo; a <= hi; ++a)
                for (std::int64_t b = lo; b <= hi; ++b)
                  for (std::int64_t c = lo; c <= hi; ++c) {
                    const std::int64_t det = a * m1 - b * m2 + c * m3;
                    if (det == 1 || det == -1) {
                      list->push_back(PackedMatrix{
                          static_cast<std::int8_t>(a), static_cast<std::int8_t>(b),
                          static_cast<std::int8_t>(c), static_cast<std::int8_t>(d),
                          static_cast<std::int8_t>(e), static_cast<std::int8_t>(f),
                          static_cast<std::int8_t>(g), static_cast<std::int8_t>(h),
                          static_cast<std::int8_t>(i)});
                    }
                  }
            }
  std::sort(list->begin(), list->end());
  std::lock_guard<std::mutex> lock(mtx);
  auto [it, inserted] = cache.emplace(bound, std::move(list));
  return it->second;
}

}  // namespace

std::optional<EquivalenceWitness> brute_force_orbit_search(const DirectionFamily& v,
                                                           const DirectionFamily& w,
                                                           int bound) {
  if (bound < 1) {
    throw InvalidInputError("brute-force bound must be >= 1");
  }
  if (bound > 4) {
    throw ResourceLimitError("brute-force bound above 4 is not tractable");
  }
  if (v.k() != w.k()) {
    throw InvalidInputError("families have different component counts");
  }
  const int k = v.k();
  // The family entries stay well inside int64 range for any realistic input;
  // matrices have entries <= 4, so products cannot overflow.
  std::array<std::array<std::int64_t, 3>, 3> vv{}, ww{};
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < 3; ++c) {
      const Int& ve = v.at(i)[static_cast<std::size_t>(c)];
      const Int& we = w.at(i)[static_cast<std::size_t>(c)];
      if (abs_int(ve) > (Int(1) << 40) || abs_int(we) > (Int(1) << 40)) {
        throw ResourceLimitError("family entries too large for the brute-force oracle");
      }
      vv[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
          static_cast<std::int64_t>(ve);
      ww[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
          static_cast<std::int64_t>(we);
    }
  }
  auto matrices = unimodular_matrices(bound);
  for (const PackedMatrix& pm : *matrices) {
    bool ok = true;
    std::array<int, 3> signs{1, 1, 1};
    for (int i = 0; i < k && ok; ++i) {
      const auto& x = vv[static_cast<std::size_t>(i)];
      std::array<std::int64_t, 3> u{
          pm[0] * x[0] + pm[1] * x[1] + pm[2] * x[2],
          pm[3] * x[0] + pm[4] * x[1] + pm[5] * x[2],
          pm[6] * x[0] + pm[7] * x[1] + pm[8] * x[2]};
      const auto& y = ww[static_cast<std::size_t>(i)];
      // Subspace condition: u parallel to y (and both nonzero).
      ok = u[1] * y[2] == u[2] * y[1] && u[2] * y[0] == u[0] * y[2] &&
           u[0] * y[1] == u[1] * y[0];
      if (ok) {
        int sign = 0;
        for (int c = 0; c < 3 && sign == 0; ++c) {
          auto cc = static_cast<std::size_t>(c);
          if (y[cc] != 0) {
            sign = u[cc] == y[cc] ? 1 : (u[cc] == -y[cc] ? -1 : 0);
          }
        }
        ok = sign != 0;  // |det| = 1 forces the ratio to be +-1
        signs[static_cast<std::size_t>(i)] = sign;
      }
    }
    if (!ok) {
      continue;
    }
    IntMatrix3 a;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        a.at(r, c) = Int(pm[static_cast<std::size_t>(3 * r + c)]);
      }
    }
    std::vector<int> sig(signs.begin(), signs.begin() + k);
    return EquivalenceWitness::checked(std::move(a), std::move(sig), v, w);
  }
  return std::nullopt;
}

}  // namespace rodcomp
