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

#include "rodcomp/unimodular.hpp"

#include <algorithm>
#include <utility>

namespace rodcomp {

IntMatrix3::IntMatrix3() : m_{Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}} {}

IntMatrix3 IntMatrix3::identity() {
  return from_columns(Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1});
}

IntMatrix3 IntMatrix3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  IntMatrix3 m;
  m.m_ = {c0, c1, c2};
  return m;
}

Vec3 IntMatrix3::apply(const Vec3& v) const {
  Vec3 out{0, 0, 0};
  for (int r = 0; r < 3; ++r) {
    out[static_cast<std::size_t>(r)] =
        m_[0][static_cast<std::size_t>(r)] * v[0] +
        m_[1][static_cast<std::size_t>(r)] * v[1] +
        m_[2][static_cast<std::size_t>(r)] * v[2];
  }
  return out;
}

IntMatrix3 IntMatrix3::operator*(const IntMatrix3& rhs) const {
  IntMatrix3 out;
  for (int c = 0; c < 3; ++c) {
    out.m_[static_cast<std::size_t>(c)] = apply(rhs.m_[static_cast<std::size_t>(c)]);
  }
  return out;
}

Int det3(const IntMatrix3& m) {
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

bool is_unimodular(const IntMatrix3& m) { return abs_int(det3(m)) == 1; }

IntMatrix3 adjugate(const IntMatrix3& m) {
  IntMatrix3 adj;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
      int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      // adj(r, c) = cofactor(c, r); the cyclic index trick absorbs the sign.
      adj.at(r, c) = m.at(c1, r1) * m.at(c2, r2) - m.at(c1, r2) * m.at(c2, r1);
    }
  }
  return adj;
}

IntMatrix3 IntMatrix3::inverse_unimodular() const {
  Int d = det3(*this);
  if (abs_int(d) != 1) {
    throw InvalidInputError("matrix is not unimodular, cannot invert over Z");
  }
  IntMatrix3 adj = adjugate(*this);
  return d == 1 ? adj : adj.negated();
}

IntMatrix3 IntMatrix3::negated() const {
  IntMatrix3 out;
  for (int c = 0; c < 3; ++c) {
    out.m_[static_cast<std::size_t>(c)] = negate(m_[static_cast<std::size_t>(c)]);
  }
  return out;
}

std::vector<Vec3> hnf(const std::vector<Vec3>& columns) {
  std::vector<Vec3> work = columns;
  std::erase_if(work, [](const Vec3& c) { return is_zero(c); });
  if (work.empty()) {
    throw InvalidInputError("Hermite normal form of an all-zero column set");
  }

  // Echelon phase: for each row, Euclidean column combinations leave at most
  // one unprocessed column with a nonzero entry there; it becomes the pivot.
  std::vector<Vec3> pivots;   // ordered by pivot row
  std::vector<int> pivot_rows;
  for (int r = 0; r < 3; ++r) {
    auto row = static_cast<std::size_t>(r);
    while (true) {
      int nonzero = 0;
      std::size_t min_j = work.size();
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (work[j][row] != 0) {
          ++nonzero;
          if (min_j == work.size() ||
              abs_int(work[j][row]) < abs_int(work[min_j][row])) {
            min_j = j;
          }
        }
      }
      if (nonzero <= 1) {
        break;
      }
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (j != min_j && work[j][row] != 0) {
          Int q = work[j][row] / work[min_j][row];
          for (std::size_t i = 0; i < 3; ++i) {
            work[j][i] -= q * work[min_j][i];
          }
        }
      }
    }
    for (std::size_t j = 0; j < work.size(); ++j) {
      if (work[j][row] != 0) {
        Vec3 pivot = work[j][row] > 0 ? work[j] : negate(work[j]);
        pivots.push_back(pivot);
        pivot_rows.push_back(r);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        break;
      }
    }
  }

  // Canonical reduction: in every pivot row, entries of the earlier columns
  // are brought into [0, pivot).
  for (std::size_t j = 1; j < pivots.size(); ++j) {
    auto prow = static_cast<std::size_t>(pivot_rows[j]);
    for (std::size_t i = 0; i < j; ++i) {
      Int q = floor_div(pivots[i][prow], pivots[j][prow]);
      if (q != 0) {
        for (std::size_t rr = 0; rr < 3; ++rr) {
          pivots[i][rr] -= q * pivots[j][rr];
        }
      }
    }
  }
  return pivots;
}

bool lattice_contains(const std::vector<Vec3>& columns, const Vec3& v) {
  if (is_zero(v)) {
    return true;
  }
  std::vector<Vec3> augmented = columns;
  augmented.push_back(v);
  return hnf(augmented) == hnf(columns);
}

namespace {

Vec3 primitive_part(Vec3 v) {
  Int g = content(v);
  for (auto& e : v) {
    e /= g;
  }
  for (const auto& e : v) {
    if (e != 0) {
      if (e < 0) {
        v = negate(v);
      }
      break;
    }
  }
  return v;
}

}  // namespace

Sublattice saturate(const std::vector<Vec3>& columns) {
  bool any = std::any_of(columns.begin(), columns.end(),
                         [](const Vec3& c) { return !is_zero(c); });
  if (!any) {
    throw InvalidInputError("saturation of the zero span");
  }
  std::vector<Vec3> h = hnf(columns);
  Sublattice out;
  out.rank = static_cast<int>(h.size());
  switch (out.rank) {
    case 1:
      out.basis = {primitive_part(h[0])};
      break;
    case 2: {
      // The saturation of a plane lattice is the integer kernel of its
      // primitive normal vector.
      Vec3 n = primitive_part(cross(h[0], h[1]));
      IntMatrix3 b = complete_primitive_to_basis(n);
      IntMatrix3 binv = b.inverse_unimodular();
      Vec3 r1{binv.at(1, 0), binv.at(1, 1), binv.at(1, 2)};
      Vec3 r2{binv.at(2, 0), binv.at(2, 1), binv.at(2, 2)};
      out.basis = hnf({r1, r2});
      break;
    }
    default:
      out.basis = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
      break;
  }
  return out;
}

IntMatrix3 complete_primitive_to_basis(const Vec3& v) {
  if (is_zero(v) || content(v) != 1) {
    throw InvalidInputError("basis completion requires a primitive vector");
  }
  if (v[0] == 0 && v[1] == 0) {
    // v = (0, 0, +-1); det of (v, e1, e2) equals v[2].
    return IntMatrix3::from_columns(v, Vec3{1, 0, 0}, Vec3{0, 1, 0});
  }
  Egcd e1 = egcd(v[0], v[1]);          // g = gcd(v0, v1) > 0
  Egcd e2 = egcd(e1.g, v[2]);          // e2.g = 1 by primitivity
  Vec3 c2{-e1.y, e1.x, 0};
  Vec3 c3{-e2.y * (v[0] / e1.g), -e2.y * (v[1] / e1.g), e2.x};
  // det = v2*e2.y + e2.x*g = 1 by the second Bezout identity.
  return IntMatrix3::from_columns(v, c2, c3);
}

IntMatrix3 complete_sublattice_to_basis(const Sublattice& s) {
  if (s.rank != 2 || s.basis.size() != 2) {
    throw InvalidInputError("sublattice completion requires rank 2");
  }
  Vec3 n = cross(s.basis[0], s.basis[1]);
  if (is_zero(n)) {
    throw InvalidInputError("sublattice basis is linearly dependent");
  }
  if (content(n) != 1) {
    throw InvalidInputError("sublattice is not saturated");
  }
  // Third column t with n.t = +-1, via nested extended gcd; the sign of t is
  // normalized (first nonzero entry positive).
  Egcd e1 = egcd(n[0], n[1]);
  Egcd e2 = egcd(e1.g, n[2]);
  Vec3 t{e1.x * e2.x, e1.y * e2.x, e2.y};
  for (const auto& e : t) {
    if (e != 0) {
      if (e < 0) {
        t = negate(t);
      }
      break;
    }
  }
  IntMatrix3 m = IntMatrix3::from_columns(s.basis[0], s.basis[1], t);
  if (!is_unimodular(m)) {
    throw InternalError("sublattice completion is not unimodular");
  }
  return m;
}

}  // namespace rodcomp
