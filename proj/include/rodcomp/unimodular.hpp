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
#include <vector>

#include "rodcomp/numeric.hpp"

namespace rodcomp {

/// 3x3 integer matrix. Columns are the images of the basis vectors and
/// matrices act on column vectors; this convention is fixed here and used
/// by every caller.
class IntMatrix3 {
 public:
  IntMatrix3();  // zero matrix
  static IntMatrix3 identity();
  static IntMatrix3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  const Int& at(int row, int col) const { return m_[col][row]; }
  Int& at(int row, int col) { return m_[col][row]; }
  Vec3 column(int col) const { return m_[col]; }
  void set_column(int col, const Vec3& v) { m_[col] = v; }

  Vec3 apply(const Vec3& v) const;
  IntMatrix3 operator*(const IntMatrix3& rhs) const;
  friend bool operator==(const IntMatrix3& a, const IntMatrix3& b) {
    return a.m_ == b.m_;
  }

  /// Exact inverse; requires |det| = 1.
  IntMatrix3 inverse_unimodular() const;
  IntMatrix3 negated() const;

 private:
  std::array<Vec3, 3> m_;  // m_[col][row]
};

Int det3(const IntMatrix3& m);
bool is_unimodular(const IntMatrix3& m);

/// Adjugate: adj(m) * m = det(m) * I.
IntMatrix3 adjugate(const IntMatrix3& m);

/// Basis of a saturated (primitive) sublattice of Z^3, i.e. one equal to
/// the intersection of its Q-span with Z^3.
struct Sublattice {
  int rank = 0;  // 1 or 2
  std::vector<Vec3> basis;
};

/// Column-style Hermite normal form of the lattice generated by the given
/// columns: pivots positive and descending left to right, the remaining
/// entries of each pivot row reduced into [0, pivot). Canonical for the
/// lattice. Throws on all-zero input.
std::vector<Vec3> hnf(const std::vector<Vec3>& columns);

/// Z^3 intersected with the Q-span of the columns; rank = dim of the span.
Sublattice saturate(const std::vector<Vec3>& columns);

/// Membership of v in the lattice generated by the columns.
bool lattice_contains(const std::vector<Vec3>& columns, const Vec3& v);

/// Unimodular matrix whose first column is the given primitive vector.
/// Deterministic (nested extended gcd with fixed pivot order).
IntMatrix3 complete_primitive_to_basis(const Vec3& v);

/// Unimodular matrix whose first two columns are the basis of a saturated
/// rank-2 sublattice. Throws on non-saturated input.
IntMatrix3 complete_sublattice_to_basis(const Sublattice& s);

}  // namespace rodcomp
