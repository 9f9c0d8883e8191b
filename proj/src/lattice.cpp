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

#include "rodcomp/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace rodcomp {

bool direction_is_closed(const Rat3& d) {
  if (d[0] == 0 && d[1] == 0 && d[2] == 0) {
    throw InvalidInputError("the zero vector is not a direction");
  }
  // Rational coordinates span a one-dimensional Q-vector space, so the
  // projected geodesic always closes up.
  return true;
}

Vec3 canonical_sign(Vec3 v) {
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

Vec3 primitive_direction(const Rat3& d) {
  direction_is_closed(d);
  Int lcm = 1;
  for (const auto& c : d) {
    Int g = gcd_int(lcm, c.denominator());
    lcm = lcm / g * c.denominator();
  }
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) {
    v[i] = d[i].numerator() * (lcm / d[i].denominator());
  }
  Int g = content(v);
  for (auto& e : v) {
    e /= g;
  }
  return canonical_sign(v);
}

Rod::Rod(const Rat3& base, const Vec3& direction) {
  if (is_zero(direction)) {
    throw InvalidInputError("rod direction must be nonzero");
  }
  if (content(direction) != 1) {
    std::ostringstream os;
    os << "rod direction (" << direction[0] << ", " << direction[1] << ", "
       << direction[2] << ") is not primitive";
    throw InvalidInputError(os.str());
  }
  dir_ = canonical_sign(direction);
  for (std::size_t i = 0; i < 3; ++i) {
    base_[i] = mod_one(base[i]);
  }
}

bool Rod::is_vertical() const {
  return dir_[0] == 0 && dir_[1] == 0 && dir_[2] == 1;
}

bool Rod::is_horizontal() const { return dir_[2] == 0; }

bool plane_projects_to_torus(const FlatTorus2& t) {
  return !is_zero(cross(t.dir1, t.dir2));
}

namespace {

Rat3 base_delta(const Rod& r1, const Rod& r2) {
  return Rat3{r1.base()[0] - r2.base()[0], r1.base()[1] - r2.base()[1],
              r1.base()[2] - r2.base()[2]};
}

}  // namespace

bool rods_coincident(const Rod& r1, const Rod& r2) {
  if (r1.direction() != r2.direction()) {
    return false;
  }
  // Same image iff delta - t*d lies in Z^3 for some rational t. Projecting
  // the congruences t*d_i = delta_i (mod 1) with integer Bezout weights of
  // the nonzero entries pins t modulo 1; the candidate is then verified.
  const Vec3& d = r1.direction();
  Rat3 delta = base_delta(r1, r2);
  for (std::size_t i = 0; i < 3; ++i) {
    if (d[i] == 0 && delta[i].denominator() != 1) {
      return false;
    }
  }
  // Bezout weights over the nonzero entries (their gcd is 1 by primitivity).
  Int g = 0, wa = 0, wb = 0, wc = 0;
  {
    Egcd e01 = egcd(d[0], d[1]);
    Egcd e = egcd(e01.g, d[2]);
    g = e.g;
    wa = e01.x * e.x;
    wb = e01.y * e.x;
    wc = e.y;
  }
  if (g != 1) {
    throw InternalError("primitive direction with content != 1");
  }
  Rat t = Rat(wa) * delta[0] + Rat(wb) * delta[1] + Rat(wc) * delta[2];
  for (std::size_t i = 0; i < 3; ++i) {
    Rat diff = delta[i] - t * Rat(d[i]);
    if (diff.denominator() != 1) {
      return false;
    }
  }
  return true;
}

bool rods_disjoint(const Rod& r1, const Rod& r2) {
  Vec3 n = cross(r1.direction(), r2.direction());
  Rat3 delta = base_delta(r1, r2);
  if (is_zero(n)) {
    // Parallel: distinct closed geodesics in the same direction are disjoint.
    return !rods_coincident(r1, r2);
  }
  // They intersect iff n . delta is an integer multiple of gcd(|n|): the
  // translation lattice hits the plane offsets exactly in g*Z.
  Rat nd = Rat(n[0]) * delta[0] + Rat(n[1]) * delta[1] + Rat(n[2]) * delta[2];
  if (nd.denominator() != 1) {
    return true;
  }
  Int g = content(n);
  return nd.numerator() % g != 0;
}

Slope slope_of_horizontal(const Rod& r) {
  if (!r.is_horizontal()) {
    std::ostringstream os;
    os << "rod with direction (" << r.direction()[0] << ", " << r.direction()[1]
       << ", " << r.direction()[2] << ") is not horizontal";
    throw InvalidInputError(os.str());
  }
  return Slope(r.direction()[0], r.direction()[1]);
}

std::vector<Slope> StratifiedConfig::slopes() const {
  std::vector<Slope> out;
  out.reserve(horizontal.size());
  for (const auto& r : horizontal) {
    out.push_back(slope_of_horizontal(r));
  }
  return out;
}

namespace {

std::string rod_label(std::size_t i) { return "rod[" + std::to_string(i) + "]"; }

}  // namespace

std::vector<CheckItem> stratified_checks(const std::vector<Rod>& rods) {
  std::vector<CheckItem> items;
  auto push = [&items](std::string name, bool ok, std::string detail = "") {
    items.push_back(CheckItem{std::move(name), ok, std::move(detail)});
  };

  push("at-least-three-rods", rods.size() >= 3,
       "found " + std::to_string(rods.size()));

  std::vector<std::size_t> verticals;
  std::vector<std::size_t> horizontals;
  std::vector<std::size_t> skew;
  for (std::size_t i = 0; i < rods.size(); ++i) {
    if (rods[i].is_vertical()) {
      verticals.push_back(i);
    } else if (rods[i].is_horizontal()) {
      horizontals.push_back(i);
    } else {
      skew.push_back(i);
    }
  }
  push("unique-vertical-rod", verticals.size() == 1,
       "found " + std::to_string(verticals.size()) + " rods with direction (0,0,1)");
  {
    std::string detail;
    for (auto i : skew) {
      detail += (detail.empty() ? "" : ", ") + rod_label(i);
    }
    push("all-others-horizontal", skew.empty(),
         skew.empty() ? "" : "not horizontal: " + detail);
  }

  // Heights in (0,1), pairwise distinct.
  bool heights_positive = true;
  std::string zero_detail;
  for (auto i : horizontals) {
    if (rods[i].height() == 0) {
      heights_positive = false;
      zero_detail += (zero_detail.empty() ? "" : ", ") + rod_label(i);
    }
  }
  push("heights-strictly-inside-(0,1)", heights_positive,
       heights_positive ? "" : "height 0: " + zero_detail);

  std::vector<std::size_t> order = horizontals;
  std::sort(order.begin(), order.end(), [&rods](std::size_t a, std::size_t b) {
    return rods[a].height() < rods[b].height();
  });
  bool distinct_heights = true;
  std::string equal_detail;
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    if (rods[order[j]].height() == rods[order[j + 1]].height()) {
      distinct_heights = false;
      equal_detail += (equal_detail.empty() ? "" : ", ") + rod_label(order[j]) + "=" +
                      rod_label(order[j + 1]);
    }
  }
  push("heights-pairwise-distinct", distinct_heights,
       distinct_heights ? "" : "equal heights: " + equal_detail);

  // Consecutive slopes distinct, cyclically closed.
  bool slopes_ok = true;
  std::string slope_detail;
  if (skew.empty() && order.size() >= 2) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      std::size_t jn = (j + 1) % order.size();
      if (j == jn || (order.size() == 2 && j == 1)) {
        continue;  // the wrap pair duplicates (0,1) for two rods
      }
      // Interior consecutive pairs plus the cyclic (first, last) condition;
      // for j+1 == size this is exactly slope_1 vs slope_{n-1}.
      Slope a = slope_of_horizontal(rods[order[j]]);
      Slope b = slope_of_horizontal(rods[order[jn]]);
      if (a == b) {
        slopes_ok = false;
        slope_detail += (slope_detail.empty() ? "" : ", ") + rod_label(order[j]) +
                        "~" + rod_label(order[jn]) + " both " + a.str();
      }
    }
  }
  push("consecutive-slopes-distinct", slopes_ok, slope_detail);

  // Pairwise disjointness, with coincident rods reported separately.
  bool disjoint = true, nocoincide = true;
  std::string isect_detail, coin_detail;
  for (std::size_t i = 0; i < rods.size(); ++i) {
    for (std::size_t j = i + 1; j < rods.size(); ++j) {
      if (rods_coincident(rods[i], rods[j])) {
        nocoincide = false;
        coin_detail += (coin_detail.empty() ? "" : ", ") + rod_label(i) + "=" +
                       rod_label(j);
      } else if (!rods_disjoint(rods[i], rods[j])) {
        disjoint = false;
        isect_detail += (isect_detail.empty() ? "" : ", ") + rod_label(i) + "x" +
                        rod_label(j);
      }
    }
  }
  push("no-coincident-rods", nocoincide,
       nocoincide ? "" : "coincident: " + coin_detail);
  push("pairwise-disjoint", disjoint, disjoint ? "" : "intersecting: " + isect_detail);

  return items;
}

StratifiedConfig validate_stratified(const std::vector<Rod>& rods) {
  for (const auto& item : stratified_checks(rods)) {
    if (!item.ok) {
      std::string msg = "stratified configuration check failed: " + item.name;
      if (!item.detail.empty()) {
        msg += " (" + item.detail + ")";
      }
      throw InvalidInputError(msg);
    }
  }
  std::vector<Rod> horizontal;
  const Rod* vertical = nullptr;
  for (const auto& r : rods) {
    if (r.is_vertical()) {
      vertical = &r;
    } else {
      horizontal.push_back(r);
    }
  }
  std::sort(horizontal.begin(), horizontal.end(),
            [](const Rod& a, const Rod& b) { return a.height() < b.height(); });
  return StratifiedConfig{std::move(horizontal), *vertical};
}

}  // namespace rodcomp
