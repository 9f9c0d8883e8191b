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

#include "rodcomp/report_json.hpp"

namespace rodcomp {

ReportJson slopes_json(const std::vector<Slope>& slopes) {
  ReportJson arr = ReportJson::array();
  for (const auto& s : slopes) {
    arr.push_back(s.str());
  }
  return arr;
}

ReportJson matrix_json(const IntMatrix3& m) {
  ReportJson rows = ReportJson::array();
  for (int r = 0; r < 3; ++r) {
    ReportJson row = ReportJson::array();
    for (int c = 0; c < 3; ++c) {
      row.push_back(static_cast<long long>(m.at(r, c)));
    }
    rows.push_back(row);
  }
  return rows;
}

ReportJson bounds_json(const VolumeBounds& b) {
  return ReportJson{
      {"statement", bound_statement_name(b.statement)},
      {"farey_sum", b.farey_sum},
      {"lower_bound",
       ReportJson{{"value_rational", format_rational(b.lower_coeff)},
                  {"units", "1/K1"}}},
      {"upper_bound", ReportJson{{"octahedra", b.upper_octahedra},
                                 {"numeric", b.upper_numeric},
                                 {"numeric_str", b.upper_numeric_str},
                                 {"v8_digits", b.digits}}}};
}

ReportJson drill_json(const DrillPlan& plan) {
  ReportJson steps = ReportJson::array();
  for (const auto& s : plan.steps) {
    ReportJson aux = ReportJson::array();
    for (const auto& rod : s.auxiliary) {
      ReportJson base = ReportJson::array();
      for (const auto& c : rod.base()) {
        base.push_back(format_rational(c));
      }
      ReportJson dir = ReportJson::array();
      for (const auto& e : rod.direction()) {
        dir.push_back(static_cast<long long>(e));
      }
      aux.push_back(ReportJson{{"base", base}, {"direction", dir}});
    }
    steps.push_back(ReportJson{{"pair", ReportJson::array({s.from_index, s.to_index})},
                               {"path", slopes_json(s.path.vertices)},
                               {"auxiliary_rods", aux},
                               {"octahedra", s.path.edge_count()}});
  }
  return ReportJson{{"steps", steps}, {"total_octahedra", plan.total_octahedra}};
}

ReportJson checks_json(const std::vector<CheckItem>& checks) {
  ReportJson items = ReportJson::array();
  for (const auto& c : checks) {
    items.push_back(ReportJson{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  return items;
}

ReportJson homeo_json(const HomeoReport& hr) {
  ReportJson out{{"k", hr.k},
                 {"homeomorphic", hr.homeomorphic},
                 {"permutations_allowed", hr.permutations_allowed}};
  if (hr.witness) {
    ReportJson signs = ReportJson::array();
    for (int s : hr.witness->signs) {
      signs.push_back(s);
    }
    out["witness"] =
        ReportJson{{"matrix", matrix_json(hr.witness->matrix)}, {"signs", signs}};
    out["matching"] = hr.matching;
    out["verification"] = hr.verification;
  }
  return out;
}

}  // namespace rodcomp
