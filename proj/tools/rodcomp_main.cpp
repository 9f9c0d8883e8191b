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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rodcomp/config_io.hpp"
#include "rodcomp/farey.hpp"
#include "rodcomp/homeo.hpp"
#include "rodcomp/lattice.hpp"
#include "rodcomp/report_json.hpp"
#include "rodcomp/unimodular.hpp"
#include "rodcomp/volume.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace rodcomp;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> diagnostics;
  std::vector<std::string> text;  // human-readable lines, same facts
};

void emit(const Report& r, bool as_json) {
  if (as_json) {
    Json doc{{"command", r.command},
             {"inputs", r.inputs},
             {"result", r.result},
             {"diagnostics", r.diagnostics}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) {
      std::cout << line << "\n";
    }
    for (const auto& d : r.diagnostics) {
      std::cout << "note: " << d << "\n";
    }
  }
}

std::int64_t oracle_max_cap_from_env() {
  const char* env = std::getenv("RODCOMP_ORACLE_MAX_CAP");
  if (env == nullptr || *env == '\0') {
    return kDefaultOracleMaxCap;
  }
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) {
    throw InvalidInputError("RODCOMP_ORACLE_MAX_CAP must be a positive integer");
  }
  return value;
}

Json config_echo(const std::vector<Rod>& rods) {
  return Json::parse(rods_to_json(rods));
}

std::string slopes_text(const std::vector<Slope>& slopes, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += slopes[i].str();
  }
  return out;
}

std::string matrix_text(const IntMatrix3& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out += m.at(r, c).str();
      if (c < 2) {
        out += " ";
      }
    }
    if (r < 2) {
      out += "; ";
    }
  }
  return out + "]";
}

void bounds_text(const VolumeBounds& b, Report& rep) {
  rep.text.push_back(std::string("statement: ") + bound_statement_name(b.statement));
  rep.text.push_back("farey sum: S = " + std::to_string(b.farey_sum));
  rep.text.push_back("lower bound: " + format_rational(b.lower_coeff) + " * (1/K1)");
  rep.text.push_back("upper bound: " + std::to_string(b.upper_octahedra) +
                     " octahedra = " + b.upper_numeric_str + " (v8 at " +
                     std::to_string(b.digits) + " digits)");
}

int cmd_validate(const std::string& path, bool as_json) {
  Report rep;
  rep.command = "validate";
  std::vector<Rod> rods = load_rods_file(path);
  rep.inputs = Json{{"path", path}, {"config", config_echo(rods)}};
  auto checks = stratified_checks(rods);
  bool valid = true;
  for (const auto& c : checks) {
    valid = valid && c.ok;
    std::string line = std::string("  [") + (c.ok ? "ok" : "fail") + "] " + c.name;
    if (!c.ok && !c.detail.empty()) {
      line += ": " + c.detail;
    }
    rep.text.push_back(line);
  }
  rep.result = Json{{"valid", valid}, {"n", rods.size()}, {"checks", checks_json(checks)}};
  rep.text.insert(rep.text.begin(),
                  valid ? "valid stratified configuration: n = " +
                              std::to_string(rods.size()) + " rods"
                        : "invalid stratified configuration");
  emit(rep, as_json);
  return valid ? 0 : 1;
}

int cmd_farey(const std::string& xs, const std::string& ys, bool want_path,
              bool want_oracle, std::int64_t cap, bool as_json) {
  Report rep;
  rep.command = "farey";
  Slope x = Slope::parse(xs);
  Slope y = Slope::parse(ys);
  rep.inputs = Json{{"x", x.str()}, {"y", y.str()}};
  std::size_t d = farey_distance(x, y);
  rep.result["distance"] = d;
  rep.text.push_back("d_F(" + x.str() + ", " + y.str() + ") = " + std::to_string(d));
  if (want_path) {
    FareyPath path = farey_geodesic_path(x, y);
    rep.result["path"] = slopes_json(path.vertices);
    rep.text.push_back("path: " + slopes_text(path.vertices, " -> "));
  }
  int rc = 0;
  if (want_oracle) {
    std::int64_t max_cap = oracle_max_cap_from_env();
    std::size_t od = farey_distance_oracle(x, y, Int(cap < 1 ? 1 : cap), max_cap);
    bool agrees = od == d;
    rep.result["oracle"] = Json{{"distance", od}, {"agrees", agrees}};
    rep.text.push_back("oracle distance = " + std::to_string(od) +
                       (agrees ? " (agrees)" : " (DISAGREES)"));
    if (!agrees) {
      rep.diagnostics.push_back("fast distance and BFS oracle disagree");
      rc = 3;
    }
  }
  emit(rep, as_json);
  return rc;
}

int cmd_bounds(const std::string& path, const std::vector<std::string>& flow,
               int digits, bool want_drill, bool as_json) {
  Report rep;
  rep.command = "bounds";

  if (!flow.empty()) {
    std::vector<Slope> slopes;
    slopes.reserve(flow.size());
    for (const auto& s : flow) {
      slopes.push_back(Slope::parse(s));
    }
    rep.inputs = Json{{"flow_slopes", slopes_json(slopes)}};
    auto [ordering, bounds] = flow_orbit_bounds(std::move(slopes), digits);
    rep.result = bounds_json(bounds);
    rep.result["ordering"] = slopes_json(ordering);
    rep.text.push_back("ordering: " + slopes_text(ordering, ", "));
    bounds_text(bounds, rep);
    rep.diagnostics.push_back(
        "the flow-orbit corollary uses the upper factor 2*v8 per Farey edge as "
        "stated; the cyclic sum already counts a two-slope family twice");
    emit(rep, as_json);
    return 0;
  }

  std::vector<Rod> rods = load_rods_file(path);
  rep.inputs = Json{{"path", path}, {"config", config_echo(rods)}};

  auto checks = stratified_checks(rods);
  bool all_ok = true;
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok;
    // Geometric invalidity is fatal for every statement.
    if (!c.ok && (c.name == "pairwise-disjoint" || c.name == "no-coincident-rods")) {
      throw InvalidInputError("configuration check failed: " + c.name + " (" +
                              c.detail + ")");
    }
  }

  if (all_ok) {
    StratifiedConfig config = validate_stratified(rods);
    VolumeBounds bounds = stratified_bounds(config, digits);
    rep.result = bounds_json(bounds);
    rep.result["slopes"] = slopes_json(config.slopes());
    bounds_text(bounds, rep);
    if (want_drill) {
      DrillPlan plan = drill_plan(config);
      rep.result["drill_plan"] = drill_json(plan);
      rep.text.push_back("drill plan: " + std::to_string(plan.total_octahedra) +
                         " octahedra in total");
      for (const auto& s : plan.steps) {
        rep.text.push_back("  pair (" + std::to_string(s.from_index) + ", " +
                           std::to_string(s.to_index) + "): path " +
                           slopes_text(s.path.vertices, " -> ") + ", " +
                           std::to_string(s.auxiliary.size()) + " auxiliary rods");
      }
    }
    emit(rep, as_json);
    return 0;
  }

  if (rods.size() != 3) {
    std::string detail;
    for (const auto& c : checks) {
      if (!c.ok) {
        detail += (detail.empty() ? "" : ", ") + c.name;
      }
    }
    throw UnsupportedCaseError(
        "configuration is not stratified (failed: " + detail +
        ") and the orthogonal three-rod corollary needs exactly 3 rods");
  }

  // Try each rod as the orthogonal component R3, the remaining two in input
  // order; first realizable hypothesis wins.
  for (int r3 : {2, 1, 0}) {
    std::vector<const Rod*> others;
    for (int i = 0; i < 3; ++i) {
      if (i != r3) {
        others.push_back(&rods[static_cast<std::size_t>(i)]);
      }
    }
    try {
      VolumeBounds bounds = three_rod_orthogonal_bounds(
          *others[0], *others[1], rods[static_cast<std::size_t>(r3)], digits);
      rep.result = bounds_json(bounds);
      rep.diagnostics.push_back(
          "orthogonal three-rod corollary selected with rod " + std::to_string(r3) +
          " as the component orthogonal to the other two");
      bounds_text(bounds, rep);
      if (want_drill) {
        rep.diagnostics.push_back(
            "drill plans are only emitted for stratified configurations");
      }
      emit(rep, as_json);
      return 0;
    } catch (const UnsupportedCaseError&) {
      continue;
    }
  }
  throw UnsupportedCaseError(
      "configuration matches neither the stratified theorem hypotheses nor the "
      "orthogonal three-rod corollary");
}

int cmd_homeo(const std::string& path_a, const std::string& path_b, bool permute,
              bool want_oracle, int oracle_bound, bool as_json) {
  Report rep;
  rep.command = "homeo";
  std::vector<Rod> a = load_rods_file(path_a);
  std::vector<Rod> b = load_rods_file(path_b);
  rep.inputs = Json{{"path_a", path_a},
                    {"path_b", path_b},
                    {"config_a", config_echo(a)},
                    {"config_b", config_echo(b)},
                    {"permute", permute}};
  HomeoReport hr = homeo_decision(a, b, permute);
  rep.result["k"] = hr.k;
  rep.result["homeomorphic"] = hr.homeomorphic;
  rep.text.push_back(std::string("verdict: ") +
                     (hr.homeomorphic ? "homeomorphic" : "not homeomorphic") +
                     " (k = " + std::to_string(hr.k) +
                     (permute ? ", permutations allowed)" : ", ordered components)"));
  if (hr.witness) {
    Json signs = Json::array();
    std::string signs_text;
    for (int s : hr.witness->signs) {
      signs.push_back(s);
      signs_text += (s == 1 ? "+" : "-");
    }
    rep.result["witness"] =
        Json{{"matrix", matrix_json(hr.witness->matrix)}, {"signs", signs}};
    rep.result["matching"] = hr.matching;
    rep.result["verification"] = hr.verification;
    rep.text.push_back("witness A = " + matrix_text(hr.witness->matrix) +
                       ", signs " + signs_text);
    std::string matching;
    for (int m : hr.matching) {
      matching += (matching.empty() ? "" : ", ") + std::to_string(m);
    }
    rep.text.push_back("matching: (" + matching + ")");
    for (const auto& v : hr.verification) {
      rep.text.push_back("  " + v);
    }
  }
  if (want_oracle) {
    auto directions = [](const std::vector<Rod>& rods) {
      std::vector<Vec3> out;
      for (const auto& r : rods) {
        out.push_back(r.direction());
      }
      return out;
    };
    DirectionFamily va(directions(a));
    std::vector<Vec3> wb = directions(b);
    std::vector<int> perm(wb.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<EquivalenceWitness> found;
    std::vector<int> found_perm;
    do {
      std::vector<Vec3> permuted;
      for (int idx : perm) {
        permuted.push_back(wb[static_cast<std::size_t>(idx)]);
      }
      DirectionFamily wfam(std::move(permuted));
      found = brute_force_orbit_search(va, wfam, oracle_bound);
      if (found) {
        found_perm = perm;
        break;
      }
      if (!permute) {
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    bool consistent = !found || hr.homeomorphic;
    Json oracle = Json{{"bound", oracle_bound},
                       {"witness_found", static_cast<bool>(found)},
                       {"consistent", consistent}};
    if (found) {
      oracle["matrix"] = matrix_json(found->matrix);
      oracle["matching"] = found_perm;
    } else {
      oracle["note"] = "no witness with entries within the bound; conclusive only "
                       "relative to the bound";
    }
    rep.result["oracle"] = oracle;
    rep.text.push_back("oracle (bound " + std::to_string(oracle_bound) + "): " +
                       (found ? "witness found" : "no witness within bound") +
                       (consistent ? ", consistent" : ", INCONSISTENT"));
    if (!consistent) {
      rep.diagnostics.push_back("brute-force oracle found a witness the classifier "
                                "missed");
      emit(rep, as_json);
      return 3;
    }
  }
  emit(rep, as_json);
  return 0;
}

int cmd_v8(int digits, bool as_json) {
  Report rep;
  rep.command = "v8";
  rep.inputs = Json{{"digits", digits}};
  std::string value = v8_constant(digits);
  double err = v8_cross_check_error();
  rep.result = Json{{"digits", digits},
                    {"value", value},
                    {"value_float", std::stod(value)},
                    {"cross_check_error", err}};
  rep.text.push_back("v8 = " + value + " (" + std::to_string(digits) + " digits)");
  rep.text.push_back("series cross-check |8*Lob(pi/4) - 4*Catalan| = " +
                     std::to_string(err));
  emit(rep, as_json);
  return 0;
}

void print_error(const std::string& kind, const std::string& what, bool as_json) {
  if (as_json) {
    Json doc{{"error", Json{{"kind", kind}, {"message", what}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rod complements in the 3-torus: Farey distances, volume bounds, "
               "homeomorphism decisions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");

  auto* validate = app.add_subcommand("validate", "validate a rod configuration file");
  std::string validate_path;
  validate->add_option("config", validate_path, "JSON configuration file")->required();

  auto* farey = app.add_subcommand("farey", "Farey-graph distance between two slopes");
  std::string farey_x, farey_y;
  bool farey_path = false, farey_oracle = false;
  std::int64_t farey_cap = 1;
  farey->add_option("x", farey_x, "first slope, e.g. 5/3 or 1/0")->required();
  farey->add_option("y", farey_y, "second slope")->required();
  farey->add_flag("--path", farey_path, "also print a geodesic path");
  farey->add_flag("--oracle", farey_oracle, "cross-check with the BFS oracle");
  farey->add_option("--cap", farey_cap, "initial oracle cap (default: auto)");

  auto* bounds = app.add_subcommand("bounds", "volume bounds for a configuration");
  std::string bounds_path;
  std::vector<std::string> bounds_flow;
  int bounds_digits = 12;
  bool bounds_drill = false;
  bounds->add_option("config", bounds_path, "JSON configuration file");
  bounds->add_option("--flow", bounds_flow,
                     "slopes of a filling curve collection on the once-punctured "
                     "torus (geodesic-flow orbit bounds)");
  bounds->add_option("--digits", bounds_digits, "decimal digits for v8 (default 12)");
  bounds->add_flag("--drill", bounds_drill, "emit the drilling construction");

  auto* homeo = app.add_subcommand("homeo", "decide homeomorphism of two complements");
  std::string homeo_a, homeo_b;
  bool homeo_permute = false, homeo_oracle = false;
  int homeo_bound = 3;
  homeo->add_option("config_a", homeo_a, "first configuration")->required();
  homeo->add_option("config_b", homeo_b, "second configuration")->required();
  homeo->add_flag("--permute", homeo_permute, "allow component permutations");
  homeo->add_flag("--oracle", homeo_oracle, "cross-check with brute-force search");
  homeo->add_option("--oracle-bound", homeo_bound,
                    "entry bound for the brute-force oracle (default 3)");

  auto* v8 = app.add_subcommand("v8", "regular ideal octahedron volume");
  int v8_digits = 12;
  v8->add_option("--digits", v8_digits, "decimal digits (default 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (validate->parsed()) {
      return cmd_validate(validate_path, as_json);
    }
    if (farey->parsed()) {
      return cmd_farey(farey_x, farey_y, farey_path, farey_oracle, farey_cap, as_json);
    }
    if (bounds->parsed()) {
      if (bounds_path.empty() == bounds_flow.empty()) {
        throw InvalidInputError("pass exactly one of a config file or --flow slopes");
      }
      return cmd_bounds(bounds_path, bounds_flow, bounds_digits, bounds_drill, as_json);
    }
    if (homeo->parsed()) {
      return cmd_homeo(homeo_a, homeo_b, homeo_permute, homeo_oracle, homeo_bound,
                       as_json);
    }
    if (v8->parsed()) {
      return cmd_v8(v8_digits, as_json);
    }
  } catch (const InvalidInputError& e) {
    print_error("invalid-input", e.what(), as_json);
    return 1;
  } catch (const UnsupportedCaseError& e) {
    print_error("unsupported-case", e.what(), as_json);
    return 2;
  } catch (const ResourceLimitError& e) {
    print_error("resource-limit", e.what(), as_json);
    return 3;
  } catch (const InternalError& e) {
    print_error("internal", e.what(), as_json);
    return 3;
  }
  return 0;
}
