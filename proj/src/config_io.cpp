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

#include "rodcomp/config_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace rodcomp {

namespace {

using Json = nlohmann::ordered_json;

Rat parse_base_entry(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) {
      return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
      return Rat(Int(v.get<long long>()));
    }
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(where + ": " + e.what());
  }
  throw InvalidInputError(where + ": expected a rational string \"num/den\" or an integer");
}

Int parse_direction_entry(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return Int(v.get<long long>());
  }
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const InvalidInputError& e) {
      throw InvalidInputError(where + ": " + e.what());
    }
  }
  throw InvalidInputError(where + ": expected an integer");
}

}  // namespace

std::vector<Rod> parse_rods_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInputError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rods") || !doc["rods"].is_array()) {
    throw InvalidInputError("config must be an object with a \"rods\" array");
  }
  std::vector<Rod> rods;
  const Json& arr = doc["rods"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "rods[" + std::to_string(i) + "]";
    const Json& r = arr[i];
    if (!r.is_object() || !r.contains("base") || !r.contains("direction")) {
      throw InvalidInputError(where + ": expected {\"base\": [...], \"direction\": [...]}");
    }
    const Json& base = r["base"];
    const Json& dir = r["direction"];
    if (!base.is_array() || base.size() != 3) {
      throw InvalidInputError(where + ".base: expected 3 rational coordinates");
    }
    if (!dir.is_array() || dir.size() != 3) {
      throw InvalidInputError(where + ".direction: expected 3 integers");
    }
    Rat3 b;
    Vec3 d;
    for (std::size_t c = 0; c < 3; ++c) {
      b[c] = parse_base_entry(base[c], where + ".base[" + std::to_string(c) + "]");
      d[c] = parse_direction_entry(dir[c], where + ".direction[" + std::to_string(c) + "]");
    }
    try {
      rods.emplace_back(b, d);
    } catch (const InvalidInputError& e) {
      throw InvalidInputError(where + ": " + e.what());
    }
  }
  return rods;
}

std::vector<Rod> load_rods_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot read config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rods_json(buf.str());
}

std::string rods_to_json(const std::vector<Rod>& rods, int indent) {
  Json arr = Json::array();
  for (const auto& rod : rods) {
    Json base = Json::array();
    for (const auto& c : rod.base()) {
      base.push_back(format_rational(c));
    }
    Json dir = Json::array();
    for (const auto& e : rod.direction()) {
      if (e >= std::numeric_limits<long long>::min() &&
          e <= std::numeric_limits<long long>::max()) {
        dir.push_back(static_cast<long long>(e));
      } else {
        dir.push_back(e.str());
      }
    }
    arr.push_back(Json{{"base", base}, {"direction", dir}});
  }
  return Json{{"rods", arr}}.dump(indent);
}

}  // namespace rodcomp
