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

#include <json.hpp>

#include "rodcomp/homeo.hpp"
#include "rodcomp/lattice.hpp"
#include "rodcomp/volume.hpp"

namespace rodcomp {

// JSON fragments shared between the CLI reports and the python module.
using ReportJson = nlohmann::ordered_json;

ReportJson slopes_json(const std::vector<Slope>& slopes);
ReportJson matrix_json(const IntMatrix3& m);
ReportJson bounds_json(const VolumeBounds& b);
ReportJson drill_json(const DrillPlan& plan);
ReportJson checks_json(const std::vector<CheckItem>& checks);
ReportJson homeo_json(const HomeoReport& hr);

}  // namespace rodcomp
