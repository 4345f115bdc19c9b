// SPDX-License-Identifier: Apache-2.0
//
// indoorpl: indoor path loss modelling and calibration for the 2.4 GHz ISM band
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "indoorpl/geometry.hpp"

namespace indoorpl
{

// Floor plan document:
//   { "name": "...", "floor_count": 3, "floor_height_m": 3.0,
//     "walls":   [ {"ax":0,"ay":0,"bx":5,"by":0,"floor":0,"material":"concrete"}, ... ],
//     "pillars": [ {"cx":2,"cy":2,"w":0.6,"d":0.6,"floor":0}, ... ] }
// A wall material is a built-in name (case-insensitive) or {"custom": {"name": ..., "loss_db": ...}}.
// Throws ParseError for malformed documents and InvalidArgument for invariant violations.
FloorPlan parse_floor_plan(const std::string &text);
FloorPlan load_floor_plan(const std::filesystem::path &path);

void write_floor_plan(std::ostream &os, const FloorPlan &plan);

} // namespace indoorpl
