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
#include <string>

#include "indoorpl/models.hpp"

namespace indoorpl
{

// Parameters of all three models, defaulting to the built-in tables.
struct ModelParams
{
    ItuRParams itu_r;
    LogDistanceParams log_distance;
    TIplmParams tiplm;
};

// Applies a partial override document on top of `base`. Recognised keys:
//   "itu_r":        {"n": 30, "floor_penetration_db": [0, 15, 19]}
//   "log_distance": {"gamma": 3, "d0_m": 1}
//   "tiplm":        {"scenario": "busy",
//                    "nt_busy": {"1": {"1": 31.1, ...}, ...},
//                    "nt_open": {"1": 19.2, ...}, "nt_corridor": 25.8,
//                    "wall_loss_db": {"concrete": 2.73, "<custom name>": 3.1, ...},
//                    "faf_db": {"-1": 21, "0": 0, "1": 21, ...}}
// Map-valued entries are merged key by key. Unknown keys are rejected.
ModelParams apply_param_overrides(ModelParams base, const std::string &json_text);
ModelParams load_param_overrides(const std::filesystem::path &path, ModelParams base = {});

// Full parameter set as a document accepted by apply_param_overrides.
std::string params_to_json(const ModelParams &p);

} // namespace indoorpl
