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

#include <iosfwd>
#include <string>
#include <vector>

namespace indoorpl::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_data = 2;

// Runs one subcommand (predict, fit, compare, coverage, synth). args[0] is the program name.
// Returns 0 on success, 1 on usage errors, 2 on data or model errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace indoorpl::cli
