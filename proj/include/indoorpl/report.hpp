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
#include <optional>
#include <string>
#include <vector>

#include "indoorpl/calibrate.hpp"

namespace indoorpl
{

// Everything a fit or compare run produces. Machine-readable output never carries timestamps.
struct AnalysisReport
{
    std::string plan_name;
    std::optional<int> channel;
    double frequency_mhz = 0.0;
    std::string scenario;
    std::size_t record_count = 0;
    std::size_t point_count = 0;
    std::vector<FitResult> fits;
    std::vector<ObstacleCountFit> obstacle_fits;
    std::optional<ErrorStats> errors;
    std::optional<ComparisonReport> comparison;
};

void write_report_text(std::ostream &os, const AnalysisReport &report);
std::string report_to_json(const AnalysisReport &report);

// CSV with header "bin_low,bin_high,count".
void write_histogram_csv(std::ostream &os, const ErrorStats &stats);

} // namespace indoorpl
