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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indoorpl/geometry.hpp"
#include "indoorpl/models.hpp"

namespace indoorpl
{

inline constexpr std::string_view measurement_csv_header =
    "timestamp,channel,tx_x,tx_y,tx_floor,rx_x,rx_y,rx_floor,rssi_dbm,tag";

// Accepted RSSI range; anything outside is rejected while parsing.
inline constexpr double min_rssi_dbm = -120.0;
inline constexpr double max_rssi_dbm = 0.0;

inline constexpr double default_bin_width_m = 0.5;

struct Measurement
{
    double timestamp_s = 0.0;
    Channel channel{1};
    Point3 tx;
    Point3 rx;
    double rssi_dbm = 0.0;
    std::string tag;
};

struct MeasurementSet
{
    std::vector<Measurement> records;
    LinkBudget budget;
    std::optional<std::string> plan_ref;
};

// Drive-test samples cleansed to one point per (distance bin, obstructions, floor delta).
struct AggregatedPoint
{
    // Geometric mean of the member distances, so log10(distance) is the mean of log10(d_i).
    double distance_m = 0.0;
    ObstructionSummary obstructions;
    int floor_delta = 0;
    double pl_min_db = 0.0;
    double pl_mean_db = 0.0;
    double pl_max_db = 0.0;
    int sample_count = 0;
};

// Reads the drive-test CSV (exact header, '#' comment lines, blank lines ignored).
// Throws ParseError naming the 1-based line and column, or EmptyInput when no records remain.
MeasurementSet parse_measurements(std::istream &in, const LinkBudget &budget);
MeasurementSet load_measurements(const std::filesystem::path &path, const LinkBudget &budget);

// Writes the same CSV schema. Numbers use the shortest round-trip representation; commas
// and line breaks in tags are replaced by ';'.
void write_measurements(std::ostream &os, const MeasurementSet &set);

MeasurementSet filter_channel(const MeasurementSet &set, Channel c);

// Converts RSSI to path loss with the set's budget and reduces each group to min/mean/max,
// sorted by distance. Cross-floor records get an empty obstruction summary (FAF covers them).
// The result is independent of record order.
std::vector<AggregatedPoint> aggregate(const MeasurementSet &set, const FloorPlan &plan,
                                       double bin_width_m = default_bin_width_m);

} // namespace indoorpl
