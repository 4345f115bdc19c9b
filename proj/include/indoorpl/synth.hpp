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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "indoorpl/geometry.hpp"
#include "indoorpl/ingest.hpp"
#include "indoorpl/models.hpp"

namespace indoorpl
{

// Standard normal deviates from a fixed, portable recipe:
//   uniform u = (mt19937_64() >> 11) * 2^-53 in [0, 1)
//   Marsaglia polar method on pairs (2u1 - 1, 2u2 - 1), rejecting s = 0 and s >= 1,
//   returning u * m first and caching v * m for the next call, m = sqrt(-2 ln s / s).
// std::normal_distribution is not used because its algorithm differs between standard libraries.
class GaussianSource
{
  public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double standard_normal();
    double normal(double mean, double std_dev) { return mean + std_dev * standard_normal(); }

  private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

inline constexpr int max_position_attempts = 10'000;

struct SynthConfig
{
    FloorPlan plan;
    Point3 ap;
    Channel channel{1};
    Scenario scenario = Scenario::BusyOffice;
    LinkBudget budget;
    TIplmParams params;
    double noise_mean_db = 0.5;
    double noise_std_db = 3.58;
    int n_locations = 100;
    int samples_per_location = 10;
    std::uint64_t seed = 1;

    // Ground-truth N_T for every location, bypassing the tables.
    std::optional<double> nt_override;
    // Receiver floors drawn uniformly per location; empty means the AP's floor.
    std::vector<int> floors;
    // Sampling area; defaults to the plan extents plus the AP.
    std::optional<Bounds> area;
    // When set, receivers are placed at a horizontal distance drawn uniformly from [first, second]
    // and a uniform bearing around the AP, instead of uniformly over the area.
    std::optional<std::pair<double, double>> distance_range;
    double start_time_s = 0.0;
    std::string tag = "synth";
};

void validate(const SynthConfig &cfg);

// Draw order per location: floor (only if several), then x and y (or distance and bearing),
// repeated until the receiver is at least 1 m away and its noise-free RSSI lies in
// [min_rssi_dbm, max_rssi_dbm]; then one normal deviate per sample, redrawn while the sample
// RSSI is out of that range. Throws GeometryExhausted after max_position_attempts rejections.
MeasurementSet generate(const SynthConfig &cfg);

// JSON config with keys: plan (path, relative to the config file), ap [x, y, floor], channel,
// scenario, budget [tx_dbm, tx_gain, rx_gain], noise_mean_db, noise_std_db, locations,
// samples_per_location, seed, nt, floors [..], area [min_x, min_y, max_x, max_y],
// distance_range [min, max], start_time_s, tag.
SynthConfig load_synth_config(const std::filesystem::path &path);
SynthConfig parse_synth_config(const std::string &json_text, const std::filesystem::path &base_dir);

} // namespace indoorpl
