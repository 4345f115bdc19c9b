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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "indoorpl/calibrate.hpp"
#include "indoorpl/error.hpp"
#include "indoorpl/synth.hpp"

using namespace indoorpl;
using Catch::Matchers::WithinAbs;

namespace
{

FloorPlan office()
{
    const Material c(MaterialKind::Concrete), g(MaterialKind::Glass), w(MaterialKind::Wood);
    return FloorPlan("office", 2, 3.0,
                     {{{0, 0}, {24, 0}, 0, c},
                      {{24, 0}, {24, 16}, 0, c},
                      {{24, 16}, {0, 16}, 0, g},
                      {{0, 16}, {0, 0}, 0, c},
                      {{8, 0}, {8, 10}, 0, w},
                      {{16, 6}, {16, 16}, 0, g},
                      {{0, 8}, {24, 8}, 1, c}},
                     {{{4, 12}, 0.6, 0.6, 0}});
}

SynthConfig base_config()
{
    SynthConfig cfg;
    cfg.plan = office();
    cfg.ap = {2, 2, 0};
    cfg.n_locations = 50;
    cfg.samples_per_location = 4;
    return cfg;
}

double model_loss(const SynthConfig &cfg, const Measurement &m)
{
    LinkContext ctx;
    ctx.frequency_mhz = channel_to_frequency(cfg.channel);
    ctx.channel = cfg.channel;
    ctx.scenario = cfg.scenario;
    ctx.distance_m = distance(m.tx, m.rx, cfg.plan);
    ctx.floor_delta = floor_delta(m.tx, m.rx);
    if (m.tx.floor == m.rx.floor)
        ctx.obstructions = count_obstructions(cfg.plan, m.tx, m.rx);
    ctx.nt_override = cfg.nt_override;
    return tiplm_path_loss(ctx, cfg.params);
}

} // namespace

TEST_CASE("gaussian source recipe", "[synth]")
{
    GaussianSource a(5), b(5);
    for (int i = 0; i < 100; ++i)
    {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    std::mt19937_64 e(9);
    const double expected = static_cast<double>(e() >> 11) * 0x1.0p-53;
    CHECK(GaussianSource(9).uniform() == expected);

    GaussianSource g(12);
    double sum = 0, sq = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const double z = g.standard_normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sq / n - 1.0) < 0.02);
}

TEST_CASE("zero noise reproduces the model exactly", "[synth]")
{
    SynthConfig cfg = base_config();
    cfg.noise_mean_db = 0.0;
    cfg.noise_std_db = 0.0;
    cfg.floors = {0, 1};
    const MeasurementSet s = generate(cfg);
    REQUIRE(s.records.size() == 200);
    bool saw_upper = false;
    for (const auto &m : s.records)
    {
        CHECK_THAT(rssi_to_path_loss(m.rssi_dbm, s.budget), WithinAbs(model_loss(cfg, m), 1e-9));
        CHECK(distance(m.tx, m.rx, cfg.plan) >= 1.0);
        CHECK(m.rssi_dbm >= min_rssi_dbm);
        CHECK(m.rssi_dbm <= max_rssi_dbm);
        CHECK(m.channel == cfg.channel);
        saw_upper = saw_upper || m.rx.floor == 1;
    }
    CHECK(saw_upper);
    CHECK(s.records[1].timestamp_s == s.records[0].timestamp_s + 1.0);
}

TEST_CASE("same seed gives bit-identical sets", "[synth][property]")
{
    const SynthConfig cfg = base_config();
    const MeasurementSet a = generate(cfg), b = generate(cfg);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i)
    {
        CHECK(a.records[i].rssi_dbm == b.records[i].rssi_dbm);
        CHECK(a.records[i].rx.x == b.records[i].rx.x);
        CHECK(a.records[i].rx.y == b.records[i].rx.y);
    }
    SynthConfig other = cfg;
    other.seed = 2;
    CHECK(generate(other).records[0].rssi_dbm != a.records[0].rssi_dbm);
}

TEST_CASE("noise statistics at one location", "[synth][statistical]")
{
    SynthConfig cfg = base_config();
    cfg.n_locations = 1;
    cfg.samples_per_location = 10000;
    cfg.seed = 77;
    const MeasurementSet s = generate(cfg);
    std::vector<double> res;
    for (const auto &m : s.records)
        res.push_back(rssi_to_path_loss(m.rssi_dbm, s.budget) - model_loss(cfg, m));
    const ErrorStats st = error_stats(res);
    CHECK_THAT(st.mean_db, WithinAbs(0.5, 0.12));
    CHECK_THAT(st.std_dev_db, WithinAbs(3.58, 0.10));
}

TEST_CASE("distance range placement", "[synth]")
{
    SynthConfig cfg = base_config();
    cfg.plan = FloorPlan{};
    cfg.ap = {0, 0, 0};
    cfg.distance_range = {1.0, 30.0};
    cfg.n_locations = 500;
    cfg.samples_per_location = 1;
    cfg.nt_override = 31.8;
    for (const auto &m : generate(cfg).records)
    {
        const double d = distance(m.tx, m.rx, cfg.plan);
        CHECK(d >= 1.0);
        CHECK(d <= 30.0 + 1e-9);
    }
}

TEST_CASE("generation errors", "[synth]")
{
    SynthConfig cfg = base_config();
    cfg.area = Bounds{1.5, 1.5, 2.5, 2.5};
    CHECK_THROWS_AS(generate(cfg), GeometryExhausted);

    SynthConfig bad = base_config();
    bad.n_locations = 0;
    CHECK_THROWS_AS(generate(bad), InvalidArgument);
    bad = base_config();
    bad.noise_std_db = -1;
    CHECK_THROWS_AS(generate(bad), InvalidArgument);
    bad = base_config();
    bad.floors = {4};
    CHECK_THROWS_AS(generate(bad), InvalidArgument);
}

TEST_CASE("synth config documents", "[synth][io]")
{
    const auto dir = std::filesystem::temp_directory_path() / "indoorpl_test_synth";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "plan.json") << R"({"name": "box", "floor_count": 1,
            "walls": [{"ax": 5, "ay": -5, "bx": 5, "by": 5, "floor": 0, "material": "glass"}]})";
        std::ofstream(dir / "synth.json") << R"({"plan": "plan.json", "ap": [0, 0, 0], "channel": 7,
            "scenario": "open", "budget": [18, 2, 0], "noise_mean_db": 0, "noise_std_db": 1,
            "locations": 7, "samples_per_location": 3, "seed": 99, "nt": 25,
            "area": [-10, -10, 10, 10], "start_time_s": 100, "tag": "run-a"})";
    }
    const SynthConfig cfg = load_synth_config(dir / "synth.json");
    CHECK(cfg.plan.name() == "box");
    CHECK(cfg.channel == Channel(7));
    CHECK(cfg.scenario == Scenario::OpenSpace);
    CHECK(cfg.budget.total_db() == 20.0);
    CHECK(cfg.n_locations == 7);
    CHECK(cfg.samples_per_location == 3);
    CHECK(cfg.seed == 99u);
    CHECK(cfg.nt_override == 25.0);
    REQUIRE(cfg.area);
    CHECK(cfg.area->max_x == 10.0);
    const MeasurementSet s = generate(cfg);
    CHECK(s.records.size() == 21);
    CHECK(s.records[0].timestamp_s == 100.0);
    CHECK(s.records[0].tag == "run-a");

    CHECK_THROWS_AS(parse_synth_config(R"({"plan": "plan.json", "colour": 1})", dir), ParseError);
    CHECK_THROWS_AS(parse_synth_config(R"({"plan": "missing.json"})", dir), IoError);
    std::filesystem::remove_all(dir);
}
