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

#include "indoorpl/synth.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "indoorpl/error.hpp"
#include "indoorpl/plan_io.hpp"

namespace indoorpl
{

using nlohmann::json;

double GaussianSource::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double GaussianSource::standard_normal()
{
    if (spare_)
    {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u = 0.0, v = 0.0, s = 0.0;
    do
    {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s == 0.0 || s >= 1.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    return u * m;
}

void validate(const SynthConfig &cfg)
{
    validate_point(cfg.plan, cfg.ap);
    validate(cfg.budget);
    validate(cfg.params);
    if (!std::isfinite(cfg.noise_mean_db) || !std::isfinite(cfg.noise_std_db) || cfg.noise_std_db < 0.0)
        throw InvalidArgument("noise mean must be finite and noise std non-negative");
    if (cfg.n_locations < 1 || cfg.samples_per_location < 1)
        throw InvalidArgument("need at least one location and one sample per location");
    if (cfg.nt_override && !(std::isfinite(*cfg.nt_override) && *cfg.nt_override > 0.0))
        throw InvalidArgument("N_T override must be positive");
    for (int f : cfg.floors)
        if (!cfg.plan.contains_floor(f))
            throw InvalidArgument("receiver floor " + std::to_string(f) + " is not in the plan");
    if (cfg.distance_range)
    {
        const auto [lo, hi] = *cfg.distance_range;
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi < lo)
            throw InvalidArgument("distance range must satisfy 0 <= min <= max");
    }
    if (cfg.area && (!(cfg.area->max_x >= cfg.area->min_x) || !(cfg.area->max_y >= cfg.area->min_y)))
        throw InvalidArgument("sampling area is inverted");
}

MeasurementSet generate(const SynthConfig &cfg)
{
    validate(cfg);

    Bounds area;
    if (cfg.area)
        area = *cfg.area;
    else
    {
        area = cfg.plan.bounds().value_or(Bounds{cfg.ap.x, cfg.ap.y, cfg.ap.x, cfg.ap.y});
        area.expand(cfg.ap.xy());
    }

    GaussianSource rng(cfg.seed);
    MeasurementSet set;
    set.budget = cfg.budget;
    set.plan_ref = cfg.plan.name();
    set.records.reserve(static_cast<std::size_t>(cfg.n_locations) * cfg.samples_per_location);
    const double frequency = channel_to_frequency(cfg.channel);
    double timestamp = cfg.start_time_s;

    for (int loc = 0; loc < cfg.n_locations; ++loc)
    {
        Point3 rx;
        double model_pl = 0.0;
        int attempt = 0;
        for (;; ++attempt)
        {
            if (attempt == max_position_attempts)
                throw GeometryExhausted("no valid receiver position for location " + std::to_string(loc) + " after " +
                                        std::to_string(max_position_attempts) + " attempts");
            rx.floor = cfg.ap.floor;
            if (cfg.floors.size() == 1)
                rx.floor = cfg.floors.front();
            else if (cfg.floors.size() > 1)
            {
                const auto k = static_cast<std::size_t>(rng.uniform() * static_cast<double>(cfg.floors.size()));
                rx.floor = cfg.floors[std::min(k, cfg.floors.size() - 1)];
            }
            if (cfg.distance_range)
            {
                const auto [lo, hi] = *cfg.distance_range;
                const double r = lo + rng.uniform() * (hi - lo);
                const double bearing = 2.0 * std::numbers::pi * rng.uniform();
                rx.x = cfg.ap.x + r * std::cos(bearing);
                rx.y = cfg.ap.y + r * std::sin(bearing);
            }
            else
            {
                rx.x = area.min_x + rng.uniform() * (area.max_x - area.min_x);
                rx.y = area.min_y + rng.uniform() * (area.max_y - area.min_y);
            }

            LinkContext ctx;
            ctx.frequency_mhz = frequency;
            ctx.distance_m = distance(cfg.ap, rx, cfg.plan);
            if (ctx.distance_m < 1.0)
                continue;
            if (rx.floor == cfg.ap.floor)
                ctx.obstructions = count_obstructions(cfg.plan, cfg.ap, rx);
            ctx.floor_delta = floor_delta(cfg.ap, rx);
            ctx.scenario = cfg.scenario;
            ctx.channel = cfg.channel;
            ctx.nt_override = cfg.nt_override;
            model_pl = tiplm_path_loss(ctx, cfg.params);
            const double rssi = predicted_rssi(model_pl, cfg.budget);
            if (rssi >= min_rssi_dbm && rssi <= max_rssi_dbm)
                break;
        }

        for (int s = 0; s < cfg.samples_per_location; ++s)
        {
            double rssi = 0.0;
            int draws = 0;
            do
            {
                if (draws++ == max_position_attempts)
                    throw GeometryExhausted("noise keeps RSSI outside the accepted range at location " +
                                            std::to_string(loc));
                rssi = predicted_rssi(model_pl + rng.normal(cfg.noise_mean_db, cfg.noise_std_db), cfg.budget);
            } while (rssi < min_rssi_dbm || rssi > max_rssi_dbm);

            Measurement m;
            m.timestamp_s = timestamp;
            timestamp += 1.0;
            m.channel = cfg.channel;
            m.tx = cfg.ap;
            m.rx = rx;
            m.rssi_dbm = rssi;
            m.tag = cfg.tag;
            set.records.push_back(std::move(m));
        }
    }
    return set;
}

namespace
{

[[noreturn]] void fail(const std::string &reason) { throw ParseError(0, 0, "synth config: " + reason); }

double num(const json &v, const char *key)
{
    if (!v.is_number())
        fail(std::string("'") + key + "' must be a number");
    return v.get<double>();
}

std::vector<double> numbers(const json &v, const char *key, std::size_t n)
{
    if (!v.is_array() || v.size() != n)
        fail(std::string("'") + key + "' must be an array of " + std::to_string(n) + " numbers");
    std::vector<double> out;
    for (const json &e : v)
        out.push_back(num(e, key));
    return out;
}

int integer(const json &v, const char *key)
{
    if (!v.is_number_integer())
        fail(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

SynthConfig parse_synth_config(const std::string &json_text, const std::filesystem::path &base_dir)
{
    json doc;
    try
    {
        doc = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        fail(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("must be a JSON object");

    static const std::set<std::string> known = {
        "plan",  "ap",     "channel", "scenario", "budget",         "noise_mean_db", "noise_std_db", "locations",
        "samples_per_location", "seed", "nt",  "floors",   "area", "distance_range", "start_time_s", "tag"};
    for (const auto &[key, value] : doc.items())
        if (!known.count(key))
            fail("unknown key '" + key + "'");

    SynthConfig cfg;
    if (doc.contains("plan"))
    {
        if (!doc["plan"].is_string())
            fail("'plan' must be a file path");
        std::filesystem::path plan_path = doc["plan"].get<std::string>();
        if (plan_path.is_relative())
            plan_path = base_dir / plan_path;
        cfg.plan = load_floor_plan(plan_path);
    }
    if (doc.contains("ap"))
    {
        const json &ap = doc["ap"];
        if (!ap.is_array() || ap.size() != 3)
            fail("'ap' must be [x, y, floor]");
        cfg.ap = {num(ap[0], "ap"), num(ap[1], "ap"), integer(ap[2], "ap")};
    }
    if (doc.contains("channel"))
        cfg.channel = Channel(integer(doc["channel"], "channel"));
    if (doc.contains("scenario"))
    {
        if (!doc["scenario"].is_string())
            fail("'scenario' must be a string");
        cfg.scenario = parse_scenario(doc["scenario"].get<std::string>());
    }
    if (doc.contains("budget"))
    {
        const auto b = numbers(doc["budget"], "budget", 3);
        cfg.budget = {b[0], b[1], b[2]};
    }
    if (doc.contains("noise_mean_db"))
        cfg.noise_mean_db = num(doc["noise_mean_db"], "noise_mean_db");
    if (doc.contains("noise_std_db"))
        cfg.noise_std_db = num(doc["noise_std_db"], "noise_std_db");
    if (doc.contains("locations"))
        cfg.n_locations = integer(doc["locations"], "locations");
    if (doc.contains("samples_per_location"))
        cfg.samples_per_location = integer(doc["samples_per_location"], "samples_per_location");
    if (doc.contains("seed"))
    {
        if (!doc["seed"].is_number_unsigned())
            fail("'seed' must be a non-negative integer");
        cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("nt"))
        cfg.nt_override = num(doc["nt"], "nt");
    if (doc.contains("floors"))
    {
        if (!doc["floors"].is_array())
            fail("'floors' must be an array of integers");
        for (const json &f : doc["floors"])
            cfg.floors.push_back(integer(f, "floors"));
    }
    if (doc.contains("area"))
    {
        const auto a = numbers(doc["area"], "area", 4);
        cfg.area = Bounds{a[0], a[1], a[2], a[3]};
    }
    if (doc.contains("distance_range"))
    {
        const auto r = numbers(doc["distance_range"], "distance_range", 2);
        cfg.distance_range = std::pair{r[0], r[1]};
    }
    if (doc.contains("start_time_s"))
        cfg.start_time_s = num(doc["start_time_s"], "start_time_s");
    if (doc.contains("tag"))
    {
        if (!doc["tag"].is_string())
            fail("'tag' must be a string");
        cfg.tag = doc["tag"].get<std::string>();
    }
    return cfg;
}

SynthConfig load_synth_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open synth config '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_synth_config(ss.str(), path.parent_path());
}

} // namespace indoorpl
