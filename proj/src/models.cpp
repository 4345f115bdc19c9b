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

#include "indoorpl/models.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

#include "indoorpl/error.hpp"

namespace indoorpl
{

namespace
{

constexpr std::array<double, 14> channel_center_mhz = {2412, 2417, 2422, 2427, 2432, 2437, 2442,
                                                       2447, 2452, 2457, 2462, 2467, 2472, 2484};

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void require_frequency(double frequency_mhz)
{
    if (!std::isfinite(frequency_mhz) || frequency_mhz <= 0.0)
        throw DomainError("frequency must be finite and positive, got " + std::to_string(frequency_mhz) + " MHz");
}

void require_distance(double distance_m, double minimum_m, const char *model)
{
    if (!std::isfinite(distance_m) || distance_m < minimum_m)
        throw DomainError(std::string(model) + " is defined for d >= " + std::to_string(minimum_m) + " m, got d = " +
                          std::to_string(distance_m) + " m");
}

double tiplm_base_db(double frequency_mhz) { return 20.0 * std::log10(frequency_mhz) - 20.0; }
double itu_r_base_db(double frequency_mhz) { return 20.0 * std::log10(frequency_mhz) - 28.0; }

} // namespace

Channel::Channel(int index) : index_(index)
{
    if (index < 1 || index > 14)
        throw InvalidArgument("channel must be in [1, 14], got " + std::to_string(index));
}

double channel_to_frequency(Channel c) { return channel_center_mhz[static_cast<std::size_t>(c.index() - 1)]; }

std::optional<Channel> channel_for_frequency(double frequency_mhz)
{
    for (std::size_t i = 0; i < channel_center_mhz.size(); ++i)
        if (channel_center_mhz[i] == frequency_mhz)
            return Channel(static_cast<int>(i) + 1);
    return std::nullopt;
}

std::string_view to_string(Scenario s)
{
    switch (s)
    {
    case Scenario::BusyOffice: return "busy";
    case Scenario::OpenSpace: return "open";
    case Scenario::Corridor: return "corridor";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view text)
{
    const std::string key = lower(text);
    if (key == "busy" || key == "busy-office" || key == "busyoffice")
        return Scenario::BusyOffice;
    if (key == "open" || key == "open-space" || key == "openspace")
        return Scenario::OpenSpace;
    if (key == "corridor")
        return Scenario::Corridor;
    throw InvalidArgument("unknown scenario '" + std::string(text) + "' (expected busy, open or corridor)");
}

void validate(const LinkBudget &b)
{
    if (!std::isfinite(b.tx_power_dbm) || !std::isfinite(b.tx_gain_dbi) || !std::isfinite(b.rx_gain_dbi))
        throw InvalidArgument("link budget values must be finite");
}

double itu_distance_coefficient(ItuEnvironment env)
{
    switch (env)
    {
    case ItuEnvironment::Office: return 30.0;
    case ItuEnvironment::Residential: return 28.0;
    case ItuEnvironment::Commercial: return 22.0;
    }
    return 30.0;
}

ItuEnvironment parse_itu_environment(std::string_view text)
{
    const std::string key = lower(text);
    if (key == "office")
        return ItuEnvironment::Office;
    if (key == "residential")
        return ItuEnvironment::Residential;
    if (key == "commercial")
        return ItuEnvironment::Commercial;
    throw InvalidArgument("unknown ITU-R environment '" + std::string(text) +
                          "' (expected office, residential or commercial)");
}

std::vector<double> ItuRParams::default_floor_penetration()
{
    std::vector<double> table{0.0};
    for (int n = 1; n <= 5; ++n)
        table.push_back(15.0 + 4.0 * (n - 1));
    return table;
}

double ItuRParams::floor_penetration(int n_floors) const
{
    if (n_floors < 0)
        throw InvalidArgument("number of floors cannot be negative");
    if (static_cast<std::size_t>(n_floors) >= floor_penetration_db.size())
        throw MissingParameter("no ITU-R floor penetration factor P_f(" + std::to_string(n_floors) + ")");
    return floor_penetration_db[static_cast<std::size_t>(n_floors)];
}

std::map<std::pair<int, int>, double> TIplmParams::default_nt_busy()
{
    return {
        {{1, 1}, 31.1}, {{1, 2}, 30.1}, {{1, 3}, 31.8}, {{1, 4}, 31.2}, {{1, 5}, 31.3},
        {{7, 1}, 32.9}, {{7, 2}, 28.5}, {{7, 3}, 26.7}, {{7, 4}, 29.1}, {{7, 5}, 27.4},
        {{11, 1}, 29.3}, {{11, 2}, 28.4}, {{11, 3}, 27.0}, {{11, 4}, 28.0}, {{11, 5}, 28.4},
    };
}

std::map<int, double> TIplmParams::default_nt_open() { return {{1, 19.2}, {7, 18.0}, {11, 17.3}}; }

std::map<MaterialKind, double> TIplmParams::default_wall_loss()
{
    return {
        {MaterialKind::Wood, 2.67},
        {MaterialKind::Concrete, 2.73},
        {MaterialKind::Pillar, 6.0},
        {MaterialKind::Glass, 4.5},
    };
}

std::map<int, double> TIplmParams::default_faf()
{
    return {{-2, 36.0}, {-1, 21.0}, {0, 0.0}, {1, 21.0}, {2, 33.0}, {3, 40.0}};
}

void validate(const ItuRParams &p)
{
    if (!std::isfinite(p.n_coeff) || p.n_coeff <= 0.0)
        throw InvalidArgument("ITU-R distance coefficient N must be positive");
    if (p.floor_penetration_db.empty() || p.floor_penetration_db.front() != 0.0)
        throw InvalidArgument("ITU-R floor penetration table must start with P_f(0) = 0");
    for (double v : p.floor_penetration_db)
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidArgument("ITU-R floor penetration factors must be finite and non-negative");
}

void validate(const LogDistanceParams &p)
{
    if (!std::isfinite(p.gamma) || p.gamma <= 0.0)
        throw InvalidArgument("log-distance exponent gamma must be positive");
    if (!std::isfinite(p.d0_m) || p.d0_m <= 0.0)
        throw InvalidArgument("log-distance reference distance d0 must be positive");
}

void validate(const TIplmParams &p)
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    for (const auto &[key, nt] : p.nt_busy)
    {
        Channel{key.first};
        if (key.second < 1 || !positive(nt))
            throw InvalidArgument("busy-office N_T entries need an obstacle count >= 1 and a positive value");
    }
    for (const auto &[ch, nt] : p.nt_open)
    {
        Channel{ch};
        if (!positive(nt))
            throw InvalidArgument("open-space N_T values must be positive");
    }
    if (!positive(p.nt_corridor))
        throw InvalidArgument("corridor N_T must be positive");
    for (const auto &[kind, loss] : p.wall_loss_db)
        if (!positive(loss))
            throw InvalidArgument("wall loss entries must be positive");
    for (const auto &[name, loss] : p.custom_wall_loss_db)
        if (!positive(loss))
            throw InvalidArgument("custom wall loss for '" + name + "' must be positive");
    auto zero = p.faf_db.find(0);
    if (zero == p.faf_db.end() || zero->second != 0.0)
        throw InvalidArgument("FAF table must map a floor delta of 0 to 0 dB");
    for (const auto &[delta, faf] : p.faf_db)
        if (!std::isfinite(faf) || faf < 0.0)
            throw InvalidArgument("FAF values must be finite and non-negative");
}

double lookup_nt(const TIplmParams &p, Channel c, Scenario scenario, int obstacle_count)
{
    if (obstacle_count < 0)
        throw InvalidArgument("obstacle count cannot be negative");
    const std::string ch = std::to_string(c.index());
    switch (scenario)
    {
    case Scenario::Corridor: return p.nt_corridor;
    case Scenario::BusyOffice:
        if (obstacle_count > 0)
        {
            auto first = p.nt_busy.lower_bound({c.index(), 0});
            auto last = p.nt_busy.lower_bound({c.index() + 1, 0});
            if (first == last)
                throw MissingParameter("no busy-office N_T for channel " + ch);
            auto exact = p.nt_busy.find({c.index(), obstacle_count});
            if (exact != p.nt_busy.end())
                return exact->second;
            // Beyond the table: the largest listed count. Below it (gaps): missing.
            auto largest = std::prev(last);
            if (obstacle_count > largest->first.second)
                return largest->second;
            throw MissingParameter("no busy-office N_T for channel " + ch + " with " + std::to_string(obstacle_count) +
                                   " obstacles");
        }
        [[fallthrough]];
    case Scenario::OpenSpace: {
        auto it = p.nt_open.find(c.index());
        if (it == p.nt_open.end())
            throw MissingParameter("no open-space N_T for channel " + ch);
        return it->second;
    }
    }
    throw InvalidArgument("unknown scenario");
}

double lookup_faf(const TIplmParams &p, int floor_delta)
{
    auto it = p.faf_db.find(floor_delta);
    if (it == p.faf_db.end())
        throw MissingParameter("no floor attenuation factor for a floor delta of " + std::to_string(floor_delta));
    return it->second;
}

double wall_loss_db(const TIplmParams &p, const Material &m)
{
    if (m.kind() == MaterialKind::Custom)
    {
        auto it = p.custom_wall_loss_db.find(m.name());
        return it != p.custom_wall_loss_db.end() ? it->second : m.custom_loss_db();
    }
    auto it = p.wall_loss_db.find(m.kind());
    if (it == p.wall_loss_db.end())
        throw MissingParameter("no wall loss for material '" + m.name() + "'");
    return it->second;
}

double wall_loss_sum(const TIplmParams &p, const ObstructionSummary &obs)
{
    double total = 0.0;
    for (const auto &[material, count] : obs.counts)
        total += count * wall_loss_db(p, material);
    return total;
}

double evaluate(const LinearTerms &t, double distance_m)
{
    return (t.base_db + t.slope_db * std::log10(distance_m / t.reference_m)) + t.extra_db;
}

LinearTerms itu_r_terms(double frequency_mhz, const ItuRParams &p, int n_floors)
{
    require_frequency(frequency_mhz);
    return {itu_r_base_db(frequency_mhz), p.n_coeff, p.floor_penetration(n_floors), 1.0};
}

LinearTerms log_distance_terms(double frequency_mhz, const LogDistanceParams &p)
{
    require_frequency(frequency_mhz);
    const double lambda_m = speed_of_light_m_s / (frequency_mhz * 1e6);
    return {20.0 * std::log10(4.0 * std::numbers::pi * p.d0_m / lambda_m), 10.0 * p.gamma, 0.0, p.d0_m};
}

LinearTerms tiplm_terms(const LinkContext &ctx, const TIplmParams &p)
{
    require_frequency(ctx.frequency_mhz);
    double nt = 0.0;
    if (ctx.nt_override)
        nt = *ctx.nt_override;
    else if (ctx.scenario == Scenario::Corridor)
        nt = p.nt_corridor;
    else
    {
        std::optional<Channel> ch = ctx.channel ? ctx.channel : channel_for_frequency(ctx.frequency_mhz);
        if (!ch)
            throw MissingParameter("N_T lookup needs a channel; " + std::to_string(ctx.frequency_mhz) +
                                   " MHz is not a channel center");
        nt = lookup_nt(p, *ch, ctx.scenario, ctx.obstructions.total);
    }
    const double extra = wall_loss_sum(p, ctx.obstructions) + lookup_faf(p, ctx.floor_delta);
    return {tiplm_base_db(ctx.frequency_mhz), nt, extra, 1.0};
}

double itu_r_path_loss(double frequency_mhz, double distance_m, const ItuRParams &p, int n_floors)
{
    require_distance(distance_m, 1.0, "ITU-R");
    return evaluate(itu_r_terms(frequency_mhz, p, n_floors), distance_m);
}

double log_distance_path_loss(double frequency_mhz, double distance_m, const LogDistanceParams &p)
{
    validate(p);
    require_distance(distance_m, p.d0_m, "Log-distance");
    return evaluate(log_distance_terms(frequency_mhz, p), distance_m);
}

double tiplm_path_loss(const LinkContext &ctx, const TIplmParams &p)
{
    require_distance(ctx.distance_m, 1.0, "T-IPLM");
    return evaluate(tiplm_terms(ctx, p), ctx.distance_m);
}

std::string_view to_string(ModelKind kind)
{
    switch (kind)
    {
    case ModelKind::TIplm: return "T-IPLM";
    case ModelKind::ItuR: return "ITU-R";
    case ModelKind::LogDistance: return "Log-distance";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view text)
{
    const std::string key = lower(text);
    if (key == "tiplm" || key == "t-iplm")
        return ModelKind::TIplm;
    if (key == "itur" || key == "itu-r" || key == "itu")
        return ModelKind::ItuR;
    if (key == "logd" || key == "log-distance" || key == "logdistance")
        return ModelKind::LogDistance;
    throw InvalidArgument("unknown model '" + std::string(text) + "' (expected tiplm, itur or logd)");
}

PathLossModel::PathLossModel(Variant v) : v_(std::move(v))
{
    std::visit(
        [](const auto &m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, TIplmModel>)
                validate(m.params);
            else
                validate(m);
        },
        v_);
}

ModelKind PathLossModel::kind() const
{
    switch (v_.index())
    {
    case 0: return ModelKind::TIplm;
    case 1: return ModelKind::ItuR;
    default: return ModelKind::LogDistance;
    }
}

std::string PathLossModel::name() const { return std::string(to_string(kind())); }

double PathLossModel::min_distance_m() const
{
    if (const auto *logd = std::get_if<LogDistanceParams>(&v_))
        return logd->d0_m;
    return 1.0;
}

double PathLossModel::base_db(double frequency_mhz) const
{
    require_frequency(frequency_mhz);
    switch (kind())
    {
    case ModelKind::TIplm: return tiplm_base_db(frequency_mhz);
    case ModelKind::ItuR: return itu_r_base_db(frequency_mhz);
    case ModelKind::LogDistance: break;
    }
    return log_distance_terms(frequency_mhz, std::get<LogDistanceParams>(v_)).base_db;
}

LinearTerms PathLossModel::terms(const LinkContext &ctx) const
{
    if (const auto *t = std::get_if<TIplmModel>(&v_))
    {
        LinkContext bound = ctx;
        bound.scenario = t->params.scenario;
        if (t->channel)
            bound.channel = t->channel;
        if (t->nt_override)
            bound.nt_override = t->nt_override;
        return tiplm_terms(bound, t->params);
    }
    if (const auto *itu = std::get_if<ItuRParams>(&v_))
        return itu_r_terms(ctx.frequency_mhz, *itu, std::abs(ctx.floor_delta));
    return log_distance_terms(ctx.frequency_mhz, std::get<LogDistanceParams>(v_));
}

double PathLossModel::path_loss(const LinkContext &ctx) const
{
    require_distance(ctx.distance_m, min_distance_m(), name().c_str());
    return evaluate(terms(ctx), ctx.distance_m);
}

} // namespace indoorpl
