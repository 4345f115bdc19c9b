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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "indoorpl/geometry.hpp"

namespace indoorpl
{

inline constexpr double speed_of_light_m_s = 299'792'458.0;

// IEEE 802.11b/g/n channel in the 2.4 GHz band.
class Channel
{
  public:
    // Throws InvalidArgument unless 1 <= index <= 14.
    explicit Channel(int index);
    int index() const noexcept { return index_; }
    friend auto operator<=>(const Channel &, const Channel &) = default;

  private:
    int index_;
};

// Channel center frequency in MHz.
double channel_to_frequency(Channel c);

// Exact inverse of channel_to_frequency; nullopt for frequencies that are not a channel center.
std::optional<Channel> channel_for_frequency(double frequency_mhz);

enum class Scenario
{
    BusyOffice,
    OpenSpace,
    Corridor
};

std::string_view to_string(Scenario s);
// Accepts "busy", "open", "corridor" (case-insensitive). Throws InvalidArgument.
Scenario parse_scenario(std::string_view text);

struct LinkBudget
{
    double tx_power_dbm = 15.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;

    double total_db() const { return tx_power_dbm + tx_gain_dbi + rx_gain_dbi; }
};

void validate(const LinkBudget &b);

inline double predicted_rssi(double path_loss_db, const LinkBudget &b) { return b.total_db() - path_loss_db; }
inline double rssi_to_path_loss(double rssi_dbm, const LinkBudget &b) { return b.total_db() - rssi_dbm; }

enum class ItuEnvironment
{
    Office,
    Residential,
    Commercial
};

// Distance power loss coefficient N: 30 office, 28 residential, 22 commercial.
double itu_distance_coefficient(ItuEnvironment env);
ItuEnvironment parse_itu_environment(std::string_view text);

struct ItuRParams
{
    double n_coeff = 30.0;
    // P_f(n) indexed by the number of floors n; entry 0 must be 0. The default is the ITU-R
    // office rule 15 + 4 (n - 1) dB, not a measured value.
    std::vector<double> floor_penetration_db = default_floor_penetration();

    static std::vector<double> default_floor_penetration();
    // Throws MissingParameter past the end of the table.
    double floor_penetration(int n_floors) const;
};

struct LogDistanceParams
{
    double gamma = 3.0;
    double d0_m = 1.0;
};

struct TIplmParams
{
    Scenario scenario = Scenario::BusyOffice;
    // (channel index, obstacle count) -> N_T for busy office premises.
    std::map<std::pair<int, int>, double> nt_busy = default_nt_busy();
    // channel index -> N_T for open space.
    std::map<int, double> nt_open = default_nt_open();
    // Applied to every channel.
    double nt_corridor = 25.8;
    std::map<MaterialKind, double> wall_loss_db = default_wall_loss();
    // Overrides the loss carried by custom materials, keyed by material name.
    std::map<std::string, double> custom_wall_loss_db;
    // signed floor delta (rx above tx is positive) -> FAF in dB.
    std::map<int, double> faf_db = default_faf();

    static std::map<std::pair<int, int>, double> default_nt_busy();
    static std::map<int, double> default_nt_open();
    static std::map<MaterialKind, double> default_wall_loss();
    static std::map<int, double> default_faf();
};

void validate(const ItuRParams &p);
void validate(const LogDistanceParams &p);
void validate(const TIplmParams &p);

// Facts about one link needed by the models.
struct LinkContext
{
    double frequency_mhz = 0.0;
    double distance_m = 0.0;
    ObstructionSummary obstructions;
    int floor_delta = 0;
    Scenario scenario = Scenario::BusyOffice;
    // Selects the N_T row; derived from the frequency when absent.
    std::optional<Channel> channel;
    // Bypasses the N_T tables entirely.
    std::optional<double> nt_override;
};

// Busy office: table row for the obstacle count, clamped to the largest listed count, with
// zero obstacles falling back to the open-space value. Open space: per channel.
// Corridor: one value for all channels. Throws MissingParameter.
double lookup_nt(const TIplmParams &p, Channel c, Scenario scenario, int obstacle_count);

// Throws MissingParameter for deltas outside the table.
double lookup_faf(const TIplmParams &p, int floor_delta);

double wall_loss_db(const TIplmParams &p, const Material &m);
double wall_loss_sum(const TIplmParams &p, const ObstructionSummary &obs);

// Every model here is linear in log10(d / reference_m):
//   PL = (base_db + slope_db * log10(d / reference_m)) + extra_db
struct LinearTerms
{
    double base_db = 0.0;
    double slope_db = 0.0;
    double extra_db = 0.0;
    double reference_m = 1.0;
};

double evaluate(const LinearTerms &t, double distance_m);

LinearTerms itu_r_terms(double frequency_mhz, const ItuRParams &p, int n_floors);
LinearTerms log_distance_terms(double frequency_mhz, const LogDistanceParams &p);
LinearTerms tiplm_terms(const LinkContext &ctx, const TIplmParams &p);

// 20 log10(f) + N log10(d) + P_f(n) - 28. Throws DomainError for d < 1 m.
double itu_r_path_loss(double frequency_mhz, double distance_m, const ItuRParams &p, int n_floors);

// 20 log10(4 pi d0 / lambda) + 10 gamma log10(d / d0). Throws DomainError for d < d0.
double log_distance_path_loss(double frequency_mhz, double distance_m, const LogDistanceParams &p);

// 20 log10(f) + N_T log10(d) + sum L_w + FAF - 20. Throws DomainError for d < 1 m.
double tiplm_path_loss(const LinkContext &ctx, const TIplmParams &p);

enum class ModelKind
{
    TIplm,
    ItuR,
    LogDistance
};

std::string_view to_string(ModelKind kind);
// Accepts "tiplm", "itur", "itu-r", "logd", "log-distance" (case-insensitive).
ModelKind parse_model_kind(std::string_view text);

struct TIplmModel
{
    TIplmParams params;
    std::optional<Channel> channel;
    std::optional<double> nt_override;
};

// A path loss model with its parameters bound. The T-IPLM variant uses its own scenario,
// channel and N_T override in place of the context's.
class PathLossModel
{
  public:
    using Variant = std::variant<TIplmModel, ItuRParams, LogDistanceParams>;

    explicit PathLossModel(Variant v);

    ModelKind kind() const;
    std::string name() const;
    // Smallest distance inside the model's domain.
    double min_distance_m() const;
    // Constant term of terms(); depends on the frequency only.
    double base_db(double frequency_mhz) const;

    LinearTerms terms(const LinkContext &ctx) const;
    double path_loss(const LinkContext &ctx) const;

    const Variant &config() const noexcept { return v_; }

  private:
    Variant v_;
};

} // namespace indoorpl
