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

#include "indoorpl/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "indoorpl/error.hpp"
#include "indoorpl/kernels.hpp"

namespace indoorpl
{

namespace
{

// Regression of r on x through the origin.
struct Design
{
    std::vector<double> x;
    std::vector<double> r;
    std::vector<double> w;
};

FitResult solve(const Design &design, std::string name, FitOptions options)
{
    const double sxx = options.weight_by_samples ? kernels::weighted_dot(design.w, design.x, design.x)
                                                 : kernels::dot(design.x, design.x);
    if (sxx == 0.0)
        throw DegenerateDesign("every point sits at the reference distance; the slope is undetermined");
    const double sxr = options.weight_by_samples ? kernels::weighted_dot(design.w, design.x, design.r)
                                                 : kernels::dot(design.x, design.r);
    const double estimate = sxr / sxx;

    std::vector<double> fitted(design.x.size());
    for (std::size_t i = 0; i < fitted.size(); ++i)
        fitted[i] = estimate * design.x[i];
    const double rms = std::sqrt(kernels::sum_sq_diff(design.r, fitted) / static_cast<double>(fitted.size()));
    return {std::move(name), estimate, rms, static_cast<int>(fitted.size())};
}

void require_points(std::span<const AggregatedPoint> points)
{
    if (points.size() < 2)
        throw InsufficientData("a fit needs at least 2 aggregated points, got " + std::to_string(points.size()));
}

void require_distinct_distances(std::span<const AggregatedPoint> points)
{
    const double first = points.front().distance_m;
    const bool distinct = std::any_of(points.begin(), points.end(),
                                      [first](const AggregatedPoint &p) { return p.distance_m != first; });
    if (!distinct)
        throw InsufficientData("a fit needs at least 2 distinct distances");
}

void check_design(const Design &design, std::span<const AggregatedPoint> points)
{
    if (std::all_of(design.x.begin(), design.x.end(), [](double x) { return x == 0.0; }))
        throw DegenerateDesign("every point sits at the reference distance; the slope is undetermined");
    require_distinct_distances(points);
}

} // namespace

FitResult fit_nt(std::span<const AggregatedPoint> points, double frequency_mhz, const TIplmParams &p,
                 FitOptions options)
{
    require_points(points);
    if (!std::isfinite(frequency_mhz) || frequency_mhz <= 0.0)
        throw DomainError("frequency must be finite and positive");
    const double fixed = 20.0 * std::log10(frequency_mhz) - 20.0;

    Design design;
    for (const auto &pt : points)
    {
        if (!(pt.distance_m >= 1.0))
            throw DomainError("N_T fit needs d >= 1 m, got " + std::to_string(pt.distance_m));
        design.x.push_back(std::log10(pt.distance_m));
        design.r.push_back(pt.pl_mean_db - ((fixed + wall_loss_sum(p, pt.obstructions)) + lookup_faf(p, pt.floor_delta)));
        design.w.push_back(pt.sample_count);
    }
    check_design(design, points);
    return solve(design, "N_T", options);
}

FitResult fit_gamma(std::span<const AggregatedPoint> points, double frequency_mhz, double d0_m, FitOptions options)
{
    require_points(points);
    const LinearTerms ref = log_distance_terms(frequency_mhz, LogDistanceParams{1.0, d0_m});

    Design design;
    for (const auto &pt : points)
    {
        if (!(pt.distance_m >= d0_m))
            throw DomainError("gamma fit needs d >= d0 = " + std::to_string(d0_m) + " m, got " +
                              std::to_string(pt.distance_m));
        design.x.push_back(10.0 * std::log10(pt.distance_m / d0_m));
        design.r.push_back(pt.pl_mean_db - ref.base_db);
        design.w.push_back(pt.sample_count);
    }
    check_design(design, points);
    return solve(design, "gamma", options);
}

std::vector<ObstacleCountFit> fit_nt_by_obstacle_count(std::span<const AggregatedPoint> points, double frequency_mhz,
                                                       const TIplmParams &p, FitOptions options)
{
    std::map<int, std::vector<AggregatedPoint>> groups;
    for (const auto &pt : points)
        groups[pt.obstructions.total].push_back(pt);

    std::vector<ObstacleCountFit> out;
    for (const auto &[count, members] : groups)
    {
        ObstacleCountFit f;
        f.obstacle_count = count;
        try
        {
            f.fit = fit_nt(members, frequency_mhz, p, options);
        }
        catch (const Error &e)
        {
            f.note = e.what();
        }
        out.push_back(std::move(f));
    }
    return out;
}

ErrorStats error_stats(std::span<const double> residuals, double bin_width_db)
{
    if (residuals.empty())
        throw EmptyInput("error statistics need at least one residual");
    if (!std::isfinite(bin_width_db) || bin_width_db <= 0.0)
        throw InvalidArgument("histogram bin width must be positive");

    const double n = static_cast<double>(residuals.size());
    ErrorStats stats;
    stats.n = static_cast<int>(residuals.size());
    stats.mean_db = kernels::sum(residuals) / n;
    const std::vector<double> mean(residuals.size(), stats.mean_db);
    stats.std_dev_db = std::sqrt(kernels::sum_sq_diff(residuals, mean) / n);

    const auto [min_it, max_it] = std::minmax_element(residuals.begin(), residuals.end());
    const double lo = std::floor(*min_it);
    const double hi = std::ceil(*max_it);
    const auto bins = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / bin_width_db)));
    stats.histogram.resize(bins);
    for (std::size_t k = 0; k < bins; ++k)
        stats.histogram[k] = {lo + static_cast<double>(k) * bin_width_db, lo + static_cast<double>(k + 1) * bin_width_db, 0};
    for (double r : residuals)
    {
        auto k = static_cast<std::size_t>(std::max(0.0, std::floor((r - lo) / bin_width_db)));
        // Edge rounding: settle against the stored bin bounds.
        k = std::min(k, bins - 1);
        while (k > 0 && r < stats.histogram[k].low_db)
            --k;
        while (k + 1 < bins && r >= stats.histogram[k].high_db)
            ++k;
        ++stats.histogram[k].count;
    }
    return stats;
}

double mse(std::span<const double> predicted, std::span<const double> observed)
{
    if (predicted.size() != observed.size())
        throw LengthMismatch("MSE inputs differ in length: " + std::to_string(predicted.size()) + " vs " +
                             std::to_string(observed.size()));
    if (predicted.empty())
        throw EmptyInput("MSE of empty lists");
    return kernels::sum_sq_diff(predicted, observed) / static_cast<double>(predicted.size());
}

std::vector<double> predict_points(std::span<const AggregatedPoint> points, double frequency_mhz,
                                   const PathLossModel &model)
{
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto &pt : points)
    {
        LinkContext ctx;
        ctx.frequency_mhz = frequency_mhz;
        ctx.distance_m = pt.distance_m;
        ctx.obstructions = pt.obstructions;
        ctx.floor_delta = pt.floor_delta;
        out.push_back(model.path_loss(ctx));
    }
    return out;
}

std::vector<double> residuals(std::span<const AggregatedPoint> points, double frequency_mhz,
                              const PathLossModel &model)
{
    std::vector<double> out = predict_points(points, frequency_mhz, model);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = points[i].pl_mean_db - out[i];
    return out;
}

ComparisonReport compare_models(std::span<const AggregatedPoint> points, double frequency_mhz,
                                std::span<const PathLossModel> models)
{
    if (points.empty())
        throw EmptyInput("model comparison needs at least one aggregated point");
    if (models.empty())
        throw InvalidArgument("model comparison needs at least one model");

    std::vector<double> observed;
    observed.reserve(points.size());
    for (const auto &pt : points)
        observed.push_back(pt.pl_mean_db);

    ComparisonReport report;
    report.point_count = points.size();
    for (const auto &model : models)
    {
        const std::vector<double> predicted = predict_points(points, frequency_mhz, model);
        const double bias = (kernels::sum(predicted) - kernels::sum(observed)) / static_cast<double>(points.size());
        report.scores.push_back({model.name(), mse(predicted, observed), bias});
    }
    auto best = std::min_element(report.scores.begin(), report.scores.end(),
                                 [](const ModelScore &a, const ModelScore &b) { return a.mse_db2 < b.mse_db2; });
    report.winner = best->model;
    return report;
}

} // namespace indoorpl
