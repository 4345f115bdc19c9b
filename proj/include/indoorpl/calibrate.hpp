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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indoorpl/ingest.hpp"
#include "indoorpl/models.hpp"

namespace indoorpl
{

struct FitOptions
{
    // Weight each aggregated point by its sample count instead of counting it once.
    bool weight_by_samples = false;
};

struct FitResult
{
    std::string parameter_name;
    double estimate = 0.0;
    double residual_rms_db = 0.0;
    int sample_count = 0; // aggregated points used
};

// Closed-form least squares for the only free T-IPLM coefficient:
//   N_T = sum(w r x) / sum(w x^2),  x = log10(d),  r = PL_mean - (20 log10 f - 20 + sum L_w + FAF)
// Throws InsufficientData (< 2 points or one distinct distance), DegenerateDesign (all d = 1),
// DomainError (d < 1), MissingParameter (wall or FAF lookups).
FitResult fit_nt(std::span<const AggregatedPoint> points, double frequency_mhz, const TIplmParams &p,
                 FitOptions options = {});

// Same estimator for the log-distance exponent with x = 10 log10(d / d0) and the free-space
// reference term subtracted.
FitResult fit_gamma(std::span<const AggregatedPoint> points, double frequency_mhz, double d0_m,
                    FitOptions options = {});

struct ObstacleCountFit
{
    int obstacle_count = 0;
    std::optional<FitResult> fit; // empty when the group cannot be fitted
    std::string note;
};

// One N_T per obstacle count, the way the busy-office table is organised.
std::vector<ObstacleCountFit> fit_nt_by_obstacle_count(std::span<const AggregatedPoint> points, double frequency_mhz,
                                                       const TIplmParams &p, FitOptions options = {});

struct HistogramBin
{
    double low_db = 0.0;
    double high_db = 0.0;
    int count = 0;
};

struct ErrorStats
{
    double mean_db = 0.0;
    double std_dev_db = 0.0; // population (1/n)
    std::vector<HistogramBin> histogram;
    int n = 0;
};

inline constexpr double default_histogram_bin_db = 1.0;

// Histogram covers [floor(min), ceil(max)] in bin_width steps; the last bin is closed.
ErrorStats error_stats(std::span<const double> residuals, double bin_width_db = default_histogram_bin_db);

// (1/n) sum (predicted - observed)^2. Throws LengthMismatch, EmptyInput.
double mse(std::span<const double> predicted, std::span<const double> observed);

// Model prediction at every aggregated point.
std::vector<double> predict_points(std::span<const AggregatedPoint> points, double frequency_mhz,
                                   const PathLossModel &model);

// Observed mean minus model prediction at every point.
std::vector<double> residuals(std::span<const AggregatedPoint> points, double frequency_mhz,
                              const PathLossModel &model);

struct ModelScore
{
    std::string model;
    double mse_db2 = 0.0;
    double bias_db = 0.0; // mean(predicted - observed)
};

struct ComparisonReport
{
    std::vector<ModelScore> scores; // in model listing order
    std::string winner;             // minimal MSE, first listed on ties
    std::size_t point_count = 0;
};

ComparisonReport compare_models(std::span<const AggregatedPoint> points, double frequency_mhz,
                                std::span<const PathLossModel> models);

} // namespace indoorpl
