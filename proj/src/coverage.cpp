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

#include "indoorpl/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "indoorpl/error.hpp"
#include "indoorpl/kernels.hpp"

namespace indoorpl
{

namespace
{

struct RowScratch
{
    std::vector<double> slope, log_d, extra, loss;
    std::vector<std::uint8_t> valid;
};

void evaluate_rows(const FloorPlan &plan, const Point3 &ap, const PathLossModel &model, double eirp,
                   double frequency_mhz, double base_db, CoverageGrid &grid, int row_begin, int row_end, int &invalid)
{
    const auto width = static_cast<std::size_t>(grid.width);
    RowScratch s;
    s.slope.resize(width);
    s.log_d.resize(width);
    s.extra.resize(width);
    s.loss.resize(width);
    s.valid.resize(width);

    const double min_d = model.min_distance_m();
    for (int row = row_begin; row < row_end; ++row)
    {
        for (int col = 0; col < grid.width; ++col)
        {
            const Point2 c = grid.cell_center(col, row);
            const Point3 rx{c.x, c.y, grid.floor};
            LinkContext ctx;
            ctx.frequency_mhz = frequency_mhz;
            ctx.distance_m = std::max(distance(ap, rx, plan), min_d);
            ctx.floor_delta = floor_delta(ap, rx);
            const auto i = static_cast<std::size_t>(col);
            try
            {
                if (ap.floor == grid.floor)
                    ctx.obstructions = count_obstructions(plan, ap, rx);
                const LinearTerms t = model.terms(ctx);
                if (t.base_db != base_db)
                    throw std::logic_error("model base term varies across cells");
                s.slope[i] = t.slope_db;
                s.log_d[i] = std::log10(ctx.distance_m / t.reference_m);
                s.extra[i] = t.extra_db;
                s.valid[i] = 1;
            }
            catch (const Error &)
            {
                s.slope[i] = s.log_d[i] = s.extra[i] = 0.0;
                s.valid[i] = 0;
            }
        }

        const std::span<double> out(grid.rssi_dbm.data() + static_cast<std::size_t>(row) * width, width);
        kernels::affine_loss(base_db, s.slope, s.log_d, s.extra, s.loss);
        kernels::rssi_from_loss(eirp, s.loss, out);
        for (std::size_t i = 0; i < width; ++i)
            if (!s.valid[i])
            {
                out[i] = invalid_cell_dbm;
                ++invalid;
            }
    }
}

} // namespace

CoverageGrid coverage_grid(const FloorPlan &plan, const Point3 &ap, const PathLossModel &model,
                           const LinkBudget &budget, double frequency_mhz, int floor, double resolution_m,
                           const CoverageOptions &options)
{
    if (!std::isfinite(resolution_m) || resolution_m <= 0.0)
        throw InvalidArgument("grid resolution must be positive");
    validate_point(plan, ap);
    validate(budget);
    if (!plan.contains_floor(floor))
        throw InvalidArgument("coverage floor " + std::to_string(floor) + " is not in the plan");

    Bounds area;
    if (options.bounds)
        area = *options.bounds;
    else
    {
        area = plan.bounds().value_or(Bounds{ap.x, ap.y, ap.x, ap.y});
        area.expand(ap.xy());
    }
    if (!(area.max_x >= area.min_x) || !(area.max_y >= area.min_y))
        throw InvalidArgument("coverage bounds are inverted");

    const double cells_x = std::ceil((area.max_x - area.min_x) / resolution_m);
    const double cells_y = std::ceil((area.max_y - area.min_y) / resolution_m);
    if (cells_x + 2 > 1e5 || cells_y + 2 > 1e5)
        throw InvalidArgument("coverage grid would exceed 100000 cells per side; raise the resolution");

    CoverageGrid grid;
    grid.origin = {area.min_x - resolution_m, area.min_y - resolution_m};
    grid.resolution_m = resolution_m;
    grid.width = static_cast<int>(cells_x) + 2;
    grid.height = static_cast<int>(cells_y) + 2;
    grid.floor = floor;
    grid.rssi_dbm.assign(static_cast<std::size_t>(grid.width) * grid.height, invalid_cell_dbm);

    const double base_db = model.base_db(frequency_mhz);

    const unsigned threads = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(grid.height));
    std::vector<int> invalid(threads, 0);
    if (threads == 1)
        evaluate_rows(plan, ap, model, budget.total_db(), frequency_mhz, base_db, grid, 0, grid.height, invalid[0]);
    else
    {
        std::vector<std::jthread> workers;
        const int block = (grid.height + static_cast<int>(threads) - 1) / static_cast<int>(threads);
        for (unsigned t = 0; t < threads; ++t)
        {
            const int begin = static_cast<int>(t) * block;
            const int end = std::min(grid.height, begin + block);
            if (begin >= end)
                break;
            workers.emplace_back([&, t, begin, end] {
                evaluate_rows(plan, ap, model, budget.total_db(), frequency_mhz, base_db, grid, begin, end, invalid[t]);
            });
        }
    }
    for (int n : invalid)
        grid.invalid_cells += n;
    return grid;
}

void write_coverage_csv(std::ostream &os, const CoverageGrid &grid)
{
    std::ostringstream line;
    line << std::fixed << std::setprecision(4);
    for (int row = 0; row < grid.height; ++row)
    {
        line.str({});
        for (int col = 0; col < grid.width; ++col)
        {
            if (col > 0)
                line << ',';
            const double v = grid.at(col, row);
            if (std::isnan(v))
                line << "nan";
            else
                line << v;
        }
        os << line.str() << '\n';
    }
}

int pgm_level(double rssi_dbm)
{
    if (std::isnan(rssi_dbm))
        return 0;
    const double t = (rssi_dbm - pgm_floor_dbm) / (pgm_ceiling_dbm - pgm_floor_dbm);
    return static_cast<int>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
}

void write_coverage_pgm(std::ostream &os, const CoverageGrid &grid)
{
    os << "P2\n" << grid.width << ' ' << grid.height << "\n255\n";
    for (int row = 0; row < grid.height; ++row)
    {
        for (int col = 0; col < grid.width; ++col)
        {
            if (col > 0)
                os << ' ';
            os << pgm_level(grid.at(col, row));
        }
        os << '\n';
    }
}

} // namespace indoorpl
