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
#include <limits>
#include <optional>
#include <vector>

#include "indoorpl/geometry.hpp"
#include "indoorpl/models.hpp"

namespace indoorpl
{

// Value stored for cells where the model could not be evaluated.
inline constexpr double invalid_cell_dbm = std::numeric_limits<double>::quiet_NaN();

// Linear grey mapping range for PGM export.
inline constexpr double pgm_floor_dbm = -100.0;
inline constexpr double pgm_ceiling_dbm = -20.0;

struct CoverageGrid
{
    Point2 origin; // lower-left corner of cell (0, 0)
    double resolution_m = 1.0;
    int width = 0;
    int height = 0;
    int floor = 0;
    std::vector<double> rssi_dbm; // row-major, row 0 at origin.y
    int invalid_cells = 0;

    double at(int col, int row) const { return rssi_dbm[static_cast<std::size_t>(row) * width + col]; }
    Point2 cell_center(int col, int row) const
    {
        return {origin.x + (col + 0.5) * resolution_m, origin.y + (row + 0.5) * resolution_m};
    }
};

struct CoverageOptions
{
    // Area to cover; defaults to the plan extents plus the AP.
    std::optional<Bounds> bounds;
    // Worker threads over row blocks. The grid is identical for any value.
    unsigned threads = 1;
};

// Predicted RSSI at every cell center of `floor`. The covered area is padded by one cell on each
// side. Cells closer than the model's minimum distance are evaluated at that distance; cells whose
// model evaluation fails hold invalid_cell_dbm and are counted in invalid_cells.
CoverageGrid coverage_grid(const FloorPlan &plan, const Point3 &ap, const PathLossModel &model,
                           const LinkBudget &budget, double frequency_mhz, int floor, double resolution_m,
                           const CoverageOptions &options = {});

// One CSV line per grid row, fixed 4 decimals, "nan" for invalid cells.
void write_coverage_csv(std::ostream &os, const CoverageGrid &grid);

// Plain (P2) graymap: [-100, -20] dBm mapped linearly onto [0, 255] and clamped; invalid cells are 0.
void write_coverage_pgm(std::ostream &os, const CoverageGrid &grid);

int pgm_level(double rssi_dbm);

} // namespace indoorpl
