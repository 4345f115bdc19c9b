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

// Independent reference computations for the test suites. Nothing here calls into the
// library's formula or intersection code.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "indoorpl/geometry.hpp"

namespace oracle
{

using hp = boost::multiprecision::cpp_dec_float_50;

inline hp hp_log10(const hp &x) { return boost::multiprecision::log10(x); }

inline double itu_r(double f_mhz, double d_m, double n_coeff, double pf_db)
{
    const hp v = hp(20) * hp_log10(hp(f_mhz)) + hp(n_coeff) * hp_log10(hp(d_m)) + hp(pf_db) - hp(28);
    return v.convert_to<double>();
}

inline double log_distance(double f_mhz, double d_m, double gamma, double d0_m)
{
    const hp pi = boost::math::constants::pi<hp>();
    const hp lambda = hp(299792458) / (hp(f_mhz) * hp(1000000));
    const hp v = hp(20) * hp_log10(hp(4) * pi * hp(d0_m) / lambda) + hp(10) * hp(gamma) * hp_log10(hp(d_m) / hp(d0_m));
    return v.convert_to<double>();
}

inline double tiplm(double f_mhz, double d_m, double nt, double walls_db, double faf_db)
{
    const hp v = hp(20) * hp_log10(hp(f_mhz)) + hp(nt) * hp_log10(hp(d_m)) + hp(walls_db) + hp(faf_db) - hp(20);
    return v.convert_to<double>();
}

// Counts whether segment tx->rx crosses the wall by sampling `samples` points along the segment,
// watching the side-of-wall-line sign, and checking that each sign change happens within the
// wall's extent. The signed side value is linear in the sample parameter, so the change point
// is located by interpolating between the two bracketing samples.
inline bool sampled_crossing(const indoorpl::WallSegment &w, indoorpl::Point2 tx, indoorpl::Point2 rx,
                             int samples = 100000)
{
    const double ux = w.b.x - w.a.x, uy = w.b.y - w.a.y;
    auto side = [&](double t) {
        const double px = tx.x + t * (rx.x - tx.x), py = tx.y + t * (rx.y - tx.y);
        return ux * (py - w.a.y) - uy * (px - w.a.x);
    };
    double prev = side(0.0);
    for (int k = 1; k <= samples; ++k)
    {
        const double t = static_cast<double>(k) / samples;
        const double cur = side(t);
        if ((prev < 0.0) != (cur < 0.0))
        {
            const double t0 = static_cast<double>(k - 1) / samples;
            const double ts = t0 + (prev / (prev - cur)) * (t - t0);
            const double px = tx.x + ts * (rx.x - tx.x), py = tx.y + ts * (rx.y - tx.y);
            const double along = ((px - w.a.x) * ux + (py - w.a.y) * uy) / (ux * ux + uy * uy);
            if (along >= 0.0 && along <= 1.0)
                return true;
        }
        prev = cur;
    }
    return false;
}

// Distance from point p to segment ab.
inline double point_segment_distance(indoorpl::Point2 p, indoorpl::Point2 a, indoorpl::Point2 b)
{
    const double ux = b.x - a.x, uy = b.y - a.y;
    double t = ((p.x - a.x) * ux + (p.y - a.y) * uy) / (ux * ux + uy * uy);
    t = std::fmax(0.0, std::fmin(1.0, t));
    return std::hypot(p.x - (a.x + t * ux), p.y - (a.y + t * uy));
}

// Configurations within `margin` of a tangency (endpoint on the other segment) are ambiguous
// for any tolerance-based predicate.
inline bool near_tangent(const indoorpl::WallSegment &w, indoorpl::Point2 tx, indoorpl::Point2 rx, double margin)
{
    return point_segment_distance(w.a, tx, rx) < margin || point_segment_distance(w.b, tx, rx) < margin ||
           point_segment_distance(tx, w.a, w.b) < margin || point_segment_distance(rx, w.a, w.b) < margin;
}

struct RandomScene
{
    indoorpl::FloorPlan plan;
    indoorpl::Point3 tx;
    indoorpl::Point3 rx;
};

inline indoorpl::Material random_material(std::mt19937_64 &rng)
{
    static const indoorpl::MaterialKind kinds[] = {indoorpl::MaterialKind::Wood, indoorpl::MaterialKind::Concrete,
                                                   indoorpl::MaterialKind::Glass, indoorpl::MaterialKind::Pillar};
    return indoorpl::Material(kinds[std::uniform_int_distribution<int>(0, 3)(rng)]);
}

// Up to max_walls random walls in a 20 m x 20 m room with random endpoints, redrawn until no
// wall is within 1e-3 m of a tangency with the line of sight.
inline RandomScene random_scene(std::mt19937_64 &rng, int max_walls = 10)
{
    std::uniform_real_distribution<double> coord(0.0, 20.0);
    const int n = std::uniform_int_distribution<int>(0, max_walls)(rng);
    indoorpl::Point2 tx{coord(rng), coord(rng)};
    indoorpl::Point2 rx{coord(rng), coord(rng)};
    while (std::hypot(rx.x - tx.x, rx.y - tx.y) < 1.0)
        rx = {coord(rng), coord(rng)};
    std::vector<indoorpl::WallSegment> walls;
    while (static_cast<int>(walls.size()) < n)
    {
        indoorpl::WallSegment w{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}, 0, random_material(rng)};
        if (std::hypot(w.b.x - w.a.x, w.b.y - w.a.y) < 0.1 || near_tangent(w, tx, rx, 1e-3))
            continue;
        walls.push_back(w);
    }
    return {indoorpl::FloorPlan("random", 1, 3.0, std::move(walls), {}), {tx.x, tx.y, 0}, {rx.x, rx.y, 0}};
}

} // namespace oracle
