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

#include "indoorpl/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "indoorpl/error.hpp"
#include "indoorpl/kernels.hpp"

namespace indoorpl
{

namespace
{

const char *builtin_name(MaterialKind kind)
{
    switch (kind)
    {
    case MaterialKind::Wood: return "wood";
    case MaterialKind::Concrete: return "concrete";
    case MaterialKind::Glass: return "glass";
    case MaterialKind::Pillar: return "pillar";
    case MaterialKind::Custom: break;
    }
    throw InvalidArgument("custom materials need a name and a loss");
}

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

Material::Material(MaterialKind kind) : kind_(kind), name_(builtin_name(kind)) {}

Material Material::custom(std::string name, double loss_db)
{
    if (name.empty())
        throw InvalidArgument("custom material needs a non-empty name");
    if (!std::isfinite(loss_db) || loss_db <= 0.0)
        throw InvalidArgument("custom material '" + name + "' needs a finite positive loss, got " +
                              std::to_string(loss_db));
    Material m;
    m.kind_ = MaterialKind::Custom;
    m.name_ = std::move(name);
    m.custom_loss_db_ = loss_db;
    return m;
}

Material builtin_material(const std::string &name)
{
    const std::string key = lower(name);
    if (key == "wood")
        return Material(MaterialKind::Wood);
    if (key == "concrete")
        return Material(MaterialKind::Concrete);
    if (key == "glass")
        return Material(MaterialKind::Glass);
    if (key == "pillar")
        return Material(MaterialKind::Pillar);
    throw InvalidArgument("unknown material '" + name + "' (expected wood, concrete, glass or pillar)");
}

void Bounds::expand(Point2 p)
{
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
}

FloorPlan::FloorPlan() : batches_(1) {}

FloorPlan::FloorPlan(std::string name, int floor_count, double floor_height_m, std::vector<WallSegment> walls,
                     std::vector<PillarRect> pillars)
    : name_(std::move(name)), floor_count_(floor_count), floor_height_m_(floor_height_m), walls_(std::move(walls)),
      pillars_(std::move(pillars))
{
    if (floor_count_ < 1)
        throw InvalidArgument("floor_count must be at least 1, got " + std::to_string(floor_count_));
    if (!std::isfinite(floor_height_m_) || floor_height_m_ <= 0.0)
        throw InvalidArgument("floor height must be finite and positive");

    batches_.resize(static_cast<std::size_t>(floor_count_));
    for (std::size_t i = 0; i < walls_.size(); ++i)
    {
        const WallSegment &w = walls_[i];
        const std::string where = "wall " + std::to_string(i);
        if (!finite(w.a) || !finite(w.b))
            throw InvalidArgument(where + " has a non-finite endpoint");
        if (w.a == w.b)
            throw InvalidArgument(where + " has identical endpoints");
        if (!contains_floor(w.floor))
            throw InvalidArgument(where + " is on floor " + std::to_string(w.floor) + ", outside [0, " +
                                  std::to_string(floor_count_) + ")");
        WallBatch &batch = batches_[static_cast<std::size_t>(w.floor)];
        batch.ax.push_back(w.a.x);
        batch.ay.push_back(w.a.y);
        batch.bx.push_back(w.b.x);
        batch.by.push_back(w.b.y);
        batch.wall_index.push_back(i);
    }
    for (std::size_t i = 0; i < pillars_.size(); ++i)
    {
        const PillarRect &p = pillars_[i];
        const std::string where = "pillar " + std::to_string(i);
        if (!finite(p.center))
            throw InvalidArgument(where + " has a non-finite center");
        if (!(p.width > 0.0) || !(p.depth > 0.0) || !std::isfinite(p.width) || !std::isfinite(p.depth))
            throw InvalidArgument(where + " needs positive finite width and depth");
        if (!contains_floor(p.floor))
            throw InvalidArgument(where + " is on floor " + std::to_string(p.floor) + ", outside [0, " +
                                  std::to_string(floor_count_) + ")");
    }
}

const WallBatch &FloorPlan::walls_on(int floor) const
{
    if (!contains_floor(floor))
        throw InvalidArgument("floor " + std::to_string(floor) + " is not in plan '" + name_ + "'");
    return batches_[static_cast<std::size_t>(floor)];
}

std::optional<Bounds> FloorPlan::bounds() const
{
    std::optional<Bounds> b;
    auto add = [&b](Point2 p) {
        if (!b)
            b = Bounds{p.x, p.y, p.x, p.y};
        else
            b->expand(p);
    };
    for (const auto &w : walls_)
    {
        add(w.a);
        add(w.b);
    }
    for (const auto &p : pillars_)
    {
        add({p.center.x - p.width / 2, p.center.y - p.depth / 2});
        add({p.center.x + p.width / 2, p.center.y + p.depth / 2});
    }
    return b;
}

void ObstructionSummary::add(const Material &m, int n)
{
    if (n < 0)
        throw InvalidArgument("obstruction counts cannot be negative");
    if (n == 0)
        return;
    counts[m] += n;
    total += n;
}

int ObstructionSummary::count(const Material &m) const
{
    auto it = counts.find(m);
    return it == counts.end() ? 0 : it->second;
}

std::string to_string(const ObstructionSummary &s)
{
    if (s.counts.empty())
        return "none";
    std::string out;
    for (const auto &[m, n] : s.counts)
    {
        if (!out.empty())
            out += ',';
        out += m.name() + ':' + std::to_string(n);
    }
    return out;
}

void validate_point(const FloorPlan &plan, const Point3 &p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw InvalidArgument("point coordinates must be finite");
    if (!plan.contains_floor(p.floor))
        throw InvalidArgument("floor " + std::to_string(p.floor) + " is outside plan '" + plan.name() + "' (" +
                              std::to_string(plan.floor_count()) + " floors)");
}

double distance(const Point3 &p, const Point3 &q, const FloorPlan &plan)
{
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    const double dz = plan.floor_height_m() * std::abs(q.floor - p.floor);
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

bool segment_crosses(const WallSegment &wall, Point2 p, Point2 q)
{
    return detail::crosses(wall.a.x, wall.a.y, wall.b.x, wall.b.y, p.x, p.y, q.x, q.y);
}

bool segment_hits_pillar(const PillarRect &pillar, Point2 p, Point2 q)
{
    // Liang-Barsky clip against the rectangle grown by the geometric tolerance.
    const double hw = pillar.width / 2 + geometric_epsilon;
    const double hd = pillar.depth / 2 + geometric_epsilon;
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    const double edges[4][2] = {
        {-dx, p.x - (pillar.center.x - hw)},
        {dx, (pillar.center.x + hw) - p.x},
        {-dy, p.y - (pillar.center.y - hd)},
        {dy, (pillar.center.y + hd) - p.y},
    };
    double t0 = 0.0;
    double t1 = 1.0;
    for (const auto &[num, gap] : edges)
    {
        if (num == 0.0)
        {
            if (gap < 0.0)
                return false;
            continue;
        }
        const double r = gap / num;
        if (num < 0.0)
            t0 = std::max(t0, r);
        else
            t1 = std::min(t1, r);
        if (t0 > t1)
            return false;
    }
    return true;
}

ObstructionSummary count_obstructions(const FloorPlan &plan, const Point3 &tx, const Point3 &rx)
{
    validate_point(plan, tx);
    validate_point(plan, rx);
    if (tx.floor != rx.floor)
        throw FloorMismatch("obstruction counting needs tx and rx on the same floor (tx floor " +
                            std::to_string(tx.floor) + ", rx floor " + std::to_string(rx.floor) + ")");

    ObstructionSummary summary;
    const WallBatch &batch = plan.walls_on(tx.floor);
    if (batch.size() > 0)
    {
        std::vector<std::uint8_t> hit(batch.size());
        kernels::segment_crossings(batch, tx.xy(), rx.xy(), hit);
        for (std::size_t i = 0; i < hit.size(); ++i)
            if (hit[i])
                summary.add(plan.walls()[batch.wall_index[i]].material);
    }
    const Material pillar(MaterialKind::Pillar);
    for (const auto &p : plan.pillars())
        if (p.floor == tx.floor && segment_hits_pillar(p, tx.xy(), rx.xy()))
            summary.add(pillar);
    return summary;
}

} // namespace indoorpl
