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

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace indoorpl
{

// Tolerance of the intersection predicates, as a point-to-line distance in meters.
inline constexpr double geometric_epsilon = 1e-9;

// Vertical spacing between floors when a plan file does not specify one.
inline constexpr double default_floor_height_m = 3.0;

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2 &, const Point2 &) = default;
};

struct Point3
{
    double x = 0.0;
    double y = 0.0;
    int floor = 0;

    Point2 xy() const { return {x, y}; }
    friend bool operator==(const Point3 &, const Point3 &) = default;
};

enum class MaterialKind : std::uint8_t
{
    Wood,
    Concrete,
    Glass,
    Pillar,
    Custom
};

// Obstacle material. Built-in kinds take their attenuation from the model parameters;
// custom materials carry their own loss. Identity (ordering, equality) is kind + name.
class Material
{
  public:
    Material() = default;
    explicit Material(MaterialKind kind);
    static Material custom(std::string name, double loss_db);

    MaterialKind kind() const noexcept { return kind_; }
    const std::string &name() const noexcept { return name_; }
    double custom_loss_db() const noexcept { return custom_loss_db_; }

    friend bool operator==(const Material &a, const Material &b) { return a.kind_ == b.kind_ && a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(const Material &a, const Material &b)
    {
        if (auto c = a.kind_ <=> b.kind_; c != 0)
            return c;
        return a.name_ <=> b.name_;
    }

  private:
    MaterialKind kind_ = MaterialKind::Concrete;
    std::string name_ = "concrete";
    double custom_loss_db_ = 0.0;
};

// Case-insensitive "wood", "concrete", "glass", "pillar". Throws InvalidArgument otherwise.
Material builtin_material(const std::string &name);

struct WallSegment
{
    Point2 a;
    Point2 b;
    int floor = 0;
    Material material;
};

// Axis-aligned rectangular pillar, treated as a solid obstacle.
struct PillarRect
{
    Point2 center;
    double width = 0.6;
    double depth = 0.6;
    int floor = 0;
};

struct Bounds
{
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    void expand(Point2 p);
};

// Structure-of-arrays copy of the walls on one floor, consumed by the batch crossing kernel.
struct WallBatch
{
    std::vector<double> ax, ay, bx, by;
    std::vector<std::size_t> wall_index; // index into FloorPlan::walls()

    std::size_t size() const noexcept { return ax.size(); }
};

// Immutable geometric scene. The constructor validates every invariant and throws InvalidArgument.
class FloorPlan
{
  public:
    FloorPlan();
    FloorPlan(std::string name, int floor_count, double floor_height_m, std::vector<WallSegment> walls,
              std::vector<PillarRect> pillars);

    const std::string &name() const noexcept { return name_; }
    int floor_count() const noexcept { return floor_count_; }
    double floor_height_m() const noexcept { return floor_height_m_; }
    const std::vector<WallSegment> &walls() const noexcept { return walls_; }
    const std::vector<PillarRect> &pillars() const noexcept { return pillars_; }

    const WallBatch &walls_on(int floor) const;

    // Extents of all walls and pillars over every floor; nullopt for an empty plan.
    std::optional<Bounds> bounds() const;

    bool contains_floor(int floor) const noexcept { return floor >= 0 && floor < floor_count_; }

  private:
    std::string name_;
    int floor_count_ = 1;
    double floor_height_m_ = default_floor_height_m;
    std::vector<WallSegment> walls_;
    std::vector<PillarRect> pillars_;
    std::vector<WallBatch> batches_;
};

struct ObstructionSummary
{
    std::map<Material, int> counts;
    int total = 0;

    void add(const Material &m, int n = 1);
    int count(const Material &m) const;

    friend bool operator==(const ObstructionSummary &, const ObstructionSummary &) = default;
    friend auto operator<=>(const ObstructionSummary &a, const ObstructionSummary &b)
    {
        return a.counts <=> b.counts;
    }
};

// "concrete:2,glass:1" style rendering, materials in key order; "none" when empty.
std::string to_string(const ObstructionSummary &s);

// Throws InvalidArgument unless x, y are finite and the floor exists in the plan.
void validate_point(const FloorPlan &plan, const Point3 &p);

// 3D Euclidean distance; the vertical offset is floor_height * |floor difference|.
double distance(const Point3 &p, const Point3 &q, const FloorPlan &plan);

// Closed-segment intersection with the tangency tie-break: touching a wall endpoint or
// overlapping it collinearly counts as a crossing.
bool segment_crosses(const WallSegment &wall, Point2 p, Point2 q);

// True when segment pq touches or passes through the (closed) pillar rectangle.
bool segment_hits_pillar(const PillarRect &pillar, Point2 p, Point2 q);

// Walls and pillars on the shared floor crossed by the tx-rx line of sight.
// Throws FloorMismatch when tx and rx are on different floors.
ObstructionSummary count_obstructions(const FloorPlan &plan, const Point3 &tx, const Point3 &rx);

// Positive when the receiver is above the transmitter.
inline int floor_delta(const Point3 &tx, const Point3 &rx) { return rx.floor - tx.floor; }

namespace detail
{

inline int orient_sign(double ax, double ay, double bx, double by, double px, double py)
{
    const double ux = bx - ax;
    const double uy = by - ay;
    const double cross = ux * (py - ay) - uy * (px - ax);
    const double tol = geometric_epsilon * std::sqrt(ux * ux + uy * uy);
    return cross > tol ? 1 : (cross < -tol ? -1 : 0);
}

// Shared by segment_crosses and the scalar batch kernel; the AVX2 kernel mirrors it operation by operation.
inline bool crosses(double ax, double ay, double bx, double by, double px, double py, double qx, double qy)
{
    const int s1 = orient_sign(ax, ay, bx, by, px, py);
    const int s2 = orient_sign(ax, ay, bx, by, qx, qy);
    if (s1 == 0 && s2 == 0)
    {
        const double ux = bx - ax;
        const double uy = by - ay;
        const double len2 = ux * ux + uy * uy;
        const double tp = ((px - ax) * ux + (py - ay) * uy) / len2;
        const double tq = ((qx - ax) * ux + (qy - ay) * uy) / len2;
        const double lo = tp < tq ? tp : tq;
        const double hi = tp < tq ? tq : tp;
        const double tol = geometric_epsilon / std::sqrt(len2);
        return hi >= -tol && lo <= 1.0 + tol;
    }
    const int s3 = orient_sign(px, py, qx, qy, ax, ay);
    const int s4 = orient_sign(px, py, qx, qy, bx, by);
    return s1 * s2 <= 0 && s3 * s4 <= 0;
}

} // namespace detail

} // namespace indoorpl
