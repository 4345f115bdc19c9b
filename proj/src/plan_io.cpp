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

#include "indoorpl/plan_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "indoorpl/error.hpp"

namespace indoorpl
{

using nlohmann::json;

namespace
{

double number(const json &obj, const char *key, const std::string &where)
{
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number())
        throw ParseError(0, 0, where + ": field '" + key + "' must be a number");
    return it->get<double>();
}

int integer(const json &obj, const char *key, const std::string &where, int fallback, bool required)
{
    auto it = obj.find(key);
    if (it == obj.end())
    {
        if (required)
            throw ParseError(0, 0, where + ": missing integer field '" + key + "'");
        return fallback;
    }
    if (!it->is_number_integer())
        throw ParseError(0, 0, where + ": field '" + key + "' must be an integer");
    return it->get<int>();
}

Material material(const json &value, const std::string &where)
{
    if (value.is_string())
        return builtin_material(value.get<std::string>());
    if (value.is_object() && value.contains("custom"))
    {
        const json &c = value.at("custom");
        if (!c.is_object() || !c.contains("name") || !c.at("name").is_string())
            throw ParseError(0, 0, where + ": custom material needs a string 'name'");
        return Material::custom(c.at("name").get<std::string>(), number(c, "loss_db", where));
    }
    throw ParseError(0, 0, where + ": material must be a name or {\"custom\": {...}}");
}

json material_json(const Material &m)
{
    if (m.kind() == MaterialKind::Custom)
        return {{"custom", {{"name", m.name()}, {"loss_db", m.custom_loss_db()}}}};
    return m.name();
}

} // namespace

FloorPlan parse_floor_plan(const std::string &text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(0, 0, std::string("floor plan is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError(0, 0, "floor plan must be a JSON object");

    std::string name = doc.value("name", std::string("unnamed"));
    const int floor_count = integer(doc, "floor_count", "plan", 1, false);
    double floor_height = default_floor_height_m;
    if (doc.contains("floor_height_m"))
        floor_height = number(doc, "floor_height_m", "plan");

    std::vector<WallSegment> walls;
    if (doc.contains("walls"))
    {
        if (!doc.at("walls").is_array())
            throw ParseError(0, 0, "plan: 'walls' must be an array");
        std::size_t i = 0;
        for (const json &w : doc.at("walls"))
        {
            const std::string where = "walls[" + std::to_string(i++) + "]";
            if (!w.is_object())
                throw ParseError(0, 0, where + ": must be an object");
            if (!w.contains("material"))
                throw ParseError(0, 0, where + ": missing 'material'");
            walls.push_back({{number(w, "ax", where), number(w, "ay", where)},
                             {number(w, "bx", where), number(w, "by", where)},
                             integer(w, "floor", where, 0, false),
                             material(w.at("material"), where)});
        }
    }

    std::vector<PillarRect> pillars;
    if (doc.contains("pillars"))
    {
        if (!doc.at("pillars").is_array())
            throw ParseError(0, 0, "plan: 'pillars' must be an array");
        std::size_t i = 0;
        for (const json &p : doc.at("pillars"))
        {
            const std::string where = "pillars[" + std::to_string(i++) + "]";
            if (!p.is_object())
                throw ParseError(0, 0, where + ": must be an object");
            pillars.push_back({{number(p, "cx", where), number(p, "cy", where)},
                               p.contains("w") ? number(p, "w", where) : 0.6,
                               p.contains("d") ? number(p, "d", where) : 0.6,
                               integer(p, "floor", where, 0, false)});
        }
    }

    // Custom materials sharing a name must agree on their loss.
    std::map<std::string, double> custom_losses;
    for (const auto &w : walls)
    {
        if (w.material.kind() != MaterialKind::Custom)
            continue;
        auto [it, inserted] = custom_losses.emplace(w.material.name(), w.material.custom_loss_db());
        if (!inserted && it->second != w.material.custom_loss_db())
            throw InvalidArgument("custom material '" + w.material.name() + "' is declared with two different losses");
    }

    return FloorPlan(std::move(name), floor_count, floor_height, std::move(walls), std::move(pillars));
}

FloorPlan load_floor_plan(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open floor plan '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try
    {
        return parse_floor_plan(ss.str());
    }
    catch (const ParseError &e)
    {
        throw ParseError(0, 0, path.string() + ": " + e.reason());
    }
}

void write_floor_plan(std::ostream &os, const FloorPlan &plan)
{
    json doc;
    doc["name"] = plan.name();
    doc["floor_count"] = plan.floor_count();
    doc["floor_height_m"] = plan.floor_height_m();
    doc["walls"] = json::array();
    for (const auto &w : plan.walls())
        doc["walls"].push_back({{"ax", w.a.x},
                                {"ay", w.a.y},
                                {"bx", w.b.x},
                                {"by", w.b.y},
                                {"floor", w.floor},
                                {"material", material_json(w.material)}});
    doc["pillars"] = json::array();
    for (const auto &p : plan.pillars())
        doc["pillars"].push_back(
            {{"cx", p.center.x}, {"cy", p.center.y}, {"w", p.width}, {"d", p.depth}, {"floor", p.floor}});
    os << doc.dump(2) << '\n';
}

} // namespace indoorpl
