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

#include "indoorpl/params_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "indoorpl/error.hpp"

namespace indoorpl
{

using nlohmann::json;

namespace
{

[[noreturn]] void fail(const std::string &where, const std::string &reason)
{
    throw ParseError(0, 0, "parameter override " + where + ": " + reason);
}

void reject_unknown(const json &obj, const std::set<std::string> &known, const std::string &where)
{
    if (!obj.is_object())
        fail(where, "must be an object");
    for (const auto &[key, value] : obj.items())
        if (!known.count(key))
            fail(where, "unknown key '" + key + "'");
}

double number(const json &v, const std::string &where)
{
    if (!v.is_number())
        fail(where, "must be a number");
    return v.get<double>();
}

int int_key(const std::string &key, const std::string &where)
{
    int value = 0;
    const char *first = key.data();
    const char *last = key.data() + key.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        fail(where, "key '" + key + "' is not an integer");
    return value;
}

template <typename F>
void for_each_entry(const json &obj, const std::string &where, F &&f)
{
    if (!obj.is_object())
        fail(where, "must be an object");
    for (const auto &[key, value] : obj.items())
        f(key, value, where + "." + key);
}

void apply_itu(ItuRParams &p, const json &doc)
{
    reject_unknown(doc, {"n", "environment", "floor_penetration_db"}, "itu_r");
    if (doc.contains("environment"))
    {
        if (!doc["environment"].is_string())
            fail("itu_r.environment", "must be a string");
        p.n_coeff = itu_distance_coefficient(parse_itu_environment(doc["environment"].get<std::string>()));
    }
    if (doc.contains("n"))
        p.n_coeff = number(doc["n"], "itu_r.n");
    if (doc.contains("floor_penetration_db"))
    {
        const json &table = doc["floor_penetration_db"];
        if (!table.is_array())
            fail("itu_r.floor_penetration_db", "must be an array indexed by floor count");
        p.floor_penetration_db.clear();
        for (const json &v : table)
            p.floor_penetration_db.push_back(number(v, "itu_r.floor_penetration_db"));
    }
}

void apply_log_distance(LogDistanceParams &p, const json &doc)
{
    reject_unknown(doc, {"gamma", "d0_m"}, "log_distance");
    if (doc.contains("gamma"))
        p.gamma = number(doc["gamma"], "log_distance.gamma");
    if (doc.contains("d0_m"))
        p.d0_m = number(doc["d0_m"], "log_distance.d0_m");
}

void apply_tiplm(TIplmParams &p, const json &doc)
{
    reject_unknown(doc, {"scenario", "nt_busy", "nt_open", "nt_corridor", "wall_loss_db", "faf_db"}, "tiplm");
    if (doc.contains("scenario"))
    {
        if (!doc["scenario"].is_string())
            fail("tiplm.scenario", "must be a string");
        p.scenario = parse_scenario(doc["scenario"].get<std::string>());
    }
    if (doc.contains("nt_busy"))
        for_each_entry(doc["nt_busy"], "tiplm.nt_busy", [&](const std::string &ch, const json &row, const std::string &w) {
            const int channel = int_key(ch, w);
            for_each_entry(row, w, [&](const std::string &count, const json &v, const std::string &w2) {
                p.nt_busy[{channel, int_key(count, w2)}] = number(v, w2);
            });
        });
    if (doc.contains("nt_open"))
        for_each_entry(doc["nt_open"], "tiplm.nt_open", [&](const std::string &ch, const json &v, const std::string &w) {
            p.nt_open[int_key(ch, w)] = number(v, w);
        });
    if (doc.contains("nt_corridor"))
        p.nt_corridor = number(doc["nt_corridor"], "tiplm.nt_corridor");
    if (doc.contains("wall_loss_db"))
        for_each_entry(doc["wall_loss_db"], "tiplm.wall_loss_db",
                       [&](const std::string &name, const json &v, const std::string &w) {
                           const double loss = number(v, w);
                           try
                           {
                               p.wall_loss_db[builtin_material(name).kind()] = loss;
                           }
                           catch (const InvalidArgument &)
                           {
                               p.custom_wall_loss_db[name] = loss;
                           }
                       });
    if (doc.contains("faf_db"))
        for_each_entry(doc["faf_db"], "tiplm.faf_db", [&](const std::string &delta, const json &v, const std::string &w) {
            p.faf_db[int_key(delta, w)] = number(v, w);
        });
}

} // namespace

ModelParams apply_param_overrides(ModelParams base, const std::string &json_text)
{
    json doc;
    try
    {
        doc = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(0, 0, std::string("parameter override is not valid JSON: ") + e.what());
    }
    reject_unknown(doc, {"itu_r", "log_distance", "tiplm"}, "document");
    if (doc.contains("itu_r"))
        apply_itu(base.itu_r, doc["itu_r"]);
    if (doc.contains("log_distance"))
        apply_log_distance(base.log_distance, doc["log_distance"]);
    if (doc.contains("tiplm"))
        apply_tiplm(base.tiplm, doc["tiplm"]);
    validate(base.itu_r);
    validate(base.log_distance);
    validate(base.tiplm);
    return base;
}

ModelParams load_param_overrides(const std::filesystem::path &path, ModelParams base)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open parameter file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try
    {
        return apply_param_overrides(std::move(base), ss.str());
    }
    catch (const ParseError &e)
    {
        throw ParseError(0, 0, path.string() + ": " + e.reason());
    }
}

std::string params_to_json(const ModelParams &p)
{
    json doc;
    doc["itu_r"] = {{"n", p.itu_r.n_coeff}, {"floor_penetration_db", p.itu_r.floor_penetration_db}};
    doc["log_distance"] = {{"gamma", p.log_distance.gamma}, {"d0_m", p.log_distance.d0_m}};

    json busy = json::object();
    for (const auto &[key, nt] : p.tiplm.nt_busy)
        busy[std::to_string(key.first)][std::to_string(key.second)] = nt;
    json open = json::object();
    for (const auto &[ch, nt] : p.tiplm.nt_open)
        open[std::to_string(ch)] = nt;
    json walls = json::object();
    for (const auto &[kind, loss] : p.tiplm.wall_loss_db)
        walls[Material(kind).name()] = loss;
    for (const auto &[name, loss] : p.tiplm.custom_wall_loss_db)
        walls[name] = loss;
    json faf = json::object();
    for (const auto &[delta, v] : p.tiplm.faf_db)
        faf[std::to_string(delta)] = v;

    doc["tiplm"] = {{"scenario", std::string(to_string(p.tiplm.scenario))},
                    {"nt_busy", busy},
                    {"nt_open", open},
                    {"nt_corridor", p.tiplm.nt_corridor},
                    {"wall_loss_db", walls},
                    {"faf_db", faf}};
    return doc.dump(2);
}

} // namespace indoorpl
