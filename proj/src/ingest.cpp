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

#include "indoorpl/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include "indoorpl/error.hpp"

namespace indoorpl
{

namespace
{

constexpr std::array<std::string_view, 10> columns = {"timestamp", "channel",  "tx_x",     "tx_y", "tx_floor",
                                                      "rx_x",      "rx_y",     "rx_floor", "rssi_dbm", "tag"};

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos)
        {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view field, std::size_t row, std::size_t col)
{
    field = trim(field);
    double value = 0.0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw ParseError(row, col, std::string(columns[col - 1]) + " '" + std::string(field) + "' is not a finite number");
    return value;
}

int parse_int(std::string_view field, std::size_t row, std::size_t col)
{
    field = trim(field);
    int value = 0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last)
        throw ParseError(row, col, std::string(columns[col - 1]) + " '" + std::string(field) + "' is not an integer");
    return value;
}

std::string format_number(double v)
{
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string sanitize_tag(std::string tag)
{
    for (char &c : tag)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return tag;
}

struct GroupKey
{
    long long bin;
    int floor_delta;
    ObstructionSummary obstructions;

    friend auto operator<=>(const GroupKey &a, const GroupKey &b)
    {
        if (auto c = a.bin <=> b.bin; c != 0)
            return c;
        if (auto c = a.floor_delta <=> b.floor_delta; c != 0)
            return c;
        return a.obstructions <=> b.obstructions;
    }
    friend bool operator==(const GroupKey &, const GroupKey &) = default;
};

} // namespace

MeasurementSet parse_measurements(std::istream &in, const LinkBudget &budget)
{
    validate(budget);
    MeasurementSet set;
    set.budget = budget;

    std::string line;
    std::size_t row = 0;
    bool have_header = false;
    while (std::getline(in, line))
    {
        ++row;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        if (!have_header)
        {
            if (text != measurement_csv_header)
                throw ParseError(row, 0, "expected header '" + std::string(measurement_csv_header) + "'");
            have_header = true;
            continue;
        }

        const auto fields = split(text);
        if (fields.size() != columns.size())
            throw ParseError(row, 0, "expected " + std::to_string(columns.size()) + " fields, found " +
                                         std::to_string(fields.size()));

        Measurement m;
        m.timestamp_s = parse_double(fields[0], row, 1);
        const int channel = parse_int(fields[1], row, 2);
        if (channel < 1 || channel > 14)
            throw ParseError(row, 2, "channel " + std::to_string(channel) + " is outside [1, 14]");
        m.channel = Channel(channel);
        m.tx = {parse_double(fields[2], row, 3), parse_double(fields[3], row, 4), parse_int(fields[4], row, 5)};
        m.rx = {parse_double(fields[5], row, 6), parse_double(fields[6], row, 7), parse_int(fields[7], row, 8)};
        m.rssi_dbm = parse_double(fields[8], row, 9);
        if (m.rssi_dbm < min_rssi_dbm || m.rssi_dbm > max_rssi_dbm)
            throw ParseError(row, 9, "rssi_dbm " + format_number(m.rssi_dbm) + " is outside [" +
                                         format_number(min_rssi_dbm) + ", " + format_number(max_rssi_dbm) + "]");
        m.tag = std::string(trim(fields[9]));
        set.records.push_back(std::move(m));
    }
    if (!have_header)
        throw EmptyInput("measurement input has no header");
    if (set.records.empty())
        throw EmptyInput("measurement input has a header but no records");
    return set;
}

MeasurementSet load_measurements(const std::filesystem::path &path, const LinkBudget &budget)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open measurement file '" + path.string() + "'");
    try
    {
        return parse_measurements(in, budget);
    }
    catch (const ParseError &e)
    {
        throw ParseError(e.row(), e.column(), path.string() + ": " + e.reason());
    }
    catch (const EmptyInput &e)
    {
        throw EmptyInput(path.string() + ": " + e.what());
    }
}

void write_measurements(std::ostream &os, const MeasurementSet &set)
{
    os << measurement_csv_header << '\n';
    for (const auto &m : set.records)
    {
        os << format_number(m.timestamp_s) << ',' << m.channel.index() << ',' << format_number(m.tx.x) << ','
           << format_number(m.tx.y) << ',' << m.tx.floor << ',' << format_number(m.rx.x) << ','
           << format_number(m.rx.y) << ',' << m.rx.floor << ',' << format_number(m.rssi_dbm) << ','
           << sanitize_tag(m.tag) << '\n';
    }
}

MeasurementSet filter_channel(const MeasurementSet &set, Channel c)
{
    MeasurementSet out;
    out.budget = set.budget;
    out.plan_ref = set.plan_ref;
    std::copy_if(set.records.begin(), set.records.end(), std::back_inserter(out.records),
                 [c](const Measurement &m) { return m.channel == c; });
    return out;
}

std::vector<AggregatedPoint> aggregate(const MeasurementSet &set, const FloorPlan &plan, double bin_width_m)
{
    if (!std::isfinite(bin_width_m) || bin_width_m <= 0.0)
        throw InvalidArgument("bin width must be positive, got " + std::to_string(bin_width_m));

    // (distance, path loss) per member; sorted before reduction so record order cannot matter.
    std::map<GroupKey, std::vector<std::pair<double, double>>> groups;
    for (const auto &m : set.records)
    {
        const double d = distance(m.tx, m.rx, plan);
        ObstructionSummary obs;
        if (m.tx.floor == m.rx.floor)
            obs = count_obstructions(plan, m.tx, m.rx);
        else
        {
            validate_point(plan, m.tx);
            validate_point(plan, m.rx);
        }
        GroupKey key{static_cast<long long>(std::floor(d / bin_width_m)), floor_delta(m.tx, m.rx), std::move(obs)};
        groups[std::move(key)].emplace_back(d, rssi_to_path_loss(m.rssi_dbm, set.budget));
    }

    std::vector<AggregatedPoint> points;
    points.reserve(groups.size());
    for (auto &[key, members] : groups)
    {
        std::sort(members.begin(), members.end());
        std::vector<double> pl;
        pl.reserve(members.size());
        double log_sum = 0.0;
        for (const auto &[d, loss] : members)
        {
            log_sum += std::log10(d);
            pl.push_back(loss);
        }
        std::sort(pl.begin(), pl.end());
        double pl_sum = 0.0;
        for (double v : pl)
            pl_sum += v;

        const double n = static_cast<double>(members.size());
        AggregatedPoint p;
        // Exact when all members share one distance.
        p.distance_m = members.front().first == members.back().first ? members.front().first
                                                                      : std::pow(10.0, log_sum / n);
        p.obstructions = key.obstructions;
        p.floor_delta = key.floor_delta;
        p.pl_min_db = pl.front();
        p.pl_max_db = pl.back();
        p.pl_mean_db = std::clamp(pl_sum / n, p.pl_min_db, p.pl_max_db);
        p.sample_count = static_cast<int>(members.size());
        points.push_back(std::move(p));
    }
    std::sort(points.begin(), points.end(), [](const AggregatedPoint &a, const AggregatedPoint &b) {
        return std::tie(a.distance_m, a.floor_delta, a.obstructions) < std::tie(b.distance_m, b.floor_delta, b.obstructions);
    });
    return points;
}

} // namespace indoorpl
