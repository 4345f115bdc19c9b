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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "indoorpl/error.hpp"
#include "indoorpl/ingest.hpp"

using namespace indoorpl;

namespace
{

const std::string header = std::string(measurement_csv_header) + "\n";

MeasurementSet parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_measurements(in, LinkBudget{});
}

Measurement record(double rx_x, double rssi, int rx_floor = 0)
{
    Measurement m;
    m.tx = {0, 0, 0};
    m.rx = {rx_x, 0, rx_floor};
    m.rssi_dbm = rssi;
    return m;
}

FloorPlan wall_plan()
{
    return FloorPlan("p", 2, 3.0, {{{5, -5}, {5, 5}, 0, Material(MaterialKind::Concrete)}}, {});
}

} // namespace

TEST_CASE("parse a valid file", "[ingest]")
{
    const MeasurementSet s = parse("# drive test\n" + header + "\n12.5,6,0,0,0,3,4,1,-61.5,lunch crowd\n" +
                                   "13,6,0,0,0,3,4,1,-62,\n");
    REQUIRE(s.records.size() == 2);
    const Measurement &m = s.records[0];
    CHECK(m.timestamp_s == 12.5);
    CHECK(m.channel == Channel(6));
    CHECK(m.rx.x == 3.0);
    CHECK(m.rx.floor == 1);
    CHECK(m.rssi_dbm == -61.5);
    CHECK(m.tag == "lunch crowd");
    CHECK(s.records[1].tag.empty());
}

TEST_CASE("parse errors name the row and column", "[ingest]")
{
    SECTION("malformed rssi")
    {
        try
        {
            parse(header + "0,1,0,0,0,1,1,0,-50,a\n0,1,0,0,0,1,1,0,abc,b\n");
            FAIL("expected ParseError");
        }
        catch (const ParseError &e)
        {
            CHECK(e.row() == 3);
            CHECK(e.column() == 9);
        }
    }
    SECTION("wrong field count")
    {
        CHECK_THROWS_AS(parse(header + "0,1,0,0,0,1,1,0,-50\n"), ParseError);
    }
    SECTION("rssi out of range")
    {
        CHECK_THROWS_AS(parse(header + "0,1,0,0,0,1,1,0,5,a\n"), ParseError);
        CHECK_THROWS_AS(parse(header + "0,1,0,0,0,1,1,0,-121,a\n"), ParseError);
    }
    SECTION("invalid channel") { CHECK_THROWS_AS(parse(header + "0,15,0,0,0,1,1,0,-50,a\n"), ParseError); }
    SECTION("wrong header") { CHECK_THROWS_AS(parse("time,channel\n0,1\n"), ParseError); }
    SECTION("only header") { CHECK_THROWS_AS(parse(header), EmptyInput); }
    SECTION("nothing at all") { CHECK_THROWS_AS(parse("# nothing\n"), EmptyInput); }
}

TEST_CASE("write and parse round trip", "[ingest][property]")
{
    MeasurementSet s;
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-30, 30), r(-110, -20);
    for (int i = 0; i < 200; ++i)
    {
        Measurement m = record(u(rng), r(rng));
        m.rx.y = u(rng);
        m.timestamp_s = i * 0.1;
        m.tag = i % 3 == 0 ? "a,b\nc" : "t";
        s.records.push_back(m);
    }
    std::stringstream buf;
    write_measurements(buf, s);
    const MeasurementSet back = parse_measurements(buf, LinkBudget{});
    REQUIRE(back.records.size() == s.records.size());
    for (std::size_t i = 0; i < s.records.size(); ++i)
    {
        CHECK(back.records[i].rx.x == s.records[i].rx.x);
        CHECK(back.records[i].rx.y == s.records[i].rx.y);
        CHECK(back.records[i].rssi_dbm == s.records[i].rssi_dbm);
        CHECK(back.records[i].timestamp_s == s.records[i].timestamp_s);
    }
    CHECK(back.records[0].tag == "a;b;c");
}

TEST_CASE("aggregate examples", "[ingest]")
{
    const FloorPlan plan = wall_plan();
    SECTION("three records at one location")
    {
        MeasurementSet s;
        s.records = {record(3, -50), record(3, -60), record(3, -70)};
        const auto pts = aggregate(s, plan);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].pl_min_db == 65.0);
        CHECK(pts[0].pl_mean_db == 75.0);
        CHECK(pts[0].pl_max_db == 85.0);
        CHECK(pts[0].sample_count == 3);
        CHECK(pts[0].distance_m == 3.0);
    }
    SECTION("single record")
    {
        MeasurementSet s;
        s.records = {record(2, -55)};
        const auto pts = aggregate(s, plan);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].pl_min_db == pts[0].pl_mean_db);
        CHECK(pts[0].pl_max_db == pts[0].pl_mean_db);
    }
    SECTION("two bins in ascending distance")
    {
        MeasurementSet s;
        s.records = {record(8, -70), record(2, -50)};
        const auto pts = aggregate(s, plan);
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].distance_m == 2.0);
        CHECK(pts[1].distance_m == 8.0);
        CHECK(pts[0].obstructions.total == 0);
        CHECK(pts[1].obstructions.total == 1);
    }
    SECTION("cross-floor records are grouped by floor delta")
    {
        MeasurementSet s;
        s.records = {record(8, -70, 1), record(8, -70, 0)};
        const auto pts = aggregate(s, plan);
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].floor_delta == 0);
        CHECK(pts[1].floor_delta == 1);
        CHECK(pts[1].obstructions.total == 0);
    }
    SECTION("bin width must be positive")
    {
        MeasurementSet s;
        s.records = {record(2, -55)};
        CHECK_THROWS_AS(aggregate(s, plan, 0.0), InvalidArgument);
    }
}

TEST_CASE("aggregate invariants", "[ingest][property]")
{
    const FloorPlan plan = wall_plan();
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> x(1, 12), r(-100, -30);
    for (int trial = 0; trial < 20; ++trial)
    {
        MeasurementSet s;
        for (int i = 0; i < 300; ++i)
        {
            Measurement m = record(x(rng), r(rng));
            m.rx.y = x(rng) - 6;
            s.records.push_back(m);
        }
        const auto pts = aggregate(s, plan);
        int total = 0;
        for (const auto &p : pts)
        {
            total += p.sample_count;
            CHECK(p.pl_min_db <= p.pl_mean_db);
            CHECK(p.pl_mean_db <= p.pl_max_db);
        }
        CHECK(total == 300);
        CHECK(std::is_sorted(pts.begin(), pts.end(),
                             [](const auto &a, const auto &b) { return a.distance_m < b.distance_m; }));

        std::shuffle(s.records.begin(), s.records.end(), rng);
        const auto again = aggregate(s, plan);
        REQUIRE(again.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            CHECK(again[i].distance_m == pts[i].distance_m);
            CHECK(again[i].pl_mean_db == pts[i].pl_mean_db);
            CHECK(again[i].pl_min_db == pts[i].pl_min_db);
            CHECK(again[i].sample_count == pts[i].sample_count);
            CHECK(again[i].obstructions == pts[i].obstructions);
        }
    }
}

TEST_CASE("filter_channel", "[ingest]")
{
    MeasurementSet s;
    s.records = {record(2, -50), record(3, -50)};
    s.records[1].channel = Channel(11);
    CHECK(filter_channel(s, Channel(11)).records.size() == 1);
    CHECK(filter_channel(s, Channel(7)).records.empty());
}
