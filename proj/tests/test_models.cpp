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

#include <cmath>
#include <random>

#include "indoorpl/error.hpp"
#include "indoorpl/models.hpp"
#include "oracles.hpp"

using namespace indoorpl;
using Catch::Matchers::WithinAbs;

namespace
{

ObstructionSummary summary(std::initializer_list<std::pair<MaterialKind, int>> items)
{
    ObstructionSummary s;
    for (auto [k, n] : items)
        for (int i = 0; i < n; ++i)
            s.add(Material(k));
    return s;
}

LinkContext ctx_at(double d, int channel = 1, Scenario sc = Scenario::BusyOffice)
{
    LinkContext c;
    c.channel = Channel(channel);
    c.frequency_mhz = channel_to_frequency(*c.channel);
    c.distance_m = d;
    c.scenario = sc;
    return c;
}

} // namespace

TEST_CASE("channel table", "[models]")
{
    CHECK(channel_to_frequency(Channel(1)) == 2412.0);
    CHECK(channel_to_frequency(Channel(7)) == 2442.0);
    CHECK(channel_to_frequency(Channel(11)) == 2462.0);
    CHECK(channel_to_frequency(Channel(13)) == 2472.0);
    CHECK(channel_to_frequency(Channel(14)) == 2484.0);
    CHECK_THROWS_AS(Channel(0), InvalidArgument);
    CHECK_THROWS_AS(Channel(15), InvalidArgument);
    for (int i = 1; i <= 14; ++i)
        CHECK(channel_for_frequency(channel_to_frequency(Channel(i))) == Channel(i));
    CHECK_FALSE(channel_for_frequency(2413.0).has_value());
}

TEST_CASE("ITU-R examples", "[models]")
{
    const ItuRParams p;
    CHECK_THAT(itu_r_path_loss(2412, 1, p, 0), WithinAbs(39.64754606936227, 1e-9));
    CHECK_THAT(itu_r_path_loss(2412, 10, p, 0), WithinAbs(69.64754606936227, 1e-9));
    ItuRParams commercial;
    commercial.n_coeff = itu_distance_coefficient(ItuEnvironment::Commercial);
    CHECK_THAT(itu_r_path_loss(2442, 10, commercial, 0), WithinAbs(61.75491319217727, 1e-9));
    CHECK(itu_distance_coefficient(ItuEnvironment::Residential) == 28.0);
    CHECK_THAT(itu_r_path_loss(2412, 10, p, 1) - itu_r_path_loss(2412, 10, p, 0), WithinAbs(15.0, 1e-12));
    CHECK_THROWS_AS(itu_r_path_loss(2412, 0.5, p, 0), DomainError);
    CHECK_THROWS_AS(itu_r_path_loss(2412, 10, p, 9), MissingParameter);
}

TEST_CASE("log-distance examples", "[models]")
{
    const LogDistanceParams p;
    CHECK_THAT(log_distance_path_loss(2442, 1, p), WithinAbs(40.20269641406065, 1e-9));
    CHECK_THAT(log_distance_path_loss(2442, 10, p), WithinAbs(70.20269641406065, 1e-9));
    CHECK_THROWS_AS(log_distance_path_loss(2412, 0.9, p), DomainError);
    LogDistanceParams bad;
    bad.gamma = 0;
    CHECK_THROWS_AS(validate(bad), InvalidArgument);
}

TEST_CASE("T-IPLM examples", "[models]")
{
    const TIplmParams p;
    CHECK_THAT(tiplm_path_loss(ctx_at(1), p), WithinAbs(47.64754606936227, 1e-9));

    LinkContext c = ctx_at(10);
    c.obstructions = summary({{MaterialKind::Concrete, 2}, {MaterialKind::Glass, 1}});
    CHECK(lookup_nt(p, Channel(1), Scenario::BusyOffice, 3) == 31.8);
    CHECK_THAT(tiplm_path_loss(c, p), WithinAbs(89.40754606936227, 1e-9));

    CHECK_THAT(tiplm_path_loss(ctx_at(10, 1, Scenario::OpenSpace), p), WithinAbs(66.84754606936227, 1e-9));
    CHECK_THROWS_AS(tiplm_path_loss(ctx_at(0.99), p), DomainError);
}

TEST_CASE("T-IPLM parameter tables", "[models]")
{
    const TIplmParams p;
    CHECK(lookup_nt(p, Channel(7), Scenario::BusyOffice, 1) == 32.9);
    CHECK(lookup_nt(p, Channel(11), Scenario::BusyOffice, 5) == 28.4);
    CHECK(lookup_nt(p, Channel(11), Scenario::BusyOffice, 9) == 28.4);
    CHECK(lookup_nt(p, Channel(1), Scenario::BusyOffice, 0) == 19.2);
    CHECK(lookup_nt(p, Channel(7), Scenario::OpenSpace, 4) == 18.0);
    CHECK(lookup_nt(p, Channel(11), Scenario::OpenSpace, 0) == 17.3);
    CHECK(lookup_nt(p, Channel(4), Scenario::Corridor, 2) == 25.8);
    CHECK_THROWS_AS(lookup_nt(p, Channel(4), Scenario::BusyOffice, 2), MissingParameter);
    CHECK_THROWS_AS(lookup_nt(p, Channel(4), Scenario::OpenSpace, 0), MissingParameter);

    CHECK(wall_loss_db(p, Material(MaterialKind::Wood)) == 2.67);
    CHECK(wall_loss_db(p, Material(MaterialKind::Concrete)) == 2.73);
    CHECK(wall_loss_db(p, Material(MaterialKind::Pillar)) == 6.0);
    CHECK(wall_loss_db(p, Material(MaterialKind::Glass)) == 4.5);
    CHECK(wall_loss_db(p, Material::custom("drywall", 3.3)) == 3.3);
    TIplmParams q = p;
    q.custom_wall_loss_db["drywall"] = 1.5;
    CHECK(wall_loss_db(q, Material::custom("drywall", 3.3)) == 1.5);

    CHECK(lookup_faf(p, 0) == 0.0);
    CHECK(lookup_faf(p, 1) == 21.0);
    CHECK(lookup_faf(p, -2) == 36.0);
    CHECK(lookup_faf(p, 3) == 40.0);
    CHECK_THROWS_AS(lookup_faf(p, 4), MissingParameter);
    CHECK_THROWS_AS(lookup_faf(p, -3), MissingParameter);
}

TEST_CASE("each wall adds exactly its loss", "[models][property]")
{
    const TIplmParams p;
    LinkContext c = ctx_at(12, 1, Scenario::OpenSpace);
    const double base = tiplm_path_loss(c, p);
    c.obstructions.add(Material(MaterialKind::Concrete));
    CHECK_THAT(tiplm_path_loss(c, p) - base, WithinAbs(2.73, 1e-12));
    c.obstructions.add(Material(MaterialKind::Pillar));
    CHECK_THAT(tiplm_path_loss(c, p) - base, WithinAbs(8.73, 1e-12));
}

TEST_CASE("models agree with the high-precision oracle", "[models][oracle]")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> f(2400, 2500), d(1, 200), n(10, 40), g(1.5, 5), d0(0.5, 2);
    for (int i = 0; i < 200; ++i)
    {
        const double fi = f(rng), di = d(rng);
        ItuRParams ip;
        ip.n_coeff = n(rng);
        CHECK_THAT(itu_r_path_loss(fi, di, ip, 2), WithinAbs(oracle::itu_r(fi, di, ip.n_coeff, 19.0), 1e-9));

        LogDistanceParams lp{g(rng), d0(rng)};
        const double dl = std::max(di, lp.d0_m);
        CHECK_THAT(log_distance_path_loss(fi, dl, lp), WithinAbs(oracle::log_distance(fi, dl, lp.gamma, lp.d0_m), 1e-9));

        LinkContext c;
        c.frequency_mhz = fi;
        c.distance_m = di;
        c.nt_override = n(rng);
        c.obstructions = summary({{MaterialKind::Wood, 1}, {MaterialKind::Glass, 2}});
        c.floor_delta = 1;
        CHECK_THAT(tiplm_path_loss(c, TIplmParams{}),
                   WithinAbs(oracle::tiplm(fi, di, *c.nt_override, 2.67 + 2 * 4.5, 21.0), 1e-9));
    }
}

TEST_CASE("path loss is non-decreasing in distance", "[models][property]")
{
    const std::vector<PathLossModel> models{PathLossModel(TIplmModel{}), PathLossModel(ItuRParams{}),
                                            PathLossModel(LogDistanceParams{})};
    for (const auto &m : models)
    {
        double prev = -1e9;
        for (double d = 1; d < 100; d *= 1.07)
        {
            const double pl = m.path_loss(ctx_at(d));
            CHECK(pl >= prev);
            prev = pl;
        }
    }
}

TEST_CASE("RSSI conversion round trip", "[models][property]")
{
    const LinkBudget b{17.0, 2.0, 1.5};
    CHECK(b.total_db() == 20.5);
    for (double pl = 30; pl < 130; pl += 0.37)
        CHECK_THAT(rssi_to_path_loss(predicted_rssi(pl, b), b), WithinAbs(pl, 1e-12));
}

TEST_CASE("model objects", "[models]")
{
    TIplmModel tm;
    tm.params.scenario = Scenario::Corridor;
    const PathLossModel corridor(tm);
    CHECK(corridor.kind() == ModelKind::TIplm);
    CHECK(corridor.name() == "T-IPLM");
    // The model's own scenario wins over the context's.
    CHECK_THAT(corridor.path_loss(ctx_at(10)), WithinAbs(47.64754606936227 + 25.8, 1e-9));
    CHECK(corridor.base_db(2412) == corridor.terms(ctx_at(5)).base_db);

    const PathLossModel logd(LogDistanceParams{3.0, 2.0});
    CHECK(logd.min_distance_m() == 2.0);
    CHECK(logd.terms(ctx_at(4)).reference_m == 2.0);

    CHECK(parse_model_kind("ITU-R") == ModelKind::ItuR);
    CHECK(parse_model_kind("logd") == ModelKind::LogDistance);
    CHECK_THROWS_AS(parse_model_kind("hata"), InvalidArgument);
    CHECK(parse_scenario("Open") == Scenario::OpenSpace);
    CHECK_THROWS_AS(parse_scenario("garden"), InvalidArgument);
}
