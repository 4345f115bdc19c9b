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
#include <cstring>
#include <random>
#include <vector>

#include "indoorpl/error.hpp"
#include "indoorpl/kernels.hpp"

using namespace indoorpl;
namespace k = indoorpl::kernels;

namespace
{

std::vector<double> random_vec(std::mt19937_64 &rng, std::size_t n, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto &x : v)
        x = u(rng);
    return v;
}

bool bit_equal(const std::vector<double> &a, const std::vector<double> &b)
{
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool have_avx2() { return k::detected_isa() == k::Isa::Avx2; }

} // namespace

TEST_CASE("scalar reference kernels", "[kernels]")
{
    const auto &s = k::table(k::Isa::Scalar);
    const double a[] = {1, 2, 3}, b[] = {4, 5, 6}, w[] = {1, 0, 2};
    CHECK(s.dot(a, b, 3) == 32.0);
    CHECK(s.weighted_dot(w, a, b, 3) == 40.0);
    CHECK(s.sum(a, 3) == 6.0);
    CHECK(s.sum_sq_diff(a, b, 3) == 27.0);
    CHECK(s.dot(a, b, 0) == 0.0);

    double out[3];
    s.affine_loss(10.0, a, b, w, out, 3);
    CHECK(out[0] == 15.0);
    CHECK(out[1] == 20.0);
    CHECK(out[2] == 30.0);
    s.rssi_from_loss(15.0, out, out, 3);
    CHECK(out[0] == 0.0);
    CHECK(out[2] == -15.0);
}

TEST_CASE("AVX2 kernels agree with the scalar reference", "[kernels][simd]")
{
    if (!have_avx2())
        SKIP("AVX2 not available on this machine");
    const auto &s = k::table(k::Isa::Scalar);
    const auto &v = k::table(k::Isa::Avx2);
    std::mt19937_64 rng(3);
    for (std::size_t n = 0; n <= 37; ++n)
    {
        const auto a = random_vec(rng, n, -100, 100), b = random_vec(rng, n, -100, 100);
        const auto w = random_vec(rng, n, 0, 5);

        auto near = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)); };
        CHECK(near(s.dot(a.data(), b.data(), n), v.dot(a.data(), b.data(), n)));
        CHECK(near(s.weighted_dot(w.data(), a.data(), b.data(), n), v.weighted_dot(w.data(), a.data(), b.data(), n)));
        CHECK(near(s.sum(a.data(), n), v.sum(a.data(), n)));
        CHECK(near(s.sum_sq_diff(a.data(), b.data(), n), v.sum_sq_diff(a.data(), b.data(), n)));

        std::vector<double> o1(n), o2(n);
        s.affine_loss(39.6, a.data(), b.data(), w.data(), o1.data(), n);
        v.affine_loss(39.6, a.data(), b.data(), w.data(), o2.data(), n);
        CHECK(bit_equal(o1, o2));
        s.rssi_from_loss(15.0, a.data(), o1.data(), n);
        v.rssi_from_loss(15.0, a.data(), o2.data(), n);
        CHECK(bit_equal(o1, o2));
    }
}

TEST_CASE("AVX2 crossing kernel agrees with the scalar reference", "[kernels][simd]")
{
    if (!have_avx2())
        SKIP("AVX2 not available on this machine");
    const auto &s = k::table(k::Isa::Scalar);
    const auto &v = k::table(k::Isa::Avx2);
    std::mt19937_64 rng(11);
    // Integer grid coordinates produce many exact tangencies and collinear cases.
    std::uniform_int_distribution<int> grid(-4, 4);
    std::uniform_real_distribution<double> real(-10, 10);
    for (int trial = 0; trial < 2000; ++trial)
    {
        const std::size_t n = static_cast<std::size_t>(trial % 38);
        const bool integral = trial % 2 == 0;
        auto coord = [&] { return integral ? double(grid(rng)) : real(rng); };
        std::vector<double> ax(n), ay(n), bx(n), by(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            do
            {
                ax[i] = coord(), ay[i] = coord(), bx[i] = coord(), by[i] = coord();
            } while (ax[i] == bx[i] && ay[i] == by[i]);
        }
        double px = coord(), py = coord(), qx = coord(), qy = coord();
        std::vector<std::uint8_t> h1(n, 7), h2(n, 9);
        s.segment_crossings(ax.data(), ay.data(), bx.data(), by.data(), n, px, py, qx, qy, h1.data());
        v.segment_crossings(ax.data(), ay.data(), bx.data(), by.data(), n, px, py, qx, qy, h2.data());
        REQUIRE(h1 == h2);
    }
}

TEST_CASE("dispatching wrappers", "[kernels]")
{
    const std::vector<double> a{1, 2}, b{3};
    CHECK_THROWS_AS(k::dot(a, b), LengthMismatch);
    std::vector<double> out(1);
    CHECK_THROWS_AS(k::rssi_from_loss(0.0, a, out), LengthMismatch);

    const k::Isa before = k::active_isa();
    k::set_active_isa(k::Isa::Scalar);
    CHECK(k::active_isa() == k::Isa::Scalar);
    CHECK(k::dot(a, a) == 5.0);
    if (!have_avx2())
        CHECK_THROWS_AS(k::set_active_isa(k::Isa::Avx2), InvalidArgument);
    k::set_active_isa(before);
    CHECK(k::to_string(k::Isa::Scalar) == "scalar");
}
