// SPDX-License-Identifier: Apache-2.0
//
// elastic-sim: throughput scaling simulator for directional ad hoc networks
// Copyright (C) 2026 The elastic-sim authors
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

#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elastic/antenna.hpp"
#include "elastic/errors.hpp"
#include "elastic/rng.hpp"

using namespace elastic;
using std::numbers::pi;

TEST_CASE("Antenna - derive gains")
{
    auto omni = derive_gains(two_pi, 1.0);
    CHECK(omni.g_main == 1.0);
    CHECK(omni.g_side == 1.0);
    CHECK(omni.omnidirectional());

    auto quarter = derive_gains(pi / 2.0, 0.5);
    CHECK(quarter.g_main == Catch::Approx(2.0));
    CHECK(quarter.g_side == Catch::Approx(2.0 / 3.0));
    CHECK(0.25 * quarter.g_main + 0.75 * quarter.g_side == Catch::Approx(1.0));

    CHECK_THROWS_AS(derive_gains(pi / 2.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(derive_gains(pi / 2.0, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(derive_gains(0.0, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(derive_gains(7.0, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(derive_gains(1.0, 1.5), std::invalid_argument);
}

TEST_CASE("Antenna - conservation and ordering over random patterns")
{
    rng g(42);
    for (int i = 0; i < 1000; ++i)
    {
        const double theta = two_pi * (0.001 + 0.998 * g.uniform01());
        const double lo = theta / two_pi;
        const double rho = lo + (1.0 - lo) * (0.001 + 0.999 * g.uniform01());
        auto p = derive_gains(theta, rho);
        CHECK(std::abs(p.conservation_residual()) < 1e-12);
        CHECK(p.g_side >= 0.0);
        CHECK(p.g_side <= 1.0);
        CHECK(p.g_main >= 1.0);
    }
}

TEST_CASE("Antenna - main gain falls as the beam widens")
{
    double prev = derive_gains(0.1, 0.9).g_main;
    for (double theta = 0.2; theta < 5.6; theta += 0.1)
    {
        const double gm = derive_gains(theta, 0.9).g_main;
        CHECK(gm < prev);
        prev = gm;
    }
}

TEST_CASE("Antenna - adversarial rho just above the floor")
{
    const double theta = 1.0;
    auto p = derive_gains(theta, theta / two_pi + 1e-9);
    CHECK(p.g_main == Catch::Approx(1.0).margin(1e-7));
    CHECK(std::abs(p.conservation_residual()) < 1e-12);
}

TEST_CASE("Antenna - steering")
{
    auto [a, b] = steer(0, {0.0, 0.0}, 1, {1.0, 0.0});
    CHECK(a.azimuth == Catch::Approx(0.0).margin(1e-15));
    CHECK(b.azimuth == Catch::Approx(pi));

    auto [c, d] = steer(0, {0.0, 0.0}, 1, {1.0, 1.0});
    CHECK(c.azimuth == Catch::Approx(pi / 4.0));
    CHECK(d.azimuth == Catch::Approx(5.0 * pi / 4.0));

    CHECK_THROWS_AS(steer(0, {0.5, 0.5}, 1, {0.5, 0.5}), degenerate_geometry);
}

TEST_CASE("Antenna - steered pairs are main-main")
{
    rng g(3);
    auto pat = derive_gains(0.05, 0.9);
    for (int i = 0; i < 10000; ++i)
    {
        point p{g.uniform01(), g.uniform01()}, q{g.uniform01(), g.uniform01()};
        auto [a, b] = steer(0, p, 1, q);
        steered_node sa{a, p}, sb{b, q};
        CHECK(gain_between(sa, sb, pat) == gain_category::main_main);
    }
}

TEST_CASE("Antenna - gain categories")
{
    auto pat = derive_gains(pi / 3.0, 0.9);
    point p{0.0, 0.0}, q{2.0, 0.0};
    auto [a, b] = steer(0, p, 1, q);
    steered_node sa{a, p}, sb{b, q};
    CHECK(gain_between(sa, sb, pat) == gain_category::main_main);

    steered_node turned{{1, normalize_angle(b.azimuth + pi)}, q};
    CHECK(gain_between(sa, turned, pat) == gain_category::main_side);
    CHECK(gain_between(turned, sa, pat) == gain_category::main_side);
    CHECK(gain_value(gain_category::main_side, pat) == Catch::Approx(pat.g_main * pat.g_side));

    steered_node away{{0, normalize_angle(a.azimuth + pi)}, p};
    CHECK(gain_between(away, turned, pat) == gain_category::side_side);

    steered_node same{{2, 0.0}, p};
    CHECK_THROWS_AS(gain_between(sa, same, pat), degenerate_geometry);
}

TEST_CASE("Antenna - gain symmetry")
{
    rng g(17);
    auto pat = derive_gains(1.0, 0.8);
    for (int i = 0; i < 2000; ++i)
    {
        steered_node a{{0, two_pi * g.uniform01()}, {g.uniform01(), g.uniform01()}};
        steered_node b{{1, two_pi * g.uniform01()}, {g.uniform01(), g.uniform01()}};
        CHECK(gain_between(a, b, pat) == gain_between(b, a, pat));
    }
}

TEST_CASE("Antenna - sector boundary is half-open")
{
    antenna_pattern pat = derive_gains(pi / 2.0, 0.9);
    boresight beam{0, 0.0};
    // bearing exactly at -theta/2 is inside, exactly at +theta/2 is outside
    CHECK(in_mainlobe(beam, {0.0, 0.0}, {1.0, -1.0}, pat));
    CHECK_FALSE(in_mainlobe(beam, {0.0, 0.0}, {1.0, 1.0}, pat));
    CHECK_FALSE(in_mainlobe(beam, {0.0, 0.0}, {-1.0, 1e-9}, pat));
    CHECK(in_mainlobe(beam, {0.0, 0.0}, {1.0, 0.99}, pat));
}

TEST_CASE("Antenna - category law at theta = pi")
{
    rng g(99);
    auto pat = derive_gains(pi, 0.9);
    const std::size_t samples = 100000;
    std::array<double, 3> count{};
    for (std::size_t i = 0; i < samples; ++i)
    {
        steered_node a{{0, two_pi * g.uniform01()}, {0.0, 0.0}};
        steered_node b{{1, two_pi * g.uniform01()}, {0.3, -0.7}};
        count[std::size_t(gain_between(a, b, pat))] += 1.0;
    }
    const std::array<double, 3> expect{0.25, 0.5, 0.25};
    for (int c = 0; c < 3; ++c)
    {
        const double sd = std::sqrt(double(samples) * expect[c] * (1.0 - expect[c]));
        CHECK(std::abs(count[c] - expect[c] * double(samples)) <= 3.0 * sd);
    }
}

TEST_CASE("Antenna - channel power gain")
{
    antenna_pattern two{pi / 2.0, 0.5, 2.0, 1.0};
    CHECK(channel_power_gain(gain_category::main_main, two, 1.0, 4.0) == Catch::Approx(4.0));
    CHECK(channel_power_gain(gain_category::side_side, two, 2.0, 4.0) == Catch::Approx(1.0 / 16.0));
    for (double c : {0.5, 3.0, 10.0})
        CHECK(channel_power_gain(gain_category::main_side, two, 1.3 * c, 3.5) ==
              Catch::Approx(channel_power_gain(gain_category::main_side, two, 1.3, 3.5) * std::pow(c, -3.5)));
    CHECK_THROWS_AS(channel_power_gain(gain_category::main_main, two, 0.0, 4.0), degenerate_geometry);
}
