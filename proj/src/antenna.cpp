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

#include "elastic/antenna.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "elastic/errors.hpp"

namespace elastic
{
    double antenna_pattern::conservation_residual() const
    {
        double f = theta / two_pi;
        return f * g_main + (1.0 - f) * g_side - 1.0;
    }

    double gain_value(gain_category c, const antenna_pattern &pattern)
    {
        switch (c)
        {
        case gain_category::main_main:
            return pattern.g_main * pattern.g_main;
        case gain_category::main_side:
            return pattern.g_main * pattern.g_side;
        case gain_category::side_side:
            break;
        }
        return pattern.g_side * pattern.g_side;
    }

    double normalize_angle(double a)
    {
        double r = std::fmod(a, two_pi);
        if (r < 0.0)
            r += two_pi;
        return r >= two_pi ? 0.0 : r;
    }

    double bearing(point from, point to)
    {
        double dx = to.x - from.x, dy = to.y - from.y;
        if (dx == 0.0 && dy == 0.0)
            throw degenerate_geometry("bearing: coincident positions");
        return normalize_angle(std::atan2(dy, dx));
    }

    antenna_pattern derive_gains(double theta, double rho)
    {
        if (!(theta > 0.0) || theta > two_pi * (1.0 + 1e-15))
            throw std::invalid_argument("derive_gains: theta must lie in (0, 2pi], got " + std::to_string(theta));
        if (!(rho > 0.0) || rho > 1.0)
            throw std::invalid_argument("derive_gains: rho must lie in (0, 1], got " + std::to_string(rho));

        antenna_pattern p;
        if (theta >= two_pi * (1.0 - 1e-15))
            return p; // omnidirectional

        if (rho <= theta / two_pi)
            throw std::invalid_argument("derive_gains: rho " + std::to_string(rho) +
                                        " must exceed theta/2pi = " + std::to_string(theta / two_pi));
        p.theta = theta;
        p.rho = rho;
        p.g_main = two_pi * rho / theta;
        p.g_side = two_pi * (1.0 - rho) / (two_pi - theta);
        return p;
    }

    std::pair<boresight, boresight> steer(node_id tx, point tx_pos, node_id rx, point rx_pos)
    {
        double forward = bearing(tx_pos, rx_pos);
        return {boresight{tx, forward}, boresight{rx, normalize_angle(forward + std::numbers::pi)}};
    }

    bool in_mainlobe(const boresight &beam, point origin, point target, const antenna_pattern &pattern)
    {
        double dir = bearing(origin, target);
        if (pattern.omnidirectional())
            return true;
        double offset = normalize_angle(dir - beam.azimuth + 0.5 * pattern.theta);
        return offset < pattern.theta;
    }

    gain_category gain_between(const steered_node &a, const steered_node &b, const antenna_pattern &pattern)
    {
        bool a_sees_b = in_mainlobe(a.beam, a.position, b.position, pattern);
        bool b_sees_a = in_mainlobe(b.beam, b.position, a.position, pattern);
        if (a_sees_b && b_sees_a)
            return gain_category::main_main;
        if (a_sees_b || b_sees_a)
            return gain_category::main_side;
        return gain_category::side_side;
    }

    double channel_power_gain(gain_category category, const antenna_pattern &pattern, double r, double alpha)
    {
        if (!(r > 0.0))
            throw degenerate_geometry("channel_power_gain: distance must be positive");
        return gain_value(category, pattern) / std::pow(r, alpha);
    }
}
