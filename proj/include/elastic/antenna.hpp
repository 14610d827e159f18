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

#pragma once

#include <numbers>

#include "elastic/geometry.hpp"

namespace elastic
{
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // Sector mainlobe of width theta with gain g_main, circular sidelobe with
    // gain g_side. Energy conservation: (theta/2pi) g_main + (1 - theta/2pi) g_side = 1.
    struct antenna_pattern
    {
        double theta = two_pi;
        double rho = 1.0; // fraction of radiated energy inside the mainlobe
        double g_main = 1.0;
        double g_side = 1.0;

        bool omnidirectional() const { return theta >= two_pi; }

        // Residual of the conservation identity.
        double conservation_residual() const;
    };

    struct boresight
    {
        node_id node = 0;
        double azimuth = 0.0; // [0, 2pi)
    };

    enum class gain_category
    {
        main_main,
        main_side,
        side_side
    };

    // Power gain product of a category: G_m^2, G_m G_s or G_s^2.
    double gain_value(gain_category c, const antenna_pattern &pattern);

    // Wraps an angle into [0, 2pi).
    double normalize_angle(double a);

    // Direction of b seen from a, in [0, 2pi). Throws degenerate_geometry for a == b.
    double bearing(point from, point to);

    // Gains solved from conservation: G_m = 2 pi rho / theta, G_s = 2 pi (1 - rho) / (2 pi - theta).
    // theta = 2pi is the omnidirectional mode (G_m = G_s = 1) for any rho.
    // Throws std::invalid_argument unless 0 < theta <= 2pi and theta/2pi < rho <= 1.
    antenna_pattern derive_gains(double theta, double rho);

    // Both beams cover each other.
    std::pair<boresight, boresight> steer(node_id tx, point tx_pos, node_id rx, point rx_pos);

    // Mainlobe test on the half-open sector [azimuth - theta/2, azimuth + theta/2).
    bool in_mainlobe(const boresight &beam, point origin, point target, const antenna_pattern &pattern);

    struct steered_node
    {
        boresight beam;
        point position;
    };

    gain_category gain_between(const steered_node &a, const steered_node &b, const antenna_pattern &pattern);

    // |h|^2 = gain product / r^alpha. Throws degenerate_geometry for r <= 0.
    double channel_power_gain(gain_category category, const antenna_pattern &pattern, double r, double alpha);
}
