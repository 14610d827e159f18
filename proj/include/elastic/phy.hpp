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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "elastic/antenna.hpp"
#include "elastic/geometry.hpp"
#include "elastic/scheduling.hpp"

namespace elastic
{
    struct phy_params
    {
        antenna_pattern pattern;
        double alpha = 4.0;
        double noise = 1.0; // N0
    };

    struct sinr_record
    {
        std::uint32_t pair = 0;
        std::uint32_t hop = 0;
        std::size_t slot = 0;
        double signal = 0.0;
        double intra = 0.0; // same-pair transmitters
        double inter = 0.0; // other pairs
        double noise = 0.0;
        double sinr = 0.0;
        double rate = 0.0; // log2(1 + sinr)
    };

    struct interferer
    {
        std::size_t index = 0; // position in the active set
        std::uint32_t pair = 0;
        node_id node = 0;
        double distance = 0.0;
        gain_category category = gain_category::side_side;
        double power = 0.0;
        bool same_pair = false;
    };

    struct interference_breakdown
    {
        std::vector<interferer> interferers;
        double exact_intra = 0.0;
        double exact_inter = 0.0;
    };

    struct tier_bound_result
    {
        double bound = 0.0;      // sum over tiers t >= 1 of power * X / (t s)^alpha
        double far_exact = 0.0;  // exact inter-pair power from the same interferers
        double near_exact = 0.0; // inter-pair power from the receiver's 3x3 region block
    };

    // tx_power * G_m^2 / r^alpha for a pair steered at each other.
    // Throws std::logic_error when the beams do not cover each other.
    double received_power(const steered_node &tx, const steered_node &rx, const antenna_pattern &pattern, double alpha,
                          double tx_power);

    // SINR at the receiver of active.transmitters[rx].
    sinr_record sinr(std::size_t rx, const active_transmitter_set &active, const phy_params &params);

    // SINR of every receiver in the set. Same sums as sinr(), vectorized gain tests.
    std::vector<sinr_record> evaluate_set(const active_transmitter_set &active, const phy_params &params);

    interference_breakdown intra_inter_split(std::size_t rx, const active_transmitter_set &active,
                                             const phy_params &params);

    // Layered bound over the smaller-region tessellation `regions`: an inter-pair
    // interferer whose region is k >= 2 regions away (Chebyshev) from the
    // receiver's region lies in tier t = k - 1 and is at least t region sides away.
    tier_bound_result tier_bound(std::size_t rx, const active_transmitter_set &active, const phy_params &params,
                                 const cell_grid &regions);

    // E[X] over independent uniform beam directions.
    double expected_inter_interference(const antenna_pattern &pattern);

    // Probabilities of (main-main, main-side, side-side) for independent uniform azimuths.
    std::array<double, 3> gain_category_probabilities(double theta);

    // sum_{t=1}^{terms} t^(1 - alpha)
    double tier_series(double alpha, std::size_t terms);

    struct pair_rate
    {
        double min_hop = 0.0;  // (T_p / S) / 9 * min over hops of the per-slot mean rate
        double mean_hop = 0.0; // same with the mean over hops
        bool scheduled = false;
    };

    // hop_log_sums[l] = sum over s in Phi_p of log2(1 + SINR_{p,l}(s)), zero for
    // slots where the hop lost its sub-slot.
    pair_rate per_pair_rate(std::span<const double> hop_log_sums, std::uint64_t activations, std::size_t num_slots);
}
