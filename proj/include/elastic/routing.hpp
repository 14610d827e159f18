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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "elastic/geometry.hpp"

namespace elastic
{
    enum class regime
    {
        regime_i,   // elastic multihop
        regime_ii,  // single hop
        regime_iii, // hybrid: infrastructure dominates
        regime_iv,  // hybrid: ad hoc elastic routing dominates
        regime_v    // hybrid: single hop
    };

    std::string_view to_string(regime r);

    struct regime_label
    {
        regime which = regime::regime_i;
        double inverse_theta = 1.0;  // theta^-1
        double boundary_value = 0.0; // (n / log n)^(alpha/4), the single-hop threshold
        double infra_boundary = 0.0; // b^(alpha/2) (log n / n)^(alpha/4), hybrid only
        double theoretical_exponent = 0.5;
    };

    // Predicted exponent of T(n) for theta = n^-beta_theta with b = n^gamma BSs:
    // min{max{1/2 + (2/alpha) beta_theta, gamma}, 1}.
    double theoretical_exponent(double beta_theta, double alpha, double gamma = 0.0);

    // BS count n^gamma snapped to the nearest perfect square (>= 1).
    std::size_t bs_count(std::size_t n, double gamma);

    // Ad hoc: regime I/II. With gamma: regime III/IV/V. The boundary itself
    // belongs to the Omega side. beta_theta is read off theta as log(1/theta)/log n
    // (clamped at 0). Throws std::invalid_argument for gamma outside [0, 1).
    regime_label classify_regime(std::size_t n, double theta, double alpha, std::optional<double> gamma = std::nullopt);

    struct elastic_params
    {
        double d_hop = 1.0;      // min{sqrt(log n / n) theta^(-2/alpha), 1} * side
        double cell_side = 1.0;  // max(d_hop, smaller-region side), before grid rounding
        double cell_area = 1.0;  // cell_side^2, the requested routing-cell area
        double h_bar = 1.0;      // side / cell_side
        double tx_power = 1.0;   // P (log n / n)^(alpha/2) dense, P extended
        regime_label regime;
    };

    // Throws std::invalid_argument for n < 4, theta outside (0, 2pi] or alpha <= 2.
    elastic_params compute_elastic_params(std::size_t n, double theta, double alpha, geometry_mode mode, double power);

    struct hop
    {
        node_id tx = 0;
        node_id rx = 0;
        point tx_pos;
        point rx_pos;
        cell_index rx_cell;
        double distance = 0.0;
    };

    struct route_plan
    {
        std::uint32_t pair = 0;
        std::vector<hop> hops;

        std::size_t hop_count() const { return hops.size(); }
    };

    // Cell walk from the source cell along the row to the destination column,
    // then along the column to the destination cell. Each intermediate cell
    // contributes one relay drawn uniformly from its nodes with an rng keyed on
    // (instance seed, stream). Throws routing_infeasible when an intermediate
    // cell is empty.
    route_plan build_manhattan_route(std::uint32_t pair, node_id src, point src_pos, node_id dst, point dst_pos,
                                     const network_instance &inst, const cell_grid &grid, std::uint64_t stream);

    route_plan build_route(std::uint32_t pair, const network_instance &inst, const cell_grid &grid);

    std::vector<route_plan> build_all_routes(const network_instance &inst, const cell_grid &grid);
}
