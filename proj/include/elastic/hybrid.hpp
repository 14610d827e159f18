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
#include <vector>

#include "elastic/geometry.hpp"
#include "elastic/phy.hpp"
#include "elastic/routing.hpp"
#include "elastic/simulation.hpp"

namespace elastic
{
    // sqrt(b) x sqrt(b) BS cells, one BS at each cell center. BS node ids start at n.
    struct bs_grid
    {
        double gamma = 0.0;
        std::size_t b = 1;
        std::uint32_t per_side = 1;
        double cell_side = 1.0;
        double bs_cell_area = 1.0;
        node_id first_id = 0;
        std::vector<point> bs_positions; // row-major
        cell_grid cells;                 // BS-cell tessellation with node buckets

        node_id bs_id(std::uint32_t flat_cell) const { return first_id + flat_cell; }
    };

    // Throws std::invalid_argument for gamma outside [0, 1).
    bs_grid place_bs(const network_instance &inst, double gamma);

    struct infra_hop
    {
        double d_infra_hop = 1.0; // min{sqrt(log n / n) theta^(-2/alpha), 1/sqrt(b)} * side
        double cell_side = 1.0;   // routing-cell side after the nearest-neighbour floor, <= BS cell side
        double a_infra = 1.0;     // cell_side^2
    };

    infra_hop infra_hop_distance(std::size_t n, double theta, double alpha, double gamma,
                                 geometry_mode mode = geometry_mode::dense);

    struct infra_route
    {
        std::uint32_t pair = 0;
        route_plan access; // source -> BS of the source's cell
        route_plan exit;   // BS of the destination's cell -> destination
        std::uint32_t source_cell = 0;
        std::uint32_t destination_cell = 0;
    };

    struct infra_config
    {
        double theta = two_pi;
        double alpha = 4.0;
        double power = 10.0; // P
        bool single_hop = false;
    };

    // Global routing grid for infrastructure routing: every BS cell split into
    // k x k cells of side infra_hop_distance().cell_side.
    cell_grid build_infra_grid(const network_instance &inst, const bs_grid &bs, const infra_hop &hop);

    // Access and exit routes for every pair. Single-hop mode connects each
    // endpoint straight to its BS. Throws routing_infeasible for an empty intermediate cell.
    std::vector<infra_route> build_infra_routes(const network_instance &inst, const bs_grid &bs,
                                                const cell_grid &infra_grid, bool single_hop);

    // Per-node transmit power on infrastructure links: P (log n / n)^(alpha/2)
    // dense and P extended; single hop uses P (side^2 / b)^(alpha/2) theta^2, capped at P.
    double infra_tx_power(const network_instance &inst, const bs_grid &bs, const infra_config &cfg);

    struct infra_result
    {
        std::vector<pair_rate> access;
        std::vector<pair_rate> exit;
        std::vector<double> rates;          // min(access, exit) per pair
        std::vector<double> mean_hop_rates; // same with the mean-over-hops rates
        double aggregate = 0.0;
        link_statistics access_links;
        link_statistics exit_links;
        std::size_t max_lines_per_slot = 0; // simultaneously active source-BS lines
        double mean_hops = 0.0;             // access + exit hops per pair
    };

    // Even slots run access routing, odd slots exit routing. In each BS cell one
    // source (resp. destination) is served per slot, round-robin by pair id.
    infra_result simulate_infra(const network_instance &inst, const bs_grid &bs, const std::vector<infra_route> &routes,
                                const cell_grid &infra_grid, const phy_params &phy, double tx_power,
                                std::size_t num_slots);

    struct hybrid_result
    {
        double aggregate = 0.0; // max of the two components
        double infra = 0.0;
        double adhoc = 0.0;
        bool infra_wins = false;
    };

    hybrid_result hybrid_throughput(double infra_aggregate, double adhoc_aggregate);
}
