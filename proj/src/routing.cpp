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

#include "elastic/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "elastic/antenna.hpp"
#include "elastic/errors.hpp"
#include "elastic/rng.hpp"

namespace elastic
{
    std::string_view to_string(regime r)
    {
        switch (r)
        {
        case regime::regime_i:
            return "I";
        case regime::regime_ii:
            return "II";
        case regime::regime_iii:
            return "III";
        case regime::regime_iv:
            return "IV";
        case regime::regime_v:
            break;
        }
        return "V";
    }

    double theoretical_exponent(double beta_theta, double alpha, double gamma)
    {
        return std::min(std::max(0.5 + 2.0 / alpha * beta_theta, gamma), 1.0);
    }

    std::size_t bs_count(std::size_t n, double gamma)
    {
        if (!(gamma >= 0.0 && gamma < 1.0))
            throw std::invalid_argument("bs_count: gamma must lie in [0, 1), got " + std::to_string(gamma));
        double k = std::round(std::sqrt(std::pow(double(n), gamma)));
        auto side = std::max<std::size_t>(1, std::size_t(k));
        return side * side;
    }

    regime_label classify_regime(std::size_t n, double theta, double alpha, std::optional<double> gamma)
    {
        if (!(theta > 0.0) || theta > two_pi * (1.0 + 1e-15))
            throw std::invalid_argument("classify_regime: theta must lie in (0, 2pi]");
        if (gamma && !(*gamma >= 0.0 && *gamma < 1.0))
            throw std::invalid_argument("classify_regime: gamma must lie in [0, 1), got " + std::to_string(*gamma));

        double nn = double(n), log_n = lg(nn);
        regime_label label;
        label.inverse_theta = 1.0 / theta;
        label.boundary_value = std::pow(nn / log_n, alpha / 4.0);
        double beta = std::max(0.0, -std::log(theta) / std::log(nn));
        double g = gamma.value_or(0.0);
        label.theoretical_exponent = theoretical_exponent(beta, alpha, g);

        bool single_hop = label.inverse_theta >= label.boundary_value;
        if (!gamma)
        {
            label.which = single_hop ? regime::regime_ii : regime::regime_i;
            return label;
        }
        double b = double(bs_count(n, g));
        label.infra_boundary = std::pow(b, alpha / 2.0) * std::pow(log_n / nn, alpha / 4.0);
        if (single_hop)
            label.which = regime::regime_v;
        else if (label.inverse_theta < label.infra_boundary)
            label.which = regime::regime_iii;
        else
            label.which = regime::regime_iv;
        return label;
    }

    elastic_params compute_elastic_params(std::size_t n, double theta, double alpha, geometry_mode mode, double power)
    {
        if (n < 4)
            throw std::invalid_argument("compute_elastic_params: n must be >= 4");
        if (!(alpha > 2.0))
            throw std::invalid_argument("compute_elastic_params: alpha must exceed 2");
        if (!(theta > 0.0) || theta > two_pi * (1.0 + 1e-15))
            throw std::invalid_argument("compute_elastic_params: theta must lie in (0, 2pi]");

        double nn = double(n), log_n = lg(nn);
        double side = mode == geometry_mode::dense ? 1.0 : std::sqrt(nn);

        elastic_params e;
        e.d_hop = std::min(std::sqrt(log_n / nn) * std::pow(theta, -2.0 / alpha), 1.0) * side;
        e.cell_side = std::min(std::max(e.d_hop, std::sqrt(subregion_area(n, side))), side);
        e.cell_area = e.cell_side * e.cell_side;
        e.h_bar = side / e.cell_side;
        e.tx_power = mode == geometry_mode::dense ? power * std::pow(log_n / nn, alpha / 2.0) : power;
        e.regime = classify_regime(n, theta, alpha);
        return e;
    }

    namespace
    {
        node_id pick_relay(const cell_grid &grid, cell_index cell, rng &draw)
        {
            auto candidates = grid.nodes_in(cell);
            if (candidates.empty())
                throw routing_infeasible("no relay available in cell (" + std::to_string(cell.row) + ", " +
                                         std::to_string(cell.col) + ")");
            return candidates[draw.below(candidates.size())];
        }
    }

    route_plan build_manhattan_route(std::uint32_t pair, node_id src, point src_pos, node_id dst, point dst_pos,
                                     const network_instance &inst, const cell_grid &grid, std::uint64_t stream)
    {
        route_plan plan;
        plan.pair = pair;

        cell_index from = grid.cell_of(src_pos);
        cell_index to = grid.cell_of(dst_pos);

        // Row leg first, then column leg; one relay drawn uniformly from each
        // intermediate cell so hop bearings do not line up across pairs.
        std::vector<cell_index> path;
        cell_index cur = from;
        while (cur.col != to.col)
        {
            cur.col = cur.col < to.col ? cur.col + 1 : cur.col - 1;
            path.push_back(cur);
        }
        while (cur.row != to.row)
        {
            cur.row = cur.row < to.row ? cur.row + 1 : cur.row - 1;
            path.push_back(cur);
        }

        rng draw(derive_seed(derive_seed(inst.seed, 2), stream));
        node_id prev = src;
        point prev_pos = src_pos;
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
        {
            node_id relay = pick_relay(grid, path[k], draw);
            point pos = inst.nodes[relay];
            plan.hops.push_back(hop{prev, relay, prev_pos, pos, path[k], distance(prev_pos, pos)});
            prev = relay;
            prev_pos = pos;
        }
        plan.hops.push_back(hop{prev, dst, prev_pos, dst_pos, to, distance(prev_pos, dst_pos)});
        return plan;
    }

    route_plan build_route(std::uint32_t pair, const network_instance &inst, const cell_grid &grid)
    {
        const sd_pair &sd = inst.sd_pairs.at(pair);
        return build_manhattan_route(pair, sd.source, inst.nodes[sd.source], sd.destination, inst.nodes[sd.destination],
                                     inst, grid, pair);
    }

    std::vector<route_plan> build_all_routes(const network_instance &inst, const cell_grid &grid)
    {
        std::vector<route_plan> routes;
        routes.reserve(inst.num_pairs());
        for (std::uint32_t p = 0; p < inst.num_pairs(); ++p)
            routes.push_back(build_route(p, inst, grid));
        return routes;
    }
}
