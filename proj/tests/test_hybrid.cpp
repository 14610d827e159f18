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

#include <cmath>
#include <stdexcept>

#include "elastic/errors.hpp"
#include "elastic/geometry.hpp"
#include "elastic/hybrid.hpp"
#include "elastic/routing.hpp"

using namespace elastic;

TEST_CASE("Hybrid - BS placement")
{
    auto one = place_bs(place_nodes(64, geometry_mode::dense, 1), 0.0);
    REQUIRE(one.b == 1);
    CHECK(one.bs_positions[0].x == Catch::Approx(0.5));
    CHECK(one.bs_positions[0].y == Catch::Approx(0.5));
    CHECK(one.first_id == 64);

    auto big = place_bs(place_nodes(65536, geometry_mode::dense, 1), 0.5);
    CHECK(big.b == 256);
    CHECK(big.per_side == 16);
    CHECK(big.cell_side == Catch::Approx(1.0 / 16.0));

    CHECK_THROWS_AS(place_bs(place_nodes(64, geometry_mode::dense, 1), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(place_bs(place_nodes(64, geometry_mode::dense, 1), -0.1), std::invalid_argument);
}

TEST_CASE("Hybrid - every node's nearest BS is its own cell's BS")
{
    auto inst = place_nodes(4096, geometry_mode::dense, 2);
    auto bs = place_bs(inst, 0.5);
    for (std::size_t i = 0; i < inst.n; ++i)
    {
        const point p = inst.nodes[i];
        std::size_t best = 0;
        for (std::size_t k = 1; k < bs.b; ++k)
            if (distance(p, bs.bs_positions[k]) < distance(p, bs.bs_positions[best]))
                best = k;
        const std::size_t own = bs.cells.flat(bs.cells.cell_of(p));
        CHECK(distance(p, bs.bs_positions[own]) == Catch::Approx(distance(p, bs.bs_positions[best])));
    }
}

TEST_CASE("Hybrid - infrastructure hop distance")
{
    const std::size_t n = 65536;
    const double bs_side = 1.0 / 16.0;
    // Narrow beams reach the BS cell side: single hop to the BS.
    auto narrow = infra_hop_distance(n, 1e-6, 4.0, 0.5);
    CHECK(narrow.d_infra_hop == Catch::Approx(bs_side));
    CHECK(narrow.cell_side == Catch::Approx(bs_side));

    auto omni = infra_hop_distance(n, two_pi, 4.0, 0.5);
    const double nn = std::sqrt(lg(double(n)) / double(n));
    CHECK(omni.d_infra_hop == Catch::Approx(nn / std::sqrt(two_pi)));
    CHECK(omni.cell_side >= omni.d_infra_hop);
    CHECK(omni.a_infra == Catch::Approx(omni.cell_side * omni.cell_side));

    // Without infrastructure the cap is the network side, as in ad hoc routing.
    auto none = infra_hop_distance(n, 1e-6, 4.0, 0.0);
    CHECK(none.d_infra_hop == 1.0);
    auto ad_hoc = compute_elastic_params(n, 1e-6, 4.0, geometry_mode::dense, 10.0);
    CHECK(none.d_infra_hop == Catch::Approx(ad_hoc.d_hop));
}

TEST_CASE("Hybrid - access and exit routes stay inside the BS cells")
{
    auto inst = place_nodes(4096, geometry_mode::dense, 3);
    auto bs = place_bs(inst, 0.25);
    auto hop = infra_hop_distance(inst.n, two_pi, 4.0, 0.25);
    auto grid = build_infra_grid(inst, bs, hop);
    REQUIRE(grid.cells_per_side % bs.per_side == 0);
    REQUIRE(grid.cells_per_side > bs.per_side);
    auto routes = build_infra_routes(inst, bs, grid, false);
    REQUIRE(routes.size() == inst.num_pairs());

    std::size_t multi = 0;
    for (const auto &r : routes)
    {
        const auto &sd = inst.sd_pairs[r.pair];
        CHECK(r.access.hops.front().tx == sd.source);
        CHECK(r.access.hops.back().rx == bs.bs_id(r.source_cell));
        CHECK(r.exit.hops.front().tx == bs.bs_id(r.destination_cell));
        CHECK(r.exit.hops.back().rx == sd.destination);
        for (const auto *plan : {&r.access, &r.exit})
        {
            const std::uint32_t cell = plan == &r.access ? r.source_cell : r.destination_cell;
            double length = 0.0;
            for (const auto &h : plan->hops)
            {
                CHECK(bs.cells.flat(bs.cells.cell_of(h.tx_pos)) == cell);
                CHECK(bs.cells.flat(bs.cells.cell_of(h.rx_pos)) == cell);
                length += h.distance;
            }
            CHECK(length <= 5.0 * bs.cell_side);
            multi += plan->hop_count() > 1 ? 1 : 0;
        }
    }
    CHECK(multi > 0);
}

TEST_CASE("Hybrid - source beside its BS needs one access hop")
{
    auto inst = place_nodes(4096, geometry_mode::dense, 4);
    auto bs = place_bs(inst, 0.5);
    auto hop = infra_hop_distance(inst.n, 0.5, 4.0, 0.5);
    auto grid = build_infra_grid(inst, bs, hop);
    const point at = bs.bs_positions[9];
    inst.nodes[inst.sd_pairs[0].source] = {at.x + 1e-3, at.y + 1e-3};
    auto routes = build_infra_routes(inst, bs, grid, false);
    CHECK(routes[0].source_cell == 9);
    CHECK(routes[0].access.hop_count() == 1);
}

TEST_CASE("Hybrid - single-hop variant")
{
    auto inst = place_nodes(1024, geometry_mode::dense, 5);
    auto bs = place_bs(inst, 0.5);
    auto hop = infra_hop_distance(inst.n, two_pi, 4.0, 0.5);
    auto grid = build_infra_grid(inst, bs, hop);
    auto routes = build_infra_routes(inst, bs, grid, true);
    for (const auto &r : routes)
    {
        CHECK(r.access.hop_count() == 1);
        CHECK(r.exit.hop_count() == 1);
    }
    infra_config cfg;
    cfg.theta = 0.5;
    cfg.single_hop = true;
    const double expected = std::min(10.0, 10.0 * std::pow(1.0 / double(bs.b), 2.0) * 0.25);
    CHECK(infra_tx_power(inst, bs, cfg) == Catch::Approx(expected));
}

TEST_CASE("Hybrid - infrastructure simulation serves every BS cell")
{
    auto inst = place_nodes(1024, geometry_mode::dense, 6);
    auto bs = place_bs(inst, 0.5);
    auto hop = infra_hop_distance(inst.n, 1.0, 4.0, 0.5);
    auto grid = build_infra_grid(inst, bs, hop);
    auto routes = build_infra_routes(inst, bs, grid, false);
    infra_config cfg;
    cfg.theta = 1.0;
    const phy_params phy{derive_gains(1.0, 0.9), 4.0, 1.0};
    auto res = simulate_infra(inst, bs, routes, grid, phy, infra_tx_power(inst, bs, cfg), 40);
    CHECK(res.max_lines_per_slot == bs.b);
    REQUIRE(res.rates.size() == inst.num_pairs());
    double sum = 0.0;
    for (std::size_t p = 0; p < res.rates.size(); ++p)
    {
        CHECK(res.rates[p] == Catch::Approx(std::min(res.access[p].min_hop, res.exit[p].min_hop)));
        CHECK(res.mean_hop_rates[p] >= res.rates[p]);
        sum += res.rates[p];
    }
    CHECK(res.aggregate == Catch::Approx(sum));
    CHECK(res.aggregate > 0.0);
    CHECK(res.access_links.records > 0);
    CHECK(res.exit_links.records > 0);
    CHECK_THROWS_AS(simulate_infra(inst, bs, routes, grid, phy, 1.0, 1), std::invalid_argument);
}

TEST_CASE("Hybrid - aggregate is the larger component")
{
    auto a = hybrid_throughput(3.0, 5.0);
    CHECK(a.aggregate == 5.0);
    CHECK_FALSE(a.infra_wins);
    auto b = hybrid_throughput(7.0, 5.0);
    CHECK(b.aggregate == 7.0);
    CHECK(b.infra_wins);
    CHECK(b.adhoc == 5.0);
    CHECK(b.infra == 7.0);
}
