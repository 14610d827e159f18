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

#include "elastic/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "elastic/scheduling.hpp"

namespace elastic
{
    bs_grid place_bs(const network_instance &inst, double gamma)
    {
        bs_grid g;
        g.gamma = gamma;
        g.b = bs_count(inst.n, gamma); // validates gamma
        g.per_side = std::uint32_t(std::llround(std::sqrt(double(g.b))));
        g.cell_side = inst.side_length / double(g.per_side);
        g.bs_cell_area = g.cell_side * g.cell_side;
        g.first_id = node_id(inst.n);
        g.cells = build_grid_with_count(inst, g.per_side);
        g.bs_positions.reserve(g.b);
        for (std::uint32_t r = 0; r < g.per_side; ++r)
            for (std::uint32_t c = 0; c < g.per_side; ++c)
                g.bs_positions.push_back(g.cells.center({r, c}));
        return g;
    }

    infra_hop infra_hop_distance(std::size_t n, double theta, double alpha, double gamma, geometry_mode mode)
    {
        double nn = double(n), side = mode == geometry_mode::dense ? 1.0 : std::sqrt(nn);
        double bs_side = side / std::sqrt(double(bs_count(n, gamma)));
        infra_hop h;
        h.d_infra_hop = std::min(std::sqrt(lg(nn) / nn) * std::pow(theta, -2.0 / alpha) * side, bs_side);
        double floor_side = std::min(std::sqrt(subregion_area(n, side)), bs_side);
        h.cell_side = std::max(h.d_infra_hop, floor_side);
        h.a_infra = h.cell_side * h.cell_side;
        return h;
    }

    cell_grid build_infra_grid(const network_instance &inst, const bs_grid &bs, const infra_hop &hop)
    {
        double k = std::floor(bs.cell_side / hop.cell_side * (1.0 + 1e-12));
        auto per_bs = std::uint32_t(std::max(1.0, k));
        return build_grid_with_count(inst, bs.per_side * per_bs);
    }

    std::vector<infra_route> build_infra_routes(const network_instance &inst, const bs_grid &bs,
                                                const cell_grid &infra_grid, bool single_hop)
    {
        std::vector<infra_route> out;
        out.reserve(inst.num_pairs());
        for (std::uint32_t p = 0; p < inst.num_pairs(); ++p)
        {
            const sd_pair &sd = inst.sd_pairs[p];
            point src = inst.nodes[sd.source], dst = inst.nodes[sd.destination];
            infra_route r;
            r.pair = p;
            r.source_cell = bs.cells.flat(bs.cells.cell_of(src));
            r.destination_cell = bs.cells.flat(bs.cells.cell_of(dst));
            node_id src_bs = bs.bs_id(r.source_cell), dst_bs = bs.bs_id(r.destination_cell);
            point src_bs_pos = bs.bs_positions[r.source_cell], dst_bs_pos = bs.bs_positions[r.destination_cell];
            if (single_hop)
            {
                r.access.pair = r.exit.pair = p;
                r.access.hops.push_back(hop{sd.source, src_bs, src, src_bs_pos, infra_grid.cell_of(src_bs_pos),
                                            distance(src, src_bs_pos)});
                r.exit.hops.push_back(
                    hop{dst_bs, sd.destination, dst_bs_pos, dst, infra_grid.cell_of(dst), distance(dst_bs_pos, dst)});
            }
            else
            {
                r.access = build_manhattan_route(p, sd.source, src, src_bs, src_bs_pos, inst, infra_grid, (1ULL << 32) | p);
                r.exit = build_manhattan_route(p, dst_bs, dst_bs_pos, sd.destination, dst, inst, infra_grid, (2ULL << 32) | p);
            }
            out.push_back(std::move(r));
        }
        return out;
    }

    double infra_tx_power(const network_instance &inst, const bs_grid &bs, const infra_config &cfg)
    {
        double nn = double(inst.n);
        double multihop = inst.mode == geometry_mode::dense ? cfg.power * std::pow(lg(nn) / nn, cfg.alpha / 2.0)
                                                            : cfg.power;
        if (!cfg.single_hop)
            return multihop;
        double side2 = inst.side_length * inst.side_length;
        double single = cfg.power * std::pow(side2 / double(bs.b), cfg.alpha / 2.0) * cfg.theta * cfg.theta;
        return std::min(single, cfg.power);
    }

    namespace
    {
        // Pairs grouped by BS cell, ascending pair id inside each cell.
        std::vector<std::vector<std::uint32_t>> group_by_cell(const std::vector<infra_route> &routes, std::size_t cells,
                                                              bool by_source)
        {
            std::vector<std::vector<std::uint32_t>> groups(cells);
            for (const auto &r : routes)
                groups[by_source ? r.source_cell : r.destination_cell].push_back(r.pair);
            return groups;
        }

        // Slot-by-slot run of one phase. `phase_slots` is how many slots of the
        // whole run belong to this phase.
        link_statistics run_phase(const route_table &table, const std::vector<std::vector<std::uint32_t>> &groups,
                                  std::size_t phase_slots, const phy_params &phy, std::vector<std::uint64_t> &tallies)
        {
            link_statistics stats;
            stats.hop_log_sums.assign(table.hops.size(), 0.0);
            activator act(table);
            std::vector<std::uint32_t> chosen;
            for (std::size_t a = 0; a < phase_slots; ++a)
            {
                chosen.clear();
                for (const auto &g : groups)
                    if (!g.empty())
                        chosen.push_back(g[a % g.size()]);
                std::sort(chosen.begin(), chosen.end());
                for (auto p : chosen)
                    ++tallies[p];
                for (const auto &set : act.activate_frame(a, chosen))
                    record_set(set, table, phy, stats);
            }
            return stats;
        }
    }

    infra_result simulate_infra(const network_instance &inst, const bs_grid &bs, const std::vector<infra_route> &routes,
                                const cell_grid &infra_grid, const phy_params &phy, double tx_power,
                                std::size_t num_slots)
    {
        if (num_slots < 2)
            throw std::invalid_argument("simulate_infra: need at least one access and one exit slot");

        std::vector<route_plan> access, exit;
        access.reserve(routes.size());
        exit.reserve(routes.size());
        double hops = 0.0;
        for (const auto &r : routes)
        {
            access.push_back(r.access);
            exit.push_back(r.exit);
            hops += double(r.access.hop_count() + r.exit.hop_count());
        }
        std::size_t id_space = inst.n + bs.b;
        route_table access_table = build_route_table(access, id_space, infra_grid, infra_grid, tx_power);
        route_table exit_table = build_route_table(exit, id_space, infra_grid, infra_grid, tx_power);

        auto sources = group_by_cell(routes, bs.b, true);
        auto destinations = group_by_cell(routes, bs.b, false);

        infra_result out;
        out.mean_hops = routes.empty() ? 0.0 : hops / double(routes.size());
        for (const auto &g : sources)
            out.max_lines_per_slot += g.empty() ? 0 : 1;

        std::size_t access_slots = (num_slots + 1) / 2, exit_slots = num_slots / 2;
        std::vector<std::uint64_t> access_tally(routes.size(), 0), exit_tally(routes.size(), 0);
        out.access_links = run_phase(access_table, sources, access_slots, phy, access_tally);
        out.exit_links = run_phase(exit_table, destinations, exit_slots, phy, exit_tally);

        out.access = pair_rates(access_table, out.access_links.hop_log_sums, access_tally, num_slots);
        out.exit = pair_rates(exit_table, out.exit_links.hop_log_sums, exit_tally, num_slots);
        out.rates.resize(routes.size());
        out.mean_hop_rates.resize(routes.size());
        for (std::size_t p = 0; p < routes.size(); ++p)
        {
            out.rates[p] = std::min(out.access[p].min_hop, out.exit[p].min_hop);
            out.mean_hop_rates[p] = std::min(out.access[p].mean_hop, out.exit[p].mean_hop);
            out.aggregate += out.rates[p];
        }
        return out;
    }

    hybrid_result hybrid_throughput(double infra_aggregate, double adhoc_aggregate)
    {
        hybrid_result h;
        h.infra = infra_aggregate;
        h.adhoc = adhoc_aggregate;
        h.infra_wins = infra_aggregate >= adhoc_aggregate;
        h.aggregate = std::max(infra_aggregate, adhoc_aggregate);
        return h;
    }
}
