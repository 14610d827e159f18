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

#include "elastic/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "elastic/errors.hpp"
#include "elastic/rng.hpp"

namespace elastic
{
    std::string_view to_string(geometry_mode mode)
    {
        return mode == geometry_mode::dense ? "dense" : "extended";
    }

    double subregion_area(std::size_t n, double side_length)
    {
        double a = 2.0 * lg(double(n)) / double(n) * side_length * side_length;
        return std::min(a, side_length * side_length);
    }

    network_instance place_nodes(std::size_t n, geometry_mode mode, std::uint64_t seed)
    {
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("place_nodes: n must be even and >= 4, got " + std::to_string(n));

        network_instance inst;
        inst.n = n;
        inst.mode = mode;
        inst.seed = seed;
        inst.side_length = mode == geometry_mode::dense ? 1.0 : std::sqrt(double(n));

        // Unit-square draws scaled afterwards, so extended = dense * sqrt(n) exactly.
        rng gen(derive_seed(seed, 0));
        inst.nodes.resize(n);
        for (auto &p : inst.nodes)
        {
            p.x = gen.uniform01() * inst.side_length;
            p.y = gen.uniform01() * inst.side_length;
        }

        std::vector<node_id> perm(n);
        std::iota(perm.begin(), perm.end(), node_id(0));
        for (std::size_t i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[gen.below(i + 1)]);

        inst.sd_pairs.resize(n / 2);
        for (std::size_t p = 0; p < n / 2; ++p)
            inst.sd_pairs[p] = {perm[2 * p], perm[2 * p + 1]};
        return inst;
    }

    cell_index cell_grid::cell_of(point p) const
    {
        auto axis = [&](double v) -> std::uint32_t
        {
            double k = std::ceil(v / cell_side) - 1.0;
            if (k < 0.0)
                return 0;
            if (k >= double(cells_per_side))
                return cells_per_side - 1;
            return std::uint32_t(k);
        };
        return {axis(p.y), axis(p.x)};
    }

    point cell_grid::center(cell_index c) const
    {
        return {(double(c.col) + 0.5) * cell_side, (double(c.row) + 0.5) * cell_side};
    }

    std::span<const node_id> cell_grid::nodes_in(cell_index c) const
    {
        auto f = flat(c);
        return std::span<const node_id>(bucket_nodes).subspan(bucket_offsets[f], bucket_offsets[f + 1] - bucket_offsets[f]);
    }

    cell_grid build_grid_with_count(const network_instance &inst, std::uint32_t cells_per_side)
    {
        if (cells_per_side == 0)
            throw std::invalid_argument("build_grid_with_count: need at least one cell");
        cell_grid g;
        g.side_length = inst.side_length;
        g.cells_per_side = cells_per_side;
        g.cell_side = inst.side_length / double(cells_per_side);
        g.cell_area = g.cell_side * g.cell_side;
        g.subregion_area = subregion_area(inst.n, inst.side_length);

        // Counting sort keeps ids ascending inside each bucket.
        std::vector<std::uint32_t> cell_of_node(inst.n);
        g.bucket_offsets.assign(g.num_cells() + 1, 0);
        for (std::size_t i = 0; i < inst.n; ++i)
        {
            cell_of_node[i] = g.flat(g.cell_of(inst.nodes[i]));
            ++g.bucket_offsets[cell_of_node[i] + 1];
        }
        std::partial_sum(g.bucket_offsets.begin(), g.bucket_offsets.end(), g.bucket_offsets.begin());
        g.bucket_nodes.resize(inst.n);
        auto cursor = g.bucket_offsets;
        for (std::size_t i = 0; i < inst.n; ++i)
            g.bucket_nodes[cursor[cell_of_node[i]]++] = node_id(i);
        return g;
    }

    cell_grid build_cell_grid(const network_instance &inst, double cell_area)
    {
        double full = inst.side_length * inst.side_length;
        if (!(cell_area > 0.0) || cell_area > full * (1.0 + 1e-12))
            throw std::invalid_argument("build_cell_grid: cell_area must lie in (0, side^2]");
        double sub = subregion_area(inst.n, inst.side_length);
        if (cell_area < sub * (1.0 - 1e-12))
            throw config_error("build_cell_grid: cell_area " + std::to_string(cell_area) +
                               " is below the smaller-region area " + std::to_string(sub));

        double k = std::floor(inst.side_length / std::sqrt(cell_area) * (1.0 + 1e-12));
        return build_grid_with_count(inst, std::uint32_t(std::max(1.0, k)));
    }

    cell_grid build_subregion_grid(const network_instance &inst)
    {
        double sub = subregion_area(inst.n, inst.side_length);
        double k = std::floor(inst.side_length / std::sqrt(sub) * (1.0 + 1e-12));
        return build_grid_with_count(inst, std::uint32_t(std::max(1.0, k)));
    }

    bool occupancy_check(const network_instance &inst, const cell_grid &grid)
    {
        auto all_occupied = [](const cell_grid &g)
        {
            for (std::size_t c = 0; c < g.num_cells(); ++c)
                if (g.bucket_offsets[c + 1] == g.bucket_offsets[c])
                    return false;
            return true;
        };
        return all_occupied(grid) && all_occupied(build_subregion_grid(inst));
    }
}
