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

#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace elastic
{
    using node_id = std::uint32_t;

    struct point
    {
        double x = 0.0;
        double y = 0.0;
    };

    inline double distance(point a, point b) { return std::hypot(b.x - a.x, b.y - a.y); }

    // Dense: unit square with n nodes. Extended: side sqrt(n), unit node density.
    enum class geometry_mode
    {
        dense,
        extended
    };

    std::string_view to_string(geometry_mode mode);

    struct sd_pair
    {
        node_id source = 0;
        node_id destination = 0;
    };

    struct network_instance
    {
        std::size_t n = 0;
        geometry_mode mode = geometry_mode::dense;
        double side_length = 1.0;
        std::vector<point> nodes;
        std::vector<sd_pair> sd_pairs; // perfect matching, n/2 entries
        std::uint64_t seed = 0;

        std::size_t num_pairs() const { return sd_pairs.size(); }
    };

    struct cell_index
    {
        std::uint32_t row = 0; // from the y coordinate
        std::uint32_t col = 0; // from the x coordinate

        friend bool operator==(cell_index, cell_index) = default;
    };

    // Square tessellation of the network area. Also carries a bucket index of
    // the nodes of the instance it was built from.
    struct cell_grid
    {
        double side_length = 1.0;
        std::uint32_t cells_per_side = 1;
        double cell_side = 1.0;
        double cell_area = 1.0;
        double subregion_area = 1.0; // 2 log n / n, scaled by side_length^2

        std::vector<std::uint32_t> bucket_offsets; // size cells + 1
        std::vector<node_id> bucket_nodes;         // node ids sorted by cell, then id

        std::size_t num_cells() const { return std::size_t(cells_per_side) * cells_per_side; }

        // Points on a shared edge belong to the cell with the smaller index.
        cell_index cell_of(point p) const;
        std::uint32_t flat(cell_index c) const { return c.row * cells_per_side + c.col; }
        point center(cell_index c) const;

        // 3x3 spatial reuse color in {0..8}.
        static int color(cell_index c) { return int(c.row % 3) * 3 + int(c.col % 3); }

        std::span<const node_id> nodes_in(cell_index c) const;
    };

    // log2, the logarithm used throughout.
    inline double lg(double x) { return std::log2(x); }

    // Area of the smaller regions: 2 log n / n times the network area.
    double subregion_area(std::size_t n, double side_length);

    // Uniform placement and a random perfect matching into SD pairs.
    // Throws std::invalid_argument for odd n or n < 4.
    network_instance place_nodes(std::size_t n, geometry_mode mode, std::uint64_t seed);

    // cells_per_side = max(1, floor(side / sqrt(cell_area))); the effective area
    // (side / cells_per_side)^2 is stored back. Throws config_error when
    // cell_area is below the smaller-region area.
    cell_grid build_cell_grid(const network_instance &inst, double cell_area);

    // Grid of smaller regions (cells_per_side = max(1, floor(side / sqrt(2 log n / n * side^2)))).
    cell_grid build_subregion_grid(const network_instance &inst);

    // Tessellation at an arbitrary cell count, no occupancy constraint.
    cell_grid build_grid_with_count(const network_instance &inst, std::uint32_t cells_per_side);

    // True iff every smaller region holds at least one node.
    bool occupancy_check(const network_instance &inst, const cell_grid &grid);
}
