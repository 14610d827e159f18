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

#include "elastic/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "elastic/rng.hpp"

namespace elastic
{
    std::string_view to_string(tdma_grid g) { return g == tdma_grid::routing ? "routing" : "subregion"; }

    std::size_t active_pair_count(std::size_t n, double normalized_d_hop)
    {
        double m = std::round(normalized_d_hop * double(n) / lg(double(n)));
        return std::size_t(std::clamp(m, 1.0, double(n / 2)));
    }

    slot_schedule draw_schedule(std::size_t n, std::size_t M, std::size_t num_slots, std::uint64_t seed)
    {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("draw_schedule: n must be even");
        if (M == 0 || num_slots == 0)
            throw std::invalid_argument("draw_schedule: need M >= 1 and at least one slot");

        slot_schedule s;
        s.num_pairs = n / 2;
        s.num_slots = num_slots;
        s.clamped = M > s.num_pairs;
        s.active_per_slot = std::min(M, s.num_pairs);
        s.active.resize(num_slots * s.active_per_slot);
        s.tallies.assign(s.num_pairs, 0);

        // Partial Fisher-Yates on a persistent permutation: each prefix is a
        // uniform M-subset regardless of the permutation it starts from.
        std::vector<std::uint32_t> perm(s.num_pairs);
        std::iota(perm.begin(), perm.end(), 0u);
        rng gen(derive_seed(seed, 1));
        const std::size_t m = s.active_per_slot;
        for (std::size_t slot = 0; slot < num_slots; ++slot)
        {
            if (m < s.num_pairs)
                for (std::size_t i = 0; i < m; ++i)
                    std::swap(perm[i], perm[i + gen.below(s.num_pairs - i)]);
            auto out = s.active.begin() + std::ptrdiff_t(slot * m);
            std::copy_n(perm.begin(), m, out);
            std::sort(out, out + std::ptrdiff_t(m));
            for (std::size_t i = 0; i < m; ++i)
                ++s.tallies[perm[i]];
        }
        return s;
    }

    route_table build_route_table(std::span<const route_plan> routes, std::size_t num_nodes, const cell_grid &color_grid,
                                  const cell_grid &exclusion_grid, double tx_power)
    {
        route_table t;
        t.num_regions = exclusion_grid.num_cells();
        t.regions_per_side = exclusion_grid.cells_per_side;
        t.region_side = exclusion_grid.cell_side;
        t.num_nodes = num_nodes;
        t.offsets.reserve(routes.size() + 1);
        t.offsets.push_back(0);
        for (const auto &r : routes)
        {
            for (std::uint32_t l = 0; l < r.hops.size(); ++l)
            {
                const hop &h = r.hops[l];
                hop_entry e;
                e.pair = r.pair;
                e.index = l;
                e.tx = h.tx;
                e.rx = h.rx;
                e.tx_pos = h.tx_pos;
                e.rx_pos = h.rx_pos;
                auto [tb, rb] = steer(h.tx, h.tx_pos, h.rx, h.rx_pos);
                e.tx_azimuth = tb.azimuth;
                e.rx_azimuth = rb.azimuth;
                e.power = tx_power;
                e.region = exclusion_grid.flat(exclusion_grid.cell_of(h.tx_pos));
                e.rx_region = exclusion_grid.flat(exclusion_grid.cell_of(h.rx_pos));
                e.color = std::uint8_t(cell_grid::color(color_grid.cell_of(h.tx_pos)));
                t.hops.push_back(e);
            }
            t.offsets.push_back(std::uint32_t(t.hops.size()));
        }
        return t;
    }

    activator::activator(const route_table &table)
        : table_(&table), region_stamp_(table.num_regions * tdma_colors, 0),
          rx_stamp_(table.num_regions * tdma_colors, 0), node_stamp_(table.num_nodes * tdma_colors, 0)
    {
    }

    namespace
    {
        template <typename F>
        bool any_neighbour(std::uint32_t side, std::uint32_t region, F &&f)
        {
            const std::uint32_t row = region / side, col = region % side;
            for (std::uint32_t r = row ? row - 1 : 0; r <= std::min(row + 1, side - 1); ++r)
                for (std::uint32_t c = col ? col - 1 : 0; c <= std::min(col + 1, side - 1); ++c)
                    if (f(r * side + c))
                        return true;
            return false;
        }
    }

    bool activator::near_receiver(std::size_t base, std::uint32_t region, std::uint32_t stamp) const
    {
        return any_neighbour(table_->regions_per_side, region,
                             [&](std::uint32_t q) { return rx_stamp_[base + q] == stamp; });
    }

    bool activator::near_transmitter(std::size_t base, std::uint32_t region, std::uint32_t stamp) const
    {
        return any_neighbour(table_->regions_per_side, region,
                             [&](std::uint32_t q) { return region_stamp_[base + q] == stamp; });
    }

    bool activator::admit(const hop_entry &h, std::uint32_t stamp)
    {
        // One stamp stripe per color, so admissions in one sub-slot never erase another's.
        const std::size_t rbase = std::size_t(h.color) * table_->num_regions;
        const std::size_t nbase = std::size_t(h.color) * table_->num_nodes;
        auto &tx = node_stamp_[nbase + h.tx];
        auto &rx = node_stamp_[nbase + h.rx];
        if (region_stamp_[rbase + h.region] == stamp || tx == stamp || rx == stamp)
            return false;
        // Guard zone: no other link's transmitter in the 3x3 region block around a receiver.
        if (near_receiver(rbase, h.region, stamp) || near_transmitter(rbase, h.rx_region, stamp))
            return false;
        region_stamp_[rbase + h.region] = stamp;
        rx_stamp_[rbase + h.rx_region] = stamp;
        tx = rx = stamp;
        return true;
    }

    void activator::reset_stamps()
    {
        std::fill(region_stamp_.begin(), region_stamp_.end(), 0);
        std::fill(rx_stamp_.begin(), rx_stamp_.end(), 0);
        std::fill(node_stamp_.begin(), node_stamp_.end(), 0);
        stamp_ = 0;
    }

    namespace
    {
        transmitter to_transmitter(const hop_entry &h)
        {
            return transmitter{h.pair, h.index, h.tx_pos, h.rx_pos, boresight{h.tx, h.tx_azimuth},
                               boresight{h.rx, h.rx_azimuth}, h.power};
        }
    }

    std::array<active_transmitter_set, tdma_colors> activator::activate_frame(std::size_t slot,
                                                                             std::span<const std::uint32_t> active_pairs)
    {
        if (stamp_ > std::numeric_limits<std::uint32_t>::max() - 2 * tdma_colors)
            reset_stamps();
        const std::uint32_t base = stamp_ + 1;
        stamp_ += tdma_colors;

        std::array<active_transmitter_set, tdma_colors> sets;
        for (int c = 0; c < tdma_colors; ++c)
        {
            sets[c].slot = slot;
            sets[c].color = c;
        }
        for (std::uint32_t p : active_pairs)
            for (const hop_entry &h : table_->hops_of(p))
            {
                auto &set = sets[h.color];
                if (admit(h, base + h.color))
                    set.transmitters.push_back(to_transmitter(h));
                else
                    ++set.blocked;
            }
        return sets;
    }

    active_transmitter_set activator::activate(std::size_t slot, int color, std::span<const std::uint32_t> active_pairs)
    {
        if (stamp_ > std::numeric_limits<std::uint32_t>::max() - 2)
            reset_stamps();
        const std::uint32_t stamp = ++stamp_;
        active_transmitter_set set;
        set.slot = slot;
        set.color = color;
        for (std::uint32_t p : active_pairs)
            for (const hop_entry &h : table_->hops_of(p))
            {
                if (h.color != color)
                    continue;
                if (admit(h, stamp))
                    set.transmitters.push_back(to_transmitter(h));
                else
                    ++set.blocked;
            }
        return set;
    }
}
