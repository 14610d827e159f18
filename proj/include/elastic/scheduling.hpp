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
#include <string_view>
#include <vector>

#include "elastic/antenna.hpp"
#include "elastic/geometry.hpp"
#include "elastic/routing.hpp"

namespace elastic
{
    inline constexpr int tdma_colors = 9;

    // Which tessellation supplies the 3x3 reuse colors. Spatial exclusion
    // (one transmitter per smaller region) applies in both cases.
    enum class tdma_grid
    {
        routing,
        subregion
    };

    std::string_view to_string(tdma_grid g);

    // M(n) = clamp(round(d n / log n), 1, n/2) with d = d_hop normalized by the
    // network side.
    std::size_t active_pair_count(std::size_t n, double normalized_d_hop);

    // Each slot is a frame of nine TDMA sub-slots, colors 0..8 in order.
    struct slot_schedule
    {
        std::size_t num_pairs = 0;
        std::size_t num_slots = 0;
        std::size_t active_per_slot = 0; // M after clamping
        bool clamped = false;            // requested M exceeded n/2
        std::vector<std::uint32_t> active;  // num_slots * M pair ids, ascending per slot
        std::vector<std::uint64_t> tallies; // T_p

        std::span<const std::uint32_t> active_set(std::size_t slot) const
        {
            return std::span<const std::uint32_t>(active).subspan(slot * active_per_slot, active_per_slot);
        }
    };

    // Uniform random M-subset of the n/2 pairs per slot. M > n/2 is clamped and flagged.
    // Throws std::invalid_argument for M == 0, S == 0 or odd n.
    slot_schedule draw_schedule(std::size_t n, std::size_t M, std::size_t num_slots, std::uint64_t seed);

    // Routes flattened with the per-hop data activation needs.
    struct hop_entry
    {
        std::uint32_t pair = 0;
        std::uint32_t index = 0; // hop index within the pair
        node_id tx = 0;
        node_id rx = 0;
        point tx_pos;
        point rx_pos;
        double tx_azimuth = 0.0;
        double rx_azimuth = 0.0;
        double power = 0.0;
        std::uint32_t region = 0;    // smaller region holding tx
        std::uint32_t rx_region = 0; // smaller region holding rx
        std::uint8_t color = 0;
    };

    struct route_table
    {
        std::vector<std::uint32_t> offsets; // per pair, size pairs + 1
        std::vector<hop_entry> hops;
        std::size_t num_regions = 0;
        std::uint32_t regions_per_side = 1;
        double region_side = 1.0;
        std::size_t num_nodes = 0; // node id space, BSs included

        std::span<const hop_entry> hops_of(std::uint32_t pair) const
        {
            return std::span<const hop_entry>(hops).subspan(offsets[pair], offsets[pair + 1] - offsets[pair]);
        }
    };

    // Colors come from `color_grid`, exclusion regions from `exclusion_grid`.
    route_table build_route_table(std::span<const route_plan> routes, std::size_t num_nodes, const cell_grid &color_grid,
                                  const cell_grid &exclusion_grid, double tx_power);

    struct transmitter
    {
        std::uint32_t pair = 0;
        std::uint32_t hop = 0;
        point tx_pos;
        point rx_pos;
        boresight tx_beam;
        boresight rx_beam;
        double power = 0.0;
    };

    struct active_transmitter_set
    {
        std::size_t slot = 0;
        int color = 0;
        std::vector<transmitter> transmitters;
        std::size_t blocked = 0; // hops of active pairs that lost a conflict
    };

    // Builds the active sets of the nine sub-slots of a slot. A hop fires in the
    // sub-slot of its color. Conflicts go to the lowest (pair id, hop index):
    // a second transmitter in a smaller region, a node asked to send or
    // receive twice, or a transmitter in the 3x3 region block around another
    // link's receiver.
    class activator
    {
    public:
        explicit activator(const route_table &table);

        active_transmitter_set activate(std::size_t slot, int color, std::span<const std::uint32_t> active_pairs);

        std::array<active_transmitter_set, tdma_colors> activate_frame(std::size_t slot,
                                                                      std::span<const std::uint32_t> active_pairs);

    private:
        bool admit(const hop_entry &h, std::uint32_t stamp);

        bool near_receiver(std::size_t base, std::uint32_t region, std::uint32_t stamp) const;
        bool near_transmitter(std::size_t base, std::uint32_t region, std::uint32_t stamp) const;
        void reset_stamps();

        const route_table *table_;
        std::vector<std::uint32_t> region_stamp_; // a transmitter occupies the region
        std::vector<std::uint32_t> rx_stamp_;     // a receiver occupies the region
        std::vector<std::uint32_t> node_stamp_;
        std::uint32_t stamp_ = 0;
    };
}
