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

#include "elastic/phy.hpp"
#include "elastic/scheduling.hpp"

namespace elastic
{
    // Log-domain SINR histogram (1/1000 decade bins) giving a deterministic median.
    class sinr_histogram
    {
    public:
        void add(double sinr);
        double median() const;
        std::uint64_t count() const { return total_; }

    private:
        static constexpr double lo_decade = -12.0;
        static constexpr double bins_per_decade = 1000.0;
        static constexpr std::size_t num_bins = 30000;
        std::vector<std::uint64_t> bins_ = std::vector<std::uint64_t>(num_bins + 2, 0);
        std::uint64_t total_ = 0;
    };

    struct link_statistics
    {
        std::vector<double> hop_log_sums; // per route_table hop
        std::uint64_t records = 0;
        std::uint64_t blocked = 0;
        double sum_inter = 0.0;
        double sum_intra = 0.0;
        sinr_histogram sinr;

        double mean_inter() const { return records ? sum_inter / double(records) : 0.0; }
        double mean_intra() const { return records ? sum_intra / double(records) : 0.0; }
    };

    // Evaluates one active set and adds its records to `stats`.
    void record_set(const active_transmitter_set &set, const route_table &table, const phy_params &params,
                    link_statistics &stats);

    // Runs every slot of `schedule` over the routes in `table`, accumulating
    // log2(1 + SINR) per hop in slot order.
    link_statistics simulate_links(const route_table &table, const slot_schedule &schedule, const phy_params &params);

    // Per-pair rates from per-hop sums; `activations` holds T_p.
    std::vector<pair_rate> pair_rates(const route_table &table, std::span<const double> hop_log_sums,
                                      std::span<const std::uint64_t> activations, std::size_t num_slots);
}
