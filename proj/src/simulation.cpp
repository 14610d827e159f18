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

#include "elastic/simulation.hpp"

#include <cmath>

namespace elastic
{
    void sinr_histogram::add(double sinr)
    {
        std::size_t bin;
        if (!(sinr > 0.0))
            bin = 0;
        else
        {
            double pos = (std::log10(sinr) - lo_decade) * bins_per_decade;
            if (pos < 0.0)
                bin = 0;
            else if (pos >= double(num_bins))
                bin = num_bins + 1;
            else
                bin = std::size_t(pos) + 1;
        }
        ++bins_[bin];
        ++total_;
    }

    double sinr_histogram::median() const
    {
        if (total_ == 0)
            return 0.0;
        std::uint64_t target = (total_ + 1) / 2, seen = 0;
        for (std::size_t b = 0; b < bins_.size(); ++b)
        {
            seen += bins_[b];
            if (seen >= target)
            {
                if (b == 0)
                    return std::pow(10.0, lo_decade);
                double mid = lo_decade + (double(b - 1) + 0.5) / bins_per_decade;
                return std::pow(10.0, mid);
            }
        }
        return std::pow(10.0, lo_decade + double(num_bins) / bins_per_decade);
    }

    void record_set(const active_transmitter_set &set, const route_table &table, const phy_params &params,
                    link_statistics &stats)
    {
        stats.blocked += set.blocked;
        if (set.transmitters.empty())
            return;
        for (const auto &rec : evaluate_set(set, params))
        {
            stats.hop_log_sums[table.offsets[rec.pair] + rec.hop] += rec.rate;
            stats.sum_inter += rec.inter;
            stats.sum_intra += rec.intra;
            stats.sinr.add(rec.sinr);
            ++stats.records;
        }
    }

    link_statistics simulate_links(const route_table &table, const slot_schedule &schedule, const phy_params &params)
    {
        link_statistics stats;
        stats.hop_log_sums.assign(table.hops.size(), 0.0);
        activator act(table);
        for (std::size_t s = 0; s < schedule.num_slots; ++s)
        {
            auto frame = act.activate_frame(s, schedule.active_set(s));
            for (const auto &set : frame)
                record_set(set, table, params, stats);
        }
        return stats;
    }

    std::vector<pair_rate> pair_rates(const route_table &table, std::span<const double> hop_log_sums,
                                      std::span<const std::uint64_t> activations, std::size_t num_slots)
    {
        std::vector<pair_rate> out(table.offsets.size() - 1);
        for (std::uint32_t p = 0; p + 1 < table.offsets.size(); ++p)
        {
            auto sums = hop_log_sums.subspan(table.offsets[p], table.offsets[p + 1] - table.offsets[p]);
            out[p] = per_pair_rate(sums, activations[p], num_slots);
        }
        return out;
    }
}
