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

#include "elastic/phy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "elastic/errors.hpp"

namespace elastic
{
    namespace
    {
        double path_loss(double r2, double alpha)
        {
            if (!(r2 > 0.0))
                throw degenerate_geometry("interference: transmitter and receiver coincide");
            return alpha == 4.0 ? 1.0 / (r2 * r2) : std::pow(r2, -0.5 * alpha);
        }

        double mainlobe_cos(const antenna_pattern &pattern)
        {
            return pattern.omnidirectional() ? -2.0 : std::cos(0.5 * pattern.theta);
        }

        // Gain product between interfering transmitter j and receiver i, both beams fixed.
        struct beam_geometry
        {
            double cos_half;
            double g_main;
            double g_side;

            double gain(const transmitter &j, const transmitter &i, double dx, double dy, double r) const
            {
                // (dx, dy) points from the receiver of i to the transmitter of j.
                double tu = std::cos(j.tx_beam.azimuth), tv = std::sin(j.tx_beam.azimuth);
                double ru = std::cos(i.rx_beam.azimuth), rv = std::sin(i.rx_beam.azimuth);
                bool tx_covers = -(tu * dx + tv * dy) >= cos_half * r;
                bool rx_covers = (ru * dx + rv * dy) >= cos_half * r;
                return (tx_covers ? g_main : g_side) * (rx_covers ? g_main : g_side);
            }
        };

        gain_category category_of(double g, const antenna_pattern &p)
        {
            if (g == p.g_main * p.g_main)
                return gain_category::main_main;
            if (g == p.g_main * p.g_side)
                return gain_category::main_side;
            return gain_category::side_side;
        }

        sinr_record finish(const transmitter &t, std::size_t slot, double signal, double intra, double inter, double noise)
        {
            sinr_record rec;
            rec.pair = t.pair;
            rec.hop = t.hop;
            rec.slot = slot;
            rec.signal = signal;
            rec.intra = intra;
            rec.inter = inter;
            rec.noise = noise;
            rec.sinr = signal / (noise + intra + inter);
            rec.rate = std::log2(1.0 + rec.sinr);
            return rec;
        }

        double desired_signal(const transmitter &t, const phy_params &params)
        {
            double dx = t.tx_pos.x - t.rx_pos.x, dy = t.tx_pos.y - t.rx_pos.y;
            return t.power * params.pattern.g_main * params.pattern.g_main * path_loss(dx * dx + dy * dy, params.alpha);
        }
    }

    double received_power(const steered_node &tx, const steered_node &rx, const antenna_pattern &pattern, double alpha,
                          double tx_power)
    {
        if (gain_between(tx, rx, pattern) != gain_category::main_main)
            throw std::logic_error("received_power: transmitter and receiver are not steered at each other");
        double r = distance(tx.position, rx.position);
        return tx_power * channel_power_gain(gain_category::main_main, pattern, r, alpha);
    }

    sinr_record sinr(std::size_t rx, const active_transmitter_set &active, const phy_params &params)
    {
        const auto &ts = active.transmitters;
        const transmitter &me = ts.at(rx);
        beam_geometry beams{mainlobe_cos(params.pattern), params.pattern.g_main, params.pattern.g_side};
        double intra = 0.0, inter = 0.0;
        for (std::size_t j = 0; j < ts.size(); ++j)
        {
            if (j == rx)
                continue;
            double dx = ts[j].tx_pos.x - me.rx_pos.x, dy = ts[j].tx_pos.y - me.rx_pos.y;
            double r2 = dx * dx + dy * dy;
            double p = ts[j].power * beams.gain(ts[j], me, dx, dy, std::sqrt(r2)) * path_loss(r2, params.alpha);
            (ts[j].pair == me.pair ? intra : inter) += p;
        }
        return finish(me, active.slot, desired_signal(me, params), intra, inter, params.noise);
    }

    std::vector<sinr_record> evaluate_set(const active_transmitter_set &active, const phy_params &params)
    {
        const auto &ts = active.transmitters;
        const std::size_t k = ts.size();
        std::vector<double> tx_x(k), tx_y(k), tu(k), tv(k), pw(k);
        std::vector<std::uint32_t> pair(k);
        for (std::size_t j = 0; j < k; ++j)
        {
            tx_x[j] = ts[j].tx_pos.x;
            tx_y[j] = ts[j].tx_pos.y;
            tu[j] = std::cos(ts[j].tx_beam.azimuth);
            tv[j] = std::sin(ts[j].tx_beam.azimuth);
            pw[j] = ts[j].power;
            pair[j] = ts[j].pair;
        }
        const double c = mainlobe_cos(params.pattern);
        const double gm = params.pattern.g_main, gs = params.pattern.g_side;
        const double half_alpha = 0.5 * params.alpha;
        const bool alpha4 = params.alpha == 4.0;

        std::vector<sinr_record> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
        {
            const double rx = ts[i].rx_pos.x, ry = ts[i].rx_pos.y;
            const double ru = std::cos(ts[i].rx_beam.azimuth), rv = std::sin(ts[i].rx_beam.azimuth);
            double intra = 0.0, inter = 0.0;
            for (std::size_t j = 0; j < k; ++j)
            {
                if (j == i)
                    continue;
                double dx = tx_x[j] - rx, dy = tx_y[j] - ry;
                double r2 = dx * dx + dy * dy;
                if (!(r2 > 0.0))
                    throw degenerate_geometry("evaluate_set: transmitter and receiver coincide");
                double r = std::sqrt(r2);
                double g = ((-(tu[j] * dx + tv[j] * dy) >= c * r) ? gm : gs) * (((ru * dx + rv * dy) >= c * r) ? gm : gs);
                double loss = alpha4 ? 1.0 / (r2 * r2) : std::pow(r2, -half_alpha);
                double p = pw[j] * g * loss;
                if (pair[j] == pair[i])
                    intra += p;
                else
                    inter += p;
            }
            out.push_back(finish(ts[i], active.slot, desired_signal(ts[i], params), intra, inter, params.noise));
        }
        return out;
    }

    interference_breakdown intra_inter_split(std::size_t rx, const active_transmitter_set &active,
                                             const phy_params &params)
    {
        const auto &ts = active.transmitters;
        const transmitter &me = ts.at(rx);
        beam_geometry beams{mainlobe_cos(params.pattern), params.pattern.g_main, params.pattern.g_side};
        interference_breakdown out;
        for (std::size_t j = 0; j < ts.size(); ++j)
        {
            if (j == rx)
                continue;
            double dx = ts[j].tx_pos.x - me.rx_pos.x, dy = ts[j].tx_pos.y - me.rx_pos.y;
            double r2 = dx * dx + dy * dy;
            double r = std::sqrt(r2);
            double g = beams.gain(ts[j], me, dx, dy, r);
            interferer f;
            f.index = j;
            f.pair = ts[j].pair;
            f.node = ts[j].tx_beam.node;
            f.distance = r;
            f.category = category_of(g, params.pattern);
            f.power = ts[j].power * g * path_loss(r2, params.alpha);
            f.same_pair = ts[j].pair == me.pair;
            (f.same_pair ? out.exact_intra : out.exact_inter) += f.power;
            out.interferers.push_back(f);
        }
        return out;
    }

    tier_bound_result tier_bound(std::size_t rx, const active_transmitter_set &active, const phy_params &params,
                                 const cell_grid &regions)
    {
        const auto &ts = active.transmitters;
        const transmitter &me = ts.at(rx);
        beam_geometry beams{mainlobe_cos(params.pattern), params.pattern.g_main, params.pattern.g_side};
        cell_index home = regions.cell_of(me.rx_pos);
        tier_bound_result out;
        for (std::size_t j = 0; j < ts.size(); ++j)
        {
            if (j == rx || ts[j].pair == me.pair)
                continue;
            double dx = ts[j].tx_pos.x - me.rx_pos.x, dy = ts[j].tx_pos.y - me.rx_pos.y;
            double r2 = dx * dx + dy * dy;
            double g = beams.gain(ts[j], me, dx, dy, std::sqrt(r2));
            double exact = ts[j].power * g * path_loss(r2, params.alpha);

            cell_index there = regions.cell_of(ts[j].tx_pos);
            long k = std::max(std::labs(long(there.row) - long(home.row)), std::labs(long(there.col) - long(home.col)));
            if (k <= 1)
            {
                out.near_exact += exact;
                continue;
            }
            double worst = double(k - 1) * regions.cell_side;
            out.bound += ts[j].power * g / std::pow(worst, params.alpha);
            out.far_exact += exact;
        }
        return out;
    }

    std::array<double, 3> gain_category_probabilities(double theta)
    {
        double q = std::min(theta, two_pi) / two_pi;
        return {q * q, 2.0 * q * (1.0 - q), (1.0 - q) * (1.0 - q)};
    }

    double expected_inter_interference(const antenna_pattern &pattern)
    {
        auto pr = gain_category_probabilities(pattern.theta);
        return pr[0] * pattern.g_main * pattern.g_main + pr[1] * pattern.g_main * pattern.g_side +
               pr[2] * pattern.g_side * pattern.g_side;
    }

    double tier_series(double alpha, std::size_t terms)
    {
        double s = 0.0;
        for (std::size_t t = terms; t >= 1; --t) // small terms first
            s += std::pow(double(t), 1.0 - alpha);
        return s;
    }

    pair_rate per_pair_rate(std::span<const double> hop_log_sums, std::uint64_t activations, std::size_t num_slots)
    {
        pair_rate r;
        if (activations == 0 || hop_log_sums.empty() || num_slots == 0)
            return r;
        r.scheduled = true;
        double lo = *std::min_element(hop_log_sums.begin(), hop_log_sums.end());
        double sum = 0.0;
        for (double v : hop_log_sums)
            sum += v;
        double norm = double(tdma_colors) * double(num_slots);
        r.min_hop = lo / norm;
        r.mean_hop = sum / double(hop_log_sums.size()) / norm;
        return r;
    }
}
