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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "elastic/geometry.hpp"
#include "elastic/routing.hpp"
#include "elastic/scheduling.hpp"

namespace elastic
{
    enum class experiment_mode
    {
        dense,
        extended,
        hybrid_dense,
        hybrid_extended
    };

    std::string_view to_string(experiment_mode m);
    geometry_mode geometry_of(experiment_mode m);
    bool is_hybrid(experiment_mode m);

    // Beam width per ladder point: fixed radians, or theta = 2pi n^-exponent.
    // Either way clamped to [2pi n^-2, 2pi].
    struct theta_spec
    {
        bool is_exponent = true;
        double value = 0.0;

        double at(std::size_t n) const;
    };

    // Per-pair rate feeding the fit: min over hops (the lower-bound accounting)
    // or mean over hops.
    enum class fit_rate
    {
        min_hop,
        mean_hop
    };

    std::string_view to_string(fit_rate r);

    struct experiment_config
    {
        experiment_mode mode = experiment_mode::dense;
        std::vector<std::size_t> n_ladder{1024, 4096, 16384, 65536};
        theta_spec theta;
        double alpha = 4.0;
        double gamma = 0.0;
        double rho = 0.9;
        double power = 10.0; // P
        double noise = 1.0;  // N0
        std::size_t slots = 10000;
        // When > 0, S = ceil(slots_per_pair * n / (2 M)) so each pair expects
        // this many activations regardless of n; `slots` is then ignored.
        double slots_per_pair = 0.0;
        std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
        std::optional<std::size_t> m_override;
        tdma_grid tdma = tdma_grid::routing;
        bool infra_single_hop = false;
        std::optional<double> log_correction; // kappa of the corrected fit
        fit_rate fit_statistic = fit_rate::mean_hop;
        std::string output;                   // CSV path, empty = stdout
        unsigned threads = 1;

        // Throws config_error on invalid ranges. Validation runs may relax alpha > 2
        // so the oracle suite can report the divergent tier series.
        void check(bool require_path_loss = true) const;
    };

    // Field-for-field JSON mapping; unknown keys are a config_error. Applies check(false).
    experiment_config config_from_json(const nlohmann::json &j);
    nlohmann::json config_to_json(const experiment_config &c);
    experiment_config load_config(const std::string &path);

    struct throughput_sample
    {
        experiment_mode mode = experiment_mode::dense;
        std::size_t n = 0;
        double theta = 0.0;
        double alpha = 0.0;
        double gamma = 0.0;
        double rho = 0.0;
        std::uint64_t seed = 0;
        regime_label regime;
        double d_hop = 0.0;
        double h_bar = 0.0;
        std::size_t M = 0;
        std::size_t slots = 0;
        std::vector<double> per_pair_rates;
        double T_agg = 0.0;      // sum of per-pair rates (max of ad hoc and infra in hybrid modes)
        double T_adhoc = 0.0;
        double T_infra = 0.0;
        double T_mean_hop = 0.0; // aggregate with the mean-over-hops per-pair rate
        double R_min = 0.0;
        double R_median = 0.0;
        double R_median_mean_hop = 0.0; // median over pairs of the mean-over-hops rate
        double D = 0.0;          // mean hop count
        double median_sinr = 0.0;
        double mean_inter = 0.0;
        double mean_intra = 0.0;
        std::size_t max_infra_lines = 0;
        bool schedule_clamped = false;
        int reseeds = 0;
        bool failed = false;
        std::string diagnostic;
        double wall_clock = 0.0; // seconds, not part of the CSV

        // (n/2) times the median per-pair rate, the throughput the fit and the
        // delay curve use; the median damps the short-route pairs that dominate
        // T_agg at small n.
        double fit_throughput(fit_rate r = fit_rate::mean_hop) const
        {
            return 0.5 * double(n) * (r == fit_rate::min_hop ? R_median : R_median_mean_hop);
        }
    };

    // place -> gains -> elastic params -> routes -> schedule -> SINR -> rates.
    // Routing-infeasible instances are re-seeded up to 3 times, then marked failed.
    throughput_sample run_point(const experiment_config &cfg, std::size_t n, std::uint64_t seed);

    // Every (n, seed) point in ladder-major order, run on cfg.threads workers.
    std::vector<throughput_sample> run_sweep(const experiment_config &cfg);

    inline constexpr std::string_view csv_header =
        "mode,n,theta,alpha,gamma,rho,seed,regime,d_hop,h_bar,M,T_agg,R_min,R_median,D,median_sinr,mean_inter_I";

    void write_csv(std::ostream &os, const std::vector<throughput_sample> &samples);

    struct scaling_fit
    {
        double exponent = 0.0;      // log-corrected slope
        double raw_exponent = 0.0;  // slope of log2 T vs log2 n, T = (n/2) R_median
        double kappa = 0.0;         // regress log2(T (log2 n)^kappa)
        double ci_low = 0.0;
        double ci_high = 0.0;
        double theoretical = 0.0;
        double tolerance = 0.15;
        bool passed = false;
        std::size_t points = 0;
        std::string diagnostic;
    };

    // Log correction matching M(n): 1/2 for regimes I and IV, 1 for II and V, 0 for III.
    double default_log_correction(regime r);

    // OLS on (log2 n, log2 median-over-seeds fit_throughput()). Throws std::invalid_argument with
    // fewer than 4 ladder points or 5 seeds per point.
    scaling_fit fit_scaling(const std::vector<throughput_sample> &samples, double kappa, double theoretical,
                            double tolerance, fit_rate statistic = fit_rate::mean_hop);

    // Fit with the config's kappa (or the regime default) and theoretical exponent.
    scaling_fit fit_sweep(const experiment_config &cfg, const std::vector<throughput_sample> &samples,
                          double tolerance = 0.15);

    nlohmann::json fit_to_json(const scaling_fit &f);

    struct delay_point
    {
        double inverse_theta = 0.0;
        double D = 0.0;
        double T = 0.0;
    };

    // Median D and T per beam width, ordered by increasing theta^-1.
    std::vector<delay_point> delay_throughput_curve(const std::vector<throughput_sample> &samples,
                                                    fit_rate statistic = fit_rate::mean_hop);

    bool is_tradeoff_monotone(const std::vector<delay_point> &curve);

    struct check_result
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    struct validation_report
    {
        std::vector<check_result> checks;
        bool passed() const;
    };

    // Oracle suite: gain conservation, category law, typicality, tier series,
    // tier-bound dominance, brute-force SINR, E[X] Monte Carlo.
    validation_report validate(const experiment_config &cfg);

    // Analytic table of boundaries, regimes and predicted exponents (no simulation).
    void write_regime_table(std::ostream &os, const experiment_config &cfg);
}
