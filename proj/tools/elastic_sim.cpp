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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elastic/errors.hpp"
#include "elastic/experiment.hpp"

namespace
{
    using elastic::experiment_config;

    constexpr int exit_ok = 0;
    constexpr int exit_config = 1;
    constexpr int exit_failed = 2;

    experiment_config read_config(const std::string &path)
    {
        return path.empty() ? experiment_config{} : elastic::load_config(path);
    }

    void emit_csv(const experiment_config &cfg, const std::vector<elastic::throughput_sample> &samples)
    {
        if (cfg.output.empty())
        {
            elastic::write_csv(std::cout, samples);
            return;
        }
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out)
            throw elastic::config_error("cannot write " + cfg.output);
        elastic::write_csv(out, samples);
    }

    nlohmann::json sample_json(const elastic::throughput_sample &s)
    {
        return {{"n", s.n},
                {"seed", s.seed},
                {"theta", s.theta},
                {"regime", std::string(to_string(s.regime.which))},
                {"M", s.M},
                {"slots", s.slots},
                {"T_agg", s.T_agg},
                {"T_adhoc", s.T_adhoc},
                {"T_infra", s.T_infra},
                {"T_mean_hop", s.T_mean_hop},
                {"R_min", s.R_min},
                {"R_median", s.R_median},
                {"R_median_mean_hop", s.R_median_mean_hop},
                {"D", s.D},
                {"median_sinr", s.median_sinr},
                {"mean_inter_I", s.mean_inter},
                {"mean_intra_I", s.mean_intra},
                {"reseeds", s.reseeds},
                {"failed", s.failed},
                {"diagnostic", s.diagnostic},
                {"wall_clock", s.wall_clock}};
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Monte Carlo simulator for elastic routing with directional antennas"};
    app.require_subcommand(1);

    std::string config_path;
    unsigned threads = 0;
    std::string output;
    std::size_t n = 1024;
    std::uint64_t seed = 1;
    std::string summary_path;
    bool check = false;
    std::vector<double> thetas;

    auto *run = app.add_subcommand("run", "Simulate a single (n, seed) point");
    run->add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    run->add_option("-n,--nodes", n, "Node count");
    run->add_option("-s,--seed", seed, "Seed");

    auto *sweep = app.add_subcommand("sweep", "Simulate the n ladder over all seeds and fit the exponent");
    sweep->add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    sweep->add_option("-j,--threads", threads, "Worker threads (overrides the config)");
    sweep->add_option("-o,--output", output, "CSV path (overrides the config)");
    sweep->add_option("--summary", summary_path, "JSON summary path (default: stderr)");
    sweep->add_flag("--check", check, "Exit 2 when the fitted exponent misses the prediction");

    auto *regimes = app.add_subcommand("regimes", "Print regime boundaries and predicted exponents");
    regimes->add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);

    auto *validate = app.add_subcommand("validate", "Run the oracle suite");
    validate->add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);

    auto *delay = app.add_subcommand("delay-curve", "Median delay and throughput across beam widths at fixed n");
    delay->add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    delay->add_option("-n,--nodes", n, "Node count");
    delay->add_option("--thetas", thetas, "Beam widths in radians")->required();
    delay->add_option("-j,--threads", threads, "Worker threads (overrides the config)");
    delay->add_flag("--check", check, "Exit 2 unless delay falls and throughput rises with 1/theta");

    CLI11_PARSE(app, argc, argv);

    try
    {
        experiment_config cfg = read_config(config_path);
        if (threads)
            cfg.threads = threads;
        if (!output.empty())
            cfg.output = output;

        if (*run)
        {
            cfg.n_ladder = {n};
            auto s = elastic::run_point(cfg, n, seed);
            elastic::write_csv(std::cout, {s});
            std::cerr << sample_json(s).dump(2) << '\n';
            return s.failed ? exit_failed : exit_ok;
        }
        if (*sweep)
        {
            cfg.check();
            auto samples = elastic::run_sweep(cfg);
            emit_csv(cfg, samples);
            nlohmann::json summary{{"config", elastic::config_to_json(cfg)}};
            std::size_t failed = 0;
            for (const auto &s : samples)
                failed += s.failed;
            summary["points"] = samples.size();
            summary["failed_points"] = failed;
            bool ok = failed == 0;
            try
            {
                auto fit = elastic::fit_sweep(cfg, samples);
                summary["fit"] = elastic::fit_to_json(fit);
                ok = ok && fit.passed;
                auto other = cfg;
                other.fit_statistic = cfg.fit_statistic == elastic::fit_rate::min_hop ? elastic::fit_rate::mean_hop
                                                                                      : elastic::fit_rate::min_hop;
                summary["fit_" + std::string(to_string(other.fit_statistic))] =
                    elastic::fit_to_json(elastic::fit_sweep(other, samples));
            }
            catch (const std::invalid_argument &e)
            {
                summary["fit"] = nullptr;
                summary["fit_error"] = e.what();
                ok = false;
            }
            if (summary_path.empty())
                std::cerr << summary.dump(2) << '\n';
            else
                std::ofstream(summary_path) << summary.dump(2) << '\n';
            return check && !ok ? exit_failed : exit_ok;
        }
        if (*regimes)
        {
            cfg.check();
            elastic::write_regime_table(std::cout, cfg);
            return exit_ok;
        }
        if (*validate)
        {
            cfg.check(false);
            auto report = elastic::validate(cfg);
            for (const auto &c : report.checks)
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
            return report.passed() ? exit_ok : exit_failed;
        }
        if (*delay)
        {
            std::vector<elastic::throughput_sample> samples;
            for (double t : thetas)
            {
                experiment_config point = cfg;
                point.theta = {false, t};
                point.n_ladder = {n};
                auto part = elastic::run_sweep(point);
                samples.insert(samples.end(), part.begin(), part.end());
            }
            const auto curve = elastic::delay_throughput_curve(samples, cfg.fit_statistic);
            std::cout << "inverse_theta,D,T\n" << std::setprecision(10);
            for (const auto &p : curve)
                std::cout << p.inverse_theta << ',' << p.D << ',' << p.T << '\n';
            const bool monotone = elastic::is_tradeoff_monotone(curve);
            std::cerr << (monotone ? "monotone" : "not monotone") << '\n';
            return check && !monotone ? exit_failed : exit_ok;
        }
    }
    catch (const elastic::config_error &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_ok;
}
