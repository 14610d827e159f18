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


// Acceptance suite. Usage: acceptance [criterion ids...]; no ids runs all.
// Prints one PASS/FAIL line per criterion and exits 2 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "elastic/antenna.hpp"
#include "elastic/experiment.hpp"
#include "elastic/phy.hpp"
#include "elastic/scheduling.hpp"

using namespace elastic;

namespace
{
    struct outcome
    {
        bool passed = false;
        std::string detail;
    };

    std::string fmt(double v)
    {
        std::ostringstream os;
        os.precision(4);
        os << v;
        return os.str();
    }

    unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

    double median(std::vector<double> v)
    {
        std::sort(v.begin(), v.end());
        const std::size_t m = v.size() / 2;
        return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
    }

    double ols_slope(const std::vector<double> &x, const std::vector<double> &y)
    {
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            mx += x[i];
            my += y[i];
        }
        mx /= double(x.size());
        my /= double(y.size());
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            sxy += (x[i] - mx) * (y[i] - my);
            sxx += (x[i] - mx) * (x[i] - mx);
        }
        return sxy / sxx;
    }

    // Per-n values of a sample field, in ladder order.
    std::map<std::size_t, std::vector<double>> by_n(const std::vector<throughput_sample> &samples,
                                                    double throughput_sample::*field)
    {
        std::map<std::size_t, std::vector<double>> out;
        for (const auto &s : samples)
            if (!s.failed)
                out[s.n].push_back(s.*field);
        return out;
    }

    experiment_config ladder_config(experiment_mode mode, theta_spec theta)
    {
        experiment_config c;
        c.mode = mode;
        c.theta = theta;
        c.threads = workers();
        return c;
    }

    // Ladders are simulated once and shared between criteria.
    class ladders
    {
    public:
        const std::vector<throughput_sample> &get(const std::string &name, const experiment_config &cfg)
        {
            auto it = cache_.find(name);
            if (it == cache_.end())
                it = cache_.emplace(name, run_sweep(cfg)).first;
            return it->second;
        }

    private:
        std::map<std::string, std::vector<throughput_sample>> cache_;
    };

    experiment_config regime_i_config() { return ladder_config(experiment_mode::dense, {true, 0.5}); }

    std::string fit_detail(const scaling_fit &f)
    {
        return "exponent " + fmt(f.exponent) + " (raw " + fmt(f.raw_exponent) + ", kappa " + fmt(f.kappa) +
               ", CI [" + fmt(f.ci_low) + ", " + fmt(f.ci_high) + "]) vs " + fmt(f.theoretical) + " +- " +
               fmt(f.tolerance) + (f.diagnostic.empty() ? "" : "; " + f.diagnostic);
    }

    std::string failed_points(const std::vector<throughput_sample> &samples)
    {
        std::size_t failed = 0;
        for (const auto &s : samples)
            failed += s.failed;
        return failed ? "; " + std::to_string(failed) + " failed points" : "";
    }

    outcome gain_conservation()
    {
        std::mt19937_64 eng(101);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const double theta = two_pi * std::max(u(eng), 1e-9);
            const double q = theta / two_pi;
            const double rho = std::min(1.0, q + (1.0 - q) * std::max(u(eng), 1e-9));
            const auto pat = derive_gains(theta, rho);
            const double r = q * pat.g_main + (1.0 - q) * pat.g_side - 1.0;
            worst = std::max(worst, std::abs(r));
        }
        return {worst < 1e-12, "max residual " + fmt(worst) + " over 1000 (theta, rho) pairs"};
    }

    outcome category_law()
    {
        std::mt19937_64 eng(202);
        std::uniform_real_distribution<double> az(0.0, two_pi);
        const std::size_t samples = 100000;
        double worst_z = 0.0;
        for (double theta : {std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi, 1.5 * std::numbers::pi})
        {
            const auto pat = derive_gains(theta, 0.9);
            std::array<std::size_t, 3> hits{};
            for (std::size_t i = 0; i < samples; ++i)
            {
                const steered_node a{{0, az(eng)}, {0.3, 0.4}};
                const steered_node b{{1, az(eng)}, {0.7, 0.1}};
                ++hits[std::size_t(gain_between(a, b, pat))];
            }
            const double q = theta / two_pi;
            const double expect[3] = {q * q, 2.0 * q * (1.0 - q), (1.0 - q) * (1.0 - q)};
            for (int k = 0; k < 3; ++k)
            {
                const double sigma = std::sqrt(expect[k] * (1.0 - expect[k]) / double(samples));
                worst_z = std::max(worst_z, std::abs(double(hits[k]) / double(samples) - expect[k]) / sigma);
            }
        }
        return {worst_z <= 3.0, "largest deviation " + fmt(worst_z) + " sigma over 4 beam widths, 1e5 samples each"};
    }

    outcome typicality()
    {
        const std::size_t n = 1024, M = 64, S = 100000;
        const double bound = 2.0 * double(M) / double(n) - 1.0 / double(n);
        int good = 0;
        double worst = 1.0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed)
        {
            const auto sched = draw_schedule(n, M, S, seed);
            const auto lowest = *std::min_element(sched.tallies.begin(), sched.tallies.end());
            const double frac = double(lowest) / double(S);
            worst = std::min(worst, frac);
            good += frac >= bound;
        }
        return {good >= 96, std::to_string(good) + "/100 seeds meet min T_p/S >= " + fmt(bound) +
                                " (worst " + fmt(worst) + ", need 96)"};
    }

    outcome interference_bounded(ladders &cache)
    {
        const auto &samples = cache.get("regime_i", regime_i_config());
        const auto inter = by_n(samples, &throughput_sample::mean_inter);
        std::vector<double> x, y;
        double base = 0.0;
        std::string series;
        for (const auto &[n, v] : inter)
        {
            double mean = 0.0;
            for (double t : v)
                mean += t;
            mean /= double(v.size());
            if (x.empty())
                base = mean;
            x.push_back(std::log2(double(n)));
            y.push_back(mean / base);
            series += (series.empty() ? "" : " ") + fmt(mean);
        }
        const double slope = x.size() >= 2 ? ols_slope(x, y) : 0.0;
        const double tail = std::abs(tier_series(4.0, 1000) - tier_series(4.0, 100));
        const bool ok = x.size() == 4 && std::abs(slope) < 0.05 && tail < 1e-4;
        return {ok, "mean inter I [" + series + "], normalized slope " + fmt(slope) + "; |S_1000 - S_100| = " +
                        fmt(tail) + ", S_1000 = " + fmt(tier_series(4.0, 1000)) + failed_points(samples)};
    }

    outcome sinr_constancy(ladders &cache)
    {
        const auto &samples = cache.get("regime_i", regime_i_config());
        std::vector<double> med;
        std::string series;
        for (const auto &[n, v] : by_n(samples, &throughput_sample::median_sinr))
        {
            med.push_back(median(v));
            series += (series.empty() ? "" : " ") + fmt(med.back());
        }
        const auto [lo, hi] = std::minmax_element(med.begin(), med.end());
        const double ratio = *hi / *lo;
        return {med.size() == 4 && ratio < 4.0, "median SINR [" + series + "], max/min " + fmt(ratio)};
    }

    outcome regime_i_slope(ladders &cache)
    {
        const auto cfg = regime_i_config();
        const auto &samples = cache.get("regime_i", cfg);
        const auto fit = fit_sweep(cfg, samples);
        return {fit.passed && std::abs(fit.theoretical - 0.75) < 1e-12, fit_detail(fit) + failed_points(samples)};
    }

    outcome regime_ii(ladders &cache)
    {
        // theta = 2pi / n sits below the single-hop threshold at every ladder point.
        const auto cfg = ladder_config(experiment_mode::dense, {true, 1.0});
        const auto &samples = cache.get("regime_ii", cfg);
        bool single_hop = true, labelled = true;
        for (const auto &s : samples)
        {
            single_hop = single_hop && !s.failed && s.D == 1.0;
            labelled = labelled && s.regime.which == regime::regime_ii;
        }
        const auto fit = fit_sweep(cfg, samples, 0.1);
        const bool ok = single_hop && labelled && std::abs(fit.exponent - 1.0) <= 0.1;
        return {ok, std::string(single_hop ? "D = 1 at every point" : "D != 1 somewhere") +
                        (labelled ? "" : ", regime label mismatch") + "; " + fit_detail(fit)};
    }

    outcome omnidirectional(ladders &cache)
    {
        const auto cfg = ladder_config(experiment_mode::dense, {false, two_pi});
        const auto &samples = cache.get("omni", cfg);
        const auto fit = fit_sweep(cfg, samples);
        return {fit.passed && std::abs(fit.theoretical - 0.5) < 1e-12, fit_detail(fit) + failed_points(samples)};
    }

    outcome hybrid_regime_iii(ladders &cache)
    {
        auto cfg = ladder_config(experiment_mode::hybrid_dense, {false, two_pi});
        cfg.gamma = 0.75;
        cfg.slots = 2000;
        const auto &samples = cache.get("hybrid", cfg);
        bool infra = true;
        double worst = std::numeric_limits<double>::infinity();
        for (const auto &s : samples)
        {
            infra = infra && !s.failed && s.T_infra >= s.T_adhoc;
            if (s.T_adhoc > 0.0)
                worst = std::min(worst, s.T_infra / s.T_adhoc);
        }
        const auto fit = fit_sweep(cfg, samples);
        return {fit.passed && infra && std::abs(fit.theoretical - 0.75) < 1e-12, fit_detail(fit) + "; min T_infra/T_adhoc " + fmt(worst) + failed_points(samples)};
    }

    outcome mode_invariance(ladders &cache)
    {
        const auto dense_cfg = regime_i_config();
        const auto dense = fit_sweep(dense_cfg, cache.get("regime_i", dense_cfg));
        const auto ext_cfg = ladder_config(experiment_mode::extended, {true, 0.5});
        const auto &samples = cache.get("extended", ext_cfg);
        const auto ext = fit_sweep(ext_cfg, samples);
        const double gap = std::abs(ext.exponent - dense.exponent);
        return {gap <= 0.15, "extended " + fmt(ext.exponent) + " vs dense " + fmt(dense.exponent) + ", gap " +
                                 fmt(gap) + failed_points(samples)};
    }

    outcome delay_tradeoff()
    {
        const std::size_t n = 16384;
        std::vector<throughput_sample> samples;
        for (double theta : {two_pi, std::numbers::pi / 4, two_pi / 64, two_pi / 512, two_pi / 16384})
        {
            auto cfg = ladder_config(experiment_mode::dense, {false, theta});
            cfg.n_ladder = {n};
            auto part = run_sweep(cfg);
            samples.insert(samples.end(), part.begin(), part.end());
        }
        const auto curve = delay_throughput_curve(samples);
        std::string pts;
        for (const auto &p : curve)
            pts += (pts.empty() ? "" : " ") + std::string("(") + fmt(p.inverse_theta) + ": D " + fmt(p.D) + ", T " +
                   fmt(p.T) + ")";
        return {curve.size() == 5 && is_tradeoff_monotone(curve), pts};
    }

    // Naive recomputation: explicit angle differences wrapped with fmod.
    double naive_sinr(std::size_t rx, const active_transmitter_set &set, const antenna_pattern &pat, double alpha,
                      double noise)
    {
        auto covers = [&](point from, double azimuth, point to)
        {
            if (pat.theta >= two_pi)
                return true;
            double off = std::fmod(std::atan2(to.y - from.y, to.x - from.x) - azimuth, two_pi);
            if (off > std::numbers::pi)
                off -= two_pi;
            if (off < -std::numbers::pi)
                off += two_pi;
            return std::abs(off) <= pat.theta / 2.0;
        };
        const auto &me = set.transmitters[rx];
        double total = 0.0;
        for (std::size_t j = 0; j < set.transmitters.size(); ++j)
            if (j != rx)
            {
                const auto &o = set.transmitters[j];
                const double g = (covers(o.tx_pos, o.tx_beam.azimuth, me.rx_pos) ? pat.g_main : pat.g_side) *
                                 (covers(me.rx_pos, me.rx_beam.azimuth, o.tx_pos) ? pat.g_main : pat.g_side);
                total += o.power * g / std::pow(std::hypot(o.tx_pos.x - me.rx_pos.x, o.tx_pos.y - me.rx_pos.y), alpha);
            }
        const double signal =
            me.power * pat.g_main * pat.g_main / std::pow(std::hypot(me.rx_pos.x - me.tx_pos.x, me.rx_pos.y - me.tx_pos.y), alpha);
        return signal / (noise + total);
    }

    outcome brute_force()
    {
        std::mt19937_64 eng(303);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const auto pat = derive_gains(1.0, 0.9);
        const phy_params phy{pat, 4.0, 1.0};
        double worst = 0.0;
        std::size_t receivers = 0;
        for (int inst = 0; inst < 50; ++inst)
        {
            const std::size_t n = 4 + 2 * std::size_t(u(eng) * 7.0);
            active_transmitter_set set;
            for (std::size_t k = 0; k + 1 < n; k += 2)
            {
                const point a{u(eng), u(eng)}, b{u(eng), u(eng)};
                auto [tb, rb] = steer(node_id(k), a, node_id(k + 1), b);
                set.transmitters.push_back({std::uint32_t(k / 4), std::uint32_t((k / 2) % 2), a, b, tb, rb, 10.0 * u(eng) + 0.1});
            }
            for (std::size_t i = 0; i < set.transmitters.size(); ++i, ++receivers)
            {
                const double ref = naive_sinr(i, set, pat, 4.0, 1.0);
                worst = std::max(worst, std::abs(sinr(i, set, phy).sinr - ref) / ref);
            }
        }
        return {worst <= 1e-12, "max relative error " + fmt(worst) + " over " + std::to_string(receivers) +
                                    " receivers in 50 instances"};
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    outcome determinism(const std::string &cli)
    {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / ("elastic-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        {
            std::ofstream cfg(dir / "config.json");
            cfg << R"({"n_ladder": [1024, 4096], "theta_spec": {"exponent": 0.5}, "slots": 500, "seeds": [1, 2, 3]})";
        }
        auto sweep = [&](int threads, const std::string &name)
        {
            const std::string cmd = cli + " sweep -c " + (dir / "config.json").string() + " -j " +
                                    std::to_string(threads) + " -o " + (dir / name).string() + " --summary " +
                                    (dir / (name + ".json")).string();
            return std::system(cmd.c_str()) == 0;
        };
        const bool ran = sweep(4, "a.csv") && sweep(4, "b.csv") && sweep(1, "c.csv") && sweep(1, "d.csv");
        const std::string a = slurp(dir / "a.csv");
        const bool same = ran && !a.empty() && a == slurp(dir / "b.csv") && a == slurp(dir / "c.csv") &&
                          a == slurp(dir / "d.csv");
        fs::remove_all(dir);
        return {same, ran ? (same ? "byte-identical CSV across two runs each with 4 and 1 threads (" +
                                        std::to_string(a.size()) + " bytes)"
                                  : "CSV differs between runs")
                          : "sweep command failed"};
    }
}

int main(int argc, char **argv)
{
    std::string cli = ELASTIC_SIM_PATH;
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i)
    {
        const std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc)
            cli = argv[++i];
        else
            wanted.insert(std::stoi(a));
    }

    ladders cache;
    const std::vector<std::pair<const char *, std::function<outcome()>>> criteria{
        {"gain conservation", gain_conservation},
        {"gain-category law", category_law},
        {"typicality", typicality},
        {"interference boundedness", [&] { return interference_bounded(cache); }},
        {"regime I SINR constancy", [&] { return sinr_constancy(cache); }},
        {"regime I slope", [&] { return regime_i_slope(cache); }},
        {"regime II single hop and slope", [&] { return regime_ii(cache); }},
        {"omnidirectional baseline", [&] { return omnidirectional(cache); }},
        {"hybrid regime III", [&] { return hybrid_regime_iii(cache); }},
        {"extended mode invariance", [&] { return mode_invariance(cache); }},
        {"delay-throughput monotonicity", delay_tradeoff},
        {"brute-force SINR oracle", brute_force},
        {"determinism", [&] { return determinism(cli); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        const int id = int(i) + 1;
        if (!wanted.empty() && !wanted.count(id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.passed;
        std::printf("criterion %2d %s %s: %s (%.1f s)\n", id, o.passed ? "[PASS]" : "[FAIL]", criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 2;
}
