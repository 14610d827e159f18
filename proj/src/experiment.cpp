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

#include "elastic/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "elastic/antenna.hpp"
#include "elastic/errors.hpp"
#include "elastic/hybrid.hpp"
#include "elastic/phy.hpp"
#include "elastic/rng.hpp"
#include "elastic/simulation.hpp"

namespace elastic
{
    std::string_view to_string(experiment_mode m)
    {
        switch (m)
        {
        case experiment_mode::dense:
            return "dense";
        case experiment_mode::extended:
            return "extended";
        case experiment_mode::hybrid_dense:
            return "hybrid-dense";
        case experiment_mode::hybrid_extended:
            return "hybrid-extended";
        }
        return "dense";
    }

    std::string_view to_string(fit_rate r) { return r == fit_rate::min_hop ? "min_hop" : "mean_hop"; }

    geometry_mode geometry_of(experiment_mode m)
    {
        return (m == experiment_mode::extended || m == experiment_mode::hybrid_extended) ? geometry_mode::extended
                                                                                          : geometry_mode::dense;
    }

    bool is_hybrid(experiment_mode m)
    {
        return m == experiment_mode::hybrid_dense || m == experiment_mode::hybrid_extended;
    }

    double theta_spec::at(std::size_t n) const
    {
        const double nn = double(n);
        const double t = is_exponent ? two_pi * std::pow(nn, -value) : value;
        return std::clamp(t, two_pi / (nn * nn), two_pi);
    }

    void experiment_config::check(bool require_path_loss) const
    {
        if (n_ladder.empty())
            throw config_error("n_ladder must not be empty");
        for (std::size_t i = 0; i < n_ladder.size(); ++i)
        {
            if (n_ladder[i] < 4 || n_ladder[i] % 2 != 0)
                throw config_error("n_ladder entries must be even and >= 4");
            if (i > 0 && n_ladder[i] <= n_ladder[i - 1])
                throw config_error("n_ladder must be strictly increasing");
        }
        if (theta.is_exponent ? !(theta.value >= 0.0 && std::isfinite(theta.value))
                              : !(theta.value > 0.0 && theta.value <= two_pi))
            throw config_error("theta_spec out of range");
        if (!(alpha > (require_path_loss ? 2.0 : 0.0)) || !std::isfinite(alpha))
            throw config_error(require_path_loss ? "alpha must exceed 2" : "alpha must be positive");
        if (!(gamma >= 0.0 && gamma < 1.0))
            throw config_error("gamma must lie in [0, 1)");
        if (is_hybrid(mode) && !(gamma > 0.0))
            throw config_error("hybrid modes need gamma > 0");
        if (!(rho > 0.0 && rho <= 1.0))
            throw config_error("rho must lie in (0, 1]");
        if (!(power > 0.0) || !(noise >= 0.0))
            throw config_error("P must be positive and N0 non-negative");
        if (slots == 0 && !(slots_per_pair > 0.0))
            throw config_error("slots must be positive");
        if (slots_per_pair < 0.0)
            throw config_error("slots_per_pair must be non-negative");
        if (seeds.empty())
            throw config_error("seeds must not be empty");
        if (m_override && *m_override == 0)
            throw config_error("M_override must be positive");
        if (threads == 0)
            throw config_error("threads must be positive");
        for (std::size_t n : n_ladder)
        {
            const double th = theta.at(n);
            if (th < two_pi && !(rho > th / two_pi))
                throw config_error("rho must exceed theta / 2pi at every ladder point");
        }
    }

    namespace
    {
        using nlohmann::json;

        experiment_mode parse_mode(const std::string &s)
        {
            for (auto m : {experiment_mode::dense, experiment_mode::extended, experiment_mode::hybrid_dense,
                           experiment_mode::hybrid_extended})
                if (to_string(m) == s)
                    return m;
            throw config_error("unknown mode: " + s);
        }

        template <typename T>
        T get_as(const json &j, const char *key)
        {
            try
            {
                return j.at(key).get<T>();
            }
            catch (const json::exception &e)
            {
                throw config_error(std::string("bad value for ") + key + ": " + e.what());
            }
        }
    }

    experiment_config config_from_json(const json &j)
    {
        if (!j.is_object())
            throw config_error("config must be a JSON object");
        experiment_config c;
        for (const auto &[key, value] : j.items())
        {
            if (key == "mode")
                c.mode = parse_mode(get_as<std::string>(j, "mode"));
            else if (key == "n_ladder")
                c.n_ladder = get_as<std::vector<std::size_t>>(j, "n_ladder");
            else if (key == "theta_spec")
            {
                if (!value.is_object() || value.size() != 1)
                    throw config_error("theta_spec must hold exactly one of exponent, radians");
                if (value.contains("exponent"))
                    c.theta = {true, get_as<double>(value, "exponent")};
                else if (value.contains("radians"))
                    c.theta = {false, get_as<double>(value, "radians")};
                else
                    throw config_error("theta_spec must hold exactly one of exponent, radians");
            }
            else if (key == "alpha")
                c.alpha = get_as<double>(j, "alpha");
            else if (key == "gamma")
                c.gamma = get_as<double>(j, "gamma");
            else if (key == "rho")
                c.rho = get_as<double>(j, "rho");
            else if (key == "P")
                c.power = get_as<double>(j, "P");
            else if (key == "N0")
                c.noise = get_as<double>(j, "N0");
            else if (key == "slots")
                c.slots = get_as<std::size_t>(j, "slots");
            else if (key == "slots_per_pair")
                c.slots_per_pair = get_as<double>(j, "slots_per_pair");
            else if (key == "seeds")
                c.seeds = get_as<std::vector<std::uint64_t>>(j, "seeds");
            else if (key == "M_override")
            {
                if (!value.is_null())
                    c.m_override = get_as<std::size_t>(j, "M_override");
            }
            else if (key == "tdma_grid")
            {
                const auto s = get_as<std::string>(j, "tdma_grid");
                if (s == "routing")
                    c.tdma = tdma_grid::routing;
                else if (s == "subregion")
                    c.tdma = tdma_grid::subregion;
                else
                    throw config_error("unknown tdma_grid: " + s);
            }
            else if (key == "infra_single_hop")
                c.infra_single_hop = get_as<bool>(j, "infra_single_hop");
            else if (key == "log_correction")
            {
                if (!value.is_null())
                    c.log_correction = get_as<double>(j, "log_correction");
            }
            else if (key == "fit_rate")
            {
                const auto v = get_as<std::string>(j, "fit_rate");
                if (v == "min_hop")
                    c.fit_statistic = fit_rate::min_hop;
                else if (v == "mean_hop")
                    c.fit_statistic = fit_rate::mean_hop;
                else
                    throw config_error("unknown fit_rate: " + v);
            }
            else if (key == "output")
                c.output = get_as<std::string>(j, "output");
            else if (key == "threads")
                c.threads = get_as<unsigned>(j, "threads");
            else
                throw config_error("unknown config key: " + key);
        }
        c.check(false);
        return c;
    }

    nlohmann::json config_to_json(const experiment_config &c)
    {
        json j;
        j["mode"] = std::string(to_string(c.mode));
        j["n_ladder"] = c.n_ladder;
        j["theta_spec"] = c.theta.is_exponent ? json{{"exponent", c.theta.value}} : json{{"radians", c.theta.value}};
        j["alpha"] = c.alpha;
        j["gamma"] = c.gamma;
        j["rho"] = c.rho;
        j["P"] = c.power;
        j["N0"] = c.noise;
        j["slots"] = c.slots;
        j["slots_per_pair"] = c.slots_per_pair;
        j["seeds"] = c.seeds;
        j["M_override"] = c.m_override ? json(*c.m_override) : json(nullptr);
        j["tdma_grid"] = std::string(to_string(c.tdma));
        j["infra_single_hop"] = c.infra_single_hop;
        j["log_correction"] = c.log_correction ? json(*c.log_correction) : json(nullptr);
        j["fit_rate"] = std::string(to_string(c.fit_statistic));
        j["output"] = c.output;
        j["threads"] = c.threads;
        return j;
    }

    experiment_config load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("cannot open config: " + path);
        json j;
        try
        {
            in >> j;
        }
        catch (const json::exception &e)
        {
            throw config_error(std::string("malformed config: ") + e.what());
        }
        return config_from_json(j);
    }

    namespace
    {
        double median_of(std::vector<double> v)
        {
            if (v.empty())
                return 0.0;
            std::sort(v.begin(), v.end());
            const std::size_t k = v.size() / 2;
            return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
        }

        std::size_t slots_for(const experiment_config &cfg, std::size_t n, std::size_t M)
        {
            if (cfg.slots_per_pair > 0.0)
                return std::max<std::size_t>(1, std::size_t(std::ceil(cfg.slots_per_pair * double(n) / (2.0 * double(M)))));
            return cfg.slots;
        }

        void fill_point(const experiment_config &cfg, std::size_t n, std::uint64_t instance_seed, throughput_sample &s)
        {
            const geometry_mode geo = geometry_of(cfg.mode);
            const network_instance inst = place_nodes(n, geo, instance_seed);
            const double theta = cfg.theta.at(n);
            const phy_params phy{derive_gains(theta, cfg.rho), cfg.alpha, cfg.noise};
            const elastic_params ep = compute_elastic_params(n, theta, cfg.alpha, geo, cfg.power);

            s.theta = theta;
            s.regime = is_hybrid(cfg.mode) ? classify_regime(n, theta, cfg.alpha, cfg.gamma) : ep.regime;
            s.d_hop = ep.d_hop;

            const cell_grid grid = build_cell_grid(inst, ep.cell_area);
            const cell_grid regions = build_subregion_grid(inst);
            const auto routes = build_all_routes(inst, grid);
            const route_table table = build_route_table(routes, n, cfg.tdma == tdma_grid::routing ? grid : regions,
                                                        regions, ep.tx_power);

            const double normalized_hop = ep.d_hop / inst.side_length;
            const std::size_t M = cfg.m_override ? *cfg.m_override : active_pair_count(n, normalized_hop);
            const std::size_t S = slots_for(cfg, n, M);
            const slot_schedule schedule = draw_schedule(n, M, S, instance_seed);
            s.M = schedule.active_per_slot;
            s.slots = S;
            s.schedule_clamped = schedule.clamped;
            s.h_bar = inst.side_length / grid.cell_side;

            const link_statistics stats = simulate_links(table, schedule, phy);
            const auto rates = pair_rates(table, stats.hop_log_sums, schedule.tallies, S);

            std::vector<double> adhoc(rates.size()), adhoc_mean(rates.size());
            double hops = 0.0, mean_hop_total = 0.0;
            for (std::size_t p = 0; p < rates.size(); ++p)
            {
                adhoc[p] = rates[p].min_hop;
                adhoc_mean[p] = rates[p].mean_hop;
                mean_hop_total += rates[p].mean_hop;
                hops += double(routes[p].hop_count());
            }
            s.D = hops / double(routes.size());
            s.T_mean_hop = mean_hop_total;
            s.median_sinr = stats.sinr.median();
            s.mean_inter = stats.mean_inter();
            s.mean_intra = stats.mean_intra();
            for (double r : adhoc)
                s.T_adhoc += r;

            s.per_pair_rates = adhoc;
            std::vector<double> mean_rates = adhoc_mean;
            if (is_hybrid(cfg.mode))
            {
                const bs_grid bs = place_bs(inst, cfg.gamma);
                const infra_hop ih = infra_hop_distance(n, theta, cfg.alpha, cfg.gamma, geo);
                const cell_grid igrid = build_infra_grid(inst, bs, ih);
                const bool single = cfg.infra_single_hop || s.regime.which == regime::regime_v;
                const auto iroutes = build_infra_routes(inst, bs, igrid, single);
                const double ipower = infra_tx_power(inst, bs, infra_config{theta, cfg.alpha, cfg.power, single});
                const infra_result ir = simulate_infra(inst, bs, iroutes, igrid, phy, ipower, S);
                s.T_infra = ir.aggregate;
                s.max_infra_lines = ir.max_lines_per_slot;
                const hybrid_result h = hybrid_throughput(ir.aggregate, s.T_adhoc);
                if (h.infra_wins)
                {
                    s.per_pair_rates = ir.rates;
                    mean_rates = ir.mean_hop_rates;
                    s.D = ir.mean_hops;
                }
            }

            s.T_agg = 0.0;
            for (double r : s.per_pair_rates)
                s.T_agg += r;
            s.R_min = *std::min_element(s.per_pair_rates.begin(), s.per_pair_rates.end());
            s.R_median = median_of(s.per_pair_rates);
            s.R_median_mean_hop = median_of(std::move(mean_rates));
        }
    }

    throughput_sample run_point(const experiment_config &cfg, std::size_t n, std::uint64_t seed)
    {
        cfg.check();
        const auto start = std::chrono::steady_clock::now();
        throughput_sample s;
        s.mode = cfg.mode;
        s.n = n;
        s.alpha = cfg.alpha;
        s.gamma = cfg.gamma;
        s.rho = cfg.rho;
        s.seed = seed;
        for (int attempt = 0; attempt <= 3; ++attempt)
        {
            const std::uint64_t instance_seed = attempt == 0 ? seed : derive_seed(seed, 100 + std::uint64_t(attempt));
            try
            {
                s.reseeds = attempt;
                fill_point(cfg, n, instance_seed, s);
                s.failed = false;
                s.diagnostic.clear();
                break;
            }
            catch (const routing_infeasible &e)
            {
                throughput_sample blank;
                blank.mode = s.mode;
                blank.n = n;
                blank.alpha = s.alpha;
                blank.gamma = s.gamma;
                blank.rho = s.rho;
                blank.seed = seed;
                s = std::move(blank);
                s.failed = true;
                s.reseeds = attempt;
                s.diagnostic = e.what();
            }
        }
        s.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return s;
    }

    std::vector<throughput_sample> run_sweep(const experiment_config &cfg)
    {
        std::vector<std::pair<std::size_t, std::uint64_t>> points;
        for (std::size_t n : cfg.n_ladder)
            for (std::uint64_t seed : cfg.seeds)
                points.emplace_back(n, seed);

        std::vector<throughput_sample> out(points.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&]
        {
            for (std::size_t i = next++; i < points.size(); i = next++)
            {
                try
                {
                    out[i] = run_point(cfg, points[i].first, points[i].second);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        };
        const unsigned workers = unsigned(std::min<std::size_t>(cfg.threads, points.size()));
        if (workers <= 1)
            worker();
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < workers; ++t)
                pool.emplace_back(worker);
        }
        if (error)
            std::rethrow_exception(error);
        return out;
    }

    void write_csv(std::ostream &os, const std::vector<throughput_sample> &samples)
    {
        os << csv_header << '\n';
        std::ostringstream line;
        line << std::setprecision(17);
        for (const auto &s : samples)
        {
            line.str("");
            line << to_string(s.mode) << ',' << s.n << ',' << s.theta << ',' << s.alpha << ',' << s.gamma << ','
                 << s.rho << ',' << s.seed << ',' << (s.failed ? std::string_view("failed") : to_string(s.regime.which))
                 << ',' << s.d_hop << ',' << s.h_bar << ',' << s.M << ',' << s.T_agg << ',' << s.R_min << ','
                 << s.R_median << ',' << s.D << ',' << s.median_sinr << ',' << s.mean_inter << '\n';
            os << line.str();
        }
    }

    double default_log_correction(regime r)
    {
        switch (r)
        {
        case regime::regime_i:
        case regime::regime_iv:
            return 0.5;
        case regime::regime_ii:
        case regime::regime_v:
            return 1.0;
        case regime::regime_iii:
            return 0.0;
        }
        return 0.0;
    }

    namespace
    {
        struct line_fit
        {
            double slope = 0.0;
            double intercept = 0.0;
            double slope_se = 0.0;
        };

        line_fit ols(const std::vector<double> &x, const std::vector<double> &y)
        {
            const double k = double(x.size());
            double mx = 0.0, my = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
            {
                mx += x[i];
                my += y[i];
            }
            mx /= k;
            my /= k;
            double sxx = 0.0, sxy = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
            {
                sxx += (x[i] - mx) * (x[i] - mx);
                sxy += (x[i] - mx) * (y[i] - my);
            }
            line_fit f;
            f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
            f.intercept = my - f.slope * mx;
            if (x.size() > 2 && sxx > 0.0)
            {
                double ssr = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i)
                {
                    const double r = y[i] - f.intercept - f.slope * x[i];
                    ssr += r * r;
                }
                f.slope_se = std::sqrt(ssr / (k - 2.0) / sxx);
            }
            return f;
        }
    }

    scaling_fit fit_scaling(const std::vector<throughput_sample> &samples, double kappa, double theoretical,
                            double tolerance, fit_rate statistic)
    {
        std::map<std::size_t, std::vector<double>> by_n;
        std::size_t failed = 0;
        for (const auto &s : samples)
        {
            if (s.failed)
                ++failed;
            else
                by_n[s.n].push_back(s.fit_throughput(statistic));
        }
        if (by_n.size() < 4)
            throw std::invalid_argument("fit_scaling: need at least 4 ladder points, got " + std::to_string(by_n.size()));
        for (const auto &[n, ts] : by_n)
            if (ts.size() < 5)
                throw std::invalid_argument("fit_scaling: need at least 5 seeds at n = " + std::to_string(n));

        scaling_fit f;
        f.kappa = kappa;
        f.theoretical = theoretical;
        f.tolerance = tolerance;
        f.points = by_n.size();

        std::vector<double> x, y_raw, y_corr, px, py;
        bool positive = true;
        for (const auto &[n, ts] : by_n)
        {
            const double ln = lg(double(n));
            const double med = median_of(ts);
            if (!(med > 0.0))
            {
                positive = false;
                break;
            }
            x.push_back(ln);
            y_raw.push_back(std::log2(med));
            y_corr.push_back(std::log2(med) + kappa * std::log2(ln));
            for (double t : ts)
                if (t > 0.0)
                {
                    px.push_back(ln);
                    py.push_back(std::log2(t) + kappa * std::log2(ln));
                }
        }
        if (!positive)
        {
            f.diagnostic = "non-positive median throughput; slope undefined";
            return f;
        }

        f.raw_exponent = ols(x, y_raw).slope;
        f.exponent = ols(x, y_corr).slope;
        const double half = 1.96 * ols(px, py).slope_se;
        f.ci_low = f.exponent - half;
        f.ci_high = f.exponent + half;
        f.passed = std::abs(f.exponent - theoretical) <= tolerance;

        const auto [lo, hi] = std::minmax_element(y_raw.begin(), y_raw.end());
        if (*hi - *lo == 0.0)
            f.diagnostic = "degenerate ladder: constant throughput";
        if (failed)
            f.diagnostic += (f.diagnostic.empty() ? "" : "; ") + std::to_string(failed) + " failed points excluded";
        return f;
    }

    scaling_fit fit_sweep(const experiment_config &cfg, const std::vector<throughput_sample> &samples,
                          double tolerance)
    {
        const throughput_sample *last = nullptr;
        for (const auto &s : samples)
            if (!s.failed && (!last || s.n > last->n))
                last = &s;
        if (!last)
            throw std::invalid_argument("fit_sweep: no successful samples");
        const double g = is_hybrid(cfg.mode) ? cfg.gamma : 0.0;
        const double theory = cfg.theta.is_exponent ? theoretical_exponent(cfg.theta.value, cfg.alpha, g)
                                                    : last->regime.theoretical_exponent;
        const double kappa = cfg.log_correction.value_or(default_log_correction(last->regime.which));
        return fit_scaling(samples, kappa, theory, tolerance, cfg.fit_statistic);
    }

    nlohmann::json fit_to_json(const scaling_fit &f)
    {
        return nlohmann::json{{"exponent", f.exponent},
                              {"raw_exponent", f.raw_exponent},
                              {"kappa", f.kappa},
                              {"ci", {f.ci_low, f.ci_high}},
                              {"theoretical", f.theoretical},
                              {"deviation", f.exponent - f.theoretical},
                              {"tolerance", f.tolerance},
                              {"passed", f.passed},
                              {"points", f.points},
                              {"diagnostic", f.diagnostic}};
    }

    std::vector<delay_point> delay_throughput_curve(const std::vector<throughput_sample> &samples, fit_rate statistic)
    {
        std::map<double, std::pair<std::vector<double>, std::vector<double>>> by_theta;
        for (const auto &s : samples)
            if (!s.failed)
            {
                by_theta[s.theta].first.push_back(s.D);
                by_theta[s.theta].second.push_back(s.fit_throughput(statistic));
            }
        std::vector<delay_point> out;
        for (auto it = by_theta.rbegin(); it != by_theta.rend(); ++it)
            out.push_back({1.0 / it->first, median_of(it->second.first), median_of(it->second.second)});
        return out;
    }

    bool is_tradeoff_monotone(const std::vector<delay_point> &curve)
    {
        for (std::size_t i = 1; i < curve.size(); ++i)
            if (curve[i].D > curve[i - 1].D || curve[i].T < curve[i - 1].T)
                return false;
        return true;
    }

    void write_regime_table(std::ostream &os, const experiment_config &cfg)
    {
        const bool hybrid = is_hybrid(cfg.mode);
        os << "n,theta,inverse_theta,single_hop_boundary,infra_boundary,regime,d_hop,h_bar,M,b,theoretical_exponent\n";
        os << std::setprecision(10);
        for (std::size_t n : cfg.n_ladder)
        {
            const double theta = cfg.theta.at(n);
            const auto label = hybrid ? classify_regime(n, theta, cfg.alpha, cfg.gamma)
                                      : classify_regime(n, theta, cfg.alpha);
            const geometry_mode geo = geometry_of(cfg.mode);
            const auto ep = compute_elastic_params(n, theta, cfg.alpha, geo, cfg.power);
            const double side = geo == geometry_mode::dense ? 1.0 : std::sqrt(double(n));
            const double theory = cfg.theta.is_exponent
                                      ? theoretical_exponent(cfg.theta.value, cfg.alpha, hybrid ? cfg.gamma : 0.0)
                                      : label.theoretical_exponent;
            os << n << ',' << theta << ',' << label.inverse_theta << ',' << label.boundary_value << ','
               << label.infra_boundary << ',' << to_string(label.which) << ',' << ep.d_hop << ',' << ep.h_bar << ','
               << active_pair_count(n, ep.d_hop / side) << ',' << (hybrid ? bs_count(n, cfg.gamma) : 0) << ',' << theory
               << '\n';
        }
    }

    bool validation_report::passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const check_result &c) { return c.passed; });
    }

    namespace
    {
        std::string fmt(double v)
        {
            std::ostringstream os;
            os << std::setprecision(6) << v;
            return os.str();
        }

        check_result check_gain_conservation()
        {
            rng g(derive_seed(7, 10));
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i)
            {
                const double theta = two_pi * (1e-6 + (1.0 - 2e-6) * g.uniform01());
                const double lo = theta / two_pi;
                const double rho = lo + (1.0 - lo) * (1e-9 + (1.0 - 1e-9) * g.uniform01());
                worst = std::max(worst, derive_gains(theta, rho).conservation_residual());
            }
            return {"gain_conservation", worst < 1e-12, "max residual " + fmt(worst)};
        }

        check_result check_category_law()
        {
            rng g(derive_seed(7, 11));
            const antenna_pattern probe{two_pi, 1.0, 1.0, 1.0};
            double worst_z = 0.0;
            bool ok = true;
            for (double theta : {std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi, 1.5 * std::numbers::pi})
            {
                antenna_pattern pat = probe;
                pat.theta = theta;
                const std::size_t samples = 100000;
                std::array<std::size_t, 3> count{};
                for (std::size_t i = 0; i < samples; ++i)
                {
                    const steered_node a{{0, two_pi * g.uniform01()}, {0.0, 0.0}};
                    const steered_node b{{1, two_pi * g.uniform01()}, {1.0, 0.0}};
                    ++count[std::size_t(gain_between(a, b, pat))];
                }
                const auto pr = gain_category_probabilities(theta);
                for (int c = 0; c < 3; ++c)
                {
                    const double mean = pr[c] * double(samples);
                    const double sd = std::sqrt(double(samples) * pr[c] * (1.0 - pr[c]));
                    const double z = std::abs(double(count[c]) - mean) / sd;
                    worst_z = std::max(worst_z, z);
                    ok = ok && z <= 3.0;
                }
            }
            return {"category_law", ok, "max |z| " + fmt(worst_z)};
        }

        check_result check_typicality()
        {
            const std::size_t n = 64, M = 4, S = n * n * n;
            std::size_t good = 0, runs = 10;
            double worst = 1.0;
            for (std::uint64_t seed = 1; seed <= runs; ++seed)
            {
                const auto sch = draw_schedule(n, M, S, seed);
                const auto lo = *std::min_element(sch.tallies.begin(), sch.tallies.end());
                const double frac = double(lo) / double(S);
                worst = std::min(worst, frac);
                good += frac >= 2.0 * double(M) / double(n) - 1.0 / double(n);
            }
            return {"typicality", good == runs,
                    std::to_string(good) + "/" + std::to_string(runs) + " seeds, worst min T_p/S " + fmt(worst)};
        }

        check_result check_tier_series(double alpha)
        {
            const double s100 = tier_series(alpha, 100), s1000 = tier_series(alpha, 1000);
            const double gap = std::abs(s1000 - s100);
            return {"tier_series", alpha > 2.0 && gap < 1e-4,
                    "alpha " + fmt(alpha) + ", |S1000 - S100| " + fmt(gap) + ", S1000 " + fmt(s1000)};
        }

        check_result check_tier_bound(const experiment_config &cfg)
        {
            const std::size_t n = cfg.n_ladder.front();
            const network_instance inst = place_nodes(n, geometry_of(cfg.mode), 1);
            const double theta = cfg.theta.at(n);
            const phy_params phy{derive_gains(theta, cfg.rho), cfg.alpha, cfg.noise};
            const auto ep = compute_elastic_params(n, theta, cfg.alpha, inst.mode, cfg.power);
            const cell_grid grid = build_cell_grid(inst, ep.cell_area);
            const cell_grid regions = build_subregion_grid(inst);
            const auto routes = build_all_routes(inst, grid);
            const auto table = build_route_table(routes, n, grid, regions, ep.tx_power);
            const auto M = active_pair_count(n, ep.d_hop / inst.side_length);
            const auto sch = draw_schedule(n, M, 20, 1);
            activator act(table);
            std::size_t receivers = 0, dominated = 0;
            for (std::size_t s = 0; s < sch.num_slots; ++s)
                for (const auto &set : act.activate_frame(s, sch.active_set(s)))
                    for (std::size_t i = 0; i < set.transmitters.size(); ++i)
                    {
                        const auto tb = tier_bound(i, set, phy, regions);
                        ++receivers;
                        dominated += tb.far_exact <= tb.bound * (1.0 + 1e-12);
                    }
            return {"tier_bound_dominance", receivers > 0 && dominated == receivers,
                    std::to_string(dominated) + "/" + std::to_string(receivers) + " receivers bounded"};
        }

        // Independent recomputation: atan2 sector tests and pow path loss.
        sinr_record naive_sinr(std::size_t rx, const active_transmitter_set &set, const phy_params &phy)
        {
            const auto &pat = phy.pattern;
            auto in_lobe = [&](point from, double azimuth, point to)
            {
                if (pat.omnidirectional())
                    return true;
                double off = std::atan2(to.y - from.y, to.x - from.x) - azimuth;
                off = std::remainder(off, two_pi);
                return std::abs(off) <= pat.theta / 2.0;
            };
            const transmitter &me = set.transmitters[rx];
            sinr_record r;
            r.pair = me.pair;
            r.hop = me.hop;
            r.slot = set.slot;
            r.noise = phy.noise;
            const double d = std::hypot(me.rx_pos.x - me.tx_pos.x, me.rx_pos.y - me.tx_pos.y);
            r.signal = me.power * pat.g_main * pat.g_main / std::pow(d, phy.alpha);
            for (std::size_t j = 0; j < set.transmitters.size(); ++j)
            {
                if (j == rx)
                    continue;
                const transmitter &o = set.transmitters[j];
                const double gt = in_lobe(o.tx_pos, o.tx_beam.azimuth, me.rx_pos) ? pat.g_main : pat.g_side;
                const double gr = in_lobe(me.rx_pos, me.rx_beam.azimuth, o.tx_pos) ? pat.g_main : pat.g_side;
                const double p = o.power * gt * gr / std::pow(std::hypot(o.tx_pos.x - me.rx_pos.x, o.tx_pos.y - me.rx_pos.y), phy.alpha);
                (o.pair == me.pair ? r.intra : r.inter) += p;
            }
            r.sinr = r.signal / (r.noise + r.intra + r.inter);
            r.rate = std::log2(1.0 + r.sinr);
            return r;
        }

        active_transmitter_set random_set(rng &g, std::size_t n, double power)
        {
            std::vector<point> pts(n);
            for (auto &p : pts)
                p = {g.uniform01(), g.uniform01()};
            active_transmitter_set set;
            for (std::size_t k = 0; k + 1 < n; k += 2)
            {
                const auto [tb, rb] = steer(node_id(k), pts[k], node_id(k + 1), pts[k + 1]);
                set.transmitters.push_back({std::uint32_t(k / 4), std::uint32_t((k / 2) % 2), pts[k], pts[k + 1], tb,
                                            rb, power * (0.5 + g.uniform01())});
            }
            return set;
        }

        check_result check_brute_force(const experiment_config &cfg)
        {
            rng g(derive_seed(7, 12));
            double worst = 0.0;
            const double theta = cfg.theta.at(cfg.n_ladder.front());
            for (const antenna_pattern &pat : {derive_gains(theta, cfg.rho), derive_gains(std::numbers::pi / 3, 0.9)})
            {
                const phy_params phy{pat, cfg.alpha, cfg.noise};
                for (int inst = 0; inst < 50; ++inst)
                {
                    const std::size_t n = 4 + 2 * g.below(7);
                    const auto set = random_set(g, n, 1.0);
                    const auto fast = evaluate_set(set, phy);
                    for (std::size_t i = 0; i < set.transmitters.size(); ++i)
                    {
                        const auto ref = naive_sinr(i, set, phy);
                        for (const auto &got : {sinr(i, set, phy), fast[i]})
                            worst = std::max(worst, std::abs(got.sinr - ref.sinr) / ref.sinr);
                    }
                }
            }
            return {"brute_force_sinr", worst <= 1e-12, "max relative error " + fmt(worst)};
        }

        check_result check_expected_gain(const experiment_config &cfg)
        {
            rng g(derive_seed(7, 13));
            const antenna_pattern pat = derive_gains(cfg.theta.at(cfg.n_ladder.front()), cfg.rho);
            const std::size_t samples = 200000;
            double sum = 0.0, sum2 = 0.0;
            for (std::size_t i = 0; i < samples; ++i)
            {
                const steered_node a{{0, two_pi * g.uniform01()}, {0.0, 0.0}};
                const steered_node b{{1, two_pi * g.uniform01()}, {0.0, 1.0}};
                const auto c = gain_between(a, b, pat);
                const double x = c == gain_category::main_main   ? pat.g_main * pat.g_main
                                 : c == gain_category::main_side ? pat.g_main * pat.g_side
                                                                 : pat.g_side * pat.g_side;
                sum += x;
                sum2 += x * x;
            }
            const double mean = sum / double(samples);
            const double sd = std::sqrt(std::max(0.0, sum2 / double(samples) - mean * mean) / double(samples));
            const double expect = expected_inter_interference(pat);
            const bool ok = std::abs(mean - expect) <= 3.0 * sd + 1e-12;
            return {"expected_gain", ok, "MC " + fmt(mean) + " vs " + fmt(expect)};
        }

        template <typename F>
        check_result guarded(const char *name, F &&f)
        {
            try
            {
                return f();
            }
            catch (const std::exception &e)
            {
                return {name, false, std::string("error: ") + e.what()};
            }
        }
    }

    validation_report validate(const experiment_config &cfg)
    {
        validation_report r;
        r.checks.push_back(guarded("gain_conservation", check_gain_conservation));
        r.checks.push_back(guarded("category_law", check_category_law));
        r.checks.push_back(guarded("typicality", check_typicality));
        r.checks.push_back(guarded("tier_series", [&] { return check_tier_series(cfg.alpha); }));
        r.checks.push_back(guarded("tier_bound_dominance", [&] { return check_tier_bound(cfg); }));
        r.checks.push_back(guarded("brute_force_sinr", [&] { return check_brute_force(cfg); }));
        r.checks.push_back(guarded("expected_gain", [&] { return check_expected_gain(cfg); }));
        return r;
    }
}
