// SPDX-License-Identifier: Apache-2.0
//
// riscontam: link-level simulator of inter-operator pilot contamination in
// multi-operator RIS-assisted uplinks
// Copyright (C) 2026 The riscontam authors
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

#ifndef RISCONTAM_EXPERIMENTS_HPP
#define RISCONTAM_EXPERIMENTS_HPP

#include "capacity_bound.hpp"
#include "data_link.hpp"
#include "estimation_bayesian.hpp"
#include "estimation_deterministic.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace riscontam
{
    enum class Experiment
    {
        chanest_det,
        data_mse,
        chanest_rayleigh,
        chanest_rayleigh_components,
        capacity
    };

    inline const char *to_string(Experiment e)
    {
        switch (e)
        {
        case Experiment::chanest_det:
            return "chanest-det";
        case Experiment::data_mse:
            return "data-mse";
        case Experiment::chanest_rayleigh:
            return "chanest-rayleigh";
        case Experiment::chanest_rayleigh_components:
            return "chanest-rayleigh-components";
        default:
            return "capacity";
        }
    }

    // "start:step:stop" in dBm, stop included when it lies on the grid.
    inline std::vector<double> parse_grid(const std::string &text)
    {
        double start = 0, step = 0, stop = 0;
        char tail = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &step, &stop, &tail) != 3)
            throw std::invalid_argument("grid must be start:step:stop, got '" + text + "'");
        require(std::isfinite(start) && std::isfinite(step) && std::isfinite(stop), "grid values must be finite");
        require(step > 0.0, "grid step must be positive");
        require(stop >= start, "grid stop must be >= start");
        std::vector<double> grid;
        const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
        require(count <= 100000, "grid has too many points");
        for (long long i = 0; i < count; ++i)
            grid.push_back(start + double(i) * step);
        return grid;
    }

    inline std::vector<double> default_grid(Experiment e)
    {
        switch (e)
        {
        case Experiment::chanest_det:
            return parse_grid("-30:5:60");
        case Experiment::data_mse:
            return parse_grid("-30:5:40");
        case Experiment::capacity:
            return parse_grid("-10:5:60");
        default:
            return parse_grid("-30:5:60");
        }
    }

    inline std::size_t default_trials(Experiment e)
    {
        switch (e)
        {
        case Experiment::chanest_det:
            return 200;
        case Experiment::data_mse:
            return 100000;
        case Experiment::capacity:
            return 10000;
        default:
            return 500;
        }
    }

    // Per-experiment system defaults: the deterministic figures run at N = 256,
    // L = 513; the Rayleigh and capacity figures at N = 64 (8x8 URA), L = 128.
    inline SystemParams default_params(Experiment e)
    {
        SystemParams p;
        if (e == Experiment::chanest_rayleigh || e == Experiment::chanest_rayleigh_components ||
            e == Experiment::capacity)
        {
            p.n_elements = 64;
            p.pilot_len = 128;
            p.geometry = RisGeometry{ArrayKind::ura, 8, 8, 0.5};
        }
        return p;
    }

    struct SweepSpec
    {
        Experiment experiment = Experiment::chanest_det;
        std::vector<double> power_grid_dBm;  // empty: experiment default
        std::vector<CsiMode> modes;          // empty: every mode the experiment supports
        std::vector<RisGeometry> geometries; // empty: experiment default
        std::size_t trials = 0;              // 0: experiment default
        std::uint64_t master_seed = 1;
        std::string output_path;
        unsigned threads = 1;
        SystemParams params;                 // N, L, powers, path losses, fixture seed
        CrossTerm cross_term = CrossTerm::oracle;
        std::size_t finite_pilot_trials = 0; // data-mse: extra finite pilot-SNR rows when > 0

        std::vector<double> grid() const { return power_grid_dBm.empty() ? default_grid(experiment) : power_grid_dBm; }
        std::size_t n_trials() const { return trials == 0 ? default_trials(experiment) : trials; }
        bool has_mode(CsiMode m) const { return modes.empty() || std::find(modes.begin(), modes.end(), m) != modes.end(); }
    };

    struct ResultRow
    {
        std::string experiment;
        std::string mode;
        std::string geometry;
        double power_dBm = 0.0;
        std::string metric;
        double value = 0.0;
        double stderr_ = 0.0;
        std::size_t trials = 0;
        std::uint64_t seed = 0;
    };

    inline void sort_rows(std::vector<ResultRow> &rows)
    {
        std::stable_sort(rows.begin(), rows.end(), [](const ResultRow &a, const ResultRow &b)
                         { return std::tie(a.experiment, a.mode, a.geometry, a.metric, a.power_dBm) <
                                  std::tie(b.experiment, b.mode, b.geometry, b.metric, b.power_dBm); });
    }

    inline const char *csv_header()
    {
        return "experiment,mode,geometry,power_dBm,metric,value,stderr,trials,seed";
    }

    inline std::string format_row(const ResultRow &r)
    {
        char buf[512];
        std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.6g,%s,%.12g,%.6g,%zu,%llu", r.experiment.c_str(), r.mode.c_str(),
                      r.geometry.c_str(), r.power_dBm, r.metric.c_str(), r.value, r.stderr_, r.trials,
                      static_cast<unsigned long long>(r.seed));
        return buf;
    }

    inline void write_csv(std::ostream &os, std::vector<ResultRow> rows)
    {
        sort_rows(rows);
        os << csv_header() << '\n';
        for (const auto &r : rows)
            os << format_row(r) << '\n';
    }

    inline void write_csv(const std::string &path, const std::vector<ResultRow> &rows)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        write_csv(f, rows);
        if (!f)
            throw std::runtime_error("write to '" + path + "' failed");
    }

    namespace detail
    {
        inline ConfigMode to_config_mode(CsiMode m)
        {
            return m == CsiMode::identical ? ConfigMode::identical : ConfigMode::orthogonal;
        }

        inline void check_finite(const ResultRow &r)
        {
            if (!std::isfinite(r.value) || !(r.stderr_ >= 0.0))
                throw numerical_error("non-finite result for " + r.experiment + "/" + r.mode + "/" + r.metric);
        }

        struct RowSink
        {
            const SweepSpec &spec;
            std::vector<ResultRow> rows;

            void add(const std::string &mode, const std::string &geometry, double power, const std::string &metric,
                     double value, double se = 0.0, std::size_t trials = 0)
            {
                ResultRow r{to_string(spec.experiment), mode, geometry, power, metric, value, se, trials,
                            spec.master_seed};
                check_finite(r);
                rows.push_back(std::move(r));
            }
            void add(const std::string &mode, const std::string &geometry, double power, const std::string &metric,
                     const Estimate &e)
            {
                add(mode, geometry, power, metric, e.mean, e.stderr_, e.trials);
            }
        };

        // Deterministic experiments do not depend on the array layout
        inline std::string iid_label(const SystemParams &p) { return "iid:" + std::to_string(p.n_elements); }
    } // namespace detail

    // Channel estimation NMSE with the MML estimator on the frozen fixture:
    // closed form, Monte-Carlo over the pilot noise, and the identical-mode floor.
    inline std::vector<ResultRow> run_chanest_det(const SweepSpec &spec)
    {
        const SystemParams &p = spec.params;
        const auto ch = sample_deterministic_fixture(p, p.seed);
        const User k = User::first;
        const int ki = index(k);
        const double noise = p.noise_power_mw();
        const std::size_t trials = spec.n_trials();
        const auto grid = spec.grid();
        const std::string geo = detail::iid_label(p);
        detail::RowSink sink{spec, {}};

        for (CsiMode cm : {CsiMode::identical, CsiMode::orthogonal})
        {
            if (!spec.has_mode(cm))
                continue;
            const ConfigMode mode = detail::to_config_mode(cm);
            const auto [b1, b2] = make_sequence_pair(mode, p.n_elements, p.pilot_len);
            const CVec b = bias(ch.h[ki], ch.q[ki], ch.p[ki], mode);
            const double g2 = ch.g[ki].squaredNorm();
            for (std::size_t pi = 0; pi < grid.size(); ++pi)
            {
                const double pp = dbm_to_linear(grid[pi]);
                sink.add(to_string(cm), geo, grid[pi], "nmse", nmse(mse_trace(b, ch.h[ki], pp, p.pilot_len, noise), ch.g[ki]));
                if (mode == ConfigMode::identical)
                    sink.add(to_string(cm), geo, grid[pi], "nmse_floor", b.squaredNorm() / g2);
                if (trials == 0)
                    continue;
                std::vector<double> err(trials);
                parallel_for(trials, spec.threads, [&](std::size_t t)
                             {
                    RandomStream rng(spec.master_seed, {tag("chanest-det"), std::uint64_t(mode), pi, t});
                    const CVec y = received_pilots(ch, b1, b2, pp, noise, k, &rng);
                    const CVec gh = mml_estimate(y, b1, ch.h[ki], pp);
                    err[t] = (gh - ch.g[ki]).squaredNorm() / g2; });
                sink.add(to_string(cm), geo, grid[pi], "nmse_mc", summarize(err));
            }
        }
        return std::move(sink.rows);
    }

    // Data MSE at infinite pilot SNR for identical, orthogonal and perfect CSI,
    // with a Monte-Carlo symbol check and the high-SNR floor.
    inline std::vector<ResultRow> run_data_mse(const SweepSpec &spec)
    {
        const SystemParams &p = spec.params;
        const auto ch = sample_deterministic_fixture(p, p.seed);
        const User k = User::first;
        const double noise = p.noise_power_mw();
        const std::size_t trials = spec.n_trials();
        const auto grid = spec.grid();
        const std::string geo = detail::iid_label(p);
        detail::RowSink sink{spec, {}};

        for (CsiMode cm : {CsiMode::identical, CsiMode::orthogonal, CsiMode::perfect_csi})
        {
            if (!spec.has_mode(cm))
                continue;
            std::vector<ScalarLink> links;
            for (double pd_dbm : grid)
                links.push_back(high_snr_link(ch, cm, dbm_to_linear(pd_dbm), k));
            std::vector<Estimate> mc(grid.size());
            if (trials > 0)
                parallel_for(grid.size(), spec.threads, [&](std::size_t pi)
                             {
                    RandomStream rng(spec.master_seed, {tag("data-mse"), std::uint64_t(cm), pi});
                    mc[pi] = simulate_symbol_mse(links[pi], noise, trials, rng); });
            std::vector<Estimate> fp(grid.size());
            if (spec.finite_pilot_trials > 0 && cm != CsiMode::perfect_csi)
                parallel_for(grid.size(), spec.threads, [&](std::size_t pi)
                             {
                    const auto seed = stream_seed(spec.master_seed, {tag("data-mse-finite-pilot"), std::uint64_t(cm), pi});
                    fp[pi] = data_mse_finite_pilot(ch, detail::to_config_mode(cm), p.pilot_power_mw(),
                                                   dbm_to_linear(grid[pi]), noise, p.pilot_len, k,
                                                   spec.finite_pilot_trials, seed); });
            for (std::size_t pi = 0; pi < grid.size(); ++pi)
            {
                sink.add(to_string(cm), geo, grid[pi], "mse", data_mse(links[pi], noise));
                sink.add(to_string(cm), geo, grid[pi], "mse_floor", data_mse_floor(links[pi]));
                if (trials > 0)
                    sink.add(to_string(cm), geo, grid[pi], "mse_mc", mc[pi]);
                if (spec.finite_pilot_trials > 0 && cm != CsiMode::perfect_csi)
                    sink.add(to_string(cm), geo, grid[pi], "mse_finite_pilot", fp[pi]);
            }
        }
        return std::move(sink.rows);
    }

    inline std::vector<RisGeometry> default_rayleigh_geometries()
    {
        return {parse_geometry("ura:8x8:0.5"), parse_geometry("ura:8x8:0.25"), parse_geometry("ula:1x64:0.5")};
    }

    // Misspecified MMSE under correlated Rayleigh priors. Traces are normalized
    // by tr(Sigma_g). The components variant omits the Monte-Carlo rows.
    inline std::vector<ResultRow> run_chanest_rayleigh(const SweepSpec &spec)
    {
        const auto geometries = spec.geometries.empty() ? default_rayleigh_geometries() : spec.geometries;
        const bool with_mc = spec.experiment != Experiment::chanest_rayleigh_components && spec.n_trials() > 0;
        const std::size_t trials = spec.n_trials();
        const auto grid = spec.grid();
        const User k = User::first;
        const int ki = index(k);
        detail::RowSink sink{spec, {}};

        for (const auto &geo : geometries)
        {
            SystemParams p = spec.params;
            p.n_elements = geo.n_elements();
            p.geometry = geo;
            const auto ch = sample_deterministic_fixture(p, p.seed);
            const auto priors = isotropic_priors(p);
            const auto sr = sigma_r(priors, ch.q[ki]);
            const double tr_g = real_trace(priors.sigma_g.matrix);
            const double noise = p.noise_power_mw();
            const CorrelatedRayleighSampler gs(priors.sigma_g), ps(priors.sigma_p);

            for (CsiMode cm : {CsiMode::identical, CsiMode::orthogonal})
            {
                if (!spec.has_mode(cm))
                    continue;
                const ConfigMode mode = detail::to_config_mode(cm);
                const auto [b1, b2] = make_sequence_pair(mode, p.n_elements, p.pilot_len);
                const double asym = real_trace(high_snr_contamination(b1, b2, ch.h[ki], sr, p.pilot_len)) / tr_g;
                for (std::size_t pi = 0; pi < grid.size(); ++pi)
                {
                    const double pp = dbm_to_linear(grid[pi]);
                    const MisspecifiedMmse est(b1, ch.h[ki], priors.sigma_g, pp, noise);
                    const auto ec = est.error_covariance(b2, sr);
                    const double unc = real_trace(ec.uncontaminated) / tr_g;
                    const double con = real_trace(ec.contamination) / tr_g;
                    sink.add(to_string(cm), geo.label(), grid[pi], "nmse_total", unc + con);
                    sink.add(to_string(cm), geo.label(), grid[pi], "nmse_uncontaminated", unc);
                    sink.add(to_string(cm), geo.label(), grid[pi], "nmse_contamination", con);
                    sink.add(to_string(cm), geo.label(), grid[pi], "nmse_asymptote", asym);
                    if (!with_mc)
                        continue;
                    std::vector<double> err(trials);
                    parallel_for(trials, spec.threads, [&](std::size_t t)
                                 {
                        RandomStream rng(spec.master_seed, {tag("chanest-rayleigh"), tag(geo.label()), std::uint64_t(mode), pi, t});
                        ChannelSet draw = ch;
                        draw.g[ki] = gs(rng);
                        draw.p[ki] = ps(rng);
                        const CVec y = received_pilots(draw, b1, b2, pp, noise, k, &rng);
                        err[t] = (est.estimate(y) - draw.g[ki]).squaredNorm() / tr_g; });
                    sink.add(to_string(cm), geo.label(), grid[pi], "nmse_mc", summarize(err));
                }
            }
        }
        return std::move(sink.rows);
    }

    // Monte-Carlo capacity lower bound per data power and mode, plus the
    // orthogonal / identical ratio.
    inline std::vector<ResultRow> run_capacity(const SweepSpec &spec)
    {
        const auto geometries = spec.geometries.empty() ? std::vector<RisGeometry>{parse_geometry("ura:8x8:0.5")}
                                                        : spec.geometries;
        const auto grid = spec.grid();
        std::vector<double> pd(grid.size());
        std::transform(grid.begin(), grid.end(), pd.begin(), dbm_to_linear);
        detail::RowSink sink{spec, {}};

        for (const auto &geo : geometries)
        {
            SystemParams p = spec.params;
            p.n_elements = geo.n_elements();
            p.geometry = geo;
            const auto sc = make_capacity_scenario(p);
            std::array<std::vector<Estimate>, 2> curves;
            for (CsiMode cm : {CsiMode::identical, CsiMode::orthogonal})
            {
                if (!spec.has_mode(cm))
                    continue;
                CapacityOptions opt;
                opt.mode = detail::to_config_mode(cm);
                opt.cross_term = spec.cross_term;
                opt.trials = spec.n_trials();
                opt.seed = spec.master_seed;
                opt.threads = spec.threads;
                auto &curve = curves[cm == CsiMode::identical ? 0 : 1];
                curve = capacity_lower_bound_mc(sc, pd, p.noise_power_mw(), opt);
                for (std::size_t pi = 0; pi < grid.size(); ++pi)
                    sink.add(to_string(cm), geo.label(), grid[pi], "capacity_lb", curve[pi]);
            }
            if (curves[0].empty() || curves[1].empty())
                continue;
            for (std::size_t pi = 0; pi < grid.size(); ++pi)
            {
                const Estimate &a = curves[1][pi], &b = curves[0][pi];
                if (!(b.mean > 0.0))
                    continue;
                const double ratio = a.mean / b.mean;
                const double rel = std::hypot(a.mean > 0 ? a.stderr_ / a.mean : 0.0, b.stderr_ / b.mean);
                sink.add("orthogonal/identical", geo.label(), grid[pi], "capacity_ratio", ratio, ratio * rel,
                         a.trials);
            }
        }
        return std::move(sink.rows);
    }

    inline std::vector<ResultRow> run_experiment(const SweepSpec &spec)
    {
        require(spec.n_trials() >= 1 || spec.experiment != Experiment::capacity, "capacity needs trials >= 1");
        require(!spec.grid().empty(), "power grid must not be empty");
        switch (spec.experiment)
        {
        case Experiment::chanest_det:
            return run_chanest_det(spec);
        case Experiment::data_mse:
            return run_data_mse(spec);
        case Experiment::capacity:
            return run_capacity(spec);
        default:
            return run_chanest_rayleigh(spec);
        }
    }
} // namespace riscontam

#endif
