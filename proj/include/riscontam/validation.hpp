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

#ifndef RISCONTAM_VALIDATION_HPP
#define RISCONTAM_VALIDATION_HPP

#include "experiments.hpp"

#include <functional>
#include <sstream>

namespace riscontam
{
    struct CheckResult
    {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    inline std::string format_check(const CheckResult &c)
    {
        return "CHECK " + c.name + (c.pass ? " PASS " : " FAIL ") + c.detail;
    }

    // Replaceable pieces of the model, so that a corrupted implementation can be
    // fed to the checks and shown to be caught.
    struct ValidationHooks
    {
        std::function<double(const CVec &, const CVec &, double, int, double)> mse_trace = riscontam::mse_trace;
    };

    struct ValidationOptions
    {
        std::uint64_t seed = 1;
        unsigned threads = 1;
        ValidationHooks hooks;
    };

    namespace detail
    {
        inline std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
        {
            char buf[256];
            std::snprintf(buf, sizeof(buf), f, a, b, c);
            return buf;
        }

        inline SystemParams table_params(int n, int l)
        {
            SystemParams p;
            p.n_elements = n;
            p.pilot_len = l;
            p.geometry = RisGeometry{ArrayKind::ula, 1, n, 0.5};
            return p;
        }

        inline CMat random_pd(Eigen::Index n, RandomStream &rng, double floor = 0.1)
        {
            CMat a(n, n);
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j)
                    a(i, j) = rng.complex_normal(1.0);
            CMat m = a * a.adjoint() / double(n);
            m.diagonal().array() += floor;
            return hermitian_part(m);
        }

        inline CVec unit_modulus(Eigen::Index n, RandomStream &rng)
        {
            CVec v(n);
            for (Eigen::Index i = 0; i < n; ++i)
                v(i) = std::polar(1.0, 2.0 * pi * rng.uniform());
            return v;
        }

        inline double rel_err(const CMat &a, const CMat &b)
        {
            return (a - b).norm() / std::max(b.norm(), 1e-300);
        }
    } // namespace detail

    // MML and joint ML coincide for orthogonal sequences.
    inline CheckResult check_mml_equals_joint_ml(const ValidationOptions &o)
    {
        const auto p = detail::table_params(8, 16);
        const auto [b1, b2] = make_orthogonal_pair(8, 16);
        double worst = 0.0;
        for (std::size_t i = 0; i < 100; ++i)
        {
            const auto ch = sample_deterministic_fixture(p, stream_seed(o.seed, {tag("mml-jml"), i}));
            RandomStream rng(o.seed, {tag("mml-jml-noise"), i});
            const CVec y = received_pilots(ch, b1, b2, p.pilot_power_mw(), p.noise_power_mw(), User::first, &rng);
            const CVec a = mml_estimate(y, b1, ch.h[0], p.pilot_power_mw());
            const auto j = joint_ml_estimate(y, b1, b2, ch.h[0], p.pilot_power_mw());
            worst = std::max(worst, max_abs(a - j.g_hat));
        }
        return {"mml-equals-joint-ml", worst <= 1e-10, detail::fmt("max_abs_diff=%.3g tol=1e-10 instances=100", worst)};
    }

    // Monte-Carlo NMSE of the MML estimator against the closed-form trace.
    inline CheckResult check_mse_trace_oracle(const ValidationOptions &o, ConfigMode mode, std::size_t trials = 10000)
    {
        const int n = 16, l = mode == ConfigMode::identical ? 32 : 64;
        const auto p = detail::table_params(n, l);
        const auto ch = sample_deterministic_fixture(p, o.seed);
        const auto [b1, b2] = make_sequence_pair(mode, n, l);
        const double pp = p.pilot_power_mw(), noise = p.noise_power_mw();
        std::vector<double> err(trials);
        parallel_for(trials, o.threads, [&](std::size_t t)
                     {
            RandomStream rng(o.seed, {tag("mse-trace-oracle"), std::uint64_t(mode), t});
            const CVec y = received_pilots(ch, b1, b2, pp, noise, User::first, &rng);
            err[t] = (mml_estimate(y, b1, ch.h[0], pp) - ch.g[0]).squaredNorm() / ch.g[0].squaredNorm(); });
        const auto mc = summarize(err);
        const double cf = o.hooks.mse_trace(bias(ch.h[0], ch.q[0], ch.p[0], mode), ch.h[0], pp, l, noise) /
                          ch.g[0].squaredNorm();
        const double z = std::abs(mc.mean - cf) / mc.stderr_;
        return {std::string("mse-trace-oracle-") + to_string(mode), z <= 3.0,
                detail::fmt("closed_form=%.6g mc=%.6g z=%.2f", cf, mc.mean, z)};
    }

    // High pilot power reaches the identical-mode floor; orthogonal NMSE falls 10x per 10 dB.
    inline CheckResult check_contamination_floor(const ValidationOptions &o)
    {
        SystemParams p;
        p.seed = o.seed;
        const auto ch = sample_deterministic_fixture(p, p.seed);
        const double noise = p.noise_power_mw(), g2 = ch.g[0].squaredNorm();
        const CVec bi = bias(ch.h[0], ch.q[0], ch.p[0], ConfigMode::identical);
        const double floor = bi.squaredNorm() / g2;
        const double at60 = o.hooks.mse_trace(bi, ch.h[0], dbm_to_linear(60.0), p.pilot_len, noise) / g2;
        const double gap = std::abs(at60 - floor) / floor;
        const CVec b0 = CVec::Zero(p.n_elements);
        double worst = 0.0;
        for (double db = -30.0; db < 60.0; db += 10.0)
        {
            const double a = o.hooks.mse_trace(b0, ch.h[0], dbm_to_linear(db), p.pilot_len, noise);
            const double b = o.hooks.mse_trace(b0, ch.h[0], dbm_to_linear(db + 10.0), p.pilot_len, noise);
            worst = std::max(worst, std::abs(a / b - 10.0) / 10.0);
        }
        return {"contamination-floor", gap <= 0.01 && worst <= 0.02,
                detail::fmt("identical_gap_at_60dBm=%.3g orthogonal_max_step_dev=%.3g", gap, worst)};
    }

    // Closed-form data MSE against simulated symbols, and its high-SNR limit.
    inline CheckResult check_data_mse(const ValidationOptions &o, CsiMode mode, std::size_t trials = 200000)
    {
        SystemParams p;
        const auto ch = sample_deterministic_fixture(p, o.seed);
        const double noise = p.noise_power_mw();
        // Pd where the noise term and the mismatch term are comparable
        const auto link = high_snr_link(ch, mode, dbm_to_linear(-10.0), User::first);
        RandomStream rng(o.seed, {tag("data-mse-check"), std::uint64_t(mode)});
        const auto mc = simulate_symbol_mse(link, noise, trials, rng);
        const double cf = data_mse(link, noise);
        const double z = std::abs(mc.mean - cf) / mc.stderr_;
        const double tiny = 1e-12 * std::norm(link.m);
        double lim_gap = 0.0;
        if (mode != CsiMode::perfect_csi)
        {
            const double fl = data_mse_floor(link);
            lim_gap = std::abs(data_mse(link, tiny) - fl) / fl;
        }
        return {std::string("data-mse-") + to_string(mode), z <= 3.0 && lim_gap < 1e-3,
                detail::fmt("closed_form=%.6g z=%.2f floor_gap=%.3g", cf, z, lim_gap)};
    }

    inline CheckResult check_data_mse_ordering(const ValidationOptions &o)
    {
        SystemParams p;
        const auto ch = sample_deterministic_fixture(p, o.seed);
        const double noise = p.noise_power_mw();
        bool ok = true;
        for (double db = -30.0; db <= 40.0; db += 5.0)
        {
            const double pd = dbm_to_linear(db);
            const double i = data_mse(high_snr_link(ch, CsiMode::identical, pd, User::first), noise);
            const double g = data_mse(high_snr_link(ch, CsiMode::orthogonal, pd, User::first), noise);
            ok = ok && g <= i;
        }
        const double fi = data_mse_floor(high_snr_link(ch, CsiMode::identical, 1.0, User::first));
        const double fo = data_mse_floor(high_snr_link(ch, CsiMode::orthogonal, 1.0, User::first));
        return {"data-mse-mode-ordering", ok && fi > fo,
                detail::fmt("orthogonal_le_identical=%g floor_identical=%.4g floor_orthogonal=%.4g", ok, fi, fo)};
    }

    // Empirical error covariance of the misspecified MMSE estimator against the
    // closed form. Each complex entry must lie within 3 standard errors
    // (modulus of the complex deviation against its own standard error).
    inline CheckResult check_bayes_covariance(const ValidationOptions &o, std::size_t trials = 10000)
    {
        SystemParams p;
        p.n_elements = 16;
        p.pilot_len = 32;
        p.geometry = RisGeometry{ArrayKind::ura, 4, 4, 0.5};
        const auto ch = sample_deterministic_fixture(p, o.seed);
        const auto pri = isotropic_priors(p);
        const auto sr = sigma_r(pri, ch.q[0]);
        const auto [b1, b2] = make_identical_pair(16, 32);
        const double pp = p.pilot_power_mw(), noise = p.noise_power_mw();
        const MisspecifiedMmse est(b1, ch.h[0], pri.sigma_g, pp, noise);
        const CMat theory = est.error_covariance(b2, sr).total();
        const CorrelatedRayleighSampler gs(pri.sigma_g), ps(pri.sigma_p);
        std::vector<CVec> errs(trials);
        parallel_for(trials, o.threads, [&](std::size_t t)
                     {
            RandomStream rng(o.seed, {tag("bayes-covariance"), t});
            ChannelSet d = ch;
            d.g[0] = gs(rng);
            d.p[0] = ps(rng);
            errs[t] = est.estimate(received_pilots(d, b1, b2, pp, noise, User::first, &rng)) - d.g[0]; });
        const auto n = theory.rows();
        CMat sum = CMat::Zero(n, n);
        RMat sum_sq = RMat::Zero(n, n);
        for (const auto &e : errs)
        {
            const CMat outer = e * e.adjoint();
            sum += outer;
            sum_sq += outer.cwiseAbs2();
        }
        const double tn = double(trials);
        const CMat mean = sum / tn;
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
            {
                const double var = (sum_sq(i, j) / tn - std::norm(mean(i, j))) * tn / (tn - 1.0);
                worst = std::max(worst, std::abs(mean(i, j) - theory(i, j)) / std::sqrt(var / tn));
            }
        return {"bayes-error-covariance", worst <= 3.0,
                detail::fmt("max_entry_z=%.2f trials=%g n=%g", worst, tn, double(n))};
    }

    // Unit-scale instance used by the asymptotic checks: unit-modulus h, random PD priors.
    struct UnitScaleInstance
    {
        CVec h;
        SpatialCovariance sigma_g, sigma_r;
    };

    inline UnitScaleInstance unit_scale_instance(Eigen::Index n, std::uint64_t seed)
    {
        RandomStream rng(seed, {tag("unit-scale")});
        UnitScaleInstance u;
        u.h = detail::unit_modulus(n, rng);
        u.sigma_g = make_covariance(detail::random_pd(n, rng));
        u.sigma_r = make_covariance(detail::random_pd(n, rng));
        return u;
    }

    inline CheckResult check_contamination_pp_invariance(const ValidationOptions &o)
    {
        const auto u = unit_scale_instance(16, o.seed);
        const auto [b1, b2] = make_identical_pair(16, 32);
        const double noise = 1e-12;
        CMat ref;
        double worst = 0.0;
        for (double pp : {1.0, 1e3, 1e6})
        {
            const CMat c = MisspecifiedMmse(b1, u.h, u.sigma_g, pp, noise).error_covariance(b2, u.sigma_r).contamination;
            if (ref.size() == 0)
                ref = c;
            else
                worst = std::max(worst, detail::rel_err(c, ref));
        }
        return {"contamination-pp-invariance", worst <= 1e-9,
                detail::fmt("max_rel_diff=%.3g tol=1e-9 noise=1e-12", worst)};
    }

    inline CheckResult check_high_snr_asymptote(const ValidationOptions &o)
    {
        const Eigen::Index n = 16;
        const auto u = unit_scale_instance(n, o.seed);
        const double noise = 1e-12;
        const auto [i1, i2] = make_identical_pair(n, 2 * n);
        const CMat lim = high_snr_contamination(i1, i2, u.h, u.sigma_r, 2 * n);
        const CMat tot = MisspecifiedMmse(i1, u.h, u.sigma_g, 1.0, noise).error_covariance(i2, u.sigma_r).total();
        const double rel = detail::rel_err(tot, lim);
        const auto [o1, o2] = make_orthogonal_pair(n, 4 * n);
        const double orth = real_trace(MisspecifiedMmse(o1, u.h, u.sigma_g, 1.0, noise).error_covariance(o2, u.sigma_r).total());
        const auto [j1, j2] = make_identical_pair(n, 4 * n);
        const CMat lim4 = high_snr_contamination(j1, j2, u.h, u.sigma_r, 4 * n);
        const bool same = lim == lim4;
        return {"high-snr-asymptote", rel <= 1e-6 && orth <= 1e-12 && same,
                detail::fmt("identical_rel=%.3g orthogonal_trace=%.3g L_invariant=%g", rel, orth, same)};
    }

    // Orthogonal contamination vanishes, identical NMSE heads to its asymptote,
    // denser arrays estimate better, orthogonal error shrinks with Pp.
    inline CheckResult check_rayleigh_properties(const ValidationOptions &o)
    {
        SweepSpec s;
        s.experiment = Experiment::chanest_rayleigh_components;
        s.params = default_params(s.experiment);
        s.params.seed = o.seed;
        s.master_seed = o.seed;
        s.geometries = {parse_geometry("ura:8x8:0.5"), parse_geometry("ura:8x8:0.25")};
        s.power_grid_dBm = parse_grid("-30:10:90");
        const auto rows = run_chanest_rayleigh(s);
        auto get = [&](const std::string &mode, const std::string &geo, const std::string &metric, double pw)
        {
            for (const auto &r : rows)
                if (r.mode == mode && r.geometry == geo && r.metric == metric && r.power_dBm == pw)
                    return r.value;
            throw std::logic_error("missing row " + metric);
        };
        bool ok = true;
        double max_orth_con = 0.0;
        for (double pw = -30; pw <= 90; pw += 10)
        {
            const double c = get("orthogonal", "ura:8x8:0.5", "nmse_contamination", pw);
            max_orth_con = std::max(max_orth_con, c);
            if (pw > -30)
                ok = ok && get("orthogonal", "ura:8x8:0.5", "nmse_total", pw) <
                               get("orthogonal", "ura:8x8:0.5", "nmse_total", pw - 10);
        }
        const double asym = get("identical", "ura:8x8:0.5", "nmse_asymptote", 90);
        const double at90 = get("identical", "ura:8x8:0.5", "nmse_total", 90);
        const double conv = std::abs(at90 - asym) / asym;
        const double dense = get("identical", "ura:8x8:0.25", "nmse_uncontaminated", 0);
        const double sparse = get("identical", "ura:8x8:0.5", "nmse_uncontaminated", 0);
        ok = ok && max_orth_con <= 1e-12 && conv <= 1e-3 && dense < sparse;
        return {"rayleigh-properties", ok,
                detail::fmt("orthogonal_contamination=%.3g identical_gap_to_asymptote=%.3g dense_over_sparse=%.3g",
                            max_orth_con, conv, dense / sparse)};
    }

    // Closed-form conditional means and variances against joint Gaussian
    // conditioning on random identical-mode instances.
    inline CheckResult check_conditional_moments(const ValidationOptions &o, std::size_t instances = 100)
    {
        double worst = 0.0, worst_consistency = 0.0;
        const Eigen::Index n = 8;
        for (std::size_t i = 0; i < instances; ++i)
        {
            RandomStream rng(o.seed, {tag("conditional-moments"), i});
            const CVec h = rng.complex_normal_vector(n, 1.0);
            const auto sg = make_covariance(detail::random_pd(n, rng));
            const auto sr = make_covariance(detail::random_pd(n, rng));
            const CVec g_hat = rng.complex_normal_vector(n, 1.0);
            const auto a = conditional_moments_paper(g_hat, h, sg, sr, ConfigMode::identical);
            const auto b = conditional_moments_oracle(g_hat, h, sg, sr, ConfigMode::identical);
            worst = std::max({worst, detail::rel_err(a.mean_g, b.mean_g), detail::rel_err(a.mean_r, b.mean_r),
                              detail::rel_err(a.var_g, b.var_g), detail::rel_err(a.var_r, b.var_r)});
            const CVec back = a.mean_g + inverse_entries(h, "h").cwiseProduct(a.mean_r);
            worst_consistency = std::max(worst_consistency, detail::rel_err(back, g_hat));
        }
        return {"conditional-moments-oracle", worst <= 1e-9 && worst_consistency <= 1e-9,
                detail::fmt("max_rel_diff=%.3g consistency=%.3g instances=%g", worst, worst_consistency,
                            double(instances))};
    }

    // Size of the gap between the two E[g r^H | g_hat] expressions. Reported, never failed.
    struct CrossTermReport
    {
        double max_abs_diff = 0.0;
        double max_rel_diff = 0.0;
        double capacity_oracle = 0.0;
        double capacity_paper = 0.0;
    };

    inline CrossTermReport cross_term_report(std::uint64_t seed, std::size_t instances = 100,
                                             std::size_t capacity_trials = 500, unsigned threads = 1)
    {
        CrossTermReport rep;
        const Eigen::Index n = 8;
        for (std::size_t i = 0; i < instances; ++i)
        {
            RandomStream rng(seed, {tag("cross-term"), i});
            const CVec h = rng.complex_normal_vector(n, 1.0);
            const auto sg = make_covariance(detail::random_pd(n, rng));
            const auto sr = make_covariance(detail::random_pd(n, rng));
            const CVec g_hat = rng.complex_normal_vector(n, 1.0);
            const auto a = conditional_moments_paper(g_hat, h, sg, sr, ConfigMode::identical);
            const auto b = conditional_moments_oracle(g_hat, h, sg, sr, ConfigMode::identical);
            rep.max_abs_diff = std::max(rep.max_abs_diff, max_abs(a.cross_gr - b.cross_gr));
            rep.max_rel_diff = std::max(rep.max_rel_diff, detail::rel_err(a.cross_gr, b.cross_gr));
        }
        auto p = default_params(Experiment::capacity);
        p.seed = seed;
        const auto sc = make_capacity_scenario(p);
        const double pd = dbm_to_linear(60.0);
        CapacityOptions opt;
        opt.mode = ConfigMode::identical;
        opt.trials = capacity_trials;
        opt.seed = seed;
        opt.threads = threads;
        rep.capacity_oracle = capacity_lower_bound_mc(sc, std::span<const double>(&pd, 1), p.noise_power_mw(), opt)[0].mean;
        opt.cross_term = CrossTerm::paper;
        rep.capacity_paper = capacity_lower_bound_mc(sc, std::span<const double>(&pd, 1), p.noise_power_mw(), opt)[0].mean;
        return rep;
    }

    inline CheckResult check_cross_term_report(const ValidationOptions &o)
    {
        const auto r = cross_term_report(o.seed, 100, 500, o.threads);
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "reported max_abs_diff=%.3g max_rel_diff=%.3g identical_capacity_60dBm oracle=%.4g paper=%.4g",
                      r.max_abs_diff, r.max_rel_diff, r.capacity_oracle, r.capacity_paper);
        return {"cross-term-discrepancy", true, buf};
    }

    inline CheckResult check_capacity_regularity(const ValidationOptions &o, std::size_t trials = 4000)
    {
        auto p = default_params(Experiment::capacity);
        p.seed = o.seed;
        const auto sc = make_capacity_scenario(p);
        double worst = 0.0;
        for (ConfigMode m : {ConfigMode::identical, ConfigMode::orthogonal})
            worst = std::max(worst, regularity_max_correlation(sc, m, trials, o.seed));
        const double tol = 4.0 / std::sqrt(double(trials));
        return {"capacity-regularity", worst <= tol, detail::fmt("max_corr=%.4f tol=%.4f", worst, tol)};
    }

    // Bound curves non-decreasing in Pd, non-negative, non-increasing in noise,
    // and mode-independent without the unintended path.
    inline CheckResult check_capacity_properties(const ValidationOptions &o, std::size_t trials = 500)
    {
        auto p = default_params(Experiment::capacity);
        p.seed = o.seed;
        const auto sc = make_capacity_scenario(p);
        const auto grid = parse_grid("-10:5:60");
        std::vector<double> pd(grid.size());
        std::transform(grid.begin(), grid.end(), pd.begin(), dbm_to_linear);
        CapacityOptions opt;
        opt.trials = trials;
        opt.seed = o.seed;
        opt.threads = o.threads;
        bool mono = true, nonneg = true, noise_mono = true;
        for (ConfigMode m : {ConfigMode::identical, ConfigMode::orthogonal})
        {
            opt.mode = m;
            const auto c = capacity_lower_bound_mc(sc, pd, p.noise_power_mw(), opt);
            const auto c_noisy = capacity_lower_bound_mc(sc, pd, 10.0 * p.noise_power_mw(), opt);
            for (std::size_t i = 0; i < c.size(); ++i)
            {
                nonneg = nonneg && c[i].mean >= 0.0;
                noise_mono = noise_mono && c_noisy[i].mean <= c[i].mean;
                if (i > 0)
                    mono = mono && c[i].mean >= c[i - 1].mean;
            }
        }
        std::array<CVec, 2> zero{CVec::Zero(sc.n_elements()), CVec::Zero(sc.n_elements())};
        const auto clean = make_capacity_scenario(sc.h, zero, sc.priors);
        opt.mode = ConfigMode::identical;
        const auto ci = capacity_lower_bound_mc(clean, pd, p.noise_power_mw(), opt);
        opt.mode = ConfigMode::orthogonal;
        const auto co = capacity_lower_bound_mc(clean, pd, p.noise_power_mw(), opt);
        double gap = 0.0;
        for (std::size_t i = 0; i < ci.size(); ++i)
            gap = std::max(gap, std::abs(ci[i].mean - co[i].mean) / std::max(co[i].mean, 1e-300));
        const bool ok = mono && nonneg && noise_mono && gap <= 1e-9;
        char buf[256];
        std::snprintf(buf, sizeof(buf), "monotone=%d nonnegative=%d noise_monotone=%d no_contamination_mode_gap=%.3g",
                      int(mono), int(nonneg), int(noise_mono), gap);
        return {"capacity-properties", ok, buf};
    }

    // Same seed, different worker counts: byte-identical CSV.
    inline CheckResult check_reproducibility(const ValidationOptions &o)
    {
        auto csv = [&](Experiment e, unsigned threads)
        {
            SweepSpec s;
            s.experiment = e;
            s.params = default_params(e);
            s.params.seed = o.seed;
            if (e == Experiment::chanest_det)
            {
                s.params.n_elements = 16;
                s.params.pilot_len = 32;
            }
            s.master_seed = o.seed;
            s.trials = 64;
            s.threads = threads;
            s.power_grid_dBm = parse_grid("0:20:40");
            std::ostringstream os;
            write_csv(os, run_experiment(s));
            return os.str();
        };
        bool same = true;
        for (Experiment e : {Experiment::chanest_det, Experiment::data_mse, Experiment::chanest_rayleigh,
                             Experiment::capacity})
            same = same && csv(e, 1) == csv(e, 4);
        return {"reproducibility", same, same ? "threads=1,4 byte-identical" : "csv differs across thread counts"};
    }

    inline std::vector<CheckResult> run_validation(const ValidationOptions &o = {})
    {
        std::vector<CheckResult> out;
        out.push_back(check_mml_equals_joint_ml(o));
        out.push_back(check_mse_trace_oracle(o, ConfigMode::identical));
        out.push_back(check_mse_trace_oracle(o, ConfigMode::orthogonal));
        out.push_back(check_contamination_floor(o));
        for (CsiMode m : {CsiMode::identical, CsiMode::orthogonal, CsiMode::perfect_csi})
            out.push_back(check_data_mse(o, m));
        out.push_back(check_data_mse_ordering(o));
        out.push_back(check_bayes_covariance(o));
        out.push_back(check_contamination_pp_invariance(o));
        out.push_back(check_high_snr_asymptote(o));
        out.push_back(check_rayleigh_properties(o));
        out.push_back(check_conditional_moments(o));
        out.push_back(check_cross_term_report(o));
        out.push_back(check_capacity_regularity(o));
        out.push_back(check_capacity_properties(o));
        out.push_back(check_reproducibility(o));
        return out;
    }

    inline bool all_pass(const std::vector<CheckResult> &r)
    {
        return std::all_of(r.begin(), r.end(), [](const CheckResult &c) { return c.pass; });
    }
} // namespace riscontam

#endif
