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

#ifndef RISCONTAM_CAPACITY_BOUND_HPP
#define RISCONTAM_CAPACITY_BOUND_HPP

#include "channels.hpp"
#include "parallel.hpp"
#include "ris_sequences.hpp"
#include "stats.hpp"

#include <optional>
#include <vector>

namespace riscontam
{
    // Channel estimate at infinite pilot SNR: g_hat = g (orthogonal sequences)
    // or g_hat = g + D_h^{-1} r (identical sequences).
    inline CVec csi_error_model(ConfigMode mode, const ChannelSet &ch, User k)
    {
        const int i = index(k);
        if (mode == ConfigMode::orthogonal)
            return ch.g[i];
        return ch.g[i] + inverse_entries(ch.h[i], "h").cwiseProduct(ch.r(k));
    }

    // Moments of (g, r) given the side information g_hat.
    struct ConditionalMoments
    {
        CVec mean_g;   // E[g | g_hat]
        CVec mean_r;   // E[r | g_hat]
        CMat var_g;    // Var(g | g_hat)
        CMat var_r;    // Var(r | g_hat)
        CMat cross_gr; // E[g r^H | g_hat]
    };

    // Which expression supplies E[g r^H | g_hat].
    enum class CrossTerm
    {
        oracle, // exact Gaussian conditioning: Cov(g, r | g_hat) + E[g|g_hat] E[r|g_hat]^H
        paper   // g_hat g_hat^H S^{-1} Sigma_r D_h^{-H} - D_h^{-1} Sigma_r,  S = Sigma_g + D_h^{-1} Sigma_r D_h^{-H}
    };

    inline const char *to_string(CrossTerm c)
    {
        return c == CrossTerm::oracle ? "oracle" : "paper";
    }

    // Closed-form LMMSE conditioning of g and r on g_hat = g + e. All
    // g_hat-independent matrices are computed once.
    class PaperConditioner
    {
    public:
        PaperConditioner(const CVec &h, const SpatialCovariance &sigma_g, const SpatialCovariance &sigma_r,
                         ConfigMode mode)
            : mode_(mode)
        {
            const auto n = h.size();
            require(sigma_g.size() == n && sigma_r.size() == n, "PaperConditioner: dimension mismatch");
            if (mode == ConfigMode::orthogonal)
            {
                var_g_ = CMat::Zero(n, n);
                var_r_ = sigma_r.matrix;
                return;
            }
            const CVec h_inv = inverse_entries(h, "h");
            const CMat dhi = h_inv.asDiagonal();
            const CMat dhi_h = h_inv.conjugate().asDiagonal();
            const CMat &sg = sigma_g.matrix;
            const CMat &sr = sigma_r.matrix;
            const CMat s = hermitian_part(sg + dhi * sr * dhi_h);
            Eigen::LDLT<CMat> ldlt(s);
            const RVec ev = hermitian_eigenvalues(s);
            if (ldlt.info() != Eigen::Success || !(ev.minCoeff() > 1e-13 * ev.maxCoeff()))
                throw numerical_error("PaperConditioner: Sigma_g + D_h^{-1} Sigma_r D_h^{-H} is singular");
            const CMat s_inv = ldlt.solve(CMat::Identity(n, n));
            gain_g_ = sg * s_inv;
            gain_r_ = sr * dhi_h * s_inv;
            var_g_ = hermitian_part(sg - sg * s_inv * sg);
            var_r_ = hermitian_part(sr - sr * dhi_h * s_inv * dhi * sr);
            cross_right_ = s_inv * sr * dhi_h;
            cross_offset_ = dhi * sr;
        }

        ConditionalMoments operator()(const CVec &g_hat) const
        {
            const auto n = g_hat.size();
            require(n == var_g_.rows(), "PaperConditioner: g_hat dimension mismatch");
            if (mode_ == ConfigMode::orthogonal)
                return {g_hat, CVec::Zero(n), var_g_, var_r_, CMat::Zero(n, n)};
            ConditionalMoments m;
            m.mean_g = gain_g_ * g_hat;
            m.mean_r = gain_r_ * g_hat;
            m.var_g = var_g_;
            m.var_r = var_r_;
            m.cross_gr = g_hat * (g_hat.adjoint() * cross_right_) - cross_offset_;
            return m;
        }

    private:
        ConfigMode mode_;
        CMat gain_g_, gain_r_, var_g_, var_r_, cross_right_, cross_offset_;
    };

    // Exact conditioning of the stacked Gaussian z = [g; r] on g_hat = M z with
    // M = [I, D_h^{-1}] (identical) or M = [I, 0] (orthogonal), using Schur
    // complements and an eigendecomposition pseudo-inverse of M Sigma_z M^H.
    class GaussianConditioner
    {
    public:
        GaussianConditioner(const CVec &h, const SpatialCovariance &sigma_g, const SpatialCovariance &sigma_r,
                            ConfigMode mode)
            : n_(h.size())
        {
            require(sigma_g.size() == n_ && sigma_r.size() == n_, "GaussianConditioner: dimension mismatch");
            const auto n = n_;
            CMat sz = CMat::Zero(2 * n, 2 * n);
            sz.topLeftCorner(n, n) = sigma_g.matrix;
            sz.bottomRightCorner(n, n) = sigma_r.matrix;
            CMat m = CMat::Zero(n, 2 * n);
            m.leftCols(n) = CMat::Identity(n, n);
            if (mode == ConfigMode::identical)
                m.rightCols(n) = inverse_entries(h, "h").asDiagonal();

            const CMat c_zy = sz * m.adjoint();
            const CMat c_yy = hermitian_part(m * sz * m.adjoint());
            Eigen::SelfAdjointEigenSolver<CMat> es(c_yy);
            const RVec ev = es.eigenvalues();
            const double cut = 1e-14 * std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
            RVec inv_ev(ev.size());
            for (Eigen::Index i = 0; i < ev.size(); ++i)
                inv_ev(i) = ev(i) > cut ? 1.0 / ev(i) : 0.0;
            const CMat pinv = es.eigenvectors() * inv_ev.asDiagonal() * es.eigenvectors().adjoint();
            gain_ = c_zy * pinv;
            cov_ = hermitian_part(sz - gain_ * c_zy.adjoint());
        }

        ConditionalMoments operator()(const CVec &g_hat) const
        {
            require(g_hat.size() == n_, "GaussianConditioner: g_hat dimension mismatch");
            const auto n = n_;
            const CVec mean = gain_ * g_hat;
            ConditionalMoments m;
            m.mean_g = mean.head(n);
            m.mean_r = mean.tail(n);
            m.var_g = cov_.topLeftCorner(n, n);
            m.var_r = cov_.bottomRightCorner(n, n);
            m.cross_gr = cov_.topRightCorner(n, n) + m.mean_g * m.mean_r.adjoint();
            return m;
        }

    private:
        Eigen::Index n_;
        CMat gain_;
        CMat cov_;
    };

    inline ConditionalMoments conditional_moments_paper(const CVec &g_hat, const CVec &h,
                                                        const SpatialCovariance &sigma_g,
                                                        const SpatialCovariance &sigma_r, ConfigMode mode)
    {
        return PaperConditioner(h, sigma_g, sigma_r, mode)(g_hat);
    }

    inline ConditionalMoments conditional_moments_oracle(const CVec &g_hat, const CVec &h,
                                                         const SpatialCovariance &sigma_g,
                                                         const SpatialCovariance &sigma_r, ConfigMode mode)
    {
        return GaussianConditioner(h, sigma_g, sigma_r, mode)(g_hat);
    }

    struct CapacitySample
    {
        std::optional<cdouble> v; // realized overall channel, when the true channels are supplied
        cdouble cond_mean_v;
        double cond_var_v = 0.0;
        double se_term = 0.0;
    };

    // Power-normalized conditional statistics of v / sqrt(Pd).
    struct UnitConditionalStats
    {
        cdouble mean;  // phi_k^T D_h E[g|.] + phi_j^T E[r|.]
        double var;    // Var of phi_k^T D_h g + phi_j^T r given the side information, before clipping
    };

    inline UnitConditionalStats unit_conditional_stats(const ConditionalMoments &mom, const RisPhaseConfig &phi_k,
                                                       const RisPhaseConfig &phi_j, const CVec &h)
    {
        const CVec c = h.cwiseProduct(phi_k.coefficients()); // D_h phi_k
        const CVec d = phi_j.coefficients();
        const cdouble mean = (c.transpose() * mom.mean_g)(0, 0) + (d.transpose() * mom.mean_r)(0, 0);
        auto quad = [](const CVec &a, const CMat &m, const CVec &b) -> cdouble
        { return (a.transpose() * m * b.conjugate())(0, 0); };
        const CMat cross_cov = mom.cross_gr - mom.mean_g * mom.mean_r.adjoint();
        const double var = quad(c, mom.var_g, c).real() + quad(d, mom.var_r, d).real() +
                           2.0 * quad(c, cross_cov, d).real();
        return {mean, var};
    }

    inline double se_term(const UnitConditionalStats &u, double data_power, double noise_power)
    {
        const double var = data_power * std::max(u.var, 0.0);
        return std::log2(1.0 + data_power * std::norm(u.mean) / (var + noise_power));
    }

    // log2(1 + |E[v|.]|^2 / (Var(v|.) + noise)); negative variances from rounding are clipped to 0.
    inline CapacitySample capacity_sample(const ConditionalMoments &mom, const RisPhaseConfig &phi_k,
                                          const RisPhaseConfig &phi_j, const CVec &h, double data_power,
                                          double noise_power)
    {
        const auto u = unit_conditional_stats(mom, phi_k, phi_j, h);
        CapacitySample s;
        s.cond_mean_v = std::sqrt(data_power) * u.mean;
        s.cond_var_v = data_power * std::max(u.var, 0.0);
        s.se_term = se_term(u, data_power, noise_power);
        return s;
    }

    inline CapacitySample capacity_sample(const ConditionalMoments &mom, const RisPhaseConfig &phi_k,
                                          const RisPhaseConfig &phi_j, const CVec &h, const CVec &g, const CVec &r,
                                          double data_power, double noise_power)
    {
        CapacitySample s = capacity_sample(mom, phi_k, phi_j, h, data_power, noise_power);
        s.v = std::sqrt(data_power) * (cascade(h, phi_k, g) + (phi_j.coefficients().array() * r.array()).sum());
        return s;
    }

    // Fixed large-scale state of the capacity experiment: RIS-BS channels h, q
    // (frozen) and the Rayleigh priors of g and p.
    struct CapacityScenario
    {
        std::array<CVec, 2> h, q;
        ChannelPriors priors;
        std::array<SpatialCovariance, 2> sigma_r;

        Eigen::Index n_elements() const { return h[0].size(); }
    };

    inline CapacityScenario make_capacity_scenario(const std::array<CVec, 2> &h, const std::array<CVec, 2> &q,
                                                   const ChannelPriors &priors)
    {
        CapacityScenario sc{h, q, priors, {}};
        for (int k = 0; k < 2; ++k)
            sc.sigma_r[k] = sigma_r(priors, q[k]);
        return sc;
    }

    // h, q from the seeded fixture; isotropic priors from the geometry.
    inline CapacityScenario make_capacity_scenario(const SystemParams &params)
    {
        const auto fixture = sample_deterministic_fixture(params, params.seed);
        return make_capacity_scenario(fixture.h, fixture.q, isotropic_priors(params));
    }

    struct CapacityOptions
    {
        ConfigMode mode = ConfigMode::orthogonal;
        CrossTerm cross_term = CrossTerm::oracle;
        User user = User::first;
        std::size_t trials = 10000;
        std::uint64_t seed = 1;
        unsigned threads = 1;
    };

    // Per-trial draw of both users' g and p. Trial t always uses stream (seed, t),
    // so the two sequence modes see the same channel realizations.
    inline ChannelSet draw_capacity_channels(const CapacityScenario &sc,
                                             const std::array<CorrelatedRayleighSampler, 2> &g_samplers,
                                             const std::array<CorrelatedRayleighSampler, 2> &p_samplers,
                                             std::uint64_t seed, std::size_t trial)
    {
        RandomStream rng(seed, {tag("capacity"), trial});
        ChannelSet ch;
        for (int k = 0; k < 2; ++k)
        {
            ch.h[k] = sc.h[k];
            ch.q[k] = sc.q[k];
            ch.g[k] = g_samplers[k](rng);
            ch.p[k] = p_samplers[k](rng);
        }
        return ch;
    }

    // Monte-Carlo average of the capacity lower bound for every data power in
    // `data_powers` (linear mW). Both RISs are phase-aligned to their own
    // estimates. The same realizations are reused across powers.
    inline std::vector<Estimate> capacity_lower_bound_mc(const CapacityScenario &sc, std::span<const double> data_powers,
                                                         double noise_power, const CapacityOptions &opt)
    {
        require(opt.trials >= 1, "capacity_lower_bound_mc: trials must be >= 1");
        const int k = index(opt.user);
        const int j = index(other(opt.user));
        const std::array<CorrelatedRayleighSampler, 2> gs{CorrelatedRayleighSampler(sc.priors.sigma_g),
                                                          CorrelatedRayleighSampler(sc.priors.sigma_g)};
        const std::array<CorrelatedRayleighSampler, 2> ps{CorrelatedRayleighSampler(sc.priors.sigma_p),
                                                          CorrelatedRayleighSampler(sc.priors.sigma_p)};
        std::optional<PaperConditioner> paper;
        std::optional<GaussianConditioner> oracle;
        if (opt.cross_term == CrossTerm::paper)
            paper.emplace(sc.h[k], sc.priors.sigma_g, sc.sigma_r[k], opt.mode);
        else
            oracle.emplace(sc.h[k], sc.priors.sigma_g, sc.sigma_r[k], opt.mode);

        std::vector<UnitConditionalStats> stats(opt.trials);
        parallel_for(opt.trials, opt.threads, [&](std::size_t t)
                     {
            const ChannelSet ch = draw_capacity_channels(sc, gs, ps, opt.seed, t);
            const CVec gk = csi_error_model(opt.mode, ch, static_cast<User>(k));
            const CVec gj = csi_error_model(opt.mode, ch, static_cast<User>(j));
            const auto phi_k = phase_align(sc.h[k], gk);
            const auto phi_j = phase_align(sc.h[j], gj);
            const auto mom = paper ? (*paper)(gk) : (*oracle)(gk);
            stats[t] = unit_conditional_stats(mom, phi_k, phi_j, sc.h[k]); });

        std::vector<Estimate> out;
        std::vector<double> values(opt.trials);
        for (double pd : data_powers)
        {
            for (std::size_t t = 0; t < opt.trials; ++t)
                values[t] = se_term(stats[t], pd, noise_power);
            out.push_back(summarize(values));
        }
        return out;
    }

    // Single-power form: Pd, noise, geometry and seed come from params.
    inline Estimate capacity_lower_bound_mc(const SystemParams &params, const ChannelPriors &priors,
                                            std::size_t trials, RandomStream &rng)
    {
        const auto fixture = sample_deterministic_fixture(params, params.seed);
        const auto sc = make_capacity_scenario(fixture.h, fixture.q, priors);
        CapacityOptions opt;
        opt.mode = params.config_mode;
        opt.trials = trials;
        opt.seed = rng.engine()();
        const double pd = params.data_power_mw();
        return capacity_lower_bound_mc(sc, std::span<const double>(&pd, 1), params.noise_power_mw(), opt).front();
    }

    // Largest absolute sample correlation between the receiver noise w and a few
    // functions of the side information; the bound needs E[w | side info] = 0 and
    // w uncorrelated with x and v given it.
    inline double regularity_max_correlation(const CapacityScenario &sc, ConfigMode mode, std::size_t trials,
                                             std::uint64_t seed)
    {
        const std::array<CorrelatedRayleighSampler, 2> gs{CorrelatedRayleighSampler(sc.priors.sigma_g),
                                                          CorrelatedRayleighSampler(sc.priors.sigma_g)};
        const std::array<CorrelatedRayleighSampler, 2> ps{CorrelatedRayleighSampler(sc.priors.sigma_p),
                                                          CorrelatedRayleighSampler(sc.priors.sigma_p)};
        std::vector<std::array<double, 6>> rows(trials);
        for (std::size_t t = 0; t < trials; ++t)
        {
            const ChannelSet ch = draw_capacity_channels(sc, gs, ps, seed, t);
            RandomStream rng(seed, {tag("capacity-noise"), t});
            const cdouble w = rng.complex_normal(1.0);
            const cdouble x = rng.complex_normal(1.0);
            const CVec g1 = csi_error_model(mode, ch, User::first);
            const CVec g2 = csi_error_model(mode, ch, User::second);
            const cdouble gain = cascade(sc.h[0], phase_align(sc.h[0], g1), g1);
            const cdouble xw = x * std::conj(w);
            rows[t] = {w.real(), w.imag(), g1.squaredNorm(), g1(0).real(), std::abs(gain) + g2.norm(), xw.real()};
        }
        auto corr = [&](int a, int b)
        {
            double ma = 0, mb = 0;
            for (const auto &r : rows)
                ma += r[a], mb += r[b];
            ma /= double(trials);
            mb /= double(trials);
            double sab = 0, saa = 0, sbb = 0;
            for (const auto &r : rows)
            {
                sab += (r[a] - ma) * (r[b] - mb);
                saa += (r[a] - ma) * (r[a] - ma);
                sbb += (r[b] - mb) * (r[b] - mb);
            }
            return sab / std::sqrt(std::max(saa * sbb, 1e-300));
        };
        double worst = 0.0;
        for (int a : {0, 1})
            for (int b : {2, 3, 4})
                worst = std::max(worst, std::abs(corr(a, b)));
        // x w^* against side-information functions (second condition)
        for (int b : {2, 3, 4})
            worst = std::max(worst, std::abs(corr(5, b)));
        return worst;
    }
} // namespace riscontam

#endif
