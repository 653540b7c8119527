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

#include "catch_amalgamated.hpp"

#include <riscontam/capacity_bound.hpp>

using namespace riscontam;
using Catch::Approx;

namespace
{
    CMat random_pd(Eigen::Index n, RandomStream &rng)
    {
        CMat a(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            a.col(j) = rng.complex_normal_vector(n, 1.0);
        CMat m = a * a.adjoint() / double(n);
        m.diagonal().array() += 0.1;
        return hermitian_part(m);
    }

    double rel(const CMat &a, const CMat &b) { return (a - b).norm() / std::max(b.norm(), 1e-300); }

    CapacityScenario small_scenario(std::uint64_t seed)
    {
        SystemParams p;
        p.n_elements = 16;
        p.pilot_len = 32;
        p.geometry = parse_geometry("ura:4x4:0.5");
        p.seed = seed;
        return make_capacity_scenario(p);
    }
}

TEST_CASE("CSI error model")
{
    SystemParams p;
    p.n_elements = 16;
    p.pilot_len = 32;
    p.geometry = parse_geometry("ura:4x4:0.5");
    auto ch = sample_deterministic_fixture(p, 2);
    CHECK(csi_error_model(ConfigMode::orthogonal, ch, User::first) == ch.g[0]);
    const CVec e = csi_error_model(ConfigMode::identical, ch, User::second) - ch.g[1];
    CHECK(max_abs(e - ch.q[1].cwiseProduct(ch.p[1]).cwiseQuotient(ch.h[1])) < 1e-14 * e.cwiseAbs().maxCoeff());
    ch.q[0].setZero();
    CHECK(csi_error_model(ConfigMode::identical, ch, User::first) == ch.g[0]);
}

TEST_CASE("orthogonal conditioning is trivial")
{
    RandomStream rng(1);
    const Eigen::Index n = 5;
    const CVec h = rng.complex_normal_vector(n), gh = rng.complex_normal_vector(n);
    const auto sg = make_covariance(random_pd(n, rng)), sr = make_covariance(random_pd(n, rng));
    const auto a = conditional_moments_paper(gh, h, sg, sr, ConfigMode::orthogonal);
    CHECK(a.mean_g == gh);
    CHECK(a.mean_r.isZero(0.0));
    CHECK(a.var_g.isZero(0.0));
    CHECK(a.var_r == sr.matrix);
    CHECK(a.cross_gr.isZero(0.0));
    const auto b = conditional_moments_oracle(gh, h, sg, sr, ConfigMode::orthogonal);
    CHECK(max_abs(b.mean_g - gh) < 1e-12);
    CHECK(max_abs(b.mean_r) < 1e-12);
    CHECK(max_abs(b.var_g) < 1e-12);
    CHECK(max_abs(b.var_r - sr.matrix) < 1e-12);
    CHECK(max_abs(b.cross_gr) < 1e-12);
}

TEST_CASE("identical conditioning without contamination")
{
    RandomStream rng(2);
    const Eigen::Index n = 5;
    const CVec h = rng.complex_normal_vector(n), gh = rng.complex_normal_vector(n);
    const auto sg = make_covariance(random_pd(n, rng));
    const auto zero = make_covariance(CMat::Zero(n, n));
    const auto a = conditional_moments_paper(gh, h, sg, zero, ConfigMode::identical);
    CHECK(max_abs(a.mean_g - gh) < 1e-12);
    CHECK(max_abs(a.var_g) < 1e-12);
}

TEST_CASE("closed-form conditioning equals Gaussian conditioning")
{
    for (std::uint64_t s = 0; s < 50; ++s)
    {
        RandomStream rng(100 + s);
        const Eigen::Index n = 6;
        const CVec h = rng.complex_normal_vector(n), gh = rng.complex_normal_vector(n);
        const auto sg = make_covariance(random_pd(n, rng)), sr = make_covariance(random_pd(n, rng));
        const auto a = conditional_moments_paper(gh, h, sg, sr, ConfigMode::identical);
        const auto b = conditional_moments_oracle(gh, h, sg, sr, ConfigMode::identical);
        CHECK(rel(a.mean_g, b.mean_g) < 1e-9);
        CHECK(rel(a.mean_r, b.mean_r) < 1e-9);
        CHECK(rel(a.var_g, b.var_g) < 1e-9);
        CHECK(rel(a.var_r, b.var_r) < 1e-9);
        // conditioning must reproduce the observation
        CHECK(rel(a.mean_g + h.cwiseInverse().cwiseProduct(a.mean_r), gh) < 1e-9);
        CHECK(hermitian_eigenvalues(b.var_g).minCoeff() > -1e-10);
        CHECK(hermitian_eigenvalues(b.var_r).minCoeff() > -1e-10);
    }
}

// Oracle check by simulation: residuals z - E[z | g_hat] must be uncorrelated
// with g_hat and carry the conditional covariance, including the g/r block.
TEST_CASE("Gaussian conditioning verified by simulation")
{
    RandomStream setup(7);
    const Eigen::Index n = 3;
    const CVec h = setup.complex_normal_vector(n);
    const auto sg = make_covariance(random_pd(n, setup)), sr = make_covariance(random_pd(n, setup));
    const CorrelatedRayleighSampler gs(sg), rs(sr);
    const GaussianConditioner cond(h, sg, sr, ConfigMode::identical);
    const auto any = cond(CVec::Zero(n));
    const CMat cross_cov = any.cross_gr; // zero g_hat: E[g r^H | 0] is the covariance block
    CMat eg = CMat::Zero(n, n), er = CMat::Zero(n, n), egr = CMat::Zero(n, n), eghat = CMat::Zero(n, n);
    const int trials = 100000;
    for (int t = 0; t < trials; ++t)
    {
        RandomStream rng(8, {std::uint64_t(t)});
        const CVec g = gs(rng), r = rs(rng);
        const CVec gh = g + h.cwiseInverse().cwiseProduct(r);
        const auto m = cond(gh);
        const CVec dg = g - m.mean_g, dr = r - m.mean_r;
        eg += dg * dg.adjoint();
        er += dr * dr.adjoint();
        egr += dg * dr.adjoint();
        eghat += dg * gh.adjoint();
    }
    const double tn = trials;
    CHECK(max_abs(eg / tn - any.var_g) < 0.02);
    CHECK(max_abs(er / tn - any.var_r) < 0.02);
    CHECK(max_abs(egr / tn - cross_cov) < 0.02);
    CHECK(max_abs(eghat / tn) < 0.03);
}

TEST_CASE("capacity sample")
{
    ConditionalMoments m;
    m.mean_g = CVec::Zero(1);
    m.mean_r = CVec::Zero(1);
    m.var_g = CMat::Zero(1, 1);
    m.var_r = CMat::Zero(1, 1);
    m.cross_gr = CMat::Zero(1, 1);
    const RisPhaseConfig zero{RVec::Zero(1)};
    CVec h(1);
    h << 1.0;
    m.mean_g(0) = 1.0;
    auto s = capacity_sample(m, zero, zero, h, 1.0, 1.0);
    CHECK(s.se_term == Approx(1.0));
    CHECK(std::abs(s.cond_mean_v - cdouble(1.0)) < 1e-15);
    m.mean_g(0) = 0.0;
    CHECK(capacity_sample(m, zero, zero, h, 1.0, 1.0).se_term == 0.0);
    // clipped variance
    m.mean_g(0) = 1.0;
    m.var_g(0, 0) = -1e-12;
    s = capacity_sample(m, zero, zero, h, 1.0, 1.0);
    CHECK(s.cond_var_v == 0.0);
    CHECK(s.se_term == Approx(1.0));
}

TEST_CASE("perfect-CSI orthogonal sample")
{
    const auto sc = small_scenario(3);
    RandomStream rng(4);
    const CVec g = CorrelatedRayleighSampler(sc.priors.sigma_g)(rng);
    const CVec r = sc.q[0].cwiseProduct(CorrelatedRayleighSampler(sc.priors.sigma_p)(rng));
    const auto mom = conditional_moments_paper(g, sc.h[0], sc.priors.sigma_g, sc.sigma_r[0], ConfigMode::orthogonal);
    const auto phik = phase_align(sc.h[0], g);
    const auto phij = phase_align(sc.h[1], rng.complex_normal_vector(16));
    const double pd = 10.0, s2 = 1e-12;
    const auto s = capacity_sample(mom, phik, phij, sc.h[0], g, r, pd, s2);
    const CVec cj = phij.coefficients();
    const double var_r = (cj.transpose() * sc.sigma_r[0].matrix * cj.conjugate())(0, 0).real();
    const double known = pd * std::norm(cascade(sc.h[0], phik, g));
    CHECK(s.se_term == Approx(std::log2(1.0 + known / (var_r * pd + s2))).epsilon(1e-12));
    REQUIRE(s.v.has_value());
    CHECK(std::abs(*s.v - std::sqrt(pd) * (cascade(sc.h[0], phik, g) + (cj.array() * r.array()).sum())) < 1e-12 * std::abs(*s.v));
}

TEST_CASE("se term is non-increasing in the noise power")
{
    RandomStream rng(5);
    const Eigen::Index n = 4;
    const CVec h = rng.complex_normal_vector(n), gh = rng.complex_normal_vector(n);
    const auto sg = make_covariance(random_pd(n, rng)), sr = make_covariance(random_pd(n, rng));
    const auto m = conditional_moments_oracle(gh, h, sg, sr, ConfigMode::identical);
    const auto pk = phase_align(h, gh), pj = phase_align(rng.complex_normal_vector(n), gh);
    double prev = 1e300;
    for (double s2 : {1e-6, 1e-3, 1.0, 1e3, 1e9})
    {
        const double v = capacity_sample(m, pk, pj, h, 1.0, s2).se_term;
        CHECK(v >= 0.0);
        CHECK(v <= prev);
        prev = v;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("Monte-Carlo bound")
{
    const auto sc = small_scenario(9);
    const std::vector<double> pd{1e-3, 1.0, 1e3, 1e6};
    CapacityOptions opt;
    opt.trials = 300;
    opt.seed = 21;

    SECTION("vanishes with overwhelming noise")
    {
        opt.mode = ConfigMode::identical;
        for (const auto &e : capacity_lower_bound_mc(sc, pd, 1e12, opt))
            CHECK(e.mean < 1e-9);
    }
    SECTION("modes agree without the unintended path")
    {
        std::array<CVec, 2> zero{CVec::Zero(16), CVec::Zero(16)};
        const auto clean = make_capacity_scenario(sc.h, zero, sc.priors);
        opt.mode = ConfigMode::identical;
        const auto a = capacity_lower_bound_mc(clean, pd, 1e-12, opt);
        opt.mode = ConfigMode::orthogonal;
        const auto b = capacity_lower_bound_mc(clean, pd, 1e-12, opt);
        for (std::size_t i = 0; i < pd.size(); ++i)
            CHECK(a[i].mean == Approx(b[i].mean).epsilon(1e-12));
    }
    SECTION("independent of the worker count and monotone in power")
    {
        for (ConfigMode m : {ConfigMode::identical, ConfigMode::orthogonal})
        {
            opt.mode = m;
            opt.threads = 1;
            const auto a = capacity_lower_bound_mc(sc, pd, 1e-12, opt);
            opt.threads = 3;
            const auto b = capacity_lower_bound_mc(sc, pd, 1e-12, opt);
            for (std::size_t i = 0; i < pd.size(); ++i)
            {
                CHECK(a[i].mean == b[i].mean);
                CHECK(a[i].stderr_ == b[i].stderr_);
                if (i > 0)
                    CHECK(a[i].mean >= a[i - 1].mean);
            }
        }
    }
    SECTION("params overload")
    {
        SystemParams p;
        p.n_elements = 16;
        p.pilot_len = 32;
        p.geometry = parse_geometry("ura:4x4:0.5");
        p.data_power_dBm = 30.0;
        RandomStream rng(1);
        const auto e = capacity_lower_bound_mc(p, isotropic_priors(p), 200, rng);
        CHECK(e.trials == 200);
        CHECK(e.mean > 0.0);
        CHECK(e.stderr_ > 0.0);
    }
}

TEST_CASE("noise is uncorrelated with the side information")
{
    const auto sc = small_scenario(4);
    const std::size_t trials = 4000;
    for (ConfigMode m : {ConfigMode::identical, ConfigMode::orthogonal})
        CHECK(regularity_max_correlation(sc, m, trials, 3) <= 4.0 / std::sqrt(double(trials)));
}
