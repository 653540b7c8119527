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

#include <riscontam/estimation_deterministic.hpp>
#include <riscontam/stats.hpp>

using namespace riscontam;
using Catch::Approx;

namespace
{
    SystemParams small_params(int n, int l)
    {
        SystemParams p;
        p.n_elements = n;
        p.pilot_len = l;
        p.geometry = RisGeometry{ArrayKind::ula, 1, n, 0.5};
        return p;
    }

    // Least-squares fit of y = A x by QR, independent of the closed-form estimators.
    CVec least_squares(const CMat &a, const CVec &y) { return a.colPivHouseholderQr().solve(y); }
}

TEST_CASE("noise-free MML recovers g with orthogonal sequences")
{
    const auto p = small_params(8, 16);
    const auto ch = sample_deterministic_fixture(p, 4);
    const auto [b1, b2] = make_orthogonal_pair(8, 16);
    for (User k : {User::first, User::second})
    {
        const int i = index(k);
        const CVec y = received_pilots(ch, b1, b2, 2.0, 1e-12, k);
        const CVec g = mml_estimate(y, i == 0 ? b1 : b2, ch.h[i], 2.0);
        CHECK(max_abs(g - ch.g[i]) < 1e-12 * ch.g[i].cwiseAbs().maxCoeff());
    }
}

TEST_CASE("noise-free MML with identical sequences carries the bias")
{
    const auto p = small_params(8, 12);
    const auto ch = sample_deterministic_fixture(p, 5);
    const auto [b1, b2] = make_identical_pair(8, 12);
    const CVec y = received_pilots(ch, b1, b2, 1.0, 1e-12, User::first);
    const CVec g = mml_estimate(y, b1, ch.h[0], 1.0);
    const CVec ls = least_squares(b1.matrix() * ch.h[0].asDiagonal(), y);
    const CVec b = bias(ch.h[0], ch.q[0], ch.p[0], ConfigMode::identical);
    CHECK(max_abs(g - ls) < 1e-12 * ls.cwiseAbs().maxCoeff());
    CHECK(max_abs(g - (ch.g[0] + b)) < 1e-12 * ls.cwiseAbs().maxCoeff());
    CHECK(max_abs(b - ch.q[0].cwiseProduct(ch.p[0]).cwiseQuotient(ch.h[0])) < 1e-14 * b.cwiseAbs().maxCoeff());
    CHECK(bias(ch.h[0], ch.q[0], ch.p[0], ConfigMode::orthogonal).isZero(0.0));
}

TEST_CASE("joint ML equals MML for orthogonal sequences")
{
    const auto p = small_params(8, 16);
    const auto [b1, b2] = make_orthogonal_pair(8, 16);
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        const auto ch = sample_deterministic_fixture(p, s);
        RandomStream rng(s);
        const CVec y = received_pilots(ch, b1, b2, 1.0, 1e-12, User::first, &rng);
        const auto j = joint_ml_estimate(y, b1, b2, ch.h[0], 1.0);
        CHECK(max_abs(j.g_hat - mml_estimate(y, b1, ch.h[0], 1.0)) <= 1e-10);
        // stacked least squares as an independent route
        CMat a(16, 16);
        a << b1.matrix() * ch.h[0].asDiagonal(), b2.matrix();
        const CVec x = least_squares(a, y);
        CHECK(max_abs(j.g_hat - x.head(8)) < 1e-10);
        CHECK(max_abs(j.r_hat - x.tail(8)) < 1e-10);
    }
}

TEST_CASE("joint ML with identical sequences is not identifiable")
{
    const auto p = small_params(4, 8);
    const auto ch = sample_deterministic_fixture(p, 1);
    const auto [b1, b2] = make_identical_pair(4, 8);
    const CVec y = received_pilots(ch, b1, b2, 1.0, 1e-12, User::first);
    CHECK_THROWS_AS(joint_ml_estimate(y, b1, b2, ch.h[0], 1.0), numerical_error);
    const auto [s1, s2] = make_identical_pair(4, 6);
    CHECK_THROWS(joint_ml_estimate(CVec::Zero(6), s1, s2, ch.h[0], 1.0));
}

TEST_CASE("error trace agrees with the exact estimator covariance")
{
    const auto p = small_params(6, 13);
    const auto ch = sample_deterministic_fixture(p, 2);
    const auto [b1, b2] = make_identical_pair(6, 13);
    const double pp = 0.3, noise = 1e-12;
    // Cov(g_hat) = (noise / Pp) (A^H A)^{-1} with A = B D_h
    const CMat a = b1.matrix() * ch.h[0].asDiagonal();
    const double cov_trace = (noise / pp) * real_trace((a.adjoint() * a).inverse());
    const CVec b = bias(ch.h[0], ch.q[0], ch.p[0], ConfigMode::identical);
    CHECK(mse_trace(b, ch.h[0], pp, 13, noise) == Approx(b.squaredNorm() + cov_trace).epsilon(1e-10));
}

TEST_CASE("Monte-Carlo MSE matches the trace")
{
    const auto p = small_params(16, 64);
    const auto ch = sample_deterministic_fixture(p, 3);
    const auto [b1, b2] = make_orthogonal_pair(16, 64);
    const double pp = p.pilot_power_mw(), noise = p.noise_power_mw();
    RunningStats s;
    cdouble mean0 = 0.0;
    const int trials = 5000;
    for (int t = 0; t < trials; ++t)
    {
        RandomStream rng(77, {std::uint64_t(t)});
        const CVec e = mml_estimate(received_pilots(ch, b1, b2, pp, noise, User::first, &rng), b1, ch.h[0], pp) - ch.g[0];
        s.add(e.squaredNorm());
        mean0 += e(0);
    }
    const double cf = mse_trace(CVec::Zero(16), ch.h[0], pp, 64, noise);
    CHECK(std::abs(s.mean() - cf) <= 3.0 * s.stderr_of_mean());
    // unbiased without contamination
    const double sd0 = std::sqrt(noise / (64.0 * pp * std::norm(ch.h[0](0))) / trials);
    CHECK(std::abs(mean0 / double(trials)) <= 4.0 * sd0);
}

TEST_CASE("NMSE scaling and floors")
{
    SystemParams p;
    const auto ch = sample_deterministic_fixture(p, p.seed);
    const double noise = p.noise_power_mw();
    const CVec zero = CVec::Zero(p.n_elements);
    for (double db = -30; db < 60; db += 10)
    {
        const double a = mse_trace(zero, ch.h[0], dbm_to_linear(db), p.pilot_len, noise);
        const double b = mse_trace(zero, ch.h[0], dbm_to_linear(db + 10), p.pilot_len, noise);
        CHECK(a / b == Approx(10.0).epsilon(1e-12));
    }
    const CVec b = bias(ch.h[0], ch.q[0], ch.p[0], ConfigMode::identical);
    const double floor = b.squaredNorm() / ch.g[0].squaredNorm();
    const double at60 = nmse(mse_trace(b, ch.h[0], dbm_to_linear(60), p.pilot_len, noise), ch.g[0]);
    CHECK(std::abs(at60 - floor) / floor < 0.01);
    CHECK_THROWS(nmse(1.0, CVec::Zero(3)));
}

TEST_CASE("zero RIS-BS entries are rejected")
{
    CVec h = CVec::Ones(3);
    h(1) = 0.0;
    CHECK_THROWS_AS(inverse_entries(h, "h"), numerical_error);
    const auto [b1, b2] = make_orthogonal_pair(3, 6);
    CHECK_THROWS_AS(mml_estimate(CVec::Zero(6), b1, h, 1.0), numerical_error);
}
