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

#include <riscontam/channels.hpp>
#include <riscontam/parallel.hpp>
#include <riscontam/stats.hpp>

#include <atomic>
#include <sstream>

using namespace riscontam;
using Catch::Approx;

TEST_CASE("streams are deterministic and distinct")
{
    RandomStream a(5, {tag("x"), 3}), b(5, {tag("x"), 3}), c(5, {tag("x"), 4}), d(6, {tag("x"), 3});
    const double va = a.normal();
    CHECK(va == b.normal());
    CHECK(va != c.normal());
    CHECK(va != d.normal());
    CHECK(stream_seed(1, {2, 3}) != stream_seed(1, {3, 2}));
    static_assert(tag("capacity") != tag("chanest-det"));
}

TEST_CASE("complex normal moments")
{
    RandomStream rng(11);
    const int n = 200000;
    cdouble mean = 0.0, pseudo = 0.0;
    double power = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const cdouble z = rng.complex_normal(4.0);
        mean += z;
        power += std::norm(z);
        pseudo += z * z;
    }
    CHECK(std::abs(mean / double(n)) < 0.02);
    CHECK(power / n == Approx(4.0).epsilon(0.01));
    CHECK(std::abs(pseudo / double(n)) < 0.05); // circular symmetry
}

TEST_CASE("correlated Rayleigh sampler reproduces its covariance")
{
    const auto cov = isotropic_covariance(parse_geometry("ura:2x2:0.25"), 3.0);
    const CorrelatedRayleighSampler s(cov);
    RandomStream rng(3);
    const int n = 100000;
    CMat acc = CMat::Zero(4, 4);
    for (int i = 0; i < n; ++i)
    {
        const CVec v = s(rng);
        acc += v * v.adjoint();
    }
    acc /= double(n);
    CHECK(max_abs(acc - cov.matrix) < 0.05);
}

TEST_CASE("RunningStats matches two-pass formulas")
{
    const std::vector<double> x{1.5, -2.0, 3.25, 7.0, 0.0, 2.5};
    double m = 0;
    for (double v : x)
        m += v;
    m /= double(x.size());
    double ss = 0;
    for (double v : x)
        ss += (v - m) * (v - m);
    const auto e = summarize(x);
    CHECK(e.mean == Approx(m));
    CHECK(e.stderr_ == Approx(std::sqrt(ss / 5.0 / 6.0)));
    CHECK(e.trials == 6);
    CHECK(summarize(std::vector<double>{4.0}).stderr_ == 0.0);
}

TEST_CASE("parallel_for visits each index once")
{
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(1000, 4, [&](std::size_t i) { hits[i]++; });
    for (auto &h : hits)
        CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }),
                    std::runtime_error);
    int count = 0;
    parallel_for(0, 4, [&](std::size_t) { ++count; });
    CHECK(count == 0);
}

TEST_CASE("deterministic fixture")
{
    SystemParams p;
    p.n_elements = 16;
    p.pilot_len = 32;
    p.geometry = parse_geometry("ura:4x4:0.5");
    const auto a = sample_deterministic_fixture(p, 9);
    const auto b = sample_deterministic_fixture(p, 9);
    const auto c = sample_deterministic_fixture(p, 10);
    CHECK(a.h[0] == b.h[0]);
    CHECK(a.p[1] == b.p[1]);
    CHECK(a.h[0] != c.h[0]);
    CHECK_NOTHROW(a.validate());
    CHECK(a.r(User::first) == a.q[0].cwiseProduct(a.p[0]));
    std::ostringstream os;
    write_channels_csv(os, a);
    CHECK(os.str().rfind("channel,index,re,im\n", 0) == 0);
}
