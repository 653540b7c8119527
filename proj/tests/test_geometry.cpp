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

#include <riscontam/geometry.hpp>
#include <riscontam/random.hpp>

using namespace riscontam;
using Catch::Approx;

TEST_CASE("parse_geometry")
{
    auto g = parse_geometry("ura:8x8:0.5");
    CHECK(g.kind == ArrayKind::ura);
    CHECK(g.n_elements() == 64);
    CHECK(g.label() == "ura:8x8:0.5");
    CHECK(parse_geometry("ula:1x64:0.5") == parse_geometry("ula:64:0.5"));
    CHECK(parse_geometry("ura:4x2:0.25").spacing == 0.25);

    CHECK_THROWS(parse_geometry("ura:8x8"));
    CHECK_THROWS(parse_geometry("ura:0x8:0.5"));
    CHECK_THROWS(parse_geometry("ura:8x8:-1"));
    CHECK_THROWS(parse_geometry("hex:8x8:0.5"));
    CHECK_THROWS(parse_geometry("ula:2x8:0.5"));
    CHECK_THROWS(parse_geometry("ura:8x8:0.5x"));
}

TEST_CASE("element positions form a regular grid")
{
    const auto pos = element_positions(parse_geometry("ura:3x4:0.5"));
    REQUIRE(pos.size() == 12);
    CHECK(distance(pos[0], pos[1]) == Approx(0.5));
    CHECK(distance(pos[0], pos[4]) == Approx(0.5));
    CHECK(distance(pos[0], pos[11]) == Approx(std::hypot(1.0, 1.5)));
}

TEST_CASE("isotropic covariance structure")
{
    const auto c = isotropic_covariance(parse_geometry("ura:4x4:0.5"), 2e-8);
    CHECK(c.variance_per_element == Approx(2e-8));
    for (Eigen::Index i = 0; i < 16; ++i)
        CHECK(c.matrix(i, i).real() == Approx(2e-8));
    CHECK(hermitian_defect(c.matrix) == 0.0);
    CHECK(c.matrix.imag().cwiseAbs().maxCoeff() == 0.0);
    // neighbours at half a wavelength are uncorrelated for isotropic scattering
    CHECK(std::abs(c.matrix(0, 1)) < 1e-20);
    CHECK(hermitian_eigenvalues(c.matrix).minCoeff() > -1e-10 * 2e-8);
}

// Oracle: average of exp(j 2 pi u.(p_a - p_b)) over directions u uniform on the
// unit sphere (positions in wavelengths), by a Fibonacci lattice quadrature.
static double sphere_average(double d)
{
    const int m = 200000;
    const double golden = pi * (3.0 - std::sqrt(5.0));
    double acc = 0.0;
    for (int i = 0; i < m; ++i)
    {
        const double z = 1.0 - (2.0 * i + 1.0) / m;
        const double r = std::sqrt(1.0 - z * z);
        const double x = r * std::cos(golden * i);
        acc += std::cos(2.0 * pi * d * x);
    }
    return acc / m;
}

TEST_CASE("isotropic correlation matches sphere integration")
{
    const auto geo = parse_geometry("ura:3x3:0.25");
    const auto c = isotropic_covariance(geo, 1.0);
    const auto pos = element_positions(geo);
    for (int a : {0, 1, 4})
        for (int b : {2, 5, 8})
        {
            const double d = distance(pos[a], pos[b]);
            CHECK(c.matrix(a, b).real() == Approx(sphere_average(d)).margin(2e-4));
        }
}

TEST_CASE("denser arrays are more correlated")
{
    const auto dense = isotropic_covariance(parse_geometry("ura:8x8:0.25"), 1.0);
    const auto sparse = isotropic_covariance(parse_geometry("ura:8x8:0.5"), 1.0);
    CHECK(dense.matrix.cwiseAbs2().sum() > sparse.matrix.cwiseAbs2().sum());
}

TEST_CASE("check_covariance rejects invalid matrices")
{
    CMat m = CMat::Identity(2, 2);
    m(0, 1) = 0.5;
    CHECK_THROWS_AS(make_covariance(m), numerical_error);
    CMat neg = CMat::Identity(2, 2);
    neg(1, 1) = -1.0;
    CHECK_THROWS_AS(make_covariance(neg), numerical_error);
    CHECK_NOTHROW(make_covariance(CMat::Identity(3, 3)));
}
