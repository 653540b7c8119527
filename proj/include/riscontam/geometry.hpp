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

#ifndef RISCONTAM_GEOMETRY_HPP
#define RISCONTAM_GEOMETRY_HPP

#include "linalg.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace riscontam
{
    enum class ArrayKind
    {
        ula,
        ura
    };

    // Planar RIS element layout. Spacing is given in wavelengths and is the
    // same along both axes; a ULA has a single row.
    struct RisGeometry
    {
        ArrayKind kind = ArrayKind::ura;
        int rows = 8;
        int cols = 8;
        double spacing = 0.5;

        int n_elements() const { return rows * cols; }

        void validate() const
        {
            require(rows >= 1 && cols >= 1, "geometry: rows and cols must be positive");
            require(kind != ArrayKind::ula || rows == 1, "geometry: a ULA has exactly one row");
            require(std::isfinite(spacing) && spacing > 0.0, "geometry: spacing must be positive");
        }

        // Token form used by config files and the CLI, e.g. "ura:8x8:0.5"
        std::string label() const
        {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%s:%dx%d:%g", kind == ArrayKind::ula ? "ula" : "ura", rows, cols, spacing);
            return buf;
        }

        bool operator==(const RisGeometry &) const = default;
    };

    namespace detail
    {
        inline int parse_positive_int(std::string_view s, std::string_view token)
        {
            int v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || p != s.data() + s.size() || v < 1)
                throw std::invalid_argument("geometry: bad element count in '" + std::string(token) + "'");
            return v;
        }
    } // namespace detail

    // Parses "ura:RxC:spacing", "ula:1xC:spacing" or "ula:C:spacing".
    inline RisGeometry parse_geometry(std::string_view token)
    {
        const auto c1 = token.find(':');
        const auto c2 = c1 == std::string_view::npos ? c1 : token.find(':', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos)
            throw std::invalid_argument("geometry: expected kind:RxC:spacing, got '" + std::string(token) + "'");

        RisGeometry g;
        const auto kind = token.substr(0, c1);
        if (kind == "ura")
            g.kind = ArrayKind::ura;
        else if (kind == "ula")
            g.kind = ArrayKind::ula;
        else
            throw std::invalid_argument("geometry: unknown kind '" + std::string(kind) + "'");

        const auto dims = token.substr(c1 + 1, c2 - c1 - 1);
        const auto x = dims.find('x');
        if (x == std::string_view::npos)
        {
            require(g.kind == ArrayKind::ula, "geometry: URA needs RxC dimensions");
            g.rows = 1;
            g.cols = detail::parse_positive_int(dims, token);
        }
        else
        {
            g.rows = detail::parse_positive_int(dims.substr(0, x), token);
            g.cols = detail::parse_positive_int(dims.substr(x + 1), token);
        }

        const std::string sp(token.substr(c2 + 1));
        std::size_t used = 0;
        try
        {
            g.spacing = std::stod(sp, &used);
        }
        catch (const std::exception &)
        {
            used = 0;
        }
        if (used == 0 || used != sp.size())
            throw std::invalid_argument("geometry: bad spacing in '" + std::string(token) + "'");
        g.validate();
        return g;
    }

    using Position = std::array<double, 3>;

    // Row-major grid in the x-y plane, origin at the first element, units of wavelengths.
    inline std::vector<Position> element_positions(const RisGeometry &geometry)
    {
        geometry.validate();
        std::vector<Position> pos;
        pos.reserve(static_cast<std::size_t>(geometry.n_elements()));
        for (int r = 0; r < geometry.rows; ++r)
            for (int c = 0; c < geometry.cols; ++c)
                pos.push_back({r * geometry.spacing, c * geometry.spacing, 0.0});
        return pos;
    }

    inline double sinc(double x)
    {
        if (x == 0.0)
            return 1.0;
        const double px = pi * x;
        return std::sin(px) / px;
    }

    inline double distance(const Position &a, const Position &b)
    {
        const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    // Spatial covariance of a Rayleigh-fading channel vector, beta is the
    // per-element variance (path loss included).
    struct SpatialCovariance
    {
        CMat matrix;
        double variance_per_element = 0.0;

        Eigen::Index size() const { return matrix.rows(); }
    };

    // Throws numerical_error if the matrix is not Hermitian PSD within tolerance.
    inline void check_covariance(const SpatialCovariance &cov)
    {
        const CMat &m = cov.matrix;
        if (m.rows() != m.cols())
            throw numerical_error("covariance: matrix is not square");
        const double scale = std::max(max_abs(m), 1e-300);
        if (hermitian_defect(m) > 1e-12 * scale)
            throw numerical_error("covariance: matrix is not Hermitian");
        if (m.size() > 0 && hermitian_eigenvalues(m).minCoeff() < -1e-10 * scale)
            throw numerical_error("covariance: matrix is not positive semidefinite");
    }

    // Isotropic-scattering correlation: entry (m,n) = beta * sinc(2 |u_m - u_n| / lambda).
    inline SpatialCovariance isotropic_covariance(const RisGeometry &geometry, double beta)
    {
        require(std::isfinite(beta) && beta >= 0.0, "isotropic_covariance: beta must be >= 0");
        const auto pos = element_positions(geometry);
        const auto n = static_cast<Eigen::Index>(pos.size());
        SpatialCovariance cov{CMat::Zero(n, n), beta};
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                cov.matrix(i, j) = beta * sinc(2.0 * distance(pos[i], pos[j]));
        check_covariance(cov);
        return cov;
    }

    // Wraps an arbitrary Hermitian PSD matrix, e.g. for tests and derived covariances.
    inline SpatialCovariance make_covariance(const CMat &matrix)
    {
        SpatialCovariance cov{matrix, matrix.rows() > 0 ? real_trace(matrix) / double(matrix.rows()) : 0.0};
        check_covariance(cov);
        return cov;
    }
} // namespace riscontam

#endif
