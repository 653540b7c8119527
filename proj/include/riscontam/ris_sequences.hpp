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

#ifndef RISCONTAM_RIS_SEQUENCES_HPP
#define RISCONTAM_RIS_SEQUENCES_HPP

#include "linalg.hpp"
#include "params.hpp"

#include <utility>

namespace riscontam
{
    // L x N matrix of pilot-phase RIS configurations; row t holds the
    // reflection coefficients of all N elements during pilot slot t.
    class ConfigSequence
    {
    public:
        ConfigSequence() = default;

        explicit ConfigSequence(CMat matrix) : matrix_(std::move(matrix))
        {
            require(matrix_.rows() >= 1 && matrix_.cols() >= 1, "ConfigSequence: empty matrix");
            for (Eigen::Index i = 0; i < matrix_.size(); ++i)
                if (std::abs(std::abs(matrix_.data()[i]) - 1.0) > 1e-12)
                    throw std::invalid_argument("ConfigSequence: entries must have unit modulus");
            const auto L = double(matrix_.rows());
            const CMat gram = matrix_.adjoint() * matrix_;
            const CMat target = L * CMat::Identity(matrix_.cols(), matrix_.cols());
            if (max_abs(gram - target) > 1e-9 * L)
                throw std::invalid_argument("ConfigSequence: columns must satisfy B^H B = L I");
        }

        const CMat &matrix() const { return matrix_; }
        Eigen::Index pilot_len() const { return matrix_.rows(); }
        Eigen::Index n_elements() const { return matrix_.cols(); }

    private:
        CMat matrix_;
    };

    // Columns [first, first + count) of the L-point DFT matrix, entry (t,n) = exp(-j 2 pi t n / L).
    inline CMat dft_columns(int L, int first, int count)
    {
        CMat m(L, count);
        for (int t = 0; t < L; ++t)
            for (int n = 0; n < count; ++n)
            {
                // reduce the index first so the phase stays accurate for large L
                const long long idx = (static_cast<long long>(t) * (first + n)) % L;
                const double ang = -2.0 * pi * double(idx) / double(L);
                m(t, n) = cdouble(std::cos(ang), std::sin(ang));
            }
        return m;
    }

    // Both RISs use the same sequence: B1 = B2.
    inline std::pair<ConfigSequence, ConfigSequence> make_identical_pair(int N, int L)
    {
        require(N >= 1, "make_identical_pair: N must be >= 1");
        require(L >= N, "make_identical_pair: requires L >= N");
        ConfigSequence b(dft_columns(L, 0, N));
        return {b, b};
    }

    // Disjoint DFT column blocks: B1^H B2 = 0.
    inline std::pair<ConfigSequence, ConfigSequence> make_orthogonal_pair(int N, int L)
    {
        require(N >= 1, "make_orthogonal_pair: N must be >= 1");
        require(L >= 2 * N, "make_orthogonal_pair: requires L >= 2N");
        return {ConfigSequence(dft_columns(L, 0, N)), ConfigSequence(dft_columns(L, N, N))};
    }

    inline std::pair<ConfigSequence, ConfigSequence> make_sequence_pair(ConfigMode mode, int N, int L)
    {
        return mode == ConfigMode::identical ? make_identical_pair(N, L) : make_orthogonal_pair(N, L);
    }

    // Data-phase RIS configuration with reflection coefficients exp(-j phi_n).
    struct RisPhaseConfig
    {
        RVec phases;

        CVec coefficients() const
        {
            CVec c(phases.size());
            for (Eigen::Index n = 0; n < phases.size(); ++n)
                c(n) = std::polar(1.0, -phases(n));
            return c;
        }

        Eigen::Index size() const { return phases.size(); }
    };

    // phi_n = arg(h_n) + arg(g_hat_n); arg(0) is taken as 0.
    inline RisPhaseConfig phase_align(const CVec &h, const CVec &g_hat)
    {
        require(h.size() == g_hat.size(), "phase_align: dimension mismatch");
        RisPhaseConfig cfg{RVec(h.size())};
        for (Eigen::Index n = 0; n < h.size(); ++n)
            cfg.phases(n) = std::arg(h(n)) + std::arg(g_hat(n));
        return cfg;
    }

    // h^T diag(coefficients) g
    inline cdouble cascade(const CVec &h, const RisPhaseConfig &cfg, const CVec &g)
    {
        require(h.size() == cfg.size() && g.size() == cfg.size(), "cascade: dimension mismatch");
        return (h.array() * cfg.coefficients().array() * g.array()).sum();
    }
} // namespace riscontam

#endif
