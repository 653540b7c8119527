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

#ifndef RISCONTAM_ESTIMATION_DETERMINISTIC_HPP
#define RISCONTAM_ESTIMATION_DETERMINISTIC_HPP

#include "channels.hpp"
#include "ris_sequences.hpp"

#include <optional>

namespace riscontam
{
    struct DetEstimate
    {
        CVec g_hat;
        std::optional<CVec> r_hat; // joint ML only
        CVec bias;
        double error_cov_trace = 0.0;
    };

    // Misspecified ML estimate, the BS ignores the path through the other RIS:
    //   g_hat = D_h^{-1} B^H y / (L sqrt(Pp)).  Requires B^H B = L I.
    inline CVec mml_estimate(const CVec &y, const ConfigSequence &b, const CVec &h, double pilot_power)
    {
        require(y.size() == b.pilot_len(), "mml_estimate: y must have length L");
        require(h.size() == b.n_elements(), "mml_estimate: h must have length N");
        require(pilot_power > 0.0, "mml_estimate: pilot power must be positive");
        const CVec h_inv = inverse_entries(h, "h");
        const double scale = 1.0 / (double(b.pilot_len()) * std::sqrt(pilot_power));
        return scale * h_inv.cwiseProduct(b.matrix().adjoint() * y);
    }

    struct JointMlEstimate
    {
        CVec g_hat;
        CVec r_hat;
    };

    // ML estimate of (g_k, r_k) under the complete model
    //   y = sqrt(Pp) [B_k D_h, B_j] [g; r] + w,
    // solved from the 2N normal equations. Rank-deficient systems (e.g. B1 = B2)
    // are rejected instead of pseudo-inverted; a minimum-norm solution carries
    // no information about the split between g and r.
    inline JointMlEstimate joint_ml_estimate(const CVec &y, const ConfigSequence &bk, const ConfigSequence &bj,
                                             const CVec &h, double pilot_power)
    {
        const auto n = bk.n_elements();
        const auto L = bk.pilot_len();
        require(bj.n_elements() == n && bj.pilot_len() == L, "joint_ml_estimate: B_k and B_j dimensions differ");
        require(y.size() == L && h.size() == n, "joint_ml_estimate: dimension mismatch");
        require(pilot_power > 0.0, "joint_ml_estimate: pilot power must be positive");
        if (L < 2 * n)
            throw numerical_error("joint_ml_estimate: needs L >= 2N observations for 2N unknowns");

        CMat a(L, 2 * n);
        a.leftCols(n) = bk.matrix() * h.asDiagonal();
        a.rightCols(n) = bj.matrix();
        const CMat normal = a.adjoint() * a;

        // condition number after symmetric diagonal scaling, so channel scale does not matter
        const RVec d = normal.diagonal().real().cwiseSqrt().cwiseInverse();
        const CMat scaled = d.asDiagonal() * normal * d.asDiagonal();
        const RVec ev = hermitian_eigenvalues(scaled);
        const double cond = ev.maxCoeff() / std::max(ev.minCoeff(), 0.0);
        if (!(cond <= 1e12))
            throw numerical_error("joint_ml_estimate: normal matrix is rank deficient (B_k^H B_j spans overlap); "
                                  "a pseudo-inverse would not give a useful estimate");

        const CVec sol = normal.ldlt().solve(a.adjoint() * y) / std::sqrt(pilot_power);
        return {sol.head(n), sol.tail(n)};
    }

    // Asymptotic bias of the MML estimate: D_h^{-1} D_q p for identical sequences, 0 for orthogonal.
    inline CVec bias(const CVec &h, const CVec &q, const CVec &p, ConfigMode mode)
    {
        require(h.size() == q.size() && h.size() == p.size(), "bias: dimension mismatch");
        if (mode == ConfigMode::orthogonal)
            return CVec::Zero(h.size());
        return inverse_entries(h, "h").cwiseProduct(q).cwiseProduct(p);
    }

    // Trace of the MML error covariance: ||b||^2 + noise / (L Pp) * sum 1/|h_n|^2
    inline double mse_trace(const CVec &b, const CVec &h, double pilot_power, int pilot_len, double noise_power)
    {
        require(pilot_power > 0.0 && pilot_len >= 1, "mse_trace: Pp and L must be positive");
        require(noise_power >= 0.0, "mse_trace: noise power must be >= 0");
        const double inv_h = inverse_entries(h, "h").squaredNorm();
        return b.squaredNorm() + noise_power / (double(pilot_len) * pilot_power) * inv_h;
    }

    // MSE / ||g||^2; may exceed 1 since no prior limits the estimate.
    inline double nmse(double mse, const CVec &g)
    {
        const double e = g.squaredNorm();
        require(e > 0.0, "nmse: g must be nonzero");
        return mse / e;
    }

    // Full estimate bundle for UE k on a channel fixture.
    inline DetEstimate estimate_deterministic(const ChannelSet &ch, const ConfigSequence &b1, const ConfigSequence &b2,
                                              ConfigMode mode, double pilot_power, double noise_power, User k,
                                              RandomStream *rng)
    {
        const int i = index(k);
        const ConfigSequence &bk = k == User::first ? b1 : b2;
        const CVec y = received_pilots(ch, b1, b2, pilot_power, noise_power, k, rng);
        DetEstimate est;
        est.g_hat = mml_estimate(y, bk, ch.h[i], pilot_power);
        est.bias = bias(ch.h[i], ch.q[i], ch.p[i], mode);
        est.error_cov_trace = mse_trace(est.bias, ch.h[i], pilot_power, int(bk.pilot_len()), noise_power);
        return est;
    }
} // namespace riscontam

#endif
