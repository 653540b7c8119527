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

#ifndef RISCONTAM_ESTIMATION_BAYESIAN_HPP
#define RISCONTAM_ESTIMATION_BAYESIAN_HPP

#include "channels.hpp"
#include "geometry.hpp"
#include "ris_sequences.hpp"

namespace riscontam
{
    // Second-order statistics behind the misspecified MMSE estimator of g_k:
    //   c_gy     = E[g y_hat^H] = sqrt(Pp) Sigma_g D_h^H B_k^H               (N x L)
    //   c_yy_hat = Pp B_k D_h Sigma_g D_h^H B_k^H + noise I                   (L x L)
    //   c_yy     = c_yy_hat + Pp B_j Sigma_r B_j^H                            (L x L)
    struct BayesCovariances
    {
        CMat c_gy;
        CMat c_yy_hat;
        CMat c_yy;
    };

    inline BayesCovariances make_bayes_covariances(const ConfigSequence &bk, const ConfigSequence &bj, const CVec &h,
                                                   const SpatialCovariance &sigma_g, const SpatialCovariance &sigma_r,
                                                   double pilot_power, double noise_power)
    {
        const auto L = bk.pilot_len();
        require(bj.pilot_len() == L && bj.n_elements() == bk.n_elements(), "make_bayes_covariances: B dims differ");
        require(h.size() == bk.n_elements() && sigma_g.size() == h.size() && sigma_r.size() == h.size(),
                "make_bayes_covariances: dimension mismatch");
        const CMat a = bk.matrix() * h.asDiagonal();
        BayesCovariances c;
        c.c_gy = std::sqrt(pilot_power) * sigma_g.matrix * a.adjoint();
        c.c_yy_hat = pilot_power * a * sigma_g.matrix * a.adjoint() + noise_power * CMat::Identity(L, L);
        c.c_yy = c.c_yy_hat + pilot_power * bj.matrix() * sigma_r.matrix * bj.matrix().adjoint();
        return c;
    }

    // Error covariance split into the part the BS expects and the part caused
    // by the unmodeled path through the other RIS.
    struct ErrorCovariance
    {
        CMat uncontaminated;
        CMat contamination;

        CMat total() const { return uncontaminated + contamination; }
    };

    // Direct evaluation with linear solves against c_yy_hat:
    //   Sigma_g - C C_hat^{-1} C^H + Pp C C_hat^{-1} B_j Sigma_r B_j^H C_hat^{-1} C^H
    // Accurate while noise is not negligible against the pilot signal; for the
    // high-SNR regime use MisspecifiedMmse::error_covariance.
    inline ErrorCovariance error_covariance(const BayesCovariances &cov, const SpatialCovariance &sigma_g,
                                            const ConfigSequence &bj, const SpatialCovariance &sigma_r,
                                            double pilot_power)
    {
        Eigen::LLT<CMat> llt(cov.c_yy_hat);
        if (llt.info() != Eigen::Success)
            throw numerical_error("error_covariance: C_yy_hat is not positive definite");
        const CMat gain = llt.solve(cov.c_gy.adjoint()).adjoint(); // C_gy C_yy_hat^{-1}
        ErrorCovariance e;
        e.uncontaminated = hermitian_part(sigma_g.matrix - gain * cov.c_gy.adjoint());
        const CMat t = gain * bj.matrix();
        e.contamination = hermitian_part(pilot_power * t * sigma_r.matrix * t.adjoint());
        return e;
    }

    // Misspecified MMSE estimator of g_k for the model the BS assumes,
    //   y = sqrt(Pp) B_k D_h g + w,  g ~ CN(0, Sigma_g),
    // applied to observations that also contain sqrt(Pp) B_j r.
    //
    // With Sigma_g = F F^H, A = B_k D_h and s = noise / Pp, every L x L inverse
    // is rewritten through the N x N matrix K = F^H A^H A F + s I:
    //   C_gy C_yy_hat^{-1} = F K^{-1} F^H A^H / sqrt(Pp)
    //   uncontaminated     = s F K^{-1} F^H
    //   contamination      = T Sigma_r T^H,   T = F K^{-1} F^H A^H B_j
    // This stays accurate as s -> 0, where C_yy_hat becomes nearly singular.
    class MisspecifiedMmse
    {
    public:
        MisspecifiedMmse(const ConfigSequence &bk, const CVec &h, const SpatialCovariance &sigma_g, double pilot_power,
                         double noise_power)
            : bk_(bk), pilot_power_(pilot_power), s_(noise_power / pilot_power)
        {
            require(pilot_power > 0.0, "MisspecifiedMmse: pilot power must be positive");
            require(noise_power > 0.0, "MisspecifiedMmse: noise power must be positive");
            require(h.size() == bk.n_elements() && sigma_g.size() == h.size(), "MisspecifiedMmse: dimension mismatch");
            a_ = bk.matrix() * h.asDiagonal();
            f_ = psd_factor(sigma_g.matrix);
            const CMat af = a_ * f_;
            CMat k = af.adjoint() * af;
            k.diagonal().array() += s_;
            llt_.compute(hermitian_part(k));
            if (llt_.info() != Eigen::Success)
                throw numerical_error("MisspecifiedMmse: system matrix is not positive definite");
            // F K^{-1} F^H, shared by all quantities below
            core_ = f_ * llt_.solve(f_.adjoint());
            filter_ = core_ * a_.adjoint() / std::sqrt(pilot_power);
        }

        CVec estimate(const CVec &y) const
        {
            require(y.size() == filter_.cols(), "MisspecifiedMmse: y must have length L");
            return filter_ * y;
        }

        // N x L linear filter W with g_hat = W y
        const CMat &filter() const { return filter_; }

        ErrorCovariance error_covariance(const ConfigSequence &bj, const SpatialCovariance &sigma_r) const
        {
            require(bj.pilot_len() == bk_.pilot_len() && sigma_r.size() == core_.rows(),
                    "MisspecifiedMmse: dimension mismatch");
            ErrorCovariance e;
            e.uncontaminated = hermitian_part(s_ * core_);
            const CMat t = core_ * (a_.adjoint() * bj.matrix());
            e.contamination = hermitian_part(t * sigma_r.matrix * t.adjoint());
            return e;
        }

        double pilot_power() const { return pilot_power_; }

    private:
        ConfigSequence bk_;
        double pilot_power_;
        double s_;
        CMat a_;
        CMat f_;
        Eigen::LLT<CMat> llt_;
        CMat core_;
        CMat filter_;
    };

    inline CVec mmse_channel_estimate(const CVec &y, const ConfigSequence &b, const CVec &h,
                                      const SpatialCovariance &sigma_g, double pilot_power, double noise_power)
    {
        return MisspecifiedMmse(b, h, sigma_g, pilot_power, noise_power).estimate(y);
    }

    // Noise-free limit of the error covariance,
    //   D_h^{-1} G Sigma_r G^H D_h^{-H}  with  G = B_k^H B_j / L.
    // G = I (identical sequences) gives D_h^{-1} Sigma_r D_h^{-H}, independent of L;
    // G = 0 (orthogonal sequences) gives 0. Both cases are evaluated exactly.
    inline CMat high_snr_contamination(const ConfigSequence &bk, const ConfigSequence &bj, const CVec &h,
                                       const SpatialCovariance &sigma_r, int pilot_len)
    {
        const auto n = h.size();
        require(bk.n_elements() == n && bj.n_elements() == n && sigma_r.size() == n,
                "high_snr_contamination: dimension mismatch");
        require(pilot_len == bk.pilot_len() && pilot_len == bj.pilot_len(), "high_snr_contamination: L mismatch");
        const CVec h_inv = inverse_entries(h, "h");
        const CMat g = bk.matrix().adjoint() * bj.matrix() / double(pilot_len);
        const double tol = 1e-9;
        if (max_abs(g) <= tol)
            return CMat::Zero(n, n);
        if (max_abs(g - CMat::Identity(n, n)) <= tol)
            return h_inv.asDiagonal() * sigma_r.matrix * h_inv.conjugate().asDiagonal();
        return h_inv.asDiagonal() * g * sigma_r.matrix * g.adjoint() * h_inv.conjugate().asDiagonal();
    }
} // namespace riscontam

#endif
