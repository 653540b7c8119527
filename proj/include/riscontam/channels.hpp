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

#ifndef RISCONTAM_CHANNELS_HPP
#define RISCONTAM_CHANNELS_HPP

#include "geometry.hpp"
#include "params.hpp"
#include "random.hpp"
#include "ris_sequences.hpp"

#include <ostream>

namespace riscontam
{
    // Operator / UE index. UE k is served by RIS k and BS k; j denotes the other one.
    enum class User
    {
        first = 0,
        second = 1
    };

    constexpr User other(User k) { return k == User::first ? User::second : User::first; }
    constexpr int index(User k) { return static_cast<int>(k); }

    // One realization of all channels for both operators.
    //   h_k : serving RIS -> BS k        g_k : UE k -> serving RIS
    //   p_k : UE k -> non-serving RIS    q_k : non-serving RIS -> BS k
    struct ChannelSet
    {
        std::array<CVec, 2> h, g, p, q;

        Eigen::Index n_elements() const { return h[0].size(); }

        // r_k = D_{q_k} p_k, the unintended cascaded channel seen by BS k
        CVec r(User k) const
        {
            const int i = index(k);
            return q[i].cwiseProduct(p[i]);
        }

        void validate() const
        {
            const auto n = n_elements();
            require(n >= 1, "ChannelSet: empty");
            for (int i = 0; i < 2; ++i)
            {
                require(h[i].size() == n && g[i].size() == n && p[i].size() == n && q[i].size() == n,
                        "ChannelSet: all vectors must have length N");
                for (Eigen::Index e = 0; e < n; ++e)
                    require(h[i](e) != cdouble(0.0), "ChannelSet: h entries must be nonzero");
            }
        }
    };

    struct ChannelPriors
    {
        SpatialCovariance sigma_g;
        SpatialCovariance sigma_p;
    };

    // Caches the PSD factor so repeated draws cost a single matrix-vector product.
    class CorrelatedRayleighSampler
    {
    public:
        explicit CorrelatedRayleighSampler(const SpatialCovariance &cov) : factor_(psd_factor(cov.matrix)) {}

        CVec operator()(RandomStream &rng) const
        {
            return factor_ * rng.complex_normal_vector(factor_.cols());
        }

        const CMat &factor() const { return factor_; }

    private:
        CMat factor_;
    };

    inline CVec sample_correlated_rayleigh(const SpatialCovariance &cov, RandomStream &rng)
    {
        return CorrelatedRayleighSampler(cov)(rng);
    }

    // Sigma_r = D_q Sigma_p D_q^H
    inline SpatialCovariance sigma_r(const ChannelPriors &priors, const CVec &q)
    {
        const CMat &sp = priors.sigma_p.matrix;
        require(sp.rows() == q.size(), "sigma_r: dimension mismatch");
        CMat m = q.asDiagonal() * sp * q.conjugate().asDiagonal();
        return SpatialCovariance{hermitian_part(m), real_trace(m) / double(std::max<Eigen::Index>(1, q.size()))};
    }

    inline ChannelPriors isotropic_priors(const SystemParams &params)
    {
        const double beta = params.ue_ris_gain();
        auto cov = isotropic_covariance(params.geometry, beta);
        return {cov, cov};
    }

    // One frozen channel set: i.i.d. CN(0, gain) entries with the RIS-BS gain for
    // h, q and the UE-RIS gain for g, p. Deterministic in the seed.
    inline ChannelSet sample_deterministic_fixture(const SystemParams &params, std::uint64_t seed)
    {
        const auto n = static_cast<Eigen::Index>(params.n_elements);
        require(n >= 1, "sample_deterministic_fixture: n_elements must be >= 1");
        RandomStream rng(seed, {tag("deterministic-fixture")});
        const double bs = params.ris_bs_gain();
        const double ue = params.ue_ris_gain();
        auto draw_nonzero = [&](double var)
        {
            CVec v = rng.complex_normal_vector(n, var);
            for (Eigen::Index e = 0; e < n; ++e)
                while (v(e) == cdouble(0.0) && var > 0.0)
                    v(e) = rng.complex_normal(var);
            return v;
        };
        ChannelSet ch;
        for (int k = 0; k < 2; ++k)
        {
            ch.h[k] = draw_nonzero(bs);
            ch.q[k] = rng.complex_normal_vector(n, bs);
            ch.g[k] = rng.complex_normal_vector(n, ue);
            ch.p[k] = rng.complex_normal_vector(n, ue);
        }
        return ch;
    }

    // Stacked pilot observation at BS k over L slots:
    //   y_k = sqrt(Pp) B_k D_{h_k} g_k + sqrt(Pp) B_j D_{q_k} p_k + w,  w ~ CN(0, noise_power I).
    // With rng == nullptr the noise is omitted.
    inline CVec received_pilots(const ChannelSet &ch, const ConfigSequence &b1, const ConfigSequence &b2,
                                double pilot_power, double noise_power, User k, RandomStream *rng = nullptr)
    {
        const auto n = ch.n_elements();
        require(b1.n_elements() == n && b2.n_elements() == n, "received_pilots: B must have N columns");
        require(b1.pilot_len() == b2.pilot_len(), "received_pilots: B1 and B2 must have the same L");
        const int i = index(k);
        const CMat &bk = k == User::first ? b1.matrix() : b2.matrix();
        const CMat &bj = k == User::first ? b2.matrix() : b1.matrix();
        const double a = std::sqrt(pilot_power);
        CVec y = a * (bk * ch.h[i].cwiseProduct(ch.g[i]) + bj * ch.r(k));
        if (rng)
            for (Eigen::Index t = 0; t < y.size(); ++t)
                y(t) += rng->complex_normal(noise_power);
        return y;
    }

    // Debug dump: channel,index,re,im
    inline void write_channels_csv(std::ostream &os, const ChannelSet &ch)
    {
        os << "channel,index,re,im\n";
        char buf[128];
        auto dump = [&](const char *name, const CVec &v)
        {
            for (Eigen::Index e = 0; e < v.size(); ++e)
            {
                std::snprintf(buf, sizeof(buf), "%s,%ld,%.17g,%.17g\n", name, long(e), v(e).real(), v(e).imag());
                os << buf;
            }
        };
        const char *names[2][4] = {{"h1", "g1", "p1", "q1"}, {"h2", "g2", "p2", "q2"}};
        for (int k = 0; k < 2; ++k)
        {
            dump(names[k][0], ch.h[k]);
            dump(names[k][1], ch.g[k]);
            dump(names[k][2], ch.p[k]);
            dump(names[k][3], ch.q[k]);
        }
    }
} // namespace riscontam

#endif
