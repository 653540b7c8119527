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

#ifndef RISCONTAM_DATA_LINK_HPP
#define RISCONTAM_DATA_LINK_HPP

#include "channels.hpp"
#include "estimation_deterministic.hpp"
#include "ris_sequences.hpp"
#include "stats.hpp"

namespace riscontam
{
    // Effective SISO channels during data transmission:
    //   m       true channel,     sqrt(Pd) (h_k^T Phi_k g_k + q_k^T Phi_j p_k)
    //   m_hat   assumed channel,  sqrt(Pd) h_k^T Phi_k g_hat_k
    //   epsilon m - m_hat
    struct ScalarLink
    {
        cdouble m;
        cdouble m_hat;
        cdouble epsilon;
    };

    inline ScalarLink make_link(cdouble m, cdouble m_hat)
    {
        return {m, m_hat, m - m_hat};
    }

    inline ScalarLink effective_channels(const ChannelSet &ch, const RisPhaseConfig &phi_1, const RisPhaseConfig &phi_2,
                                         const CVec &g_hat, double data_power, User k)
    {
        const int i = index(k);
        const RisPhaseConfig &phi_k = k == User::first ? phi_1 : phi_2;
        const RisPhaseConfig &phi_j = k == User::first ? phi_2 : phi_1;
        require(g_hat.size() == ch.n_elements(), "effective_channels: g_hat must have length N");
        const double a = std::sqrt(data_power);
        const cdouble m = a * (cascade(ch.h[i], phi_k, ch.g[i]) + cascade(ch.q[i], phi_j, ch.p[i]));
        const cdouble m_hat = a * cascade(ch.h[i], phi_k, g_hat);
        return make_link(m, m_hat);
    }

    // Misspecified MMSE symbol estimate x_hat = m_hat^* y / (|m_hat|^2 + noise).
    inline cdouble mmse_symbol_estimate(cdouble y, cdouble m_hat, double noise_power)
    {
        const double den = std::norm(m_hat) + noise_power;
        if (den == 0.0)
            return 0.0;
        return std::conj(m_hat) * y / den;
    }

    // E|x - x_hat|^2 for x ~ CN(0,1), w ~ CN(0, noise) with fixed m, m_hat.
    inline double data_mse(const ScalarLink &link, double noise_power)
    {
        const double s2 = noise_power;
        const double den = std::norm(link.m - link.epsilon) + s2;
        if (den == 0.0)
            return 1.0; // m_hat = 0 and no noise: x_hat = 0
        return (std::norm(link.epsilon) + 2.0 * s2) / den - s2 * (std::norm(link.m) + s2) / (den * den);
    }

    // Noise-free limit |epsilon|^2 / |m - epsilon|^2.
    inline double data_mse_floor(const ScalarLink &link)
    {
        const double d = std::abs(link.m - link.epsilon);
        if (d < 1e-300)
            throw numerical_error("data_mse_floor: degenerate link, m_hat = 0");
        return std::norm(link.epsilon) / (d * d);
    }

    // How the BS obtained the channel used for RIS alignment and equalization.
    enum class CsiMode
    {
        identical,   // MML estimate with B1 = B2 at high pilot SNR: g + bias
        orthogonal,  // MML estimate with B1^H B2 = 0 at high pilot SNR: g
        perfect_csi  // all channels known, m_hat = m
    };

    inline const char *to_string(CsiMode m)
    {
        switch (m)
        {
        case CsiMode::identical:
            return "identical";
        case CsiMode::orthogonal:
            return "orthogonal";
        default:
            return "perfect_csi";
        }
    }

    // Data link after channel estimation at infinite pilot SNR (g_hat = g + b).
    // For perfect CSI each RIS is aligned to its own UE's true channel and the BS knows m.
    inline ScalarLink high_snr_link(const ChannelSet &ch, CsiMode mode, double data_power, User k)
    {
        std::array<CVec, 2> g_hat;
        for (int i = 0; i < 2; ++i)
        {
            g_hat[i] = ch.g[i];
            if (mode == CsiMode::identical)
                g_hat[i] += bias(ch.h[i], ch.q[i], ch.p[i], ConfigMode::identical);
        }
        const auto phi_1 = phase_align(ch.h[0], g_hat[0]);
        const auto phi_2 = phase_align(ch.h[1], g_hat[1]);
        ScalarLink link = effective_channels(ch, phi_1, phi_2, g_hat[index(k)], data_power, k);
        if (mode == CsiMode::perfect_csi)
            link = make_link(link.m, link.m);
        return link;
    }

    // Simulated symbol MSE: draws x ~ CN(0,1), w ~ CN(0, noise), applies the
    // misspecified MMSE estimator. Used to cross-check data_mse.
    inline Estimate simulate_symbol_mse(const ScalarLink &link, double noise_power, std::size_t trials, RandomStream &rng)
    {
        RunningStats s;
        for (std::size_t t = 0; t < trials; ++t)
        {
            const cdouble x = rng.complex_normal(1.0);
            const cdouble w = rng.complex_normal(noise_power);
            const cdouble xh = mmse_symbol_estimate(link.m * x + w, link.m_hat, noise_power);
            s.add(std::norm(x - xh));
        }
        return {s.mean(), s.stderr_of_mean(), s.count()};
    }

    // Data MSE with channel estimates taken at finite pilot SNR. The inner
    // expectation over (x, w) is closed form; the outer one over the pilot noise
    // (which moves g_hat, the RIS phases and m_hat) is sampled. Trial t uses
    // stream (seed, t).
    inline Estimate data_mse_finite_pilot(const ChannelSet &ch, ConfigMode mode, double pilot_power, double data_power,
                                          double noise_power, int pilot_len, User k, std::size_t trials,
                                          std::uint64_t seed)
    {
        const auto n = static_cast<int>(ch.n_elements());
        const auto [b1, b2] = make_sequence_pair(mode, n, pilot_len);
        RunningStats s;
        for (std::size_t t = 0; t < trials; ++t)
        {
            RandomStream rng(seed, {tag("finite-pilot"), t});
            std::array<CVec, 2> g_hat;
            for (int i = 0; i < 2; ++i)
            {
                const User u = static_cast<User>(i);
                const CVec y = received_pilots(ch, b1, b2, pilot_power, noise_power, u, &rng);
                g_hat[i] = mml_estimate(y, i == 0 ? b1 : b2, ch.h[i], pilot_power);
            }
            const auto link = effective_channels(ch, phase_align(ch.h[0], g_hat[0]), phase_align(ch.h[1], g_hat[1]),
                                                 g_hat[index(k)], data_power, k);
            s.add(data_mse(link, noise_power));
        }
        return {s.mean(), s.stderr_of_mean(), s.count()};
    }
} // namespace riscontam

#endif
