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

#ifndef RISCONTAM_PARAMS_HPP
#define RISCONTAM_PARAMS_HPP

#include "geometry.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace riscontam
{
    // All linear powers are in milliwatts.
    inline double dbm_to_linear(double dbm)
    {
        return std::pow(10.0, dbm / 10.0);
    }

    inline double linear_to_dbm(double mw)
    {
        return 10.0 * std::log10(mw);
    }

    // Path loss in dB (negative gain) to the amplitude factor applied to channel coefficients.
    inline double db_to_amplitude(double db)
    {
        return std::sqrt(std::pow(10.0, db / 10.0));
    }

    inline double db_to_gain(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    // Relation between the two RIS pilot configuration sequences.
    enum class ConfigMode
    {
        identical,  // B1 = B2
        orthogonal  // B1^H B2 = 0
    };

    inline const char *to_string(ConfigMode m)
    {
        return m == ConfigMode::identical ? "identical" : "orthogonal";
    }

    inline ConfigMode parse_config_mode(const std::string &s)
    {
        if (s == "identical")
            return ConfigMode::identical;
        if (s == "orthogonal")
            return ConfigMode::orthogonal;
        throw std::invalid_argument("unknown config_mode '" + s + "' (expected identical|orthogonal)");
    }

    // Scalar system configuration. Defaults follow the deterministic-channel
    // parameter table (N = 256, L = 513) with a matching 16x16 URA.
    struct SystemParams
    {
        int n_elements = 256;
        int pilot_len = 513;
        double pilot_power_dBm = 0.0;
        double data_power_dBm = 0.0;
        double noise_power_dBm = -90.0;
        double pathloss_ue_ris_dB = -80.0;
        double pathloss_ris_bs_dB = -60.0;
        RisGeometry geometry{ArrayKind::ura, 16, 16, 0.5};
        ConfigMode config_mode = ConfigMode::orthogonal;
        std::uint64_t seed = 1;

        double pilot_power_mw() const { return dbm_to_linear(pilot_power_dBm); }
        double data_power_mw() const { return dbm_to_linear(data_power_dBm); }
        double noise_power_mw() const { return dbm_to_linear(noise_power_dBm); }
        double ue_ris_gain() const { return db_to_gain(pathloss_ue_ris_dB); }
        double ris_bs_gain() const { return db_to_gain(pathloss_ris_bs_dB); }

        void validate() const
        {
            require(n_elements >= 1, "n_elements must be >= 1");
            require(pilot_len >= 1, "pilot_len must be >= 1");
            for (double v : {pilot_power_dBm, data_power_dBm, noise_power_dBm, pathloss_ue_ris_dB, pathloss_ris_bs_dB})
                require(std::isfinite(v), "power and path-loss fields must be finite");
            geometry.validate();
            require(geometry.n_elements() == n_elements, "geometry rows*cols must equal n_elements");
            if (config_mode == ConfigMode::identical)
                require(pilot_len >= n_elements, "identical mode requires pilot_len >= n_elements");
            else
                require(pilot_len >= 2 * n_elements, "orthogonal mode requires pilot_len >= 2*n_elements");
        }
    };
} // namespace riscontam

#endif
