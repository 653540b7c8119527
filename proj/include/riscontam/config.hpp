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

#ifndef RISCONTAM_CONFIG_HPP
#define RISCONTAM_CONFIG_HPP

#include "params.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace riscontam
{
    namespace detail
    {
        inline std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        inline double parse_double(const std::string &key, const std::string &v)
        {
            std::size_t used = 0;
            double x = 0.0;
            try
            {
                x = std::stod(v, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used == 0 || used != v.size() || !std::isfinite(x))
                throw std::invalid_argument("config: '" + key + "' expects a finite number, got '" + v + "'");
            return x;
        }

        inline long long parse_integer(const std::string &key, const std::string &v)
        {
            std::size_t used = 0;
            long long x = 0;
            try
            {
                x = std::stoll(v, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used == 0 || used != v.size())
                throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + v + "'");
            return x;
        }
    } // namespace detail

    // Applies one key=value assignment. Keys are the SystemParams field names.
    inline void apply_config_entry(SystemParams &p, const std::string &key, const std::string &value)
    {
        using namespace detail;
        if (key == "n_elements")
            p.n_elements = static_cast<int>(parse_integer(key, value));
        else if (key == "pilot_len")
            p.pilot_len = static_cast<int>(parse_integer(key, value));
        else if (key == "pilot_power_dBm")
            p.pilot_power_dBm = parse_double(key, value);
        else if (key == "data_power_dBm")
            p.data_power_dBm = parse_double(key, value);
        else if (key == "noise_power_dBm")
            p.noise_power_dBm = parse_double(key, value);
        else if (key == "pathloss_ue_ris_dB")
            p.pathloss_ue_ris_dB = parse_double(key, value);
        else if (key == "pathloss_ris_bs_dB")
            p.pathloss_ris_bs_dB = parse_double(key, value);
        else if (key == "geometry")
            p.geometry = parse_geometry(value);
        else if (key == "config_mode")
            p.config_mode = parse_config_mode(value);
        else if (key == "seed")
        {
            const auto s = parse_integer(key, value);
            require(s >= 0, "config: seed must be non-negative");
            p.seed = static_cast<std::uint64_t>(s);
        }
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }

    // Flat key=value text; '#' starts a comment. Unset keys keep their defaults.
    // Validation is left to the caller because command-line overrides may follow.
    inline SystemParams parse_config(std::istream &in, SystemParams base = {})
    {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = detail::trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
            apply_config_entry(base, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
        }
        return base;
    }

    inline SystemParams load_config(const std::string &path, SystemParams base = {})
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open config file '" + path + "'");
        return parse_config(in, std::move(base));
    }

    inline std::string to_config_text(const SystemParams &p)
    {
        std::ostringstream os;
        os.precision(17);
        os << "n_elements=" << p.n_elements << '\n'
           << "pilot_len=" << p.pilot_len << '\n'
           << "pilot_power_dBm=" << p.pilot_power_dBm << '\n'
           << "data_power_dBm=" << p.data_power_dBm << '\n'
           << "noise_power_dBm=" << p.noise_power_dBm << '\n'
           << "pathloss_ue_ris_dB=" << p.pathloss_ue_ris_dB << '\n'
           << "pathloss_ris_bs_dB=" << p.pathloss_ris_bs_dB << '\n'
           << "geometry=" << p.geometry.label() << '\n'
           << "config_mode=" << to_string(p.config_mode) << '\n'
           << "seed=" << p.seed << '\n';
        return os.str();
    }
} // namespace riscontam

#endif
