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

#include <riscontam/config.hpp>

#include <sstream>

using namespace riscontam;

TEST_CASE("config parsing")
{
    std::istringstream in("# scenario\n n_elements = 64\npilot_len=128 # trailing\n\ngeometry=ura:8x8:0.25\n"
                          "config_mode=identical\npilot_power_dBm=-12.5\nseed=42\n");
    const auto p = parse_config(in);
    CHECK(p.n_elements == 64);
    CHECK(p.pilot_len == 128);
    CHECK(p.geometry == parse_geometry("ura:8x8:0.25"));
    CHECK(p.config_mode == ConfigMode::identical);
    CHECK(p.pilot_power_dBm == -12.5);
    CHECK(p.seed == 42);
    CHECK(p.noise_power_dBm == -90.0);
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("config errors")
{
    auto parse = [](const std::string &s)
    {
        std::istringstream in(s);
        return parse_config(in);
    };
    CHECK_THROWS(parse("unknown=1\n"));
    CHECK_THROWS(parse("n_elements\n"));
    CHECK_THROWS(parse("n_elements=abc\n"));
    CHECK_THROWS(parse("n_elements=1.5\n"));
    CHECK_THROWS(parse("pilot_power_dBm=nan\n"));
    CHECK_THROWS(parse("config_mode=random\n"));
    CHECK_THROWS(parse("seed=-1\n"));
    CHECK_THROWS(load_config("/nonexistent/riscontam.cfg"));
}

TEST_CASE("config round trip")
{
    SystemParams p;
    p.n_elements = 64;
    p.pilot_len = 200;
    p.geometry = parse_geometry("ula:1x64:0.5");
    p.data_power_dBm = 17.25;
    p.seed = 99;
    std::istringstream in(to_config_text(p));
    const auto q = parse_config(in);
    CHECK(to_config_text(q) == to_config_text(p));
}

TEST_CASE("parameter validation")
{
    SystemParams p;
    CHECK_NOTHROW(p.validate());
    p.pilot_len = 400; // orthogonal needs 2N = 512
    CHECK_THROWS(p.validate());
    p.config_mode = ConfigMode::identical;
    CHECK_NOTHROW(p.validate());
    p.n_elements = 100; // geometry is 16x16
    CHECK_THROWS(p.validate());
}

TEST_CASE("unit conversions")
{
    CHECK(dbm_to_linear(0.0) == 1.0);
    CHECK(dbm_to_linear(-90.0) == Catch::Approx(1e-9));
    CHECK(db_to_gain(-80.0) == Catch::Approx(1e-8));
    CHECK(linear_to_dbm(1e3) == Catch::Approx(30.0));
    CHECK(db_to_amplitude(-60.0) == Catch::Approx(1e-3));
}
