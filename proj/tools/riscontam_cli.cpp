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

// Command-line front end: one subcommand per experiment plus `validate`.

#include <riscontam.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace riscontam;

namespace
{
    struct CommonArgs
    {
        std::string config;
        std::string out;
        std::size_t trials = 0;
        std::optional<std::uint64_t> seed;
        std::string mode = "both";
        std::string grid;
        std::vector<std::string> geometries;
        unsigned threads = 1;
        std::string cross_term = "oracle";
        std::size_t finite_pilot_trials = 0;
    };

    void add_common(CLI::App *sub, CommonArgs &a, bool with_geometry)
    {
        sub->add_option("--config", a.config, "key=value parameter file")->check(CLI::ExistingFile);
        sub->add_option("--out", a.out, "CSV output path (default: stdout)");
        sub->add_option("--trials", a.trials, "Monte-Carlo trials per point (0: experiment default)");
        sub->add_option("--seed", a.seed, "master seed; also seeds the channel fixture");
        sub->add_option("--mode", a.mode, "identical|orthogonal|both")
            ->check(CLI::IsMember({"identical", "orthogonal", "both"}));
        sub->add_option("--grid", a.grid, "power grid start:step:stop in dBm");
        sub->add_option("--threads", a.threads, "worker threads")->check(CLI::Range(1u, 1024u));
        if (with_geometry)
            sub->add_option("--geometry", a.geometries, "RIS layout, e.g. ura:8x8:0.5 (repeatable)");
    }

    SweepSpec make_spec(Experiment e, const CommonArgs &a)
    {
        SweepSpec s;
        s.experiment = e;
        s.params = default_params(e);
        if (!a.config.empty())
            s.params = load_config(a.config, s.params);
        if (a.seed)
            s.params.seed = *a.seed;
        s.master_seed = s.params.seed;
        s.trials = a.trials;
        s.threads = a.threads;
        s.output_path = a.out;
        if (!a.grid.empty())
            s.power_grid_dBm = parse_grid(a.grid);
        if (a.mode == "identical")
            s.modes = {CsiMode::identical};
        else if (a.mode == "orthogonal")
            s.modes = {CsiMode::orthogonal};
        else if (e == Experiment::data_mse)
            s.modes = {CsiMode::identical, CsiMode::orthogonal, CsiMode::perfect_csi};
        for (const auto &g : a.geometries)
            s.geometries.push_back(parse_geometry(g));
        s.cross_term = a.cross_term == "paper" ? CrossTerm::paper : CrossTerm::oracle;
        s.finite_pilot_trials = a.finite_pilot_trials;
        // Sequence lengths are checked for the strictest mode in use
        SystemParams check = s.params;
        check.config_mode = s.has_mode(CsiMode::orthogonal) ? ConfigMode::orthogonal : ConfigMode::identical;
        if (s.geometries.empty())
        {
            if (e == Experiment::chanest_det || e == Experiment::data_mse)
                check.geometry = RisGeometry{ArrayKind::ula, 1, check.n_elements, 0.5};
            check.validate();
        }
        else
            for (const auto &g : s.geometries)
            {
                check.geometry = g;
                check.n_elements = g.n_elements();
                check.validate();
            }
        return s;
    }

    int run(Experiment e, const CommonArgs &a)
    {
        const auto spec = make_spec(e, a);
        const auto rows = run_experiment(spec);
        if (spec.output_path.empty())
            write_csv(std::cout, rows);
        else
            write_csv(spec.output_path, rows);
        return 0;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"riscontam: inter-operator pilot contamination in RIS-assisted uplinks"};
    app.require_subcommand(1);

    CommonArgs det, data, ray, cap;
    auto *s_det = app.add_subcommand("chanest-det", "MML channel estimation NMSE versus pilot power");
    add_common(s_det, det, false);
    auto *s_data = app.add_subcommand("data-mse", "data estimation MSE versus data power");
    add_common(s_data, data, false);
    s_data->add_option("--finite-pilot-trials", data.finite_pilot_trials,
                       "also sample the MSE at the configured finite pilot power");
    auto *s_ray = app.add_subcommand("chanest-rayleigh", "misspecified MMSE error versus pilot power and RIS layout");
    add_common(s_ray, ray, true);
    auto *s_cap = app.add_subcommand("capacity", "capacity lower bound versus data power");
    add_common(s_cap, cap, true);
    s_cap->add_option("--cross-term", cap.cross_term, "E[g r^H | g_hat] expression: oracle|paper")
        ->check(CLI::IsMember({"oracle", "paper"}));

    std::optional<std::uint64_t> val_seed;
    unsigned val_threads = 1;
    auto *s_val = app.add_subcommand("validate", "run the model self-checks");
    s_val->add_option("--seed", val_seed, "master seed");
    s_val->add_option("--threads", val_threads, "worker threads")->check(CLI::Range(1u, 1024u));

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*s_det)
            return run(Experiment::chanest_det, det);
        if (*s_data)
            return run(Experiment::data_mse, data);
        if (*s_ray)
            return run(Experiment::chanest_rayleigh, ray);
        if (*s_cap)
            return run(Experiment::capacity, cap);
        ValidationOptions o;
        o.seed = val_seed.value_or(1);
        o.threads = val_threads;
        const auto results = run_validation(o);
        for (const auto &r : results)
            std::printf("%s\n", format_check(r).c_str());
        return all_pass(results) ? 0 : 1;
    }
    catch (const std::exception &ex)
    {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
}
