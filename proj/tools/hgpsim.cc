// Copyright 2026 The hgpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "hgpsim/campaign.h"

int main(int argc, char **argv) {
    CLI::App app{"hgpsim: hypergraph product codes, small-set-flip decoding under masked syndromes"};
    app.require_subcommand(1);

    size_t n = 0, dv = 5, dc = 6;
    uint64_t seed = 0;
    size_t switch_sweeps = hgpsim::BiregularOptions{}.switch_sweeps;
    std::string code_out;
    auto *gen = app.add_subcommand("gen-code", "Sample a (dv, dc)-biregular base code and report its HGP parameters");
    gen->add_option("--n", n, "Block length of the base code")->required();
    gen->add_option("--dv", dv, "Variable degree")->capture_default_str();
    gen->add_option("--dc", dc, "Check degree")->capture_default_str();
    gen->add_option("--seed", seed, "Generation seed")->capture_default_str();
    gen->add_option("--switch-sweeps", switch_sweeps, "Edge-switch proposals per edge for 4-cycle reduction (0 = off)")
        ->capture_default_str();
    gen->add_option("-o,--output", code_out, "Output code file")->required();

    std::string config_path;
    std::string run_out;
    size_t threads = 0;
    auto *run = app.add_subcommand("run", "Run a campaign described by a key = value config file");
    run->add_option("-c,--config", config_path, "Config file")->required();
    run->add_option("-o,--output", run_out, "Campaign CSV (overrides the config's output)");
    run->add_option("-j,--parallelism", threads, "Worker threads (overrides the config)");

    std::vector<std::string> fit_inputs;
    size_t t_min = 300;
    std::string fit_out;
    auto *fit = app.add_subcommand("fit", "Fit eps_L per curve and Lambda per family from campaign CSVs");
    fit->add_option("inputs", fit_inputs, "Campaign CSV files")->required();
    fit->add_option("--t-min", t_min, "Smallest tau included in eps_L fits")->capture_default_str();
    fit->add_option("-o,--output", fit_out, "Fits CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (gen->parsed()) {
        return hgpsim::cmd_gen_code(n, dv, dc, seed, switch_sweeps, code_out, std::cout, std::cerr);
    }
    if (run->parsed()) {
        std::optional<std::string> out_override;
        if (!run_out.empty()) {
            out_override = run_out;
        }
        std::optional<size_t> threads_override;
        if (run->count("--parallelism")) {
            threads_override = threads;
        }
        return hgpsim::cmd_run(config_path, out_override, threads_override, std::cout, std::cerr);
    }
    return hgpsim::cmd_fit(fit_inputs, t_min, fit_out, std::cout, std::cerr);
}
