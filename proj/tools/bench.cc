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

// Throughput probe for the decoder and protocol on the desk-scale family.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "hgpsim/campaign.h"
#include "hgpsim/protocol.h"

int main(int argc, char **argv) {
    using namespace hgpsim;
    size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 24;
    uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
    size_t trials = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 50;
    double p_mask = argc > 4 ? std::strtod(argv[4], nullptr) : 0.1;
    double p_phys = argc > 5 ? std::strtod(argv[5], nullptr) : 0.004;
    size_t tau = argc > 6 ? std::strtoul(argv[6], nullptr, 10) : 100;

    CodeSource src;
    src.n = n;
    src.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    LoadedCode loaded = materialize_code(src);
    SmallSetTable table(loaded.code);
    auto t1 = std::chrono::steady_clock::now();
    std::cout << loaded.code_id << " " << loaded.code.parameter_string() << " table "
              << table.total_candidates() << " candidates, built in "
              << std::chrono::duration<double>(t1 - t0).count() << " s\n";

    for (auto kind : {ScheduleKind::simple, ScheduleKind::iterative}) {
        CampaignSpec spec;
        spec.schedule = kind;
        spec.p_mask = p_mask;
        spec.p_phys = p_phys;
        spec.tau = tau;
        spec.trials = trials;
        spec.base_seed = 7;
        auto a = std::chrono::steady_clock::now();
        CampaignRecord rec = run_campaign(loaded.code, table, spec, loaded.code_id);
        auto b = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(b - a).count();
        std::cout << schedule_name(kind) << ": " << rec.failures << "/" << rec.trials << " failures, "
                  << secs / static_cast<double>(trials) * 1e3 << " ms/trial\n";
    }
}
