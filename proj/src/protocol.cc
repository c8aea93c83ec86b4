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

#include "hgpsim/protocol.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hgpsim/errors.h"
#include "hgpsim/rng.h"

namespace hgpsim {

Outcome classify_outcome(const HgpCode &code, const BitVector &residual) {
    if (code.z_syndrome(residual).any()) {
        return Outcome::logical_failure;
    }
    return code.is_x_stabilizer(residual) ? Outcome::success : Outcome::logical_failure;
}

std::vector<size_t> sample_round_error(Rng &rng, size_t n_qubits, double p_phys) {
    return sample_bernoulli_positions(rng, n_qubits, p_phys);
}

TrialOutcome run_trial(const HgpCode &code, const SmallSetTable &table, const Schedule &schedule, double p_phys,
                       uint64_t seed, const TrialOptions &options) {
    if (!(p_phys >= 0 && p_phys <= 1)) {
        throw ArgumentError("run_trial: p_phys must lie in [0, 1]");
    }
    if (schedule.base_mask.n_zchecks != code.n_zchecks) {
        throw ArgumentError("run_trial: schedule mask was built for a different code");
    }
    Rng rng(seed);
    TrialOutcome outcome;
    outcome.seed = seed;
    BitVector error(code.n_qubits);
    BitVector syn(code.n_zchecks);
    auto toggle = [&](size_t q) {
        error.flip(q);
        for (uint32_t z : code.qubit_zchecks[q]) {
            syn.flip(z);
        }
    };

    for (size_t t = 1; t <= schedule.tau + 1; t++) {
        for (size_t q : sample_round_error(rng, code.n_qubits, p_phys)) {
            toggle(q);
        }
        std::vector<uint32_t> masked = effective_mask(schedule, t);
        BitVector visible = syn;
        for (uint32_t z : masked) {
            visible.set(z, false);
        }
        DecodeResult decoded = ssf_decode(code, table, visible, masked, options.decode);
        for (size_t q : decoded.correction.ones()) {
            toggle(q);
        }
        if (options.record_trace) {
            outcome.residual_weight_trace.push_back(static_cast<uint32_t>(error.weight()));
        }
        if (t == schedule.tau + 1) {
            outcome.final_stalled = decoded.stalled;
        }
    }

    outcome.failed = syn.any() || !code.is_x_stabilizer(error);
    if (outcome.failed) {
        outcome.failure_round = schedule.tau + 1;
    }
    return outcome;
}

uint64_t trial_seed(uint64_t base_seed, uint64_t index) {
    return derive_seed(base_seed, index);
}

uint64_t mask_seed(uint64_t trial_seed) {
    return derive_seed(trial_seed, 0x6D61736BULL);
}

std::vector<TrialOutcome> run_campaign_trials(const HgpCode &code, const SmallSetTable &table,
                                              const CampaignSpec &spec, const TrialOptions &options) {
    if (spec.trials < 1) {
        throw ArgumentError("run_campaign: trials must be at least 1");
    }
    if (!(spec.p_mask >= 0 && spec.p_mask <= 1)) {
        throw ArgumentError("run_campaign: p_mask must lie in [0, 1]");
    }
    std::vector<TrialOutcome> outcomes(spec.trials);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        while (true) {
            size_t index = next.fetch_add(1);
            if (index >= spec.trials) {
                return;
            }
            try {
                uint64_t seed = trial_seed(spec.base_seed, index);
                Schedule schedule{spec.schedule, sample_mask(code, spec.p_mask, spec.mask_model, mask_seed(seed)),
                                  spec.tau};
                outcomes[index] = run_trial(code, table, schedule, spec.p_phys, seed, options);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(spec.trials);
                return;
            }
        }
    };

    size_t threads = std::max<size_t>(1, std::min(spec.parallelism, spec.trials));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t k = 0; k < threads; k++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return outcomes;
}

CampaignRecord summarize(const HgpCode &code, const CampaignSpec &spec, const std::vector<TrialOutcome> &outcomes,
                         std::string code_id) {
    CampaignRecord rec;
    rec.code_id = std::move(code_id);
    rec.n_qubits = code.n_qubits;
    rec.k = code.k;
    rec.d = code.d;
    rec.p_phys = spec.p_phys;
    rec.p_mask = spec.p_mask;
    rec.mask_model = spec.mask_model;
    rec.schedule = spec.schedule;
    rec.tau = spec.tau;
    rec.trials = outcomes.size();
    for (const auto &o : outcomes) {
        rec.failures += o.failed;
    }
    rec.p_log = rec.trials == 0 ? 0 : static_cast<double>(rec.failures) / static_cast<double>(rec.trials);
    rec.std_error = rec.trials == 0 ? 0 : std::sqrt(rec.p_log * (1 - rec.p_log) / static_cast<double>(rec.trials));
    rec.base_seed = spec.base_seed;
    return rec;
}

CampaignRecord run_campaign(const HgpCode &code, const SmallSetTable &table, const CampaignSpec &spec,
                            std::string code_id) {
    return summarize(code, spec, run_campaign_trials(code, table, spec), std::move(code_id));
}

}  // namespace hgpsim
