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

#ifndef HGPSIM_PROTOCOL_H
#define HGPSIM_PROTOCOL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgpsim/code.h"
#include "hgpsim/mask.h"
#include "hgpsim/rng.h"
#include "hgpsim/ssf.h"

namespace hgpsim {

enum class Outcome { success, logical_failure };

/// Success iff the residual has zero Z-syndrome and is an X stabilizer.
Outcome classify_outcome(const HgpCode &code, const BitVector &residual);

struct TrialOptions {
    /// Keep |E| after each round's correction (tau + 1 entries).
    bool record_trace = false;
    DecodeOptions decode;
};

struct TrialOutcome {
    bool failed = false;
    /// Round at which the failure was detected (always tau + 1: only the final round classifies).
    std::optional<size_t> failure_round;
    std::vector<uint32_t> residual_weight_trace;
    uint64_t seed = 0;
    /// Whether the final unmasked decode ended with a nonzero syndrome.
    bool final_stalled = false;

    bool operator==(const TrialOutcome &other) const = default;
};

/// Fresh iid X flips with probability p_phys per qubit, drawn from `rng`.
/// Shared by every simulator path so they consume randomness identically.
std::vector<size_t> sample_round_error(Rng &rng, size_t n_qubits, double p_phys);

/// One run of the multi-round protocol: for t = 1..tau add a fresh error, decode under
/// effective_mask(schedule, t) and apply the correction; then one more noisy round decoded
/// without a mask, and classify the residual. Masked-round stalls carry forward.
TrialOutcome run_trial(const HgpCode &code, const SmallSetTable &table, const Schedule &schedule, double p_phys,
                       uint64_t seed, const TrialOptions &options = {});

struct CampaignSpec {
    ScheduleKind schedule = ScheduleKind::simple;
    double p_mask = 0;
    MaskModel mask_model = MaskModel::fixed_fraction;
    double p_phys = 0;
    size_t tau = 0;
    size_t trials = 1;
    uint64_t base_seed = 0;
    size_t parallelism = 1;
};

struct CampaignRecord {
    std::string code_id;
    size_t n_qubits = 0;
    size_t k = 0;
    std::optional<size_t> d;
    double p_phys = 0;
    double p_mask = 0;
    MaskModel mask_model = MaskModel::fixed_fraction;
    ScheduleKind schedule = ScheduleKind::simple;
    size_t tau = 0;
    size_t trials = 0;
    size_t failures = 0;
    double p_log = 0;
    double std_error = 0;
    uint64_t base_seed = 0;

    bool operator==(const CampaignRecord &other) const = default;
};

/// Seed of trial `index` within a campaign seeded by `base_seed`.
uint64_t trial_seed(uint64_t base_seed, uint64_t index);
/// Seed used to draw a trial's mask, derived from its trial seed.
uint64_t mask_seed(uint64_t trial_seed);

/// Runs spec.trials independent trials, each with its own freshly sampled mask.
/// Results do not depend on spec.parallelism.
std::vector<TrialOutcome> run_campaign_trials(const HgpCode &code, const SmallSetTable &table,
                                              const CampaignSpec &spec, const TrialOptions &options = {});

CampaignRecord run_campaign(const HgpCode &code, const SmallSetTable &table, const CampaignSpec &spec,
                            std::string code_id = "");

/// Aggregates outcomes into a record (failures, p_log, binomial standard error).
CampaignRecord summarize(const HgpCode &code, const CampaignSpec &spec, const std::vector<TrialOutcome> &outcomes,
                         std::string code_id);

}  // namespace hgpsim

#endif
