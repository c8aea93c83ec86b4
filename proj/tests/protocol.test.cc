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

#include "gtest/gtest.h"
#include "hgpsim/errors.h"
#include "reference.h"

using namespace hgpsim;

namespace {

HgpCode family_code(size_t n, uint64_t seed = 1) {
    ClassicalCode base = sample_biregular_code(n, 5, 6, seed);
    base.d = classical_distance(base);
    return hgp_product(base);
}

}  // namespace

TEST(protocol, classify_outcome) {
    HgpCode code = hgp_product(repetition_code(3));
    ASSERT_EQ(classify_outcome(code, BitVector(code.n_qubits)), Outcome::success);
    for (size_t r = 0; r < code.hx.rows(); r++) {
        ASSERT_EQ(classify_outcome(code, code.hx.row(r)), Outcome::success);
    }
    // A weight-3 logical: zero syndrome, outside the stabilizer group.
    std::vector<uint8_t> visible(code.n_zchecks, 1);
    ASSERT_EQ(min_weight_undetected_logical(code, visible, 3), 3);
    BitVector logical(code.n_qubits);
    for (size_t j = 0; j < 3; j++) {
        logical.set(j, true);
    }
    ASSERT_FALSE(syndrome(code.hz, logical).any());
    ASSERT_FALSE(row_space_member(code.hx, logical));
    ASSERT_EQ(classify_outcome(code, logical), Outcome::logical_failure);
    BitVector one(code.n_qubits);
    one.set(0, true);
    ASSERT_EQ(classify_outcome(code, one), Outcome::logical_failure);
}

TEST(protocol, noiseless_trials_succeed) {
    HgpCode code = family_code(12);
    SmallSetTable table(code);
    for (auto kind : {ScheduleKind::simple, ScheduleKind::iterative}) {
        Schedule s{kind, sample_mask(code, 0.4, MaskModel::fixed_fraction, 2), 30};
        TrialOptions opts;
        opts.record_trace = true;
        TrialOutcome o = run_trial(code, table, s, 0.0, 17, opts);
        ASSERT_FALSE(o.failed);
        ASSERT_EQ(o.residual_weight_trace, std::vector<uint32_t>(31, 0));
    }
    CampaignSpec spec;
    spec.p_phys = 0;
    spec.trials = 1;
    ASSERT_EQ(run_campaign(code, table, spec).failures, 0);
}

TEST(protocol, argument_checks) {
    HgpCode code = hgp_product(repetition_code(3));
    SmallSetTable table(code);
    Schedule s{ScheduleKind::simple, Mask::empty(code.n_zchecks), 3};
    ASSERT_THROW(run_trial(code, table, s, 1.5, 0), ArgumentError);
    Schedule wrong{ScheduleKind::simple, Mask::empty(5), 3};
    ASSERT_THROW(run_trial(code, table, wrong, 0.1, 0), ArgumentError);
    CampaignSpec spec;
    spec.trials = 0;
    ASSERT_THROW(run_campaign(code, table, spec), ArgumentError);
}

TEST(protocol, tau_zero_is_single_shot) {
    HgpCode code = family_code(12);
    SmallSetTable table(code);
    Schedule s{ScheduleKind::simple, sample_mask(code, 0.5, MaskModel::fixed_fraction, 1), 0};
    for (uint64_t seed = 0; seed < 50; seed++) {
        Rng rng(seed);
        BitVector e(code.n_qubits);
        for (size_t q : sample_round_error(rng, code.n_qubits, 0.03)) {
            e.flip(q);
        }
        DecodeResult r = ssf_decode(code, table, syndrome(code.hz, e), {});
        bool expect_fail = classify_outcome(code, e ^ r.correction) == Outcome::logical_failure;
        TrialOutcome o = run_trial(code, table, s, 0.03, seed);
        ASSERT_EQ(o.failed, expect_fail);
        ASSERT_EQ(o.final_stalled, r.stalled);
    }
}

TEST(protocol, matches_reference_trials) {
    HgpCode code = hgp_product(repetition_code(3));
    SmallSetTable table(code);
    size_t failures = 0;
    for (uint64_t i = 0; i < 200; i++) {
        auto kind = i % 2 ? ScheduleKind::iterative : ScheduleKind::simple;
        Mask mask = sample_mask(code, (i % 3) * 0.2, MaskModel::fixed_fraction, mask_seed(i));
        size_t tau = 20 + i % 7;
        TrialOptions opts;
        opts.record_trace = true;
        TrialOutcome fast = run_trial(code, table, {kind, mask, tau}, 0.03, i, opts);
        reference::TrialResult slow = reference::run_trial(code, kind, mask, tau, 0.03, i);
        ASSERT_EQ(fast.failed, slow.failed) << "trial " << i;
        ASSERT_EQ(fast.residual_weight_trace, slow.residual_weights) << "trial " << i;
        failures += fast.failed;
    }
    // The comparison is only informative if both outcomes occur.
    ASSERT_GT(failures, 0u);
    ASSERT_LT(failures, 200u);
}

TEST(protocol, campaign_independent_of_parallelism) {
    HgpCode code = family_code(12);
    SmallSetTable table(code);
    CampaignSpec spec;
    spec.schedule = ScheduleKind::iterative;
    spec.p_mask = 0.2;
    spec.p_phys = 0.01;
    spec.tau = 20;
    spec.trials = 64;
    spec.base_seed = 99;
    spec.parallelism = 1;
    auto serial = run_campaign_trials(code, table, spec);
    spec.parallelism = 8;
    auto parallel = run_campaign_trials(code, table, spec);
    ASSERT_EQ(serial, parallel);
    CampaignRecord a = summarize(code, spec, serial, "x");
    ASSERT_EQ(a, run_campaign(code, table, spec, "x"));
    ASSERT_GT(a.failures, 0u);
    ASSERT_NEAR(a.std_error, std::sqrt(a.p_log * (1 - a.p_log) / 64), 1e-15);
    for (size_t i = 0; i < serial.size(); i++) {
        ASSERT_EQ(serial[i].seed, trial_seed(99, i));
        if (serial[i].failed) {
            ASSERT_EQ(serial[i].failure_round, 21u);
        }
    }
}

TEST(protocol, masking_hurts_small_code) {
    HgpCode code = family_code(12);
    SmallSetTable table(code);
    CampaignSpec spec;
    spec.p_phys = 0.004;
    spec.tau = 20;
    spec.trials = 2000;
    spec.base_seed = 3;
    spec.p_mask = 0;
    CampaignRecord clear = run_campaign(code, table, spec);
    spec.p_mask = 0.5;
    CampaignRecord masked = run_campaign(code, table, spec);
    double z = (masked.p_log - clear.p_log) /
               std::sqrt(masked.std_error * masked.std_error + clear.std_error * clear.std_error);
    ASSERT_GT(z, 1.645) << clear.p_log << " vs " << masked.p_log;
}
