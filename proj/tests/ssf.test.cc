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


#include "hgpsim/ssf.h"

#include <set>

#include "gtest/gtest.h"
#include "hgpsim/errors.h"
#include "hgpsim/mask.h"
#include "hgpsim/rng.h"
#include "reference.h"

using namespace hgpsim;

namespace {

HgpCode family_code(size_t n, uint64_t seed = 1) {
    ClassicalCode base = sample_biregular_code(n, 5, 6, seed);
    base.d = classical_distance(base);
    return hgp_product(base);
}

bool corrected(const HgpCode &code, const BitVector &error, const BitVector &correction) {
    BitVector residual = error ^ correction;
    return !syndrome(code.hz, residual).any() && row_space_member(code.hx, residual);
}

BitVector random_error(size_t n, size_t weight, Rng &rng) {
    BitVector e(n);
    while (e.weight() < weight) {
        e.set(uniform_below(rng, n), true);
    }
    return e;
}

}  // namespace

TEST(ssf, candidate_counts) {
    HgpCode rep = hgp_product(repetition_code(3));
    SmallSetTable table(rep);
    size_t expected = 0;
    for (size_t x = 0; x < rep.n_xchecks; x++) {
        size_t w = rep.hx.row_weight(x);
        ASSERT_EQ(table.num_candidates(x), (size_t{1} << w) - 1);
        if (w == 3) {
            ASSERT_EQ(table.num_candidates(x), 7);
        }
        expected += (size_t{1} << w) - 1;
    }
    ASSERT_EQ(table.total_candidates(), expected);

    HgpCode code = family_code(12);
    SmallSetTable big = precompute_small_sets(code);
    for (size_t x = 0; x < code.n_xchecks; x++) {
        ASSERT_EQ(code.hx.row_weight(x), 11);
        ASSERT_EQ(big.num_candidates(x), 2047);
    }
}

TEST(ssf, candidates_ordered_and_exact) {
    HgpCode code = family_code(12, 2);
    SmallSetTable table(code);
    for (size_t x : {size_t{0}, size_t{17}, code.n_xchecks - 1}) {
        std::vector<uint32_t> prev;
        for (size_t i = 0; i < table.num_candidates(x); i++) {
            std::vector<uint32_t> f = table.candidate_qubits(x, i);
            ASSERT_EQ(f.size(), table.subset_size(x, i));
            if (i > 0) {
                ASSERT_TRUE(prev.size() < f.size() || (prev.size() == f.size() && prev < f));
            }
            BitVector e(code.n_qubits);
            for (uint32_t q : f) {
                ASSERT_TRUE(code.hx.get(x, q));
                e.set(q, true);
            }
            std::vector<size_t> expect = syndrome(code.hz, e).ones();
            ASSERT_EQ(table.candidate_syndrome(x, i), std::vector<uint32_t>(expect.begin(), expect.end()));
            prev = f;
        }
        ASSERT_LE(table.local_zchecks(x).size(), kMaxLocalZChecks);
    }
}

TEST(ssf, zero_syndrome) {
    HgpCode code = family_code(12);
    SmallSetTable table(code);
    Mask mask = sample_mask(code, 0.3, MaskModel::fixed_fraction, 1);
    DecodeResult r = ssf_decode(code, table, BitVector(code.n_zchecks), mask.masked);
    ASSERT_FALSE(r.correction.any());
    ASSERT_EQ(r.iterations, 0);
    ASSERT_FALSE(r.stalled);
}

TEST(ssf, rejects_bits_under_mask) {
    HgpCode code = hgp_product(repetition_code(3));
    SmallSetTable table(code);
    BitVector syn(code.n_zchecks);
    syn.set(2, true);
    std::vector<uint32_t> mask{2};
    ASSERT_THROW(ssf_decode(code, table, syn, mask), ArgumentError);
    ASSERT_THROW(ssf_decode(code, table, BitVector(3), {}), ArgumentError);
}

TEST(ssf, weight_one_errors_rep3) {
    HgpCode code = hgp_product(repetition_code(3));
    SmallSetTable table(code);
    for (size_t q = 0; q < code.n_qubits; q++) {
        BitVector e(code.n_qubits);
        e.set(q, true);
        DecodeResult r = ssf_decode(code, table, syndrome(code.hz, e), {});
        ASSERT_TRUE(corrected(code, e, r.correction)) << "qubit " << q;
    }
}

TEST(ssf, weight_one_errors_family) {
    for (size_t n : {12, 18}) {
        HgpCode code = family_code(n);
        SmallSetTable table(code);
        for (size_t q = 0; q < code.n_qubits; q++) {
            BitVector e(code.n_qubits);
            e.set(q, true);
            DecodeResult r = ssf_decode(code, table, syndrome(code.hz, e), {});
            ASSERT_TRUE(corrected(code, e, r.correction)) << "n " << n << " qubit " << q;
        }
    }
}

TEST(ssf, matches_reference_decoder) {
    HgpCode code = hgp_product(repetition_code(3));
    SmallSetTable table(code);
    Rng rng(11);
    for (int rep = 0; rep < 400; rep++) {
        BitVector e = random_error(code.n_qubits, 1 + rep % 5, rng);
        Mask mask = sample_mask(code, (rep % 3) * 0.25, MaskModel::fixed_fraction, rep);
        BitVector syn = syndrome(code.hz, e);
        for (uint32_t z : mask.masked) {
            syn.set(z, false);
        }
        DecodeResult fast = ssf_decode(code, table, syn, mask.masked);
        reference::SsfResult slow = reference::ssf_decode(code, syn, mask.masked);
        ASSERT_EQ(fast.correction, slow.correction) << "rep " << rep;
        ASSERT_EQ(fast.iterations, slow.iterations);
        ASSERT_EQ(fast.stalled, slow.stalled);
    }
}

TEST(ssf, incremental_matches_full_rescan) {
    HgpCode code = family_code(18, 3);
    SmallSetTable table(code);
    Rng rng(5);
    DecodeOptions full;
    full.full_rescan = true;
    for (int rep = 0; rep < 60; rep++) {
        BitVector e = random_error(code.n_qubits, 1 + rep % 12, rng);
        Mask mask = sample_mask(code, (rep % 4) * 0.15, MaskModel::fixed_fraction, rep);
        BitVector syn = syndrome(code.hz, e);
        for (uint32_t z : mask.masked) {
            syn.set(z, false);
        }
        ASSERT_EQ(ssf_decode(code, table, syn, mask.masked), ssf_decode(code, table, syn, mask.masked, full))
            << "rep " << rep;
    }
}

TEST(ssf, progress_properties) {
    HgpCode code = family_code(24, 2);
    SmallSetTable table(code);
    Rng rng(9);
    DecodeOptions opts;
    opts.record_gains = true;
    for (int rep = 0; rep < 40; rep++) {
        BitVector e = random_error(code.n_qubits, 2 + rep % 20, rng);
        Mask mask = sample_mask(code, 0.2, MaskModel::iid_bernoulli, rep);
        BitVector syn = syndrome(code.hz, e);
        for (uint32_t z : mask.masked) {
            syn.set(z, false);
        }
        DecodeResult r = ssf_decode(code, table, syn, mask.masked, opts);
        ASSERT_LE(r.iterations, syn.weight());
        ASSERT_EQ(r.step_gains.size(), r.iterations);
        size_t total = 0;
        for (uint32_t g : r.step_gains) {
            ASSERT_GT(g, 0u);
            total += g;
        }
        ASSERT_EQ(syn.weight() - total, r.final_visible_syndrome_weight);
        BitVector left = syn ^ syndrome(code.hz, r.correction);
        for (uint32_t z : mask.masked) {
            left.set(z, false);
        }
        ASSERT_EQ(left.weight(), r.final_visible_syndrome_weight);
        ASSERT_EQ(r.stalled, r.final_visible_syndrome_weight > 0);
        ASSERT_EQ(ssf_decode(code, table, syn, mask.masked, opts), r);
    }
}

TEST(ssf, isolated_qubit_is_invisible) {
    HgpCode code = family_code(12);
    SmallSetTable table(code);
    size_t q = 5;
    Mask mask = Mask::from_indices(code.n_zchecks, code.qubit_zchecks[q]);
    BitVector e(code.n_qubits);
    e.set(q, true);
    BitVector syn = syndrome(code.hz, e);
    for (uint32_t z : mask.masked) {
        syn.set(z, false);
    }
    ASSERT_FALSE(syn.any());
    DecodeResult r = ssf_decode(code, table, syn, mask.masked);
    ASSERT_FALSE(r.correction.any());
    ASSERT_FALSE(r.stalled);
}

TEST(ssf, flipped_syndromes) {
    HgpCode code = family_code(12);
    SmallSetTable table(code);
    Rng rng(2);
    for (int rep = 0; rep < 20; rep++) {
        BitVector e = random_error(code.n_qubits, 3, rng);
        ASSERT_EQ(ssf_decode_flipped(code, table, e, {}), ssf_decode(code, table, syndrome(code.hz, e), {}));
    }
    BitVector e(code.n_qubits);
    e.set(7, true);
    std::vector<uint32_t> all = code.qubit_zchecks[7];
    DecodeResult cancelled = ssf_decode_flipped(code, table, e, all);
    ASSERT_FALSE(cancelled.correction.any());
    ASSERT_EQ(cancelled.iterations, 0);

    std::vector<uint32_t> one{0};
    DecodeResult phantom = ssf_decode_flipped(code, table, BitVector(code.n_qubits), one);
    ASSERT_LE(phantom.iterations, 1u);
    ASSERT_EQ(phantom, ssf_decode_flipped(code, table, BitVector(code.n_qubits), one));
    std::vector<uint32_t> bad{static_cast<uint32_t>(code.n_zchecks)};
    ASSERT_THROW(ssf_decode_flipped(code, table, e, bad), ArgumentError);
}

TEST(ssf, capacity_limit) {
    BinaryMatrix h(1, 21);
    for (size_t c = 0; c < 21; c++) {
        h.set(0, c, true);
    }
    HgpCode code = hgp_product(make_classical_code(h));
    ASSERT_THROW(SmallSetTable{code}, CapacityError);
}
