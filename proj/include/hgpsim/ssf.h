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

#ifndef HGPSIM_SSF_H
#define HGPSIM_SSF_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hgpsim/code.h"
#include "hgpsim/gf2.h"

namespace hgpsim {

/// Largest X-check weight whose 2^w - 1 subsets we enumerate.
constexpr size_t kMaxSmallSetCheckWeight = 20;
/// Largest number of distinct Z-checks adjacent to one X-check's support.
constexpr size_t kMaxLocalZChecks = 64;

/// Every nonempty subset of every X-check support, with its Z-syndrome.
///
/// Each X-check keeps the ascending list of Z-checks its qubits touch (its local
/// neighborhood); a candidate's syndrome is then a bit pattern over that list.
/// Candidates of one check are ordered by size, then lexicographically by their
/// sorted qubit indices.
class SmallSetTable {
   public:
    explicit SmallSetTable(const HgpCode &code);

    size_t num_xchecks() const {
        return offsets_.size() - 1;
    }
    size_t num_candidates(size_t xcheck) const {
        return offsets_[xcheck + 1] - offsets_[xcheck];
    }
    size_t total_candidates() const {
        return patterns_.size();
    }
    std::span<const uint32_t> local_zchecks(size_t xcheck) const {
        return local_z_[xcheck];
    }
    std::span<const uint32_t> support(size_t xcheck) const {
        return support_[xcheck];
    }

    /// Bit b selects support(xcheck)[b].
    uint32_t subset_bits(size_t xcheck, size_t index) const {
        return subsets_by_weight_[support_[xcheck].size()][index];
    }
    /// Bit b selects local_zchecks(xcheck)[b].
    uint64_t pattern_bits(size_t xcheck, size_t index) const {
        return patterns_[offsets_[xcheck] + index];
    }
    size_t subset_size(size_t xcheck, size_t index) const {
        return sizes_by_weight_[support_[xcheck].size()][index];
    }

    std::vector<uint32_t> candidate_qubits(size_t xcheck, size_t index) const;
    /// Z-checks flipped by the candidate, ascending.
    std::vector<uint32_t> candidate_syndrome(size_t xcheck, size_t index) const;

    std::span<const uint64_t> patterns(size_t xcheck) const {
        return {patterns_.data() + offsets_[xcheck], num_candidates(xcheck)};
    }
    std::span<const uint8_t> sizes_for(size_t xcheck) const {
        return sizes_by_weight_[support_[xcheck].size()];
    }
    /// lcm(1..w) / |F| per candidate, so that gain * scale orders candidates by gain / |F| exactly.
    std::span<const int64_t> ratio_scale_for(size_t xcheck) const {
        return ratio_scale_by_weight_[support_[xcheck].size()];
    }

    struct LocalSlot {
        uint32_t xcheck;
        uint32_t bit;
    };
    /// Every (X-check, local bit) whose neighborhood contains Z-check z.
    std::span<const LocalSlot> zcheck_slots(size_t z) const {
        return zcheck_slots_[z];
    }

   private:
    std::vector<std::vector<uint32_t>> support_;
    std::vector<std::vector<uint32_t>> local_z_;
    std::vector<std::vector<uint32_t>> subsets_by_weight_;
    std::vector<std::vector<uint8_t>> sizes_by_weight_;
    std::vector<std::vector<int64_t>> ratio_scale_by_weight_;
    std::vector<size_t> offsets_;
    std::vector<uint64_t> patterns_;
    std::vector<std::vector<LocalSlot>> zcheck_slots_;
};

SmallSetTable precompute_small_sets(const HgpCode &code);

struct DecodeOptions {
    /// Re-evaluate every X-check each iteration instead of only those whose
    /// neighborhood syndrome changed.
    bool full_rescan = false;
    /// Record the visible-weight decrease of every applied flip.
    bool record_gains = false;
};

struct DecodeResult {
    BitVector correction;
    size_t iterations = 0;
    size_t final_visible_syndrome_weight = 0;
    bool stalled = false;
    std::vector<uint32_t> step_gains;

    bool operator==(const DecodeResult &other) const = default;
};

/// Small-set flip on a visible syndrome.
///
/// `visible_syndrome` is indexed by Z-check with every position in `mask` already
/// zero. Each iteration applies the candidate with the largest (visible weight
/// decrease) / |F|; ties go to the smaller set, then the lower X-check, then the
/// earlier subset. Stops when no candidate strictly decreases the visible weight.
DecodeResult ssf_decode(const HgpCode &code, const SmallSetTable &table, const BitVector &visible_syndrome,
                        std::span<const uint32_t> mask, const DecodeOptions &options = {});

/// Decodes Hz * true_error with the Z-checks in `flips` inverted, no mask.
DecodeResult ssf_decode_flipped(const HgpCode &code, const SmallSetTable &table, const BitVector &true_error,
                                std::span<const uint32_t> flips, const DecodeOptions &options = {});

}  // namespace hgpsim

#endif
