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

#include <algorithm>
#include <bit>
#include <numeric>

#include "hgpsim/errors.h"

namespace hgpsim {

namespace {

// Nonempty subsets of {0..w-1} as bitmasks, by size and then lexicographically
// by their sorted element lists.
std::vector<uint32_t> ordered_subsets(size_t w) {
    std::vector<uint32_t> out;
    out.reserve((size_t{1} << w) - 1);
    std::vector<uint32_t> pick;
    for (size_t size = 1; size <= w; size++) {
        pick.resize(size);
        for (size_t k = 0; k < size; k++) {
            pick[k] = static_cast<uint32_t>(k);
        }
        while (true) {
            uint32_t bits = 0;
            for (uint32_t p : pick) {
                bits |= uint32_t{1} << p;
            }
            out.push_back(bits);
            size_t k = size;
            while (k > 0 && pick[k - 1] == w - size + k - 1) {
                k--;
            }
            if (k == 0) {
                break;
            }
            pick[k - 1]++;
            for (size_t j = k; j < size; j++) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    return out;
}

struct Best {
    uint32_t gain = 0;
    uint32_t size = 1;
    uint32_t index = 0;
};

// gain_a / size_a > gain_b / size_b.
bool strictly_better_ratio(uint32_t ga, uint32_t sa, uint32_t gb, uint32_t sb) {
    return uint64_t{ga} * sb > uint64_t{gb} * sa;
}

// Ratios gain/|F| are compared as exact integers gain * (lcm(1..w) / |F|);
// scale[i] holds that multiplier. The first index reaching the maximum wins,
// which is the smaller-set-then-lexicographic tie-break by construction.
Best best_for_check(const SmallSetTable &table, size_t x, uint64_t syn, uint64_t vis) {
    Best best;
    if (syn == 0) {
        return best;
    }
    auto patterns = table.patterns(x);
    auto scale = table.ratio_scale_for(x);
    const size_t count = patterns.size();
    const uint64_t *pat = patterns.data();
    const int64_t *sc = scale.data();
    const int64_t base = std::popcount(syn);

    int64_t top = 0;
    for (size_t i = 0; i < count; i++) {
        int64_t g = base - std::popcount(syn ^ (pat[i] & vis));
        top = std::max(top, g * sc[i]);
    }
    if (top <= 0) {
        return best;
    }
    for (size_t i = 0; i < count; i++) {
        int64_t g = base - std::popcount(syn ^ (pat[i] & vis));
        if (g * sc[i] == top) {
            best.gain = static_cast<uint32_t>(g);
            best.size = table.sizes_for(x)[i];
            best.index = static_cast<uint32_t>(i);
            break;
        }
    }
    return best;
}

}  // namespace

SmallSetTable::SmallSetTable(const HgpCode &code) {
    size_t nx = code.n_xchecks;
    support_ = code.xcheck_qubits;
    local_z_.resize(nx);
    zcheck_slots_.resize(code.n_zchecks);
    subsets_by_weight_.resize(kMaxSmallSetCheckWeight + 1);
    sizes_by_weight_.resize(kMaxSmallSetCheckWeight + 1);
    ratio_scale_by_weight_.resize(kMaxSmallSetCheckWeight + 1);
    offsets_.assign(nx + 1, 0);

    for (size_t x = 0; x < nx; x++) {
        size_t w = support_[x].size();
        if (w > kMaxSmallSetCheckWeight) {
            throw CapacityError("precompute_small_sets: X-check " + std::to_string(x) + " has weight " +
                                std::to_string(w) + " > " + std::to_string(kMaxSmallSetCheckWeight));
        }
        auto &local = local_z_[x];
        for (uint32_t q : support_[x]) {
            local.insert(local.end(), code.qubit_zchecks[q].begin(), code.qubit_zchecks[q].end());
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        if (local.size() > kMaxLocalZChecks) {
            throw CapacityError("precompute_small_sets: X-check " + std::to_string(x) + " touches " +
                                std::to_string(local.size()) + " Z-checks > " + std::to_string(kMaxLocalZChecks));
        }
        if (subsets_by_weight_[w].empty() && w > 0) {
            subsets_by_weight_[w] = ordered_subsets(w);
            auto &sizes = sizes_by_weight_[w];
            auto &scale = ratio_scale_by_weight_[w];
            int64_t lcm = 1;
            for (int64_t k = 2; k <= static_cast<int64_t>(w); k++) {
                lcm = std::lcm(lcm, k);
            }
            for (uint32_t bits : subsets_by_weight_[w]) {
                int size = std::popcount(bits);
                sizes.push_back(static_cast<uint8_t>(size));
                scale.push_back(lcm / size);
            }
        }
        offsets_[x + 1] = offsets_[x] + subsets_by_weight_[w].size();
        for (size_t b = 0; b < local.size(); b++) {
            zcheck_slots_[local[b]].push_back({static_cast<uint32_t>(x), static_cast<uint32_t>(b)});
        }
    }

    patterns_.resize(offsets_[nx]);
    for (size_t x = 0; x < nx; x++) {
        const auto &local = local_z_[x];
        size_t w = support_[x].size();
        std::vector<uint64_t> qubit_pattern(w, 0);
        for (size_t b = 0; b < w; b++) {
            for (uint32_t z : code.qubit_zchecks[support_[x][b]]) {
                auto it = std::lower_bound(local.begin(), local.end(), z);
                qubit_pattern[b] ^= uint64_t{1} << (it - local.begin());
            }
        }
        uint64_t *dst = patterns_.data() + offsets_[x];
        const auto &subsets = subsets_by_weight_[w];
        for (size_t i = 0; i < subsets.size(); i++) {
            uint64_t p = 0;
            for (uint32_t bits = subsets[i]; bits; bits &= bits - 1) {
                p ^= qubit_pattern[std::countr_zero(bits)];
            }
            dst[i] = p;
        }
    }
}

std::vector<uint32_t> SmallSetTable::candidate_qubits(size_t xcheck, size_t index) const {
    std::vector<uint32_t> out;
    for (uint32_t bits = subset_bits(xcheck, index); bits; bits &= bits - 1) {
        out.push_back(support_[xcheck][std::countr_zero(bits)]);
    }
    return out;
}

std::vector<uint32_t> SmallSetTable::candidate_syndrome(size_t xcheck, size_t index) const {
    std::vector<uint32_t> out;
    for (uint64_t bits = pattern_bits(xcheck, index); bits; bits &= bits - 1) {
        out.push_back(local_z_[xcheck][std::countr_zero(bits)]);
    }
    return out;
}

SmallSetTable precompute_small_sets(const HgpCode &code) {
    return SmallSetTable(code);
}

DecodeResult ssf_decode(const HgpCode &code, const SmallSetTable &table, const BitVector &visible_syndrome,
                        std::span<const uint32_t> mask, const DecodeOptions &options) {
    if (visible_syndrome.size() != code.n_zchecks) {
        throw ArgumentError("ssf_decode: syndrome length does not match the Z-check count");
    }
    for (uint32_t z : mask) {
        if (z >= code.n_zchecks) {
            throw ArgumentError("ssf_decode: mask index out of range");
        }
        if (visible_syndrome.get(z)) {
            throw ArgumentError("ssf_decode: masked Z-check " + std::to_string(z) + " carries a syndrome bit");
        }
    }

    DecodeResult result;
    result.correction = BitVector(code.n_qubits);
    size_t weight = visible_syndrome.weight();
    if (weight == 0) {
        return result;
    }

    const size_t nx = table.num_xchecks();
    std::vector<uint64_t> local_syn(nx, 0);
    std::vector<uint64_t> local_vis(nx, ~uint64_t{0});
    for (uint32_t z : mask) {
        for (auto slot : table.zcheck_slots(z)) {
            local_vis[slot.xcheck] &= ~(uint64_t{1} << slot.bit);
        }
    }
    for (size_t z : visible_syndrome.ones()) {
        for (auto slot : table.zcheck_slots(z)) {
            local_syn[slot.xcheck] |= uint64_t{1} << slot.bit;
        }
    }

    std::vector<Best> best(nx);
    for (size_t x = 0; x < nx; x++) {
        if (local_syn[x] != 0) {
            best[x] = best_for_check(table, x, local_syn[x], local_vis[x]);
        }
    }

    std::vector<uint32_t> stamp(nx, 0);
    std::vector<uint32_t> dirty;
    uint32_t epoch = 0;
    while (true) {
        size_t chosen = nx;
        for (size_t x = 0; x < nx; x++) {
            const Best &b = best[x];
            if (b.gain == 0) {
                continue;
            }
            if (chosen == nx) {
                chosen = x;
                continue;
            }
            const Best &c = best[chosen];
            // Scanning in ascending check order, later checks win only on a strictly
            // better ratio or an equal ratio with a smaller set.
            if (strictly_better_ratio(b.gain, b.size, c.gain, c.size) ||
                (uint64_t{b.gain} * c.size == uint64_t{c.gain} * b.size && b.size < c.size)) {
                chosen = x;
            }
        }
        if (chosen == nx) {
            break;
        }

        const Best pick = best[chosen];
        for (uint32_t bits = table.subset_bits(chosen, pick.index); bits; bits &= bits - 1) {
            result.correction.flip(table.support(chosen)[std::countr_zero(bits)]);
        }
        uint64_t changed = table.pattern_bits(chosen, pick.index) & local_vis[chosen];
        auto local = table.local_zchecks(chosen);
        epoch++;
        dirty.clear();
        for (uint64_t bits = changed; bits; bits &= bits - 1) {
            uint32_t z = local[std::countr_zero(bits)];
            for (auto slot : table.zcheck_slots(z)) {
                local_syn[slot.xcheck] ^= uint64_t{1} << slot.bit;
                if (stamp[slot.xcheck] != epoch) {
                    stamp[slot.xcheck] = epoch;
                    dirty.push_back(slot.xcheck);
                }
            }
        }
        weight -= pick.gain;
        result.iterations++;
        if (options.record_gains) {
            result.step_gains.push_back(pick.gain);
        }

        if (options.full_rescan) {
            for (size_t x = 0; x < nx; x++) {
                best[x] = best_for_check(table, x, local_syn[x], local_vis[x]);
            }
        } else {
            for (uint32_t x : dirty) {
                best[x] = best_for_check(table, x, local_syn[x], local_vis[x]);
            }
        }
    }

    result.final_visible_syndrome_weight = weight;
    result.stalled = weight > 0;
    return result;
}

DecodeResult ssf_decode_flipped(const HgpCode &code, const SmallSetTable &table, const BitVector &true_error,
                                std::span<const uint32_t> flips, const DecodeOptions &options) {
    BitVector s = code.z_syndrome(true_error);
    for (uint32_t z : flips) {
        if (z >= code.n_zchecks) {
            throw ArgumentError("ssf_decode_flipped: flip index out of range");
        }
        s.flip(z);
    }
    return ssf_decode(code, table, s, {}, options);
}

}  // namespace hgpsim
