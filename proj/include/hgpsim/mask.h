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

#ifndef HGPSIM_MASK_H
#define HGPSIM_MASK_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgpsim/code.h"

namespace hgpsim {

enum class MaskModel { fixed_fraction, iid_bernoulli };

std::string_view mask_model_name(MaskModel model);
MaskModel parse_mask_model(std::string_view name);

/// Z-checks whose outcomes the decoder cannot see.
struct Mask {
    size_t n_zchecks = 0;
    /// Ascending.
    std::vector<uint32_t> masked;
    /// A permutation of `masked`; partial unmasking removes a prefix of it.
    std::vector<uint32_t> order;
    MaskModel model = MaskModel::fixed_fraction;
    double p_mask = 0;
    uint64_t seed = 0;

    static Mask empty(size_t n_zchecks) {
        Mask m;
        m.n_zchecks = n_zchecks;
        return m;
    }
    /// Mask over an explicit set, with `order` equal to the ascending list.
    static Mask from_indices(size_t n_zchecks, std::vector<uint32_t> indices);
};

/// fixed_fraction masks exactly round(p_mask * n_zchecks) uniformly chosen checks;
/// iid_bernoulli masks each check independently with probability p_mask.
Mask sample_mask(const HgpCode &code, double p_mask, MaskModel model, uint64_t seed);

enum class ScheduleKind { simple, iterative };

std::string_view schedule_name(ScheduleKind kind);
ScheduleKind parse_schedule(std::string_view name);

struct Schedule {
    ScheduleKind kind = ScheduleKind::simple;
    Mask base_mask;
    size_t tau = 0;
};

/// Masked Z-checks, ascending, in force at round t (1 <= t <= tau + 1).
///
/// simple: the whole base mask for t <= tau.
/// iterative: with l - 1 the number of trailing decimal zeros of t, the first
/// ceil((1 - 10^-(l-1)) * |mask|) checks of `order` are visible for that round only,
/// so rounds divisible by 10 see 90% of the mask lifted, by 100 see 99%, and so on.
/// Round tau + 1 is always unmasked.
std::vector<uint32_t> effective_mask(const Schedule &schedule, size_t t);

/// Number of base-mask checks lifted at round t of an iterative schedule with |mask| = mask_size.
size_t iterative_unmask_count(size_t mask_size, size_t t);

/// For each original Z-degree present in the code, counts[residual] = number of
/// qubits of that degree with `residual` unmasked Z-checks.
using DegreeHistogram = std::map<size_t, std::vector<uint64_t>>;

DegreeHistogram residual_degree_distribution(const HgpCode &code, const Mask &mask);
void merge_histogram(DegreeHistogram &into, const DegreeHistogram &from);

/// Smallest weight of a non-stabilizer X error invisible to every unmasked Z-check.
std::optional<size_t> masked_distance(const HgpCode &code, const Mask &mask, size_t w_max);

/// True iff some qubit with nonzero Z-degree has all of its Z-checks masked.
bool exists_isolated_qubit(const HgpCode &code, const Mask &mask);

/// Header "n_zchecks p_mask model seed", then one masked index per line, ascending.
/// Reading restores `order` as the ascending list.
void write_mask(std::ostream &out, const Mask &mask);
Mask read_mask(std::istream &in);

}  // namespace hgpsim

#endif
