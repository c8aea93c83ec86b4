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

#include "hgpsim/mask.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "hgpsim/errors.h"
#include "hgpsim/rng.h"

namespace hgpsim {

std::string_view mask_model_name(MaskModel model) {
    return model == MaskModel::fixed_fraction ? "fixed-fraction" : "iid-bernoulli";
}

MaskModel parse_mask_model(std::string_view name) {
    if (name == "fixed-fraction") {
        return MaskModel::fixed_fraction;
    }
    if (name == "iid-bernoulli") {
        return MaskModel::iid_bernoulli;
    }
    throw ArgumentError("unknown mask model '" + std::string(name) + "' (expected fixed-fraction or iid-bernoulli)");
}

std::string_view schedule_name(ScheduleKind kind) {
    return kind == ScheduleKind::simple ? "simple" : "iterative";
}

ScheduleKind parse_schedule(std::string_view name) {
    if (name == "simple") {
        return ScheduleKind::simple;
    }
    if (name == "iterative") {
        return ScheduleKind::iterative;
    }
    throw ArgumentError("unknown schedule '" + std::string(name) + "' (expected simple or iterative)");
}

Mask Mask::from_indices(size_t n_zchecks, std::vector<uint32_t> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw ArgumentError("mask indices must be distinct");
    }
    if (!indices.empty() && indices.back() >= n_zchecks) {
        throw ArgumentError("mask index " + std::to_string(indices.back()) + " out of range");
    }
    Mask m;
    m.n_zchecks = n_zchecks;
    m.order = indices;
    m.masked = std::move(indices);
    m.p_mask = n_zchecks == 0 ? 0 : static_cast<double>(m.masked.size()) / static_cast<double>(n_zchecks);
    return m;
}

Mask sample_mask(const HgpCode &code, double p_mask, MaskModel model, uint64_t seed) {
    if (!(p_mask >= 0 && p_mask <= 1)) {
        throw ArgumentError("sample_mask: p_mask must lie in [0, 1]");
    }
    Rng rng(seed);
    Mask mask;
    mask.n_zchecks = code.n_zchecks;
    mask.model = model;
    mask.p_mask = p_mask;
    mask.seed = seed;
    if (model == MaskModel::fixed_fraction) {
        auto count = static_cast<size_t>(std::llround(p_mask * static_cast<double>(code.n_zchecks)));
        // Partial Fisher-Yates: the first `count` slots form a uniform random ordered subset.
        std::vector<uint32_t> all(code.n_zchecks);
        for (size_t c = 0; c < all.size(); c++) {
            all[c] = static_cast<uint32_t>(c);
        }
        for (size_t k = 0; k < count; k++) {
            size_t j = k + static_cast<size_t>(uniform_below(rng, all.size() - k));
            std::swap(all[k], all[j]);
        }
        mask.order.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
    } else {
        for (size_t c = 0; c < code.n_zchecks; c++) {
            if (uniform01(rng) < p_mask) {
                mask.order.push_back(static_cast<uint32_t>(c));
            }
        }
        shuffle(mask.order, rng);
    }
    mask.masked = mask.order;
    std::sort(mask.masked.begin(), mask.masked.end());
    return mask;
}

size_t iterative_unmask_count(size_t mask_size, size_t t) {
    if (t == 0) {
        throw ArgumentError("iterative_unmask_count: rounds are numbered from 1");
    }
    unsigned __int128 period = 1;
    for (size_t r = t; r % 10 == 0; r /= 10) {
        period *= 10;
    }
    // ceil(mask_size * (period - 1) / period) in exact integer arithmetic.
    unsigned __int128 num = static_cast<unsigned __int128>(mask_size) * (period - 1);
    return static_cast<size_t>((num + period - 1) / period);
}

std::vector<uint32_t> effective_mask(const Schedule &schedule, size_t t) {
    if (t < 1 || t > schedule.tau + 1) {
        throw ArgumentError("effective_mask: round " + std::to_string(t) + " outside [1, " +
                            std::to_string(schedule.tau + 1) + "]");
    }
    if (t == schedule.tau + 1) {
        return {};
    }
    const Mask &base = schedule.base_mask;
    if (schedule.kind == ScheduleKind::simple) {
        return base.masked;
    }
    size_t lifted = iterative_unmask_count(base.order.size(), t);
    std::vector<uint32_t> out(base.order.begin() + static_cast<std::ptrdiff_t>(lifted), base.order.end());
    std::sort(out.begin(), out.end());
    return out;
}

DegreeHistogram residual_degree_distribution(const HgpCode &code, const Mask &mask) {
    std::vector<uint8_t> is_masked(code.n_zchecks, 0);
    for (uint32_t c : mask.masked) {
        is_masked[c] = 1;
    }
    DegreeHistogram hist;
    for (size_t q = 0; q < code.n_qubits; q++) {
        const auto &checks = code.qubit_zchecks[q];
        size_t residual = 0;
        for (uint32_t c : checks) {
            residual += is_masked[c] == 0;
        }
        auto &bucket = hist[checks.size()];
        bucket.resize(checks.size() + 1, 0);
        bucket[residual]++;
    }
    return hist;
}

void merge_histogram(DegreeHistogram &into, const DegreeHistogram &from) {
    for (const auto &[degree, counts] : from) {
        auto &bucket = into[degree];
        bucket.resize(std::max(bucket.size(), counts.size()), 0);
        for (size_t r = 0; r < counts.size(); r++) {
            bucket[r] += counts[r];
        }
    }
}

std::optional<size_t> masked_distance(const HgpCode &code, const Mask &mask, size_t w_max) {
    std::vector<uint8_t> visible(code.n_zchecks, 1);
    for (uint32_t c : mask.masked) {
        visible[c] = 0;
    }
    return min_weight_undetected_logical(code, visible, w_max);
}

bool exists_isolated_qubit(const HgpCode &code, const Mask &mask) {
    std::vector<uint8_t> is_masked(code.n_zchecks, 0);
    for (uint32_t c : mask.masked) {
        is_masked[c] = 1;
    }
    for (size_t q = 0; q < code.n_qubits; q++) {
        const auto &checks = code.qubit_zchecks[q];
        if (!checks.empty() && std::all_of(checks.begin(), checks.end(), [&](uint32_t c) { return is_masked[c]; })) {
            return true;
        }
    }
    return false;
}

void write_mask(std::ostream &out, const Mask &mask) {
    std::ostringstream p;
    p << std::setprecision(17) << mask.p_mask;
    out << mask.n_zchecks << ' ' << p.str() << ' ' << mask_model_name(mask.model) << ' ' << mask.seed << '\n';
    for (uint32_t c : mask.masked) {
        out << c << '\n';
    }
}

Mask read_mask(std::istream &in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("mask file: missing header");
    }
    std::istringstream hs(header);
    size_t n_zchecks = 0;
    double p_mask = 0;
    std::string model;
    uint64_t seed = 0;
    if (!(hs >> n_zchecks >> p_mask >> model >> seed)) {
        throw ParseError("mask file: malformed header '" + header + "'");
    }
    std::vector<uint32_t> indices;
    std::string line;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        try {
            size_t used = 0;
            unsigned long v = std::stoul(line, &used);
            if (used != line.size()) {
                throw std::invalid_argument(line);
            }
            indices.push_back(static_cast<uint32_t>(v));
        } catch (const std::exception &) {
            throw ParseError("mask file: line " + std::to_string(line_no) + " is not an index");
        }
    }
    if (!std::is_sorted(indices.begin(), indices.end())) {
        throw ParseError("mask file: indices are not ascending");
    }
    Mask mask = Mask::from_indices(n_zchecks, std::move(indices));
    mask.p_mask = p_mask;
    mask.model = parse_mask_model(model);
    mask.seed = seed;
    return mask;
}

}  // namespace hgpsim
