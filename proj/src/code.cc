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

#include "hgpsim/code.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hgpsim/errors.h"
#include "hgpsim/rng.h"

namespace hgpsim {

namespace {

std::vector<std::vector<uint32_t>> row_lists(const BinaryMatrix &m) {
    std::vector<std::vector<uint32_t>> out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row_support(r)) {
            out[r].push_back(static_cast<uint32_t>(c));
        }
    }
    return out;
}

std::vector<std::vector<uint32_t>> column_lists(const BinaryMatrix &m) {
    std::vector<std::vector<uint32_t>> out(m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row_support(r)) {
            out[c].push_back(static_cast<uint32_t>(r));
        }
    }
    return out;
}

// One attempt at a simple biregular bipartite graph: variable stubs are matched
// in order, each to a uniformly random remaining check stub whose check is not
// yet adjacent to the variable. Returns false on a dead end.
bool try_match_stubs(size_t n, size_t m, size_t dv, size_t dc, Rng &rng, BinaryMatrix &h) {
    std::vector<uint32_t> check_stubs;
    check_stubs.reserve(m * dc);
    for (size_t c = 0; c < m; c++) {
        for (size_t k = 0; k < dc; k++) {
            check_stubs.push_back(static_cast<uint32_t>(c));
        }
    }
    h = BinaryMatrix(m, n);
    std::vector<size_t> candidates;
    for (size_t v = 0; v < n; v++) {
        for (size_t k = 0; k < dv; k++) {
            candidates.clear();
            for (size_t s = 0; s < check_stubs.size(); s++) {
                if (!h.get(check_stubs[s], v)) {
                    candidates.push_back(s);
                }
            }
            if (candidates.empty()) {
                return false;
            }
            size_t pick = candidates[uniform_below(rng, candidates.size())];
            h.set(check_stubs[pick], v, true);
            check_stubs[pick] = check_stubs.back();
            check_stubs.pop_back();
        }
    }
    return true;
}

// Overlap bookkeeping for edge switching. Costs are kept incrementally: every
// edge insertion or removal changes the overlap of its check with each check
// sharing the variable, and of its variable with each variable sharing the check.
class OverlapState {
   public:
    explicit OverlapState(const BinaryMatrix &h)
        : h_(h), rows_(h.rows() * h.rows(), 0), cols_(h.cols() * h.cols(), 0) {
        var_checks_.resize(h.cols());
        check_vars_.resize(h.rows());
        for (size_t c = 0; c < h.rows(); c++) {
            for (size_t v : h.row_support(c)) {
                insert(c, v);
            }
        }
    }

    const BinaryMatrix &matrix() const {
        return h_;
    }
    int64_t cost() const {
        return cost_;
    }
    bool has(size_t c, size_t v) const {
        return h_.get(c, v);
    }

    void insert(size_t c, size_t v) {
        for (uint32_t other : var_checks_[v]) {
            bump(rows_, c, other, h_.rows(), +1);
        }
        for (uint32_t other : check_vars_[c]) {
            bump(cols_, v, other, h_.cols(), +1);
        }
        var_checks_[v].push_back(static_cast<uint32_t>(c));
        check_vars_[c].push_back(static_cast<uint32_t>(v));
        h_.set(c, v, true);
    }

    void remove(size_t c, size_t v) {
        erase_value(var_checks_[v], c);
        erase_value(check_vars_[c], v);
        for (uint32_t other : var_checks_[v]) {
            bump(rows_, c, other, h_.rows(), -1);
        }
        for (uint32_t other : check_vars_[c]) {
            bump(cols_, v, other, h_.cols(), -1);
        }
        h_.set(c, v, false);
    }

   private:
    static int64_t pair_cost(int64_t o) {
        return o * (o - 1) / 2;
    }
    static void erase_value(std::vector<uint32_t> &list, size_t value) {
        auto it = std::find(list.begin(), list.end(), static_cast<uint32_t>(value));
        *it = list.back();
        list.pop_back();
    }
    void bump(std::vector<int32_t> &overlaps, size_t a, size_t b, size_t stride, int32_t delta) {
        int32_t &o = overlaps[a * stride + b];
        cost_ += pair_cost(o + delta) - pair_cost(o);
        o += delta;
        overlaps[b * stride + a] = o;
    }

    BinaryMatrix h_;
    std::vector<int32_t> rows_;
    std::vector<int32_t> cols_;
    std::vector<std::vector<uint32_t>> var_checks_;
    std::vector<std::vector<uint32_t>> check_vars_;
    int64_t cost_ = 0;
};

BinaryMatrix reduce_overlaps(const BinaryMatrix &h, size_t sweeps, Rng &rng) {
    OverlapState state(h);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t c = 0; c < h.rows(); c++) {
        for (size_t v : h.row_support(c)) {
            edges.emplace_back(static_cast<uint32_t>(c), static_cast<uint32_t>(v));
        }
    }
    if (edges.size() < 2) {
        return h;
    }
    size_t proposals = sweeps * edges.size();
    for (size_t step = 0; step < proposals; step++) {
        size_t i = uniform_below(rng, edges.size());
        size_t j = uniform_below(rng, edges.size());
        auto [c1, v1] = edges[i];
        auto [c2, v2] = edges[j];
        if (c1 == c2 || v1 == v2 || state.has(c1, v2) || state.has(c2, v1)) {
            continue;
        }
        int64_t before = state.cost();
        state.remove(c1, v1);
        state.remove(c2, v2);
        state.insert(c1, v2);
        state.insert(c2, v1);
        if (state.cost() <= before) {
            edges[i] = {c1, v2};
            edges[j] = {c2, v1};
        } else {
            state.remove(c1, v2);
            state.remove(c2, v1);
            state.insert(c1, v1);
            state.insert(c2, v2);
        }
    }
    return state.matrix();
}

std::string distance_token(const std::optional<size_t> &d) {
    if (!d.has_value()) {
        return "na";
    }
    if (*d == kInfiniteDistance) {
        return "inf";
    }
    return std::to_string(*d);
}

}  // namespace

ClassicalCode make_classical_code(BinaryMatrix h) {
    ClassicalCode code;
    code.n = h.cols();
    code.k = h.cols() - rank(h);
    code.dc = h.max_row_weight();
    code.dv = h.max_column_weight();
    code.h = std::move(h);
    return code;
}

ClassicalCode repetition_code(size_t n) {
    if (n < 2) {
        throw ArgumentError("repetition code needs n >= 2");
    }
    BinaryMatrix h(n - 1, n);
    for (size_t r = 0; r + 1 < n; r++) {
        h.set(r, r, true);
        h.set(r, r + 1, true);
    }
    ClassicalCode code = make_classical_code(std::move(h));
    code.d = n;
    return code;
}

ClassicalCode hamming_code() {
    BinaryMatrix h(3, 7);
    for (size_t c = 0; c < 7; c++) {
        for (size_t r = 0; r < 3; r++) {
            h.set(r, c, ((c + 1) >> r) & 1);
        }
    }
    ClassicalCode code = make_classical_code(std::move(h));
    code.d = 3;
    return code;
}

ClassicalCode sample_biregular_code(size_t n, size_t dv, size_t dc, uint64_t seed, const BiregularOptions &options) {
    if (dv == 0 || dc == 0 || n == 0) {
        throw ArgumentError("sample_biregular_code: n, dv and dc must be positive");
    }
    if ((n * dv) % dc != 0) {
        throw ArgumentError("sample_biregular_code: n*dv = " + std::to_string(n * dv) + " is not divisible by dc = " +
                            std::to_string(dc));
    }
    size_t m = n * dv / dc;
    if (m >= n) {
        throw ArgumentError("sample_biregular_code: n*dv/dc = " + std::to_string(m) + " must be below n = " +
                            std::to_string(n));
    }
    if (dv > m || dc > n) {
        throw ArgumentError("sample_biregular_code: degrees too large for a simple graph");
    }
    Rng rng(seed);
    BinaryMatrix h;
    size_t dead_ends = 0;
    size_t rank_deficient = 0;
    for (size_t attempt = 0; attempt < kGenerationBudget; attempt++) {
        if (!try_match_stubs(n, m, dv, dc, rng, h)) {
            dead_ends++;
            continue;
        }
        if (options.switch_sweeps > 0) {
            h = reduce_overlaps(h, options.switch_sweeps, rng);
        }
        if (rank(h) != m) {
            rank_deficient++;
            continue;
        }
        ClassicalCode code = make_classical_code(std::move(h));
        code.seed = seed;
        return code;
    }
    throw GenerationError("sample_biregular_code(n=" + std::to_string(n) + ", dv=" + std::to_string(dv) +
                          ", dc=" + std::to_string(dc) + ", seed=" + std::to_string(seed) + "): retry budget of " +
                          std::to_string(kGenerationBudget) + " exhausted (" + std::to_string(dead_ends) +
                          " matching dead ends, " + std::to_string(rank_deficient) + " rank-deficient draws)");
}

size_t count_four_cycles(const BinaryMatrix &h) {
    size_t total = 0;
    for (size_t a = 0; a < h.rows(); a++) {
        auto x = h.row_words(a);
        for (size_t b = a + 1; b < h.rows(); b++) {
            auto y = h.row_words(b);
            size_t o = 0;
            for (size_t w = 0; w < x.size(); w++) {
                o += std::popcount(x[w] & y[w]);
            }
            total += o * (o - 1) / 2;
        }
    }
    return total;
}

namespace {

size_t max_row_overlap(const BinaryMatrix &m) {
    size_t best = 0;
    for (size_t a = 0; a < m.rows(); a++) {
        auto x = m.row_words(a);
        for (size_t b = a + 1; b < m.rows(); b++) {
            auto y = m.row_words(b);
            size_t o = 0;
            for (size_t w = 0; w < x.size(); w++) {
                o += std::popcount(x[w] & y[w]);
            }
            best = std::max(best, o);
        }
    }
    return best;
}

}  // namespace

size_t max_pair_overlap(const BinaryMatrix &h) {
    return std::max(max_row_overlap(h), max_row_overlap(h.transposed()));
}

size_t classical_distance(const ClassicalCode &code) {
    if (code.k > kMaxEnumerationDimension) {
        throw CapacityError("classical_distance: k = " + std::to_string(code.k) + " exceeds the enumeration budget of " +
                            std::to_string(kMaxEnumerationDimension));
    }
    BinaryMatrix generators = nullspace_basis(code.h);
    if (generators.rows() == 0) {
        return kInfiniteDistance;
    }
    // Gray-code walk over all nonzero combinations of the basis.
    BitVector word(code.n);
    size_t best = kInfiniteDistance;
    uint64_t total = uint64_t{1} << generators.rows();
    for (uint64_t step = 1; step < total; step++) {
        size_t flipped = std::countr_zero(step);
        auto src = generators.row_words(flipped);
        auto dst = word.words();
        for (size_t w = 0; w < dst.size(); w++) {
            dst[w] ^= src[w];
        }
        best = std::min(best, word.weight());
    }
    return best;
}

BitVector HgpCode::z_syndrome(const BitVector &e) const {
    if (e.size() != n_qubits) {
        throw ArgumentError("z_syndrome: error length does not match the qubit count");
    }
    BitVector s(n_zchecks);
    for (size_t q : e.ones()) {
        for (uint32_t c : qubit_zchecks[q]) {
            s.flip(c);
        }
    }
    return s;
}

std::string HgpCode::parameter_string() const {
    std::string ds = "?";
    if (d.has_value()) {
        ds = *d == kInfiniteDistance ? "inf" : std::to_string(*d);
    }
    return "[[" + std::to_string(n_qubits) + ", " + std::to_string(k) + ", " + ds + "]]";
}

HgpCode make_css_code(BinaryMatrix hx, BinaryMatrix hz, ClassicalCode base, std::optional<size_t> d) {
    if (hx.cols() != hz.cols()) {
        throw ArgumentError("make_css_code: Hx and Hz act on different qubit counts");
    }
    if (!multiply_transpose(hx, hz).is_zero()) {
        throw ArgumentError("make_css_code: Hx * Hz^T != 0");
    }
    HgpCode code;
    code.n_qubits = hx.cols();
    code.n_xchecks = hx.rows();
    code.n_zchecks = hz.rows();
    code.qubit_xchecks = column_lists(hx);
    code.qubit_zchecks = column_lists(hz);
    code.xcheck_qubits = row_lists(hx);
    code.zcheck_qubits = row_lists(hz);
    auto basis = std::make_shared<const RowSpaceBasis>(hx);
    code.k = code.n_qubits - basis->rank() - rank(hz);
    code.x_stabilizers = std::move(basis);
    code.d = code.k == 0 ? std::optional<size_t>(kInfiniteDistance) : d;
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    code.base = std::move(base);
    return code;
}

HgpCode hgp_product(const ClassicalCode &base) {
    if (!base.full_rank()) {
        throw ArgumentError("hgp_product: base check matrix has rank " + std::to_string(base.n - base.k) + " < " +
                            std::to_string(base.h.rows()) + " rows");
    }
    const BinaryMatrix &h = base.h;
    BinaryMatrix ht = h.transposed();
    BinaryMatrix in = BinaryMatrix::identity(h.cols());
    BinaryMatrix im = BinaryMatrix::identity(h.rows());
    BinaryMatrix hx = hconcat(kron(h, in), kron(im, ht));
    BinaryMatrix hz = hconcat(kron(in, h), kron(ht, im));
    return make_css_code(std::move(hx), std::move(hz), base, base.d);
}

std::optional<size_t> min_weight_undetected_logical(const HgpCode &code, std::span<const uint8_t> zcheck_visible,
                                                    size_t w_max) {
    if (zcheck_visible.size() != code.n_zchecks) {
        throw ArgumentError("min_weight_undetected_logical: visibility list length mismatch");
    }
    if (code.k == 0) {
        return std::nullopt;
    }
    BitVector visible(code.n_zchecks);
    for (size_t c = 0; c < code.n_zchecks; c++) {
        visible.set(c, zcheck_visible[c] != 0);
    }
    auto vis = visible.words();
    BitVector e(code.n_qubits);
    BitVector s(code.n_zchecks);

    auto toggle = [&](size_t q) {
        e.flip(q);
        for (uint32_t c : code.qubit_zchecks[q]) {
            s.flip(c);
        }
    };
    auto undetected = [&]() {
        auto sw = s.words();
        for (size_t w = 0; w < sw.size(); w++) {
            if (sw[w] & vis[w]) {
                return false;
            }
        }
        return !code.is_x_stabilizer(e);
    };
    // Depth-first over increasing index combinations of exactly `target` qubits.
    auto search = [&](auto &self, size_t start, size_t remaining) -> bool {
        if (remaining == 0) {
            return undetected();
        }
        for (size_t q = start; q + remaining <= code.n_qubits; q++) {
            toggle(q);
            bool hit = self(self, q + 1, remaining - 1);
            toggle(q);
            if (hit) {
                return true;
            }
        }
        return false;
    };
    for (size_t w = 1; w <= w_max && w <= code.n_qubits; w++) {
        if (search(search, 0, w)) {
            return w;
        }
    }
    return std::nullopt;
}

std::optional<size_t> quantum_distance_bruteforce(const HgpCode &code, size_t w_max) {
    std::vector<uint8_t> all_visible(code.n_zchecks, 1);
    return min_weight_undetected_logical(code, all_visible, w_max);
}

void write_code(std::ostream &out, const ClassicalCode &code) {
    out << code.n << ' ' << code.k << ' ' << distance_token(code.d) << ' ' << code.dv << ' ' << code.dc << ' '
        << (code.seed.has_value() ? std::to_string(*code.seed) : std::string("na")) << '\n';
    write_matrix(out, code.h);
}

ClassicalCode read_code(std::istream &in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("code file: missing 'n k d dv dc seed' header");
    }
    std::istringstream hs(header);
    size_t n = 0, k = 0, dv = 0, dc = 0;
    std::string d_token, seed_token;
    if (!(hs >> n >> k >> d_token >> dv >> dc >> seed_token)) {
        throw ParseError("code file: malformed header '" + header + "'");
    }
    ClassicalCode code = make_classical_code(read_matrix(in));
    if (code.n != n || code.k != k || code.dv != dv || code.dc != dc) {
        throw ParseError("code file: header '" + header + "' disagrees with the stored matrix");
    }
    try {
        if (d_token == "inf") {
            code.d = kInfiniteDistance;
        } else if (d_token != "na") {
            code.d = std::stoull(d_token);
        }
        if (seed_token != "na") {
            code.seed = std::stoull(seed_token);
        }
    } catch (const std::exception &) {
        throw ParseError("code file: malformed header '" + header + "'");
    }
    return code;
}

void save_code(const std::string &path, const ClassicalCode &code) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write_code(out, code);
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

ClassicalCode load_code(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return read_code(in);
}

}  // namespace hgpsim
