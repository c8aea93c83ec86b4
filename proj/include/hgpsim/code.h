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

#ifndef HGPSIM_CODE_H
#define HGPSIM_CODE_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgpsim/gf2.h"

namespace hgpsim {

/// Distance of a code with no nonzero codewords (k = 0).
constexpr size_t kInfiniteDistance = std::numeric_limits<size_t>::max();

/// Retry budget used by sample_biregular_code.
constexpr size_t kGenerationBudget = 1000;

/// Largest dimension classical_distance will enumerate (2^k codewords).
constexpr size_t kMaxEnumerationDimension = 20;

struct ClassicalCode {
    BinaryMatrix h;
    size_t n = 0;
    size_t k = 0;
    /// Unset until computed; kInfiniteDistance when k = 0.
    std::optional<size_t> d;
    size_t dv = 0;
    size_t dc = 0;
    /// Generation seed, when the code came from sample_biregular_code.
    std::optional<uint64_t> seed;

    bool full_rank() const {
        return n - k == h.rows();
    }
};

/// Wraps a parity check matrix, filling in n, k and the degree metadata.
ClassicalCode make_classical_code(BinaryMatrix h);
/// [n,1,n] repetition code with the (n-1) x n chain check matrix.
ClassicalCode repetition_code(size_t n);
/// [7,4,3] Hamming code; column j is the binary expansion of j+1.
ClassicalCode hamming_code();

struct BiregularOptions {
    /// Degree-preserving edge-switch proposals per edge, applied after the stub matching
    /// to thin out 4-cycles. Zero keeps the plain configuration-model sample.
    size_t switch_sweeps = 200;
};

/// Random (dv, dc)-biregular Tanner graph without double edges and with a full-rank
/// check matrix of n*dv/dc rows. Deterministic given the seed and options.
///
/// Stubs are matched uniformly at random subject to no double edges. Random edge
/// switches (c1,v1),(c2,v2) -> (c1,v2),(c2,v1) are then kept whenever they do not
/// increase the total overlap cost, summed over row pairs and column pairs, of
/// C(o, 2) plus a heavy penalty for every overlap o beyond 2.
ClassicalCode sample_biregular_code(size_t n, size_t dv, size_t dc, uint64_t seed,
                                    const BiregularOptions &options = {});

/// Number of 4-cycles in the Tanner graph of h (sum of C(o, 2) over row-pair overlaps o).
size_t count_four_cycles(const BinaryMatrix &h);
/// Largest number of shared entries between two distinct rows or two distinct columns.
size_t max_pair_overlap(const BinaryMatrix &h);

/// Minimum weight of a nonzero codeword by enumeration of all 2^k - 1 codewords.
/// Returns kInfiniteDistance for k = 0. Throws CapacityError for k > kMaxEnumerationDimension.
size_t classical_distance(const ClassicalCode &code);

struct HgpCode {
    BinaryMatrix hx;
    BinaryMatrix hz;
    size_t n_qubits = 0;
    size_t n_xchecks = 0;
    size_t n_zchecks = 0;
    size_t k = 0;
    std::optional<size_t> d;
    ClassicalCode base;

    std::vector<std::vector<uint32_t>> qubit_xchecks;
    std::vector<std::vector<uint32_t>> qubit_zchecks;
    std::vector<std::vector<uint32_t>> xcheck_qubits;
    std::vector<std::vector<uint32_t>> zcheck_qubits;

    /// Reduced row space of hx, shared so copies of the code stay cheap.
    std::shared_ptr<const RowSpaceBasis> x_stabilizers;

    /// Hz * e computed from the qubit adjacency lists.
    BitVector z_syndrome(const BitVector &e) const;
    bool is_x_stabilizer(const BitVector &e) const {
        return x_stabilizers->contains(e);
    }
    /// "[[n, k, d]]" with d shown as '?' when unknown.
    std::string parameter_string() const;
};

/// Builds an HgpCode from explicit check matrices (adjacency, k, stabilizer basis).
HgpCode make_css_code(BinaryMatrix hx, BinaryMatrix hz, ClassicalCode base, std::optional<size_t> d);

/// Hypergraph product of `base` with itself:
///   Hx = [H (x) I_n | I_m (x) H^T],  Hz = [I_n (x) H | H^T (x) I_m].
/// Qubit a*n + j (a, j < n) is a left qubit, n^2 + i*m + l (i, l < m) a right qubit.
/// The distance is inherited from the base code. Throws ArgumentError unless H is full rank.
HgpCode hgp_product(const ClassicalCode &base);

/// Smallest weight w <= w_max of an X error whose syndrome vanishes on every Z-check
/// with `zcheck_visible[c]` set and which is not an X stabilizer.
std::optional<size_t> min_weight_undetected_logical(const HgpCode &code, std::span<const uint8_t> zcheck_visible,
                                                    size_t w_max);

/// Exhaustive X-distance search up to w_max; nullopt when nothing is found.
std::optional<size_t> quantum_distance_bruteforce(const HgpCode &code, size_t w_max);

/// Header line "n k d dv dc seed" (d as integer, "inf" or "na"; seed as integer or "na"),
/// followed by the matrix in write_matrix format.
void write_code(std::ostream &out, const ClassicalCode &code);
ClassicalCode read_code(std::istream &in);
void save_code(const std::string &path, const ClassicalCode &code);
ClassicalCode load_code(const std::string &path);

}  // namespace hgpsim

#endif
