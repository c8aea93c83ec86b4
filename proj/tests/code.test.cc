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

#include <sstream>

#include "gtest/gtest.h"
#include "hgpsim/errors.h"
#include "reference.h"

using namespace hgpsim;

namespace {

void expect_hgp_identities(const ClassicalCode &base) {
    HgpCode code = hgp_product(base);
    size_t n = base.n;
    size_t m = base.h.rows();
    ASSERT_EQ(code.n_qubits, n * n + (n - base.k) * (n - base.k));
    ASSERT_EQ(code.n_qubits, n * n + m * m);
    ASSERT_EQ(code.k, base.k * base.k);
    ASSERT_EQ(code.k, code.n_qubits - rank(code.hx) - rank(code.hz));
    ASSERT_TRUE(multiply_transpose(code.hx, code.hz).is_zero());
    ASSERT_LE(code.hx.max_row_weight(), base.dv + base.dc);
    ASSERT_LE(code.hz.max_row_weight(), base.dv + base.dc);
    ASSERT_LE(code.hx.max_column_weight(), base.dc);
    ASSERT_LE(code.hz.max_column_weight(), base.dc);
    auto xw = code.hx.column_weights();
    auto zw = code.hz.column_weights();
    for (size_t q = 0; q < code.n_qubits; q++) {
        ASSERT_LE(xw[q] + zw[q], 2 * base.dc);
        ASSERT_EQ(code.qubit_zchecks[q].size(), zw[q]);
        ASSERT_EQ(code.qubit_xchecks[q].size(), xw[q]);
    }
}

}  // namespace

TEST(code, classical_distance_examples) {
    ASSERT_EQ(classical_distance(repetition_code(3)), 3);
    ASSERT_EQ(repetition_code(5).d, 5);
    ClassicalCode hamming = hamming_code();
    ASSERT_EQ(hamming.n, 7);
    ASSERT_EQ(hamming.k, 4);
    ASSERT_EQ(classical_distance(hamming), 3);
    ASSERT_EQ(classical_distance(hamming), reference::min_codeword_weight(hamming.h));
    ClassicalCode trivial = make_classical_code(BinaryMatrix::identity(4));
    ASSERT_EQ(trivial.k, 0);
    ASSERT_EQ(classical_distance(trivial), kInfiniteDistance);
}

TEST(code, classical_distance_matches_enumeration) {
    for (uint64_t seed = 1; seed <= 6; seed++) {
        ClassicalCode c = sample_biregular_code(12, 5, 6, seed);
        ASSERT_EQ(classical_distance(c), reference::min_codeword_weight(c.h)) << "seed " << seed;
        ClassicalCode plain = sample_biregular_code(18, 5, 6, seed, {0});
        ASSERT_EQ(classical_distance(plain), reference::min_codeword_weight(plain.h)) << "seed " << seed;
    }
}

TEST(code, classical_distance_budget) {
    ClassicalCode big = make_classical_code(BinaryMatrix(1, 30));
    ASSERT_GT(big.k, kMaxEnumerationDimension);
    ASSERT_THROW(classical_distance(big), CapacityError);
}

TEST(code, biregular_shape) {
    ClassicalCode c48 = sample_biregular_code(48, 5, 6, 1);
    ASSERT_EQ(c48.h.rows(), 40);
    ASSERT_EQ(c48.k, 8);
    ClassicalCode c12 = sample_biregular_code(12, 5, 6, 1);
    ASSERT_EQ(c12.h.rows(), 10);
    ASSERT_EQ(c12.k, 2);
    ASSERT_EQ(c12.n - rank(c12.h), c12.k);
    ASSERT_THROW(sample_biregular_code(13, 5, 6, 1), ArgumentError);
    ASSERT_THROW(sample_biregular_code(6, 5, 5, 1), ArgumentError);
}

TEST(code, biregular_invariants) {
    for (size_t n : {12, 18, 24, 30, 48}) {
        for (uint64_t seed : {1, 2, 3}) {
            for (size_t sweeps : {0, 200}) {
                ClassicalCode c = sample_biregular_code(n, 5, 6, seed, {sweeps});
                ASSERT_TRUE(c.full_rank());
                for (size_t w : c.h.column_weights()) {
                    ASSERT_EQ(w, 5);
                }
                for (size_t r = 0; r < c.h.rows(); r++) {
                    ASSERT_EQ(c.h.row_weight(r), 6);
                }
                ASSERT_EQ(c.seed, seed);
            }
        }
    }
}

TEST(code, biregular_reproducible) {
    for (uint64_t seed : {0, 5, 1234567}) {
        ASSERT_EQ(sample_biregular_code(24, 5, 6, seed).h, sample_biregular_code(24, 5, 6, seed).h);
    }
    ASSERT_NE(sample_biregular_code(24, 5, 6, 1).h, sample_biregular_code(24, 5, 6, 2).h);
}

TEST(code, edge_switches_remove_four_cycles) {
    for (uint64_t seed : {1, 2, 3}) {
        ClassicalCode plain = sample_biregular_code(48, 5, 6, seed, {0});
        ClassicalCode refined = sample_biregular_code(48, 5, 6, seed);
        ASSERT_LT(count_four_cycles(refined.h), count_four_cycles(plain.h));
        ASSERT_LE(max_pair_overlap(refined.h), 2u);
    }
    BinaryMatrix square = BinaryMatrix::from_strings(std::vector<std::string>{"110", "110", "011"});
    ASSERT_EQ(count_four_cycles(square), 1u);
    ASSERT_EQ(max_pair_overlap(square), 2u);
}

TEST(code, hgp_rep3) {
    HgpCode code = hgp_product(repetition_code(3));
    ASSERT_EQ(code.n_qubits, 13);
    ASSERT_EQ(code.k, 1);
    ASSERT_EQ(code.d, 3);
    ASSERT_EQ(code.parameter_string(), "[[13, 1, 3]]");
    ASSERT_EQ(quantum_distance_bruteforce(code, 4), 3);
    ASSERT_EQ(quantum_distance_bruteforce(code, 2), std::nullopt);
    ASSERT_TRUE(multiply_transpose(code.hx, code.hz).is_zero());
}

TEST(code, hgp_layout) {
    ClassicalCode base = repetition_code(3);
    HgpCode code = hgp_product(base);
    size_t n = 3, m = 2;
    ASSERT_EQ(code.hx, hconcat(kron(base.h, BinaryMatrix::identity(n)), kron(BinaryMatrix::identity(m),
                                                                              base.h.transposed())));
    ASSERT_EQ(code.hz, hconcat(kron(BinaryMatrix::identity(n), base.h), kron(base.h.transposed(),
                                                                              BinaryMatrix::identity(m))));
}

TEST(code, hgp_trivial_code_has_no_logicals) {
    HgpCode code = hgp_product(make_classical_code(BinaryMatrix::identity(2)));
    ASSERT_EQ(code.k, 0);
    ASSERT_EQ(quantum_distance_bruteforce(code, 3), std::nullopt);
}

TEST(code, hgp_rejects_rank_deficient_base) {
    BinaryMatrix h = BinaryMatrix::from_strings(std::vector<std::string>{"110", "011", "101"});
    ASSERT_THROW(hgp_product(make_classical_code(h)), ArgumentError);
}

TEST(code, hgp_identities_on_sampled_family) {
    size_t checked = 0;
    for (size_t n : {12, 18, 24, 30}) {
        for (uint64_t seed = 1; seed <= 5; seed++) {
            expect_hgp_identities(sample_biregular_code(n, 5, 6, seed));
            checked++;
        }
    }
    ASSERT_GE(checked, 20u);
}

TEST(code, hgp_3904) {
    ClassicalCode base = sample_biregular_code(48, 5, 6, 1);
    base.d = classical_distance(base);
    HgpCode code = hgp_product(base);
    ASSERT_EQ(code.n_qubits, 3904);
    ASSERT_EQ(code.k, 64);
    ASSERT_EQ(code.hx.max_row_weight(), 11);
    auto xw = code.hx.column_weights();
    auto zw = code.hz.column_weights();
    size_t max_degree = 0;
    for (size_t q = 0; q < code.n_qubits; q++) {
        max_degree = std::max(max_degree, xw[q] + zw[q]);
    }
    ASSERT_EQ(max_degree, 12);
    ASSERT_EQ(code.parameter_string(), "[[3904, 64, 16]]");
}

TEST(code, code_file_round_trip) {
    ClassicalCode base = sample_biregular_code(18, 5, 6, 4);
    base.d = classical_distance(base);
    std::stringstream s;
    write_code(s, base);
    ClassicalCode back = read_code(s);
    ASSERT_EQ(back.h, base.h);
    ASSERT_EQ(back.k, base.k);
    ASSERT_EQ(back.d, base.d);
    ASSERT_EQ(back.seed, base.seed);
    ASSERT_EQ(back.dv, 5);
    ASSERT_EQ(back.dc, 6);

    ClassicalCode trivial = make_classical_code(BinaryMatrix::identity(3));
    trivial.d = classical_distance(trivial);
    std::stringstream t;
    write_code(t, trivial);
    ASSERT_EQ(read_code(t).d, kInfiniteDistance);

    std::stringstream bad("12 2 x 5 6 1\n");
    ASSERT_THROW(read_code(bad), ParseError);
}
