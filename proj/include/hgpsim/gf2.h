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

#ifndef HGPSIM_GF2_H
#define HGPSIM_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgpsim {

constexpr size_t words_for_bits(size_t n) {
    return (n + 63) / 64;
}

/// A packed vector over GF(2). Bits past `size()` in the last word are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    static BitVector from_string(std::string_view bits);
    static BitVector from_indices(size_t num_bits, std::span<const size_t> ones);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    size_t weight() const;
    bool any() const;
    void clear();
    std::vector<size_t> ones() const;
    std::string str() const;

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2), row-major with each row padded to whole words.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);

    static BinaryMatrix identity(size_t n);
    /// Each string is one row of '0'/'1' characters; all rows must have equal length.
    static BinaryMatrix from_strings(std::span<const std::string> rows);
    static BinaryMatrix from_rows(std::span<const BitVector> rows, size_t cols);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t words_per_row() const {
        return words_per_row_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool value) {
        uint64_t &w = data_[r * words_per_row_ + (c >> 6)];
        uint64_t m = uint64_t{1} << (c & 63);
        w = value ? (w | m) : (w & ~m);
    }

    std::span<uint64_t> row_words(size_t r) {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const uint64_t> row_words(size_t r) const {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    BitVector row(size_t r) const;
    BitVector column(size_t c) const;
    /// Column indices of the nonzero entries of row r, ascending.
    std::vector<size_t> row_support(size_t r) const;
    size_t row_weight(size_t r) const;
    std::vector<size_t> column_weights() const;
    size_t max_row_weight() const;
    size_t max_column_weight() const;
    bool is_zero() const;

    BinaryMatrix transposed() const;
    /// Appends `v` as a new last row.
    BinaryMatrix with_row(const BitVector &v) const;

    bool operator==(const BinaryMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

BinaryMatrix kron(const BinaryMatrix &a, const BinaryMatrix &b);
BinaryMatrix hconcat(const BinaryMatrix &left, const BinaryMatrix &right);
/// Product a * b^T over GF(2).
BinaryMatrix multiply_transpose(const BinaryMatrix &a, const BinaryMatrix &b);

/// H * e over GF(2).
BitVector syndrome(const BinaryMatrix &h, const BitVector &e);
size_t rank(const BinaryMatrix &m);
/// True iff v lies in the row space of m (rank test against m with v appended).
bool row_space_member(const BinaryMatrix &m, const BitVector &v);
/// Rows form a basis of ker(m); there are cols - rank of them.
BinaryMatrix nullspace_basis(const BinaryMatrix &m);

/// Echelon form of a row space, reduced once so that membership queries are a single sweep.
class RowSpaceBasis {
   public:
    explicit RowSpaceBasis(const BinaryMatrix &m);

    size_t rank() const {
        return pivots_.size();
    }
    size_t cols() const {
        return reduced_.cols();
    }
    bool contains(const BitVector &v) const;

   private:
    BinaryMatrix reduced_;
    std::vector<size_t> pivots_;
};

/// "rows cols" header, then one 0/1 string per row.
void write_matrix(std::ostream &out, const BinaryMatrix &m);
BinaryMatrix read_matrix(std::istream &in);

}  // namespace hgpsim

#endif
