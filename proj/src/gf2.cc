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

#include "hgpsim/gf2.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "hgpsim/errors.h"

namespace hgpsim {

namespace {

void xor_words(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    for (size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

// Gaussian elimination in place. Returns pivot columns in order of the
// rows they occupy. With `full`, pivots are cleared above as well (RREF).
std::vector<size_t> eliminate(BinaryMatrix &m, bool full) {
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c = 0; c < m.cols() && next_row < m.rows(); c++) {
        size_t found = m.rows();
        for (size_t r = next_row; r < m.rows(); r++) {
            if (m.get(r, c)) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        if (found != next_row) {
            auto a = m.row_words(found);
            auto b = m.row_words(next_row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto pivot_row = m.row_words(next_row);
        for (size_t r = full ? 0 : next_row + 1; r < m.rows(); r++) {
            if (r != next_row && m.get(r, c)) {
                xor_words(m.row_words(r), pivot_row);
            }
        }
        pivots.push_back(c);
        next_row++;
    }
    return pivots;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for_bits(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            v.set(k, true);
        } else if (bits[k] != '0') {
            throw ParseError("bit string contains a character other than 0/1");
        }
    }
    return v;
}

BitVector BitVector::from_indices(size_t num_bits, std::span<const size_t> ones) {
    BitVector v(num_bits);
    for (size_t k : ones) {
        if (k >= num_bits) {
            throw ArgumentError("bit index " + std::to_string(k) + " out of range for length " +
                                std::to_string(num_bits));
        }
        v.flip(k);
    }
    return v;
}

size_t BitVector::weight() const {
    size_t w = 0;
    for (uint64_t x : words_) {
        w += std::popcount(x);
    }
    return w;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t x) { return x != 0; });
}

void BitVector::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

std::vector<size_t> BitVector::ones() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t x = words_[w];
        while (x) {
            out.push_back(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string s(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw ArgumentError("xor of bit vectors with different lengths");
    }
    xor_words(words_, other.words_);
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector out = *this;
    out ^= other;
    return out;
}

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for_bits(cols)), data_(rows * words_for_bits(cols), 0) {
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(std::span<const std::string> rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BinaryMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                             " entries, expected " + std::to_string(cols));
        }
        for (size_t c = 0; c < cols; c++) {
            char ch = rows[r][c];
            if (ch == '1') {
                m.set(r, c, true);
            } else if (ch != '0') {
                throw ParseError("row " + std::to_string(r) + " contains a character other than 0/1");
            }
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const BitVector> rows, size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ArgumentError("row length mismatch in from_rows");
        }
        std::copy(rows[r].words().begin(), rows[r].words().end(), m.row_words(r).begin());
    }
    return m;
}

BitVector BinaryMatrix::row(size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BitVector BinaryMatrix::column(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

std::vector<size_t> BinaryMatrix::row_support(size_t r) const {
    return row(r).ones();
}

size_t BinaryMatrix::row_weight(size_t r) const {
    size_t w = 0;
    for (uint64_t x : row_words(r)) {
        w += std::popcount(x);
    }
    return w;
}

std::vector<size_t> BinaryMatrix::column_weights() const {
    std::vector<size_t> out(cols_, 0);
    for (size_t r = 0; r < rows_; r++) {
        auto words = row_words(r);
        for (size_t w = 0; w < words.size(); w++) {
            uint64_t x = words[w];
            while (x) {
                out[w * 64 + std::countr_zero(x)]++;
                x &= x - 1;
            }
        }
    }
    return out;
}

size_t BinaryMatrix::max_row_weight() const {
    size_t best = 0;
    for (size_t r = 0; r < rows_; r++) {
        best = std::max(best, row_weight(r));
    }
    return best;
}

size_t BinaryMatrix::max_column_weight() const {
    auto weights = column_weights();
    return weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t x) { return x == 0; });
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        auto words = row_words(r);
        for (size_t w = 0; w < words.size(); w++) {
            uint64_t x = words[w];
            while (x) {
                t.set(w * 64 + std::countr_zero(x), r, true);
                x &= x - 1;
            }
        }
    }
    return t;
}

BinaryMatrix BinaryMatrix::with_row(const BitVector &v) const {
    if (v.size() != cols_) {
        throw ArgumentError("appended row has length " + std::to_string(v.size()) + ", matrix has " +
                            std::to_string(cols_) + " columns");
    }
    BinaryMatrix out(rows_ + 1, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(v.words().begin(), v.words().end(), out.row_words(rows_).begin());
    return out;
}

BinaryMatrix kron(const BinaryMatrix &a, const BinaryMatrix &b) {
    BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac : a.row_support(ar)) {
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc : b.row_support(br)) {
                    out.set(ar * b.rows() + br, ac * b.cols() + bc, true);
                }
            }
        }
    }
    return out;
}

BinaryMatrix hconcat(const BinaryMatrix &left, const BinaryMatrix &right) {
    if (left.rows() != right.rows()) {
        throw ArgumentError("hconcat of matrices with different row counts");
    }
    BinaryMatrix out(left.rows(), left.cols() + right.cols());
    for (size_t r = 0; r < left.rows(); r++) {
        for (size_t c : left.row_support(r)) {
            out.set(r, c, true);
        }
        for (size_t c : right.row_support(r)) {
            out.set(r, left.cols() + c, true);
        }
    }
    return out;
}

BinaryMatrix multiply_transpose(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.cols() != b.cols()) {
        throw ArgumentError("multiply_transpose needs equal column counts");
    }
    BinaryMatrix out(a.rows(), b.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        auto x = a.row_words(i);
        for (size_t j = 0; j < b.rows(); j++) {
            auto y = b.row_words(j);
            uint64_t acc = 0;
            for (size_t w = 0; w < x.size(); w++) {
                acc ^= x[w] & y[w];
            }
            if (std::popcount(acc) & 1) {
                out.set(i, j, true);
            }
        }
    }
    return out;
}

BitVector syndrome(const BinaryMatrix &h, const BitVector &e) {
    if (e.size() != h.cols()) {
        throw ArgumentError("syndrome: error has length " + std::to_string(e.size()) + " but matrix has " +
                            std::to_string(h.cols()) + " columns");
    }
    BitVector s(h.rows());
    auto ew = e.words();
    for (size_t r = 0; r < h.rows(); r++) {
        auto row = h.row_words(r);
        uint64_t acc = 0;
        for (size_t w = 0; w < row.size(); w++) {
            acc ^= row[w] & ew[w];
        }
        if (std::popcount(acc) & 1) {
            s.set(r, true);
        }
    }
    return s;
}

size_t rank(const BinaryMatrix &m) {
    BinaryMatrix work = m;
    return eliminate(work, false).size();
}

bool row_space_member(const BinaryMatrix &m, const BitVector &v) {
    if (v.size() != m.cols()) {
        throw ArgumentError("row_space_member: vector has length " + std::to_string(v.size()) +
                            " but matrix has " + std::to_string(m.cols()) + " columns");
    }
    return rank(m) == rank(m.with_row(v));
}

BinaryMatrix nullspace_basis(const BinaryMatrix &m) {
    BinaryMatrix work = m;
    auto pivots = eliminate(work, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(free, true);
        for (size_t r = 0; r < pivots.size(); r++) {
            if (work.get(r, free)) {
                v.set(pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return BinaryMatrix::from_rows(basis, m.cols());
}

RowSpaceBasis::RowSpaceBasis(const BinaryMatrix &m) {
    BinaryMatrix work = m;
    pivots_ = eliminate(work, false);
    reduced_ = BinaryMatrix(pivots_.size(), m.cols());
    for (size_t r = 0; r < pivots_.size(); r++) {
        auto src = work.row_words(r);
        std::copy(src.begin(), src.end(), reduced_.row_words(r).begin());
    }
}

bool RowSpaceBasis::contains(const BitVector &v) const {
    if (v.size() != reduced_.cols()) {
        throw ArgumentError("RowSpaceBasis::contains: length mismatch");
    }
    std::vector<uint64_t> work(v.words().begin(), v.words().end());
    for (size_t r = 0; r < pivots_.size(); r++) {
        size_t c = pivots_[r];
        if ((work[c >> 6] >> (c & 63)) & 1) {
            xor_words(work, reduced_.row_words(r));
        }
    }
    return std::all_of(work.begin(), work.end(), [](uint64_t x) { return x == 0; });
}

void write_matrix(std::ostream &out, const BinaryMatrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        out << m.row(r).str() << '\n';
    }
}

BinaryMatrix read_matrix(std::istream &in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("matrix: missing 'rows cols' header");
    }
    std::istringstream hs(header);
    long long rows = -1, cols = -1;
    std::string extra;
    if (!(hs >> rows >> cols) || rows < 0 || cols < 0 || (hs >> extra)) {
        throw ParseError("matrix: malformed header '" + header + "'");
    }
    BinaryMatrix m(static_cast<size_t>(rows), static_cast<size_t>(cols));
    for (long long r = 0; r < rows; r++) {
        std::string line;
        if (!std::getline(in, line)) {
            throw ParseError("matrix: expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (static_cast<long long>(line.size()) != cols) {
            throw ParseError("matrix: row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                             " entries, expected " + std::to_string(cols));
        }
        for (size_t c = 0; c < line.size(); c++) {
            if (line[c] == '1') {
                m.set(static_cast<size_t>(r), c, true);
            } else if (line[c] != '0') {
                throw ParseError("matrix: row " + std::to_string(r) + " contains a character other than 0/1");
            }
        }
    }
    return m;
}

}  // namespace hgpsim
