// Copyright 2026 The qlk Authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlk/errors.hpp"

namespace qlk {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits past `size()` in the last word are kept zero so that word-wise
/// equality, hashing and popcount need no masking.
class BitVector {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t num_bits) : num_bits_(num_bits), words_(word_count(num_bits), 0) {}

    /// Parses a string of '0'/'1' characters; anything else is a ParseError.
    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                v.set(i);
            } else if (bits[i] != '0') {
                throw ParseError("bit string contains '" + std::string(1, bits[i]) + "'");
            }
        }
        return v;
    }

    static BitVector unit(std::size_t num_bits, std::size_t index) {
        BitVector v(num_bits);
        v.set(index);
        return v;
    }

    static BitVector from_support(std::size_t num_bits, std::span<const std::size_t> support) {
        BitVector v(num_bits);
        for (std::size_t i : support) v.flip(i);
        return v;
    }

    static constexpr std::size_t word_count(std::size_t num_bits) { return (num_bits + kWordBits - 1) / kWordBits; }

    std::size_t size() const { return num_bits_; }
    std::size_t num_words() const { return words_.size(); }
    std::span<const word_t> words() const { return words_; }
    std::span<word_t> words() { return words_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    bool operator[](std::size_t i) const { return get(i); }
    void set(std::size_t i, bool value = true) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (word_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](word_t w) { return w != 0; });
    }
    bool none() const { return !any(); }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
        return num_bits_;
    }

    /// Sorted 0-based indices of set bits.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_t bits = words_[w];
            while (bits != 0) {
                out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    BitVector& operator^=(const BitVector& other) {
        require_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    BitVector& operator&=(const BitVector& other) {
        require_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }
    BitVector& operator|=(const BitVector& other) {
        require_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    /// Lexicographic on the '0'/'1' string rendering (bit 0 most significant).
    friend bool operator<(const BitVector& a, const BitVector& b) {
        if (a.num_bits_ != b.num_bits_) return a.num_bits_ < b.num_bits_;
        for (std::size_t i = 0; i < a.num_bits_; ++i) {
            if (a.get(i) != b.get(i)) return b.get(i);
        }
        return false;
    }

    /// Same-length concatenation: [a | b].
    friend BitVector concat(const BitVector& a, const BitVector& b) {
        BitVector out(a.size() + b.size());
        for (std::size_t i : a.support()) out.set(i);
        for (std::size_t i : b.support()) out.set(a.size() + i);
        return out;
    }

    BitVector slice(std::size_t begin, std::size_t length) const {
        if (begin + length > num_bits_) throw DimensionError("slice out of range");
        BitVector out(length);
        for (std::size_t i = 0; i < length; ++i) out.set(i, get(begin + i));
        return out;
    }

    std::string to_string() const {
        std::string s(num_bits_, '0');
        for (std::size_t i = 0; i < num_bits_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

   private:
    void require_same_size(const BitVector& other) const {
        if (other.num_bits_ != num_bits_) {
            throw DimensionError("bit vector length mismatch: " + std::to_string(num_bits_) + " vs " +
                                 std::to_string(other.num_bits_));
        }
    }

    std::size_t num_bits_ = 0;
    std::vector<word_t> words_;
};

/// Parity of the bitwise AND.
inline bool dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
    auto wa = a.words();
    auto wb = b.words();
    BitVector::word_t acc = 0;
    for (std::size_t w = 0; w < wa.size(); ++w) acc ^= wa[w] & wb[w];
    return (std::popcount(acc) & 1) != 0;
}

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (auto w : v.words()) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Dense row-major binary matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    /// All rows must share one length; `cols` disambiguates the 0-row case.
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
        for (const auto& r : rows) {
            if (r.size() != cols) throw DimensionError("row length does not match column count");
        }
        BitMatrix m;
        m.cols_ = cols;
        m.rows_ = std::move(rows);
        return m;
    }

    static BitMatrix from_strings(std::initializer_list<std::string_view> rows) {
        std::vector<BitVector> parsed;
        std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
        for (auto r : rows) parsed.push_back(BitVector::from_string(r));
        return from_rows(std::move(parsed), cols);
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty() || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitVector>& row_vectors() const { return rows_; }

    BitVector column(std::size_t c) const {
        BitVector out(rows());
        for (std::size_t r = 0; r < rows(); ++r) out.set(r, get(r, c));
        return out;
    }

    std::size_t row_weight(std::size_t r) const { return rows_[r].popcount(); }
    bool is_zero() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
    }

    /// m * v^T: one syndrome bit per row.
    BitVector multiply(const BitVector& v) const {
        if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
        BitVector out(rows());
        for (std::size_t r = 0; r < rows(); ++r) out.set(r, dot(rows_[r], v));
        return out;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

inline BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c : m.row(r).support()) out.set(c, r);
    }
    return out;
}

inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t j : a.row(r).support()) out.row(r) ^= b.row(j);
    }
    return out;
}

/// Kronecker product with the left factor varying slowest:
/// out[i*rb + s][j*cb + t] = a[i][j] * b[s][t].
inline BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    const std::size_t rb = b.rows();
    const std::size_t cb = b.cols();
    BitMatrix out(a.rows() * rb, a.cols() * cb);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto a_support = a.row(i).support();
        for (std::size_t s = 0; s < rb; ++s) {
            auto b_support = b.row(s).support();
            auto& dst = out.row(i * rb + s);
            for (std::size_t j : a_support) {
                for (std::size_t t : b_support) dst.set(j * cb + t);
            }
        }
    }
    return out;
}

inline BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("hconcat: row counts " + std::to_string(a.rows()) + " and " + std::to_string(b.rows()) +
                             " differ");
    }
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(concat(a.row(r), b.row(r)));
    return BitMatrix::from_rows(std::move(rows), a.cols() + b.cols());
}

inline BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vconcat: column counts differ");
    std::vector<BitVector> rows = a.row_vectors();
    rows.insert(rows.end(), b.row_vectors().begin(), b.row_vectors().end());
    return BitMatrix::from_rows(std::move(rows), a.cols());
}

inline BitMatrix block_diag(const BitMatrix& a, const BitMatrix& b) {
    return vconcat(hconcat(a, BitMatrix(a.rows(), b.cols())), hconcat(BitMatrix(b.rows(), a.cols()), b));
}

/// Reduced row-echelon form of a matrix, kept for repeated row-space queries.
///
/// Pivot search scans columns left to right and takes the lowest-index row
/// holding a one, so the reduced form is reproducible.
class RowEchelon {
   public:
    explicit RowEchelon(const BitMatrix& m) : cols_(m.cols()) {
        std::vector<BitVector> rows = m.row_vectors();
        std::size_t next = 0;
        for (std::size_t c = 0; c < cols_ && next < rows.size(); ++c) {
            std::size_t pick = next;
            while (pick < rows.size() && !rows[pick].get(c)) ++pick;
            if (pick == rows.size()) continue;
            std::swap(rows[next], rows[pick]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
            }
            pivots_.push_back(c);
            ++next;
        }
        rows.resize(next);
        basis_ = BitMatrix::from_rows(std::move(rows), cols_);
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }
    /// Nonzero rows of the reduced form; row i has its leading one at pivots()[i].
    const BitMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Clears every pivot position of `v` using the basis rows.
    BitVector reduce(BitVector v) const {
        if (v.size() != cols_) throw DimensionError("row-space query length mismatch");
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            if (v.get(pivots_[i])) v ^= basis_.row(i);
        }
        return v;
    }

    bool contains(const BitVector& v) const { return reduce(v).none(); }

   private:
    std::size_t cols_ = 0;
    BitMatrix basis_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const BitMatrix& m) { return RowEchelon(m).rank(); }

inline bool in_row_space(const BitMatrix& m, const BitVector& v) { return RowEchelon(m).contains(v); }

/// Basis of {v : m * v^T = 0}, one row per free column of the reduced form.
inline BitMatrix kernel_basis(const BitMatrix& m) {
    RowEchelon ech(m);
    const auto& pivots = ech.pivots();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<BitVector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (ech.basis().get(i, free)) v.set(pivots[i]);
        }
        out.push_back(std::move(v));
    }
    return BitMatrix::from_rows(std::move(out), m.cols());
}

}  // namespace qlk
