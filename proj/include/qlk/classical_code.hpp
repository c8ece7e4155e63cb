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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlk/bit_matrix.hpp"

namespace qlk {

/// Binary linear [n, k, d] code with both generator and parity-check matrix.
struct ClassicalCode {
    std::size_t n = 0;
    std::size_t k = 0;
    BitMatrix generator;     // k x n
    BitMatrix parity_check;  // (n - k) x n
    std::optional<std::size_t> distance;
    std::optional<std::size_t> dual_distance;
    std::string name;

    /// n - k, the redundancy.
    std::size_t redundancy() const { return n - k; }
};

/// Largest dimension accepted by codeword enumeration (2^24 words).
inline constexpr std::size_t kMaxEnumerationDimension = 24;

/// f : {1..k} -> N with 0 <= f(i) <= i - 1 (values are given in order f(1), f(2), ...).
inline bool is_sub_exceeding(std::span<const int> f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] > static_cast<int>(i)) return false;
    }
    return true;
}

/// k x k matrix with zeros on the diagonal and ones elsewhere.
inline BitMatrix build_gk(std::size_t k) {
    if (k < 1) throw DomainError("G_k needs k >= 1");
    BitMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g.set(i, j, i != j);
    }
    return g;
}

/// Checks G * H^T = 0 and the rank conditions, then fills in n and k.
inline ClassicalCode make_code(BitMatrix generator, BitMatrix parity_check, std::string name = {}) {
    if (generator.cols() != parity_check.cols()) throw DimensionError("generator and parity check lengths differ");
    if (!mat_mul(generator, transpose(parity_check)).is_zero()) {
        throw PreconditionError("generator is not orthogonal to parity check");
    }
    ClassicalCode c;
    c.n = generator.cols();
    c.k = rank(generator);
    if (c.k != generator.rows()) throw PreconditionError("generator rows are not independent");
    if (rank(parity_check) != c.n - c.k) throw PreconditionError("parity check rank is not n - k");
    c.generator = std::move(generator);
    c.parity_check = std::move(parity_check);
    c.name = std::move(name);
    return c;
}

/// The [2k, k] code with G = [I_k | G_k], H = [G_k | I_k].
inline ClassicalCode build_lk(std::size_t k) {
    if (k < 3) throw DomainError("L_k is defined for k >= 3, got k = " + std::to_string(k));
    const BitMatrix gk = build_gk(k);
    const BitMatrix id = BitMatrix::identity(k);
    return make_code(hconcat(id, gk), hconcat(gk, id), "lk:" + std::to_string(k));
}

/// The [3k, k] code with G = [I_k | G_k | I_k] and H = [[G_k, I_k, 0], [I_k, 0, I_k]].
/// k = 3 is accepted; the quantum k = 3 family member is built from it.
inline ClassicalCode build_lk_plus(std::size_t k) {
    if (k < 3) throw DomainError("L_k^+ is built for k >= 3, got k = " + std::to_string(k));
    const BitMatrix gk = build_gk(k);
    const BitMatrix id = BitMatrix::identity(k);
    const BitMatrix zero(k, k);
    BitMatrix g = hconcat(hconcat(id, gk), id);
    BitMatrix h = vconcat(hconcat(hconcat(gk, id), zero), hconcat(hconcat(id, zero), id));
    return make_code(std::move(g), std::move(h), "lkplus:" + std::to_string(k));
}

/// Swaps the roles of generator and parity check.
inline ClassicalCode dual_code(const ClassicalCode& c) {
    ClassicalCode d;
    d.n = c.n;
    d.k = c.n - c.k;
    d.generator = c.parity_check;
    d.parity_check = c.generator;
    d.distance = c.dual_distance;
    d.dual_distance = c.distance;
    d.name = c.name.empty() ? std::string{} : c.name + "-dual";
    return d;
}

/// Calls `visit(word)` for every codeword m * G, messages in lexicographic
/// order with the first generator row as the most significant message bit.
template <typename Visit>
void for_each_codeword(const ClassicalCode& c, Visit&& visit) {
    if (c.k > kMaxEnumerationDimension) {
        throw CapacityError("codeword enumeration capped at k = " + std::to_string(kMaxEnumerationDimension) +
                            ", got k = " + std::to_string(c.k));
    }
    const std::uint64_t count = std::uint64_t{1} << c.k;
    for (std::uint64_t message = 0; message < count; ++message) {
        BitVector word(c.n);
        for (std::size_t i = 0; i < c.k; ++i) {
            if ((message >> (c.k - 1 - i)) & 1u) word ^= c.generator.row(i);
        }
        visit(static_cast<const BitVector&>(word));
    }
}

inline std::vector<BitVector> enumerate_codewords(const ClassicalCode& c) {
    std::vector<BitVector> out;
    for_each_codeword(c, [&out](const BitVector& w) { out.push_back(w); });
    return out;
}

namespace detail {

// Gray-code walk: one row XOR per message, so the cost is 2^k * n / 64.
inline std::size_t min_nonzero_weight(const BitMatrix& generator) {
    const std::size_t k = generator.rows();
    if (k > kMaxEnumerationDimension) {
        throw CapacityError("distance enumeration capped at k = " + std::to_string(kMaxEnumerationDimension));
    }
    if (k == 0) return 0;
    std::size_t best = generator.cols() + 1;
    BitVector word(generator.cols());
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t step = 1; step < count; ++step) {
        word ^= generator.row(static_cast<std::size_t>(std::countr_zero(step)));
        best = std::min(best, word.popcount());
    }
    return best;
}

}  // namespace detail

/// Exact minimum distance by full enumeration. A zero-dimensional code reports 0.
inline std::size_t min_distance(const ClassicalCode& c) { return detail::min_nonzero_weight(c.generator); }

/// As above, and records the certified value on the code.
inline std::size_t min_distance(ClassicalCode& c) {
    c.distance = detail::min_nonzero_weight(c.generator);
    return *c.distance;
}

/// Certifies both d and the dual distance.
inline ClassicalCode& certify(ClassicalCode& c) {
    c.distance = detail::min_nonzero_weight(c.generator);
    c.dual_distance = detail::min_nonzero_weight(c.parity_check);
    return c;
}

inline ClassicalCode certified(ClassicalCode c) {
    certify(c);
    return c;
}

}  // namespace qlk
