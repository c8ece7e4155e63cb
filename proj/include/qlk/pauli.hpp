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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "qlk/bit_matrix.hpp"

namespace qlk {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

namespace detail {

struct PauliProduct {
    Pauli result;
    std::uint8_t phase;  // exponent of i
};

// Single-qubit products a * b from X^2 = Y^2 = Z^2 = I, XY = iZ, YZ = iX, ZX = iY
// and their reversals with -i (= i^3).
inline constexpr std::array<std::array<PauliProduct, 4>, 4> kPauliTable{{
    // a = I
    {{{Pauli::I, 0}, {Pauli::X, 0}, {Pauli::Y, 0}, {Pauli::Z, 0}}},
    // a = X
    {{{Pauli::X, 0}, {Pauli::I, 0}, {Pauli::Z, 1}, {Pauli::Y, 3}}},
    // a = Y
    {{{Pauli::Y, 0}, {Pauli::Z, 3}, {Pauli::I, 0}, {Pauli::X, 1}}},
    // a = Z
    {{{Pauli::Z, 0}, {Pauli::Y, 1}, {Pauli::X, 3}, {Pauli::I, 0}}},
}};

constexpr Pauli pauli_from_bits(bool x, bool z) {
    if (x) return z ? Pauli::Y : Pauli::X;
    return z ? Pauli::Z : Pauli::I;
}

}  // namespace detail

/// i^phase_exp * (M_1 ⊗ ... ⊗ M_n), each M_j ∈ {I, X, Y, Z} encoded as (x_j, z_j).
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
    PauliOperator(BitVector x_bits, BitVector z_bits, std::uint8_t phase_exp = 0)
        : phase_(phase_exp & 3u), x_(std::move(x_bits)), z_(std::move(z_bits)) {
        if (x_.size() != z_.size()) throw DimensionError("x and z parts of a Pauli must have equal length");
    }

    static PauliOperator x_type(const BitVector& support) { return {support, BitVector(support.size())}; }
    static PauliOperator z_type(const BitVector& support) { return {BitVector(support.size()), support}; }
    static PauliOperator single(std::size_t n, std::size_t qubit, Pauli p) {
        PauliOperator out(n);
        out.set(qubit, p);
        return out;
    }

    /// Accepts an optional "+", "-", "+i", "-i" (or "i") prefix followed by I/X/Y/Z characters.
    static PauliOperator parse(std::string_view text) {
        std::uint8_t phase = 0;
        if (text.starts_with("+i")) {
            phase = 1;
            text.remove_prefix(2);
        } else if (text.starts_with("-i")) {
            phase = 3;
            text.remove_prefix(2);
        } else if (text.starts_with("+")) {
            text.remove_prefix(1);
        } else if (text.starts_with("-")) {
            phase = 2;
            text.remove_prefix(1);
        } else if (text.starts_with("i")) {
            phase = 1;
            text.remove_prefix(1);
        }
        PauliOperator out(text.size());
        out.phase_ = phase;
        for (std::size_t j = 0; j < text.size(); ++j) {
            switch (text[j]) {
                case 'I': case '_': break;
                case 'X': out.set(j, Pauli::X); break;
                case 'Y': out.set(j, Pauli::Y); break;
                case 'Z': out.set(j, Pauli::Z); break;
                default: throw ParseError("invalid Pauli character '" + std::string(1, text[j]) + "'");
            }
        }
        return out;
    }

    std::size_t num_qubits() const { return x_.size(); }
    std::uint8_t phase_exp() const { return phase_; }
    void set_phase_exp(std::uint8_t c) { phase_ = c & 3u; }
    /// Hermitian operators carry phase 0 or 2; true for the minus sign.
    bool sign() const { return phase_ == 2; }

    const BitVector& x_bits() const { return x_; }
    const BitVector& z_bits() const { return z_; }
    BitVector& x_bits() { return x_; }
    BitVector& z_bits() { return z_; }

    Pauli at(std::size_t q) const { return detail::pauli_from_bits(x_.get(q), z_.get(q)); }
    void set(std::size_t q, Pauli p) {
        x_.set(q, p == Pauli::X || p == Pauli::Y);
        z_.set(q, p == Pauli::Z || p == Pauli::Y);
    }

    std::size_t weight() const { return (x_ | z_).popcount(); }
    bool is_identity() const { return x_.none() && z_.none(); }

    /// In-place right multiplication: *this = *this * rhs, phase tracked mod 4.
    PauliOperator& operator*=(const PauliOperator& rhs) {
        if (rhs.num_qubits() != num_qubits()) throw DimensionError("Pauli product on different qubit counts");
        unsigned phase = phase_ + rhs.phase_;
        const BitVector overlap = (x_ | z_) & (rhs.x_ | rhs.z_);
        for (std::size_t q : overlap.support()) {
            phase += detail::kPauliTable[static_cast<int>(at(q))][static_cast<int>(rhs.at(q))].phase;
        }
        x_ ^= rhs.x_;
        z_ ^= rhs.z_;
        phase_ = static_cast<std::uint8_t>(phase & 3u);
        return *this;
    }
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }

    /// True iff the two operators commute.
    bool commutes_with(const PauliOperator& other) const {
        return !(dot(x_, other.z_) ^ dot(z_, other.x_));
    }

    /// Phase-insensitive equality.
    bool same_up_to_phase(const PauliOperator& other) const { return x_ == other.x_ && z_ == other.z_; }

    friend bool operator==(const PauliOperator& a, const PauliOperator& b) = default;

    std::string to_string() const {
        static constexpr std::array<const char*, 4> kPrefix{"+", "+i", "-", "-i"};
        std::string s = kPrefix[phase_];
        for (std::size_t q = 0; q < num_qubits(); ++q) s += "IXYZ"[static_cast<int>(at(q))];
        return s;
    }

   private:
    std::uint8_t phase_ = 0;
    BitVector x_;
    BitVector z_;
};

/// The symplectic image (α | β) of length 2n.
using SymplecticVector = BitVector;

/// Phase-blind map to (α | β).
inline SymplecticVector phi(const PauliOperator& p) { return concat(p.x_bits(), p.z_bits()); }

/// Splits at the midpoint; the result has phase exponent 0.
inline PauliOperator phi_inverse(const SymplecticVector& v) {
    if (v.size() % 2 != 0) throw DimensionError("symplectic vector length must be even");
    const std::size_t n = v.size() / 2;
    return {v.slice(0, n), v.slice(n, n)};
}

/// u · Λ_{2n} · v^T with Λ_{2n} = [[0, I], [I, 0]].
inline bool symplectic_product(const SymplecticVector& u, const SymplecticVector& v) {
    if (u.size() != v.size() || u.size() % 2 != 0) throw DimensionError("symplectic product needs equal even lengths");
    const std::size_t n = u.size() / 2;
    return dot(u.slice(0, n), v.slice(n, n)) ^ dot(u.slice(n, n), v.slice(0, n));
}

inline std::size_t pauli_weight(const PauliOperator& p) { return p.weight(); }

/// H = [H_X | H_Z] split into its two halves.
inline std::pair<BitMatrix, BitMatrix> stabilizer_matrix_split(const BitMatrix& h) {
    if (h.cols() % 2 != 0) throw DimensionError("stabilizer matrix needs an even column count");
    const std::size_t n = h.cols() / 2;
    std::vector<BitVector> xs;
    std::vector<BitVector> zs;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        xs.push_back(h.row(r).slice(0, n));
        zs.push_back(h.row(r).slice(n, n));
    }
    return {BitMatrix::from_rows(std::move(xs), n), BitMatrix::from_rows(std::move(zs), n)};
}

/// H Λ H^T = H_X H_Z^T + H_Z H_X^T, the r x r matrix of pairwise symplectic products.
inline BitMatrix commutation_matrix(const BitMatrix& h) {
    auto [hx, hz] = stabilizer_matrix_split(h);
    BitMatrix a = mat_mul(hx, transpose(hz));
    const BitMatrix b = mat_mul(hz, transpose(hx));
    for (std::size_t r = 0; r < a.rows(); ++r) a.row(r) ^= b.row(r);
    return a;
}

}  // namespace qlk
