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

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "qlk/bit_matrix.hpp"
#include "qlk/circuit.hpp"
#include "qlk/pauli.hpp"

namespace qlk {

enum class Stabilized { Yes, No, Anti };

inline const char* to_string(Stabilized s) {
    switch (s) {
        case Stabilized::Yes: return "yes";
        case Stabilized::Anti: return "anti";
        case Stabilized::No: break;
    }
    return "no";
}

/// Stabilizer state on n qubits: n signed stabilizer generators plus n
/// destabilizers, with stabilizer i and destabilizer i anticommuting and every
/// other pair commuting.
class Tableau {
   public:
    /// |0...0>: stabilizers Z_j, destabilizers X_j.
    explicit Tableau(std::size_t n) : n_(n) {
        if (n == 0) throw DomainError("tableau needs at least one qubit");
        for (std::size_t q = 0; q < n; ++q) destabilizers_.push_back(PauliOperator::single(n, q, Pauli::X));
        for (std::size_t q = 0; q < n; ++q) stabilizers_.push_back(PauliOperator::single(n, q, Pauli::Z));
    }

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliOperator>& stabilizers() const { return stabilizers_; }
    const std::vector<PauliOperator>& destabilizers() const { return destabilizers_; }

    void apply(const Gate& g) {
        auto check = [this](std::size_t q) {
            if (q < 1 || q > n_) throw DomainError("gate qubit " + std::to_string(q) + " outside tableau");
        };
        check(g.qubit);
        if (g.is_two_qubit()) check(g.target);
        const std::size_t a = g.qubit - 1;
        const std::size_t b = g.target - 1;
        switch (g.kind) {
            case GateKind::H: for_rows([a](PauliOperator& p) { conj_h(p, a); }); break;
            case GateKind::X: for_rows([a](PauliOperator& p) { flip_sign_if(p, p.z_bits().get(a)); }); break;
            case GateKind::Z: for_rows([a](PauliOperator& p) { flip_sign_if(p, p.x_bits().get(a)); }); break;
            case GateKind::CNOT: for_rows([a, b](PauliOperator& p) { conj_cnot(p, a, b); }); break;
            case GateKind::CZ:
                for_rows([a, b](PauliOperator& p) {
                    conj_h(p, b);
                    conj_cnot(p, a, b);
                    conj_h(p, b);
                });
                break;
        }
    }

    void apply(const Circuit& c) {
        if (c.num_qubits() != n_) throw DimensionError("circuit and tableau qubit counts differ");
        std::size_t count = 0;
        for (const Gate& g : c.gates()) {
            apply(g);
#ifndef NDEBUG
            if (++count % 64 == 0) assert(is_consistent());
#endif
        }
        (void)count;
    }

    /// Yes if +p is in the stabilizer group, Anti if -p is, No otherwise.
    Stabilized is_stabilized(const PauliOperator& p) const {
        if (p.num_qubits() != n_) throw DimensionError("Pauli and tableau qubit counts differ");
        if (p.phase_exp() % 2 != 0) return Stabilized::No;
        for (const auto& s : stabilizers_) {
            if (!s.commutes_with(p)) return Stabilized::No;
        }
        // p commutes with every stabilizer, so up to sign it is the product of the
        // stabilizers whose paired destabilizer it anticommutes with.
        PauliOperator product(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (!destabilizers_[i].commutes_with(p)) product *= stabilizers_[i];
        }
        if (!product.same_up_to_phase(p)) return Stabilized::No;
        return product.phase_exp() == p.phase_exp() ? Stabilized::Yes : Stabilized::Anti;
    }

    /// Pairwise commutation of stabilizers, the stabilizer/destabilizer pairing,
    /// and independence of the stabilizer rows.
    bool is_consistent() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (!stabilizers_[i].commutes_with(stabilizers_[j])) return false;
                if (stabilizers_[i].commutes_with(destabilizers_[j]) == (i == j)) return false;
            }
        }
        std::vector<BitVector> rows;
        for (const auto& s : stabilizers_) rows.push_back(phi(s));
        return rank(BitMatrix::from_rows(std::move(rows), 2 * n_)) == n_;
    }

   private:
    template <typename F>
    void for_rows(F&& f) {
        for (auto& p : destabilizers_) f(p);
        for (auto& p : stabilizers_) f(p);
    }

    static void flip_sign_if(PauliOperator& p, bool flip) {
        if (flip) p.set_phase_exp(static_cast<std::uint8_t>(p.phase_exp() ^ 2u));
    }

    // X <-> Z, Y -> -Y.
    static void conj_h(PauliOperator& p, std::size_t q) {
        const bool x = p.x_bits().get(q);
        const bool z = p.z_bits().get(q);
        flip_sign_if(p, x && z);
        p.x_bits().set(q, z);
        p.z_bits().set(q, x);
    }

    // X_c -> X_c X_t, Z_t -> Z_c Z_t.
    static void conj_cnot(PauliOperator& p, std::size_t c, std::size_t t) {
        const bool xc = p.x_bits().get(c);
        const bool zc = p.z_bits().get(c);
        const bool xt = p.x_bits().get(t);
        const bool zt = p.z_bits().get(t);
        flip_sign_if(p, xc && zt && (xt == zc));
        p.x_bits().set(t, xt ^ xc);
        p.z_bits().set(c, zc ^ zt);
    }

    std::size_t n_;
    std::vector<PauliOperator> destabilizers_;
    std::vector<PauliOperator> stabilizers_;
};

inline Tableau tableau_zero_state(std::size_t n) { return Tableau(n); }

}  // namespace qlk
