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
#include <numeric>
#include <string>
#include <vector>

#include "qlk/bit_matrix.hpp"
#include "qlk/circuit.hpp"
#include "qlk/css_code.hpp"

namespace qlk {

/// Qubits 1..k_logical carry the logical input, the rest start in |0>.
struct RegisterLayout {
    std::size_t n = 0;
    std::size_t k_logical = 0;

    static RegisterLayout for_code(const CssCode& code) { return {code.n, code.k_logical}; }
    static RegisterLayout for_qlk(std::size_t k) { return {6 * k * k, k * k}; }

    bool is_logical(std::size_t qubit) const { return qubit >= 1 && qubit <= k_logical; }
    bool is_ancilla(std::size_t qubit) const { return qubit > k_logical && qubit <= n; }
};

/// 1-based support of row i (1-based) of H_X = H_{L_k} ⊗ I_{3k}, read off the
/// Kronecker structure: row i = a*3k + b + 1 touches column c*3k + b + 1 for
/// every nonzero column c of row a of H_{L_k}.
inline std::vector<std::size_t> hx_support(std::size_t k, std::size_t i) {
    if (k < 3) throw DomainError("hx_support needs k >= 3");
    const std::size_t block = 3 * k;
    if (i < 1 || i > block * k) {
        throw DomainError("H_X row " + std::to_string(i) + " outside [1, " + std::to_string(block * k) + "]");
    }
    const std::size_t a = (i - 1) / block;
    const std::size_t b = (i - 1) % block;
    // Row a of H_{L_k} = [G_k | I_k]: every c < k except c = a, plus column k + a.
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < k; ++c) {
        if (c != a) out.push_back(c * block + b + 1);
    }
    out.push_back((k + a) * block + b + 1);
    return out;
}

/// Hadamard-rooted CNOT fan-outs, one per H_X row, transcribed rule by rule:
///   rows i <= 3k: root 3k + i, targets m*3k + i for m = 2..k-1, then 3k^2 + i;
///   rows i > 3k:  root i - 3k, targets m*3k + i for m >= 2 while <= 3k^2, then 3k^2 + i.
/// The rules for i > 3k skip part of the generator support, so this circuit does
/// not encode QL_k; verify_encoding reports which generators it misses.
inline Circuit paper_circuit(std::size_t k) {
    if (k < 3) throw DomainError("paper_circuit needs k >= 3");
    const std::size_t block = 3 * k;
    const std::size_t rows = block * k;
    Circuit c(6 * k * k);
    for (std::size_t i = 1; i <= block; ++i) {
        const std::size_t root = block + i;
        c.h(root);
        for (std::size_t m = 2; m <= k - 1; ++m) c.cnot(root, m * block + i);
        c.cnot(root, rows + i);
    }
    for (std::size_t i = block + 1; i <= rows; ++i) {
        const std::size_t root = i - block;
        c.h(root);
        for (std::size_t m = 2; m * block + i <= rows; ++m) c.cnot(root, m * block + i);
        c.cnot(root, rows + i);
    }
    return c;
}

/// A standard-form CSS encoder together with the data it was built from.
struct StandardFormEncoding {
    Circuit circuit;
    /// 0-based pivot columns of the reduced H_X; these qubits get Hadamards.
    std::vector<std::size_t> x_pivots;
    /// 0-based info qubits: logical j is moved here before the fan-out.
    std::vector<std::size_t> info_qubits;
    /// Row j is the X-logical representative flipped by logical input bit j:
    /// it lies in ker H_Z, vanishes on x_pivots and has a one at info_qubits[j]
    /// and zeros at every other info qubit.
    BitMatrix logical_x;
};

/// Builds |x_L> = sum over s in rowspace(H_X) of |x·L + s>:
///   1. SWAPs (3 CNOTs each) move logical input j from qubit j to info qubit u_j;
///   2. each u_j fans out by CNOT over the rest of its logical representative;
///   3. each X pivot gets a Hadamard and fans out over the rest of its reduced row.
/// Pivots and representatives come from left-to-right reduced row-echelon forms.
inline StandardFormEncoding standard_form_encoder_detail(const CssCode& code) {
    if (!check_css(code)) throw PreconditionError("standard_form_encoder needs H_X H_Z^T = 0");
    const std::size_t n = code.n;
    const RowEchelon x_form(code.hx);

    // Representatives of ker(H_Z) with the X pivots cleared span a complement
    // of rowspace(H_X) inside ker(H_Z) of dimension k_logical.
    const BitMatrix kernel = kernel_basis(code.hz);
    std::vector<BitVector> cleared;
    for (std::size_t r = 0; r < kernel.rows(); ++r) cleared.push_back(x_form.reduce(kernel.row(r)));
    const RowEchelon logical_form(BitMatrix::from_rows(std::move(cleared), n));
    if (logical_form.rank() != code.k_logical) {
        throw std::logic_error("logical complement has dimension " + std::to_string(logical_form.rank()) +
                               ", expected " + std::to_string(code.k_logical));
    }

    StandardFormEncoding enc;
    enc.circuit = Circuit(n);
    enc.x_pivots = x_form.pivots();
    enc.info_qubits = logical_form.pivots();
    enc.logical_x = logical_form.basis();

    // Move logical input j (at qubit j) to info qubit u_j, tracking who sits where.
    std::vector<std::size_t> occupant(n);  // occupant[q] = logical index at q, or n if |0>
    std::vector<std::size_t> location(code.k_logical);
    for (std::size_t q = 0; q < n; ++q) occupant[q] = q < code.k_logical ? q : n;
    std::iota(location.begin(), location.end(), std::size_t{0});
    for (std::size_t j = 0; j < code.k_logical; ++j) {
        const std::size_t from = location[j];
        const std::size_t to = enc.info_qubits[j];
        if (from == to) continue;
        enc.circuit.swap(from + 1, to + 1);
        const std::size_t displaced = occupant[to];
        occupant[to] = j;
        occupant[from] = displaced;
        if (displaced != n) location[displaced] = from;
        location[j] = to;
    }

    for (std::size_t j = 0; j < code.k_logical; ++j) {
        const std::size_t root = enc.info_qubits[j];
        for (std::size_t q : enc.logical_x.row(j).support()) {
            if (q != root) enc.circuit.cnot(root + 1, q + 1);
        }
    }

    for (std::size_t i = 0; i < x_form.rank(); ++i) {
        const std::size_t root = enc.x_pivots[i];
        enc.circuit.h(root + 1);
        for (std::size_t q : x_form.basis().row(i).support()) {
            if (q != root) enc.circuit.cnot(root + 1, q + 1);
        }
    }
    return enc;
}

inline Circuit standard_form_encoder(const CssCode& code) { return standard_form_encoder_detail(code).circuit; }

}  // namespace qlk
