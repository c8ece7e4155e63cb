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
#include <sstream>
#include <string>
#include <vector>

#include "qlk/circuit.hpp"
#include "qlk/css_code.hpp"
#include "qlk/encoder.hpp"
#include "qlk/tableau.hpp"

namespace qlk {

struct EncodingReport {
    bool pass = false;
    std::size_t x_rows_checked = 0;
    std::size_t z_rows_checked = 0;
    // 0-based rows of H_X / H_Z whose Pauli is not a +1 stabilizer of the output.
    std::vector<std::size_t> failing_x_rows;
    std::vector<std::size_t> failing_z_rows;

    std::string summary() const {
        std::ostringstream out;
        out << (pass ? "pass" : "fail") << ": X checks " << (x_rows_checked - failing_x_rows.size()) << '/'
            << x_rows_checked << ", Z checks " << (z_rows_checked - failing_z_rows.size()) << '/' << z_rows_checked;
        return out.str();
    }
};

/// Prepares |logical_input> ⊗ |0...0> (input on qubits 1..k_logical, with an X
/// gate per set bit), runs the circuit, and checks every row of H_X as an X-type
/// and every row of H_Z as a Z-type stabilizer with sign +1.
inline EncodingReport verify_encoding(const Circuit& c, const CssCode& code, const BitVector& logical_input) {
    if (c.num_qubits() != code.n) throw DimensionError("circuit register does not match code length");
    if (logical_input.size() != code.k_logical) throw DimensionError("logical input length must equal k_logical");
    Tableau t(code.n);
    for (std::size_t j : logical_input.support()) t.apply(Gate::x(j + 1));
    t.apply(c);

    EncodingReport report;
    report.x_rows_checked = code.hx.rows();
    report.z_rows_checked = code.hz.rows();
    for (std::size_t r = 0; r < code.hx.rows(); ++r) {
        if (t.is_stabilized(PauliOperator::x_type(code.hx.row(r))) != Stabilized::Yes) {
            report.failing_x_rows.push_back(r);
        }
    }
    for (std::size_t r = 0; r < code.hz.rows(); ++r) {
        if (t.is_stabilized(PauliOperator::z_type(code.hz.row(r))) != Stabilized::Yes) {
            report.failing_z_rows.push_back(r);
        }
    }
    report.pass = report.failing_x_rows.empty() && report.failing_z_rows.empty();
    return report;
}

inline EncodingReport verify_encoding(const Circuit& c, const CssCode& code) {
    return verify_encoding(c, code, BitVector(code.k_logical));
}

}  // namespace qlk
