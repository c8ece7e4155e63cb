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
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qlk/errors.hpp"

namespace qlk {

enum class GateKind : std::uint8_t { H, X, Z, CNOT, CZ };

/// One gate on 1-based qubit indices; `target` is unused for single-qubit gates.
struct Gate {
    GateKind kind = GateKind::H;
    std::size_t qubit = 1;
    std::size_t target = 0;

    static Gate h(std::size_t q) { return {GateKind::H, q, 0}; }
    static Gate x(std::size_t q) { return {GateKind::X, q, 0}; }
    static Gate z(std::size_t q) { return {GateKind::Z, q, 0}; }
    static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::CNOT, control, target}; }
    static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b}; }

    bool is_two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::CZ; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a register of `num_qubits` qubits, indexed from 1.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    Circuit& append(const Gate& g) {
        validate(g);
        gates_.push_back(g);
        return *this;
    }
    Circuit& h(std::size_t q) { return append(Gate::h(q)); }
    Circuit& x(std::size_t q) { return append(Gate::x(q)); }
    Circuit& z(std::size_t q) { return append(Gate::z(q)); }
    Circuit& cnot(std::size_t c, std::size_t t) { return append(Gate::cnot(c, t)); }
    Circuit& cz(std::size_t a, std::size_t b) { return append(Gate::cz(a, b)); }

    /// SWAP as three CNOTs.
    Circuit& swap(std::size_t a, std::size_t b) { return cnot(a, b).cnot(b, a).cnot(a, b); }

    Circuit& extend(const Circuit& other) {
        for (const Gate& g : other.gates_) append(g);
        return *this;
    }

    friend bool operator==(const Circuit&, const Circuit&) = default;

   private:
    void validate(const Gate& g) const {
        auto in_range = [this](std::size_t q) { return q >= 1 && q <= num_qubits_; };
        if (!in_range(g.qubit) || (g.is_two_qubit() && !in_range(g.target))) {
            throw DomainError("gate qubit index out of range [1, " + std::to_string(num_qubits_) + "]");
        }
        if (g.is_two_qubit() && g.qubit == g.target) throw DomainError("two-qubit gate on a single qubit");
    }

    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
};

enum class CircuitFormat { Native, QasmLike };

// Native:   "qubits <n>" then "H q", "X q", "Z q", "CX c t", "CZ a b", 1-based.
// Qasm-like: OPENQASM 2.0 gate list on a register q[n], 0-based.

inline std::string export_circuit(const Circuit& c, CircuitFormat format = CircuitFormat::Native) {
    std::ostringstream out;
    if (format == CircuitFormat::Native) {
        out << "qubits " << c.num_qubits() << '\n';
        for (const Gate& g : c.gates()) {
            switch (g.kind) {
                case GateKind::H: out << "H " << g.qubit; break;
                case GateKind::X: out << "X " << g.qubit; break;
                case GateKind::Z: out << "Z " << g.qubit; break;
                case GateKind::CNOT: out << "CX " << g.qubit << ' ' << g.target; break;
                case GateKind::CZ: out << "CZ " << g.qubit << ' ' << g.target; break;
            }
            out << '\n';
        }
        return out.str();
    }
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.num_qubits() << "];\n";
    for (const Gate& g : c.gates()) {
        const std::size_t a = g.qubit - 1;
        switch (g.kind) {
            case GateKind::H: out << "h q[" << a << "];"; break;
            case GateKind::X: out << "x q[" << a << "];"; break;
            case GateKind::Z: out << "z q[" << a << "];"; break;
            case GateKind::CNOT: out << "cx q[" << a << "],q[" << g.target - 1 << "];"; break;
            case GateKind::CZ: out << "cz q[" << a << "],q[" << g.target - 1 << "];"; break;
        }
        out << '\n';
    }
    return out.str();
}

namespace detail {

inline std::size_t parse_index(std::string_view token, std::size_t line_no) {
    if (token.empty()) throw ParseError("circuit line " + std::to_string(line_no) + ": missing qubit index");
    std::size_t value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9') {
            throw ParseError("circuit line " + std::to_string(line_no) + ": bad index '" + std::string(token) + "'");
        }
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
}

// "q[12]" -> 12
inline std::size_t parse_qasm_operand(std::string_view token, std::size_t line_no) {
    if (!token.starts_with("q[") || !token.ends_with("]")) {
        throw ParseError("circuit line " + std::to_string(line_no) + ": expected q[i], got '" + std::string(token) +
                         "'");
    }
    return parse_index(token.substr(2, token.size() - 3), line_no);
}

inline Circuit parse_native(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op) || op.starts_with("#")) continue;
        std::string a;
        std::string b;
        ls >> a >> b;
        if (!circuit) {
            if (op != "qubits") throw ParseError("circuit: first line must be 'qubits <n>'");
            circuit.emplace(parse_index(a, line_no));
            continue;
        }
        if (op == "H") {
            circuit->h(parse_index(a, line_no));
        } else if (op == "X") {
            circuit->x(parse_index(a, line_no));
        } else if (op == "Z") {
            circuit->z(parse_index(a, line_no));
        } else if (op == "CX" || op == "CNOT") {
            circuit->cnot(parse_index(a, line_no), parse_index(b, line_no));
        } else if (op == "CZ") {
            circuit->cz(parse_index(a, line_no), parse_index(b, line_no));
        } else {
            throw ParseError("circuit line " + std::to_string(line_no) + ": unknown gate '" + op + "'");
        }
    }
    if (!circuit) throw ParseError("circuit: empty input");
    return *std::move(circuit);
}

inline Circuit parse_qasm(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.starts_with("//") || line.starts_with("OPENQASM") || line.starts_with("include")) {
            continue;
        }
        if (!line.ends_with(";")) throw ParseError("circuit line " + std::to_string(line_no) + ": missing ';'");
        line.pop_back();
        std::istringstream ls(line);
        std::string op;
        std::string args;
        ls >> op;
        std::getline(ls, args);
        args.erase(0, args.find_first_not_of(' '));
        if (op == "qreg") {
            circuit.emplace(parse_qasm_operand(args, line_no));
            continue;
        }
        if (!circuit) throw ParseError("circuit: gate before qreg declaration");
        const auto comma = args.find(',');
        const std::size_t a = parse_qasm_operand(std::string_view(args).substr(0, comma), line_no) + 1;
        if (op == "h") {
            circuit->h(a);
        } else if (op == "x") {
            circuit->x(a);
        } else if (op == "z") {
            circuit->z(a);
        } else if (op == "cx" || op == "cz") {
            if (comma == std::string::npos) {
                throw ParseError("circuit line " + std::to_string(line_no) + ": missing target");
            }
            const std::size_t b = parse_qasm_operand(std::string_view(args).substr(comma + 1), line_no) + 1;
            if (op == "cx") {
                circuit->cnot(a, b);
            } else {
                circuit->cz(a, b);
            }
        } else {
            throw ParseError("circuit line " + std::to_string(line_no) + ": unknown gate '" + op + "'");
        }
    }
    if (!circuit) throw ParseError("circuit: missing qreg declaration");
    return *std::move(circuit);
}

}  // namespace detail

inline Circuit parse_circuit(const std::string& text, CircuitFormat format = CircuitFormat::Native) {
    std::istringstream in(text);
    return format == CircuitFormat::Native ? detail::parse_native(in) : detail::parse_qasm(in);
}

}  // namespace qlk
