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

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "qlk/classical_code.hpp"
#include "qlk/css_code.hpp"
#include "qlk/matrix_io.hpp"

namespace qlk {

// A code directory holds its matrices in the plain-text matrix format and a
// "key value" header, one record per line, fixed key order:
//   CSS code:       HX.txt, HZ.txt, code.hdr
//   classical code: G.txt,  H.txt,  code.hdr
// Unknown or uncertified numeric values are written as '?'.

namespace detail {

inline std::string opt_to_string(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "?"; }

inline std::optional<std::size_t> opt_from_string(const std::string& s) {
    if (s == "?" || s.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw ParseError("bad number '" + s + "'");
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad number '" + s + "'");
    }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

template <typename OnRecord>
void read_header(const std::filesystem::path& path, OnRecord&& on_record) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto space = line.find(' ');
        on_record(line.substr(0, space), space == std::string::npos ? std::string{} : line.substr(space + 1));
    }
}

}  // namespace detail

inline std::string css_header_text(const CssCode& code) {
    std::ostringstream out;
    out << "family " << (code.provenance.family.empty() ? "custom" : code.provenance.family) << '\n';
    out << "k " << detail::opt_to_string(code.provenance.k) << '\n';
    out << "n " << code.n << '\n';
    out << "k_logical " << code.k_logical << '\n';
    out << "sources " << code.provenance.sources << '\n';
    out << "predicted_d " << detail::opt_to_string(code.provenance.predicted_distance) << '\n';
    out << "certified_dx " << detail::opt_to_string(code.distance_x) << '\n';
    out << "certified_dz " << detail::opt_to_string(code.distance_z) << '\n';
    out << "certified_d " << detail::opt_to_string(code.distance) << '\n';
    for (const auto& note : code.provenance.notes) out << "note " << note << '\n';
    return out.str();
}

inline void save_css_code(const std::filesystem::path& dir, const CssCode& code) {
    std::filesystem::create_directories(dir);
    save_matrix((dir / "HX.txt").string(), code.hx);
    save_matrix((dir / "HZ.txt").string(), code.hz);
    detail::write_text_file(dir / "code.hdr", css_header_text(code));
}

/// Loads HX/HZ and, when present, the header. Ranks and k_logical are recomputed.
inline CssCode load_css_code(const std::filesystem::path& dir) {
    CssCode code = CssCode::from_checks(load_matrix((dir / "HX.txt").string()), load_matrix((dir / "HZ.txt").string()));
    if (!std::filesystem::exists(dir / "code.hdr")) return code;
    detail::read_header(dir / "code.hdr", [&code](const std::string& key, const std::string& value) {
        if (key == "family") {
            code.provenance.family = value;
        } else if (key == "k") {
            code.provenance.k = detail::opt_from_string(value);
        } else if (key == "sources") {
            code.provenance.sources = value;
        } else if (key == "predicted_d") {
            code.provenance.predicted_distance = detail::opt_from_string(value);
        } else if (key == "certified_dx") {
            code.distance_x = detail::opt_from_string(value);
        } else if (key == "certified_dz") {
            code.distance_z = detail::opt_from_string(value);
        } else if (key == "certified_d") {
            code.distance = detail::opt_from_string(value);
        } else if (key == "note") {
            code.provenance.notes.push_back(value);
        } else if (key == "n" || key == "k_logical") {
            if (detail::opt_from_string(value) != std::optional<std::size_t>(key == "n" ? code.n : code.k_logical)) {
                throw ParseError("header " + key + " = " + value + " disagrees with the matrices");
            }
        }
    });
    return code;
}

inline std::string classical_header_text(const ClassicalCode& c) {
    std::ostringstream out;
    out << "name " << c.name << '\n';
    out << "n " << c.n << '\n';
    out << "k " << c.k << '\n';
    out << "d " << detail::opt_to_string(c.distance) << '\n';
    out << "d_dual " << detail::opt_to_string(c.dual_distance) << '\n';
    return out.str();
}

inline void save_classical_code(const std::filesystem::path& dir, const ClassicalCode& c) {
    std::filesystem::create_directories(dir);
    save_matrix((dir / "G.txt").string(), c.generator);
    save_matrix((dir / "H.txt").string(), c.parity_check);
    detail::write_text_file(dir / "code.hdr", classical_header_text(c));
}

inline ClassicalCode load_classical_code(const std::filesystem::path& dir) {
    ClassicalCode c = make_code(load_matrix((dir / "G.txt").string()), load_matrix((dir / "H.txt").string()));
    detail::read_header(dir / "code.hdr", [&c](const std::string& key, const std::string& value) {
        if (key == "name") c.name = value;
        if (key == "d") c.distance = detail::opt_from_string(value);
        if (key == "d_dual") c.dual_distance = detail::opt_from_string(value);
    });
    return c;
}

}  // namespace qlk
