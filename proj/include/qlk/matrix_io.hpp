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
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "qlk/bit_matrix.hpp"

namespace qlk {

// Plain-text matrix format:
//   <rows> <cols>
//   one line of '0'/'1' per row, no separators.

inline void write_matrix(std::ostream& out, const BitMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
}

inline std::string matrix_to_text(const BitMatrix& m) {
    std::ostringstream ss;
    write_matrix(ss, m);
    return ss.str();
}

inline BitMatrix read_matrix(std::istream& in) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string header;
    if (!std::getline(in, header)) throw ParseError("matrix: missing header line");
    std::istringstream hs(header);
    if (!(hs >> rows >> cols)) throw ParseError("matrix: header must be '<rows> <cols>'");
    std::vector<BitVector> parsed;
    parsed.reserve(rows);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != cols) {
            throw ParseError("matrix: row " + std::to_string(r + 1) + " has " + std::to_string(line.size()) +
                             " entries, expected " + std::to_string(cols));
        }
        parsed.push_back(BitVector::from_string(line));
    }
    return BitMatrix::from_rows(std::move(parsed), cols);
}

inline BitMatrix matrix_from_text(const std::string& text) {
    std::istringstream ss(text);
    return read_matrix(ss);
}

inline void save_matrix(const std::string& path, const BitMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_matrix(out, m);
}

inline BitMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix(in);
}

// MacKay alist layout, zero-padded index lists:
//   N M
//   max_col_degree max_row_degree
//   column degrees (N values)
//   row degrees (M values)
//   N lines of 1-based row indices, then M lines of 1-based column indices.

inline void write_alist(std::ostream& out, const BitMatrix& m) {
    const BitMatrix mt = transpose(m);
    std::size_t max_col = 0;
    std::size_t max_row = 0;
    for (std::size_t c = 0; c < mt.rows(); ++c) max_col = std::max(max_col, mt.row_weight(c));
    for (std::size_t r = 0; r < m.rows(); ++r) max_row = std::max(max_row, m.row_weight(r));

    auto write_list = [&out](const std::vector<std::size_t>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
        out << '\n';
    };
    auto write_indices = [&](const BitMatrix& rows_of, std::size_t width) {
        for (std::size_t r = 0; r < rows_of.rows(); ++r) {
            auto support = rows_of.row(r).support();
            std::vector<std::size_t> one_based(width, 0);
            for (std::size_t i = 0; i < support.size(); ++i) one_based[i] = support[i] + 1;
            write_list(one_based);
        }
    };

    out << m.cols() << ' ' << m.rows() << '\n';
    out << max_col << ' ' << max_row << '\n';
    std::vector<std::size_t> col_deg;
    std::vector<std::size_t> row_deg;
    for (std::size_t c = 0; c < mt.rows(); ++c) col_deg.push_back(mt.row_weight(c));
    for (std::size_t r = 0; r < m.rows(); ++r) row_deg.push_back(m.row_weight(r));
    write_list(col_deg);
    write_list(row_deg);
    write_indices(mt, max_col);
    write_indices(m, max_row);
}

inline std::string matrix_to_alist(const BitMatrix& m) {
    std::ostringstream ss;
    write_alist(ss, m);
    return ss.str();
}

/// Reads the row-index section only; the column section must agree with it.
inline BitMatrix read_alist(std::istream& in) {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_col = 0;
    std::size_t max_row = 0;
    if (!(in >> n >> m >> max_col >> max_row)) throw ParseError("alist: bad header");
    std::vector<std::size_t> col_deg(n);
    std::vector<std::size_t> row_deg(m);
    for (auto& d : col_deg) {
        if (!(in >> d)) throw ParseError("alist: bad column degree list");
    }
    for (auto& d : row_deg) {
        if (!(in >> d)) throw ParseError("alist: bad row degree list");
    }
    BitMatrix from_cols(m, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < max_col; ++i) {
            std::size_t r = 0;
            if (!(in >> r)) throw ParseError("alist: truncated column section");
            if (r == 0) continue;
            if (r > m || i >= col_deg[c]) throw ParseError("alist: column entry out of range");
            from_cols.set(r - 1, c);
        }
    }
    BitMatrix from_rows(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < max_row; ++i) {
            std::size_t c = 0;
            if (!(in >> c)) throw ParseError("alist: truncated row section");
            if (c == 0) continue;
            if (c > n || i >= row_deg[r]) throw ParseError("alist: row entry out of range");
            from_rows.set(r, c - 1);
        }
    }
    if (!(from_cols == from_rows)) throw ParseError("alist: row and column sections disagree");
    return from_rows;
}

inline BitMatrix matrix_from_alist(const std::string& text) {
    std::istringstream ss(text);
    return read_alist(ss);
}

}  // namespace qlk
