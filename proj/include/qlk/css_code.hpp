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
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qlk/bit_matrix.hpp"
#include "qlk/classical_code.hpp"

namespace qlk {

/// Where a CSS code came from, plus distance claims kept apart from certificates.
struct Provenance {
    std::string family;  // "qlk", "shor", "hgp" or "custom"
    std::optional<std::size_t> k;
    std::string sources;  // e.g. "lk:4 x lkplus:4"
    std::optional<std::size_t> predicted_distance;
    std::vector<std::string> notes;
};

/// CSS code given by X-type checks H_X and Z-type checks H_Z on n qubits.
struct CssCode {
    std::size_t n = 0;
    BitMatrix hx;
    BitMatrix hz;
    std::size_t rank_x = 0;
    std::size_t rank_z = 0;
    std::size_t k_logical = 0;
    std::optional<std::size_t> distance_x;  // min weight of an X-type logical
    std::optional<std::size_t> distance_z;  // min weight of a Z-type logical
    std::optional<std::size_t> distance;
    Provenance provenance;

    /// Computes ranks and k_logical = n - rank(H_X) - rank(H_Z); does not check commutation.
    static CssCode from_checks(BitMatrix hx, BitMatrix hz, Provenance provenance = {}) {
        if (hx.cols() != hz.cols()) {
            throw DimensionError("H_X has " + std::to_string(hx.cols()) + " columns but H_Z has " +
                                 std::to_string(hz.cols()));
        }
        CssCode code;
        code.n = hx.cols();
        code.rank_x = rank(hx);
        code.rank_z = rank(hz);
        if (code.rank_x + code.rank_z > code.n) {
            throw PreconditionError("rank(H_X) + rank(H_Z) exceeds n; checks cannot commute");
        }
        code.k_logical = code.n - code.rank_x - code.rank_z;
        code.hx = std::move(hx);
        code.hz = std::move(hz);
        code.provenance = std::move(provenance);
        return code;
    }
};

/// Pairs (i, j), 0-based, where X-check i and Z-check j overlap on an odd number of qubits.
inline std::vector<std::pair<std::size_t, std::size_t>> anticommuting_pairs(const CssCode& code) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < code.hx.rows(); ++i) {
        for (std::size_t j = 0; j < code.hz.rows(); ++j) {
            if (dot(code.hx.row(i), code.hz.row(j))) out.emplace_back(i, j);
        }
    }
    return out;
}

/// H_X * H_Z^T = 0 over GF(2).
inline bool check_css(const CssCode& code) {
    if (code.hx.cols() != code.hz.cols()) return false;
    return mat_mul(code.hx, transpose(code.hz)).is_zero();
}

/// H_X = [H1 ⊗ I_{n2} | I_{r1} ⊗ H2^T], H_Z = [I_{n1} ⊗ H2 | H1^T ⊗ I_{r2}],
/// with r_i the row count of H_i.
inline CssCode hypergraph_product(const ClassicalCode& c1, const ClassicalCode& c2) {
    const BitMatrix& h1 = c1.parity_check;
    const BitMatrix& h2 = c2.parity_check;
    const std::size_t n1 = h1.cols();
    const std::size_t n2 = h2.cols();
    const std::size_t r1 = h1.rows();
    const std::size_t r2 = h2.rows();
    BitMatrix hx = hconcat(kron(h1, BitMatrix::identity(n2)), kron(BitMatrix::identity(r1), transpose(h2)));
    BitMatrix hz = hconcat(kron(BitMatrix::identity(n1), h2), kron(transpose(h1), BitMatrix::identity(r2)));
    Provenance prov;
    prov.family = "hgp";
    prov.sources = c1.name + " x " + c2.name;
    if (c1.distance && c2.distance && c1.dual_distance && c2.dual_distance) {
        prov.predicted_distance = std::min({*c1.distance, *c2.distance, *c1.dual_distance, *c2.dual_distance});
    }
    return CssCode::from_checks(std::move(hx), std::move(hz), std::move(prov));
}

/// [[n1 n2 + r1 r2, k1 k2 + k1ᵀ k2ᵀ, min(d1, d2, d1⊥, d2⊥)]] as predicted from the
/// classical parameters. kᵀ = r - rank(H) is the dimension of the transpose code
/// ker(Hᵀ); reading it as the dual dimension n - k overcounts, and that reading is
/// kept in `k_dual_reading` only for comparison. `formula_applicable` is false
/// when a check matrix has dependent rows.
struct HgpParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t k_dual_reading = 0;
    std::size_t d_bound = 0;
    bool formula_applicable = true;
};

inline HgpParameters hgp_parameters(const ClassicalCode& c1, const ClassicalCode& c2) {
    if (!c1.distance || !c2.distance || !c1.dual_distance || !c2.dual_distance) {
        throw PreconditionError("hgp_parameters needs certified distances and dual distances of both codes");
    }
    const std::size_t r1 = c1.parity_check.rows();
    const std::size_t r2 = c2.parity_check.rows();
    HgpParameters p;
    p.n = c1.n * c2.n + r1 * r2;
    const std::size_t rank1 = rank(c1.parity_check);
    const std::size_t rank2 = rank(c2.parity_check);
    p.k = c1.k * c2.k + (r1 - rank1) * (r2 - rank2);
    p.k_dual_reading = c1.k * c2.k + (c1.n - c1.k) * (c2.n - c2.k);
    p.d_bound = std::min({*c1.distance, *c2.distance, *c1.dual_distance, *c2.dual_distance});
    p.formula_applicable = rank1 == r1 && rank2 == r2;
    return p;
}

/// H_X = H1 ⊗ I_{n2}, H_Z = G1 ⊗ H2.
inline CssCode generalized_shor(const ClassicalCode& c1, const ClassicalCode& c2) {
    BitMatrix hx = kron(c1.parity_check, BitMatrix::identity(c2.n));
    BitMatrix hz = kron(c1.generator, c2.parity_check);
    Provenance prov;
    prov.family = "shor";
    prov.sources = c1.name + " x " + c2.name;
    if (c1.distance && c2.distance) prov.predicted_distance = std::min(*c1.distance, *c2.distance);
    return CssCode::from_checks(std::move(hx), std::move(hz), std::move(prov));
}

/// QL_k: the generalized Shor product of L_k and L_k^+, [[6k^2, k^2, d]].
inline CssCode build_qlk(std::size_t k) {
    if (k < 3) throw DomainError("QL_k is defined for k >= 3, got k = " + std::to_string(k));
    ClassicalCode lk = build_lk(k);
    ClassicalCode lkp = build_lk_plus(k);
    // Small enough to enumerate for every k where the rest of the toolkit is usable.
    if (k <= kMaxEnumerationDimension) {
        min_distance(lk);
        min_distance(lkp);
    }
    CssCode code = generalized_shor(lk, lkp);
    code.provenance.family = "qlk";
    code.provenance.k = k;
    if (code.n != 6 * k * k || code.k_logical != k * k) {
        throw std::logic_error("QL_k parameter identity violated at k = " + std::to_string(k));
    }
    if (k == 5) {
        code.provenance.notes.push_back(
            "erratum: n = n1*n2 = 10*15 = 150 for k = 5; the previously published [[120,25,4]] misstates n");
    }
    return code;
}

/// Which kind of logical operator a distance or witness refers to.
enum class LogicalSide {
    X,  // x-type: v in ker H_Z, v outside rowspace(H_X)
    Z,  // z-type: v in ker H_X, v outside rowspace(H_Z)
};

inline const char* to_string(LogicalSide side) { return side == LogicalSide::X ? "X" : "Z"; }

/// Outcome of a bounded search on one side: exact weight and witness, or "> searched_up_to".
struct SideDistance {
    std::optional<std::size_t> exact;
    std::size_t searched_up_to = 0;
    std::optional<BitVector> witness;

    std::string describe() const {
        return exact ? std::to_string(*exact) : "> " + std::to_string(searched_up_to);
    }
};

struct DistanceResult {
    SideDistance x;
    SideDistance z;

    /// min(d_X, d_Z) when one side is exact and no smaller unexplored value is possible.
    std::optional<std::size_t> exact() const {
        std::optional<std::size_t> best;
        if (x.exact) best = x.exact;
        if (z.exact && (!best || *z.exact < *best)) best = z.exact;
        if (!best) return std::nullopt;
        // An open side only rules out weights up to its own search depth.
        if (!x.exact && x.searched_up_to < *best) return std::nullopt;
        if (!z.exact && z.searched_up_to < *best) return std::nullopt;
        return best;
    }

    std::string describe() const {
        if (auto d = exact()) return std::to_string(*d);
        return "> " + std::to_string(std::min(x.exact.value_or(x.searched_up_to), z.exact.value_or(z.searched_up_to)));
    }
};

namespace detail {

/// Enumerates weight-w supports in colexicographic order and tests each for
/// being a logical: zero syndrome against `checks`, outside rowspace(`stabilizers`).
///
/// The syndrome is accumulated column by column so each candidate costs one
/// word-span XOR; row-space membership is only consulted for kernel vectors.
class LogicalSearch {
   public:
    LogicalSearch(const BitMatrix& checks, const BitMatrix& stabilizers)
        : n_(checks.cols()), stride_(std::max<std::size_t>(1, BitVector::word_count(checks.rows()))),
          columns_(n_ * stride_, 0), echelon_(stabilizers) {
        const BitMatrix t = transpose(checks);
        for (std::size_t c = 0; c < n_; ++c) {
            auto w = t.row(c).words();
            std::copy(w.begin(), w.end(), columns_.begin() + static_cast<std::ptrdiff_t>(c * stride_));
        }
    }

    std::size_t n() const { return n_; }

    /// First logical of exactly `weight` whose largest index is `top`, in colex order.
    std::optional<std::vector<std::size_t>> search_top(std::size_t weight, std::size_t top) const {
        std::vector<std::size_t> chosen(weight);
        std::vector<std::uint64_t> partial((weight + 1) * stride_, 0);
        chosen[weight - 1] = top;
        xor_column(partial.data() + weight * stride_, nullptr, top);
        // partial[level] holds the syndrome of chosen[level..weight-1]; level 0 slot unused.
        if (recurse(weight - 1, chosen, partial)) return chosen;
        return std::nullopt;
    }

   private:
    void xor_column(std::uint64_t* dst, const std::uint64_t* src, std::size_t col) const {
        const std::uint64_t* c = columns_.data() + col * stride_;
        for (std::size_t w = 0; w < stride_; ++w) dst[w] = (src ? src[w] : 0) ^ c[w];
    }

    bool is_zero(const std::uint64_t* s) const {
        for (std::size_t w = 0; w < stride_; ++w) {
            if (s[w] != 0) return false;
        }
        return true;
    }

    // `remaining` indices still to choose, all below chosen[remaining].
    bool recurse(std::size_t remaining, std::vector<std::size_t>& chosen, std::vector<std::uint64_t>& partial) const {
        const std::uint64_t* above = partial.data() + (remaining + 1) * stride_;
        if (remaining == 0) {
            if (!is_zero(above)) return false;
            return !echelon_.contains(BitVector::from_support(n_, chosen));
        }
        std::uint64_t* here = partial.data() + remaining * stride_;
        const std::size_t limit = chosen[remaining];
        for (std::size_t c = remaining - 1; c < limit; ++c) {
            chosen[remaining - 1] = c;
            xor_column(here, above, c);
            if (recurse(remaining - 1, chosen, partial)) return true;
        }
        return false;
    }

    std::size_t n_;
    std::size_t stride_;
    std::vector<std::uint64_t> columns_;
    RowEchelon echelon_;
};

inline std::size_t resolve_threads(std::size_t threads) {
    if (threads != 0) return threads;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Colex-first logical of exactly `weight`, independent of thread count: each top
/// index is searched sequentially and the smallest top with a hit wins.
inline std::optional<BitVector> first_logical(const LogicalSearch& search, std::size_t weight, std::size_t threads) {
    const std::size_t n = search.n();
    if (weight == 0 || weight > n) return std::nullopt;
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next_top{weight - 1};
    std::atomic<std::size_t> best_top{kNone};
    std::vector<std::optional<std::vector<std::size_t>>> hits(n);

    auto worker = [&] {
        for (;;) {
            const std::size_t top = next_top.fetch_add(1);
            if (top >= n || top > best_top.load()) return;
            if (auto hit = search.search_top(weight, top)) {
                hits[top] = std::move(hit);
                std::size_t cur = best_top.load();
                while (top < cur && !best_top.compare_exchange_weak(cur, top)) {
                }
            }
        }
    };
    const std::size_t count = std::min(resolve_threads(threads), n);
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    const std::size_t top = best_top.load();
    if (top == kNone) return std::nullopt;
    return BitVector::from_support(n, *hits[top]);
}

inline LogicalSearch make_search(const CssCode& code, LogicalSide side) {
    return side == LogicalSide::Z ? LogicalSearch(code.hx, code.hz) : LogicalSearch(code.hz, code.hx);
}

inline SideDistance side_distance(const CssCode& code, LogicalSide side, std::size_t w_max, std::size_t threads) {
    SideDistance out;
    const LogicalSearch search = make_search(code, side);
    for (std::size_t w = 1; w <= w_max && w <= code.n; ++w) {
        if (auto v = first_logical(search, w, threads)) {
            out.exact = w;
            out.witness = std::move(v);
            out.searched_up_to = w;
            return out;
        }
        out.searched_up_to = w;
    }
    out.searched_up_to = w_max;
    return out;
}

}  // namespace detail

/// One logical of exactly `weight` on `side` (the colex-first one), or none.
inline std::optional<BitVector> logical_operator_witness(const CssCode& code, LogicalSide side, std::size_t weight,
                                                         std::size_t threads = 0) {
    if (weight < 1) throw DomainError("witness weight must be >= 1");
    return detail::first_logical(detail::make_search(code, side), weight, threads);
}

/// Exhaustive search over all supports of weight <= w_max on both sides.
/// `threads` = 0 uses hardware concurrency; the result does not depend on it.
inline DistanceResult css_distance(const CssCode& code, std::size_t w_max, std::size_t threads = 0) {
    if (w_max < 1) throw DomainError("w_max must be >= 1");
    DistanceResult r;
    r.x = detail::side_distance(code, LogicalSide::X, w_max, threads);
    r.z = detail::side_distance(code, LogicalSide::Z, w_max, threads);
    return r;
}

/// Runs css_distance and records exact values on the code.
inline DistanceResult certify_distance(CssCode& code, std::size_t w_max, std::size_t threads = 0) {
    DistanceResult r = css_distance(code, w_max, threads);
    if (r.x.exact) code.distance_x = r.x.exact;
    if (r.z.exact) code.distance_z = r.z.exact;
    if (auto d = r.exact()) code.distance = d;
    return r;
}

}  // namespace qlk
