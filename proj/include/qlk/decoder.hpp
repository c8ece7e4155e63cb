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
#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "qlk/bit_matrix.hpp"
#include "qlk/css_code.hpp"
#include "qlk/pauli.hpp"

namespace qlk {

/// s_x = H_X z^T flags Z errors; s_z = H_Z x^T flags X errors.
struct Syndrome {
    BitVector s_x;
    BitVector s_z;

    bool is_zero() const { return s_x.none() && s_z.none(); }
    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

inline Syndrome syndrome_of(const CssCode& code, const PauliOperator& error) {
    if (error.num_qubits() != code.n) throw DimensionError("error and code lengths differ");
    return {code.hx.multiply(error.z_bits()), code.hz.multiply(error.x_bits())};
}

/// Syndrome -> minimum-weight error of one Pauli type.
struct DecodingTable {
    std::unordered_map<BitVector, BitVector, BitVectorHash> entries;

    std::size_t size() const { return entries.size(); }
    const BitVector* find(const BitVector& syndrome) const {
        auto it = entries.find(syndrome);
        return it == entries.end() ? nullptr : &it->second;
    }
    friend bool operator==(const DecodingTable&, const DecodingTable&) = default;
};

/// One table per stage: X errors keyed by H_Z syndromes, Z errors keyed by H_X syndromes.
struct DecodingTables {
    std::size_t t = 0;
    DecodingTable x_errors;
    DecodingTable z_errors;
    friend bool operator==(const DecodingTables&, const DecodingTables&) = default;
};

inline constexpr std::size_t kDefaultTableCap = 10'000'000;

namespace detail {

inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(cap)) return cap + 1;
    }
    return static_cast<std::size_t>(acc + 0.5L);
}

/// Visits every weight-w subset of {0..n-1} in colexicographic order.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t w, Visit&& visit) {
    if (w > n) return;
    std::vector<std::size_t> idx(w);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
        visit(static_cast<const std::vector<std::size_t>&>(idx));
        // Colex successor: bump the lowest index that has room below its neighbour.
        std::size_t i = 0;
        while (i < w && idx[i] + 1 == (i + 1 < w ? idx[i + 1] : n)) ++i;
        if (i == w) return;
        ++idx[i];
        for (std::size_t j = 0; j < i; ++j) idx[j] = j;
    }
}

inline void fill_table(DecodingTable& table, const BitMatrix& checks, std::size_t t) {
    const std::size_t n = checks.cols();
    const BitMatrix columns = transpose(checks);
    for (std::size_t w = 0; w <= t; ++w) {
        for_each_combination(n, w, [&](const std::vector<std::size_t>& support) {
            BitVector syndrome(checks.rows());
            for (std::size_t q : support) syndrome ^= columns.row(q);
            table.entries.try_emplace(std::move(syndrome), BitVector::from_support(n, support));
        });
    }
}

}  // namespace detail

/// Enumerates errors of weight <= t per side in increasing weight (colex within a
/// weight); the first error to reach a syndrome keeps it.
inline DecodingTables build_lookup(const CssCode& code, std::size_t t, std::size_t cap = kDefaultTableCap) {
    std::size_t total = 0;
    for (std::size_t w = 0; w <= t; ++w) {
        total += detail::binomial_capped(code.n, w, cap);
        if (total > cap) {
            throw CapacityError("lookup table for t = " + std::to_string(t) + " needs more than " +
                                std::to_string(cap) + " entries per side");
        }
    }
    DecodingTables tables;
    tables.t = t;
    detail::fill_table(tables.x_errors, code.hz, t);
    detail::fill_table(tables.z_errors, code.hx, t);
    return tables;
}

struct Decoded {
    PauliOperator correction;
    bool heralded_x = false;  // s_z missed the X-error table
    bool heralded_z = false;  // s_x missed the Z-error table
    bool heralded() const { return heralded_x || heralded_z; }
};

/// Stage 1 corrects Z errors from s_x, stage 2 X errors from s_z. A table miss
/// heralds that stage and leaves its correction as identity.
inline Decoded decode(const CssCode& code, const DecodingTables& tables, const Syndrome& s) {
    if (s.s_x.size() != code.hx.rows() || s.s_z.size() != code.hz.rows()) {
        throw DimensionError("syndrome does not match the code's check counts");
    }
    Decoded out{PauliOperator(code.n)};
    if (const BitVector* z = tables.z_errors.find(s.s_x)) {
        out.correction.z_bits() = *z;
    } else {
        out.heralded_z = true;
    }
    if (const BitVector* x = tables.x_errors.find(s.s_z)) {
        out.correction.x_bits() = *x;
    } else {
        out.heralded_x = true;
    }
    return out;
}

enum class Verdict { Success, LogicalX, LogicalZ, LogicalY };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Success: return "success";
        case Verdict::LogicalX: return "logical-X";
        case Verdict::LogicalZ: return "logical-Z";
        case Verdict::LogicalY: return "logical-Y";
    }
    return "?";
}

struct TrialRecord {
    PauliOperator error;
    Syndrome syndrome;
    PauliOperator correction;
    PauliOperator residual;  // componentwise error xor correction
    bool heralded = false;
    Verdict verdict = Verdict::Success;
};

/// Decoder plus the row-space forms used to tell stabilizer residuals from logicals.
class TwoStageDecoder {
   public:
    TwoStageDecoder(const CssCode& code, DecodingTables tables)
        : code_(&code), tables_(std::move(tables)), x_stabilizers_(code.hx), z_stabilizers_(code.hz) {}

    const DecodingTables& tables() const { return tables_; }
    const CssCode& code() const { return *code_; }

    /// A residual counts as success when each part lies in its stabilizer row space.
    TrialRecord run_trial(const PauliOperator& error) const {
        TrialRecord rec;
        rec.error = error;
        rec.syndrome = syndrome_of(*code_, error);
        Decoded d = decode(*code_, tables_, rec.syndrome);
        rec.correction = std::move(d.correction);
        rec.heralded = d.heralded();
        rec.residual =
            PauliOperator(error.x_bits() ^ rec.correction.x_bits(), error.z_bits() ^ rec.correction.z_bits());
        const bool x_bad = !x_stabilizers_.contains(rec.residual.x_bits());
        const bool z_bad = !z_stabilizers_.contains(rec.residual.z_bits());
        rec.verdict = x_bad ? (z_bad ? Verdict::LogicalY : Verdict::LogicalX)
                            : (z_bad ? Verdict::LogicalZ : Verdict::Success);
        return rec;
    }

   private:
    const CssCode* code_;
    DecodingTables tables_;
    RowEchelon x_stabilizers_;
    RowEchelon z_stabilizers_;
};

/// iid depolarizing noise: I with probability 1 - p, else X, Y, Z with p/3 each.
/// The draw is a pure function of (seed, shot).
inline PauliOperator sample_depolarizing(std::size_t n, double p, std::uint64_t seed, std::uint64_t shot = 0) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing probability must lie in [0, 1]");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32)};
    std::mt19937_64 rng(seq);
    PauliOperator e(n);
    if (p == 0.0) return e;
    for (std::size_t q = 0; q < n; ++q) {
        // 53-bit uniform in [0, 1); one draw decides both whether and which Pauli.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u >= p) continue;
        const int kind = std::min(2, static_cast<int>(3.0 * u / p));
        e.set(q, kind == 0 ? Pauli::X : kind == 1 ? Pauli::Y : Pauli::Z);
    }
    return e;
}

struct MonteCarloSummary {
    std::size_t shots = 0;
    std::size_t successes = 0;
    std::size_t fail_x = 0;
    std::size_t fail_z = 0;
    std::size_t fail_y = 0;
    std::size_t heralded = 0;

    std::size_t failures() const { return fail_x + fail_z + fail_y; }
    double rate() const { return shots == 0 ? 0.0 : static_cast<double>(failures()) / static_cast<double>(shots); }

    void add(const TrialRecord& rec) {
        ++shots;
        heralded += rec.heralded ? 1 : 0;
        switch (rec.verdict) {
            case Verdict::Success: ++successes; break;
            case Verdict::LogicalX: ++fail_x; break;
            case Verdict::LogicalZ: ++fail_z; break;
            case Verdict::LogicalY: ++fail_y; break;
        }
    }
    MonteCarloSummary& operator+=(const MonteCarloSummary& o) {
        shots += o.shots;
        successes += o.successes;
        fail_x += o.fail_x;
        fail_z += o.fail_z;
        fail_y += o.fail_y;
        heralded += o.heralded;
        return *this;
    }
    friend bool operator==(const MonteCarloSummary&, const MonteCarloSummary&) = default;
};

/// Shot s draws its error from (seed, s); shots are split into contiguous
/// chunks per thread and the counts summed, so the summary is thread-count free.
inline MonteCarloSummary run_monte_carlo(const TwoStageDecoder& decoder, double p, std::size_t shots,
                                         std::uint64_t seed, std::size_t threads = 0) {
    if (shots < 1) throw DomainError("shots must be >= 1");
    const std::size_t n = decoder.code().n;
    const std::size_t count = std::min(detail::resolve_threads(threads), shots);
    std::vector<MonteCarloSummary> parts(count);
    auto work = [&](std::size_t part) {
        const std::size_t begin = shots * part / count;
        const std::size_t end = shots * (part + 1) / count;
        for (std::size_t s = begin; s < end; ++s) {
            parts[part].add(decoder.run_trial(sample_depolarizing(n, p, seed, s)));
        }
    };
    if (count == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < count; ++i) pool.emplace_back(work, i);
    }
    MonteCarloSummary total;
    for (const auto& part : parts) total += part;
    return total;
}

inline MonteCarloSummary run_monte_carlo(const CssCode& code, const DecodingTables& tables, double p,
                                         std::size_t shots, std::uint64_t seed, std::size_t threads = 0) {
    return run_monte_carlo(TwoStageDecoder(code, tables), p, shots, seed, threads);
}

/// Every Pauli error of exactly `weight` (3^w choices per support), decoded once each.
inline MonteCarloSummary exhaustive_sweep(const TwoStageDecoder& decoder, std::size_t weight) {
    const std::size_t n = decoder.code().n;
    MonteCarloSummary total;
    detail::for_each_combination(n, weight, [&](const std::vector<std::size_t>& support) {
        std::size_t variants = 1;
        for (std::size_t i = 0; i < weight; ++i) variants *= 3;
        for (std::size_t v = 0; v < variants; ++v) {
            PauliOperator e(n);
            std::size_t code_v = v;
            for (std::size_t q : support) {
                static constexpr std::array<Pauli, 3> kTypes{Pauli::X, Pauli::Y, Pauli::Z};
                e.set(q, kTypes[code_v % 3]);
                code_v /= 3;
            }
            total.add(decoder.run_trial(e));
        }
    });
    return total;
}

// CSV schema: k,n,p,shots,seed,successes,fail_x,fail_z,fail_y,heralded,rate

inline std::string csv_header() { return "k,n,p,shots,seed,successes,fail_x,fail_z,fail_y,heralded,rate"; }

inline std::string csv_row(const CssCode& code, double p, std::uint64_t seed, const MonteCarloSummary& s) {
    std::ostringstream out;
    out << std::setprecision(10);
    if (code.provenance.k) out << *code.provenance.k;
    out << ',' << code.n << ',' << p << ',' << s.shots << ',' << seed << ',' << s.successes << ',' << s.fail_x << ','
        << s.fail_z << ',' << s.fail_y << ',' << s.heralded << ',' << s.rate();
    return out.str();
}

// Binary table file, little-endian:
//   "QLKLUT01" | u64 t | X-error section | Z-error section
//   section: u64 record count, then records sorted by key:
//            u32 key bits, key bytes, u32 value bits, value bytes
//   bit i of a vector lives in byte i / 8 at position i % 8.

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}
inline void put_u64(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}
inline std::uint64_t get_uint(std::istream& in, int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) throw ParseError("table file truncated");
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}
inline void put_bits(std::ostream& out, const BitVector& v) {
    put_u32(out, static_cast<std::uint32_t>(v.size()));
    for (std::size_t byte = 0; byte < (v.size() + 7) / 8; ++byte) {
        const auto word = v.words()[byte / 8];
        out.put(static_cast<char>((word >> (8 * (byte % 8))) & 0xFF));
    }
}
inline BitVector get_bits(std::istream& in) {
    const auto bits = static_cast<std::size_t>(get_uint(in, 4));
    BitVector v(bits);
    for (std::size_t byte = 0; byte < (bits + 7) / 8; ++byte) {
        const auto value = get_uint(in, 1);
        for (std::size_t b = 0; b < 8 && byte * 8 + b < bits; ++b) v.set(byte * 8 + b, (value >> b) & 1u);
    }
    return v;
}
inline void put_table(std::ostream& out, const DecodingTable& table) {
    std::vector<const std::pair<const BitVector, BitVector>*> records;
    for (const auto& kv : table.entries) records.push_back(&kv);
    std::sort(records.begin(), records.end(), [](auto* a, auto* b) { return a->first < b->first; });
    put_u64(out, records.size());
    for (auto* kv : records) {
        put_bits(out, kv->first);
        put_bits(out, kv->second);
    }
}
inline DecodingTable get_table(std::istream& in) {
    DecodingTable table;
    const auto count = get_uint(in, 8);
    for (std::uint64_t i = 0; i < count; ++i) {
        BitVector key = get_bits(in);
        BitVector value = get_bits(in);
        if (!table.entries.emplace(std::move(key), std::move(value)).second) throw ParseError("duplicate table key");
    }
    return table;
}

inline constexpr char kTableMagic[8] = {'Q', 'L', 'K', 'L', 'U', 'T', '0', '1'};

}  // namespace detail

inline void write_tables(std::ostream& out, const DecodingTables& tables) {
    out.write(detail::kTableMagic, 8);
    detail::put_u64(out, tables.t);
    detail::put_table(out, tables.x_errors);
    detail::put_table(out, tables.z_errors);
}

inline DecodingTables read_tables(std::istream& in) {
    char magic[8] = {};
    in.read(magic, 8);
    if (!in || !std::equal(magic, magic + 8, detail::kTableMagic)) throw ParseError("not a lookup table file");
    DecodingTables tables;
    tables.t = static_cast<std::size_t>(detail::get_uint(in, 8));
    tables.x_errors = detail::get_table(in);
    tables.z_errors = detail::get_table(in);
    return tables;
}

inline void save_tables(const std::string& path, const DecodingTables& tables) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_tables(out, tables);
}

inline DecodingTables load_tables(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_tables(in);
}

}  // namespace qlk
