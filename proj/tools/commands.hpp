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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlk/qlk.hpp"

namespace qlk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitCapacity = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flags shared by every subcommand; each subcommand reads the subset it needs.
struct CommandConfig {
    std::string subcommand;
    std::string family = "qlk";
    std::size_t k = 0;
    std::string c1;
    std::string c2;
    std::string dir;
    std::string out;
    std::size_t w_max = 4;
    double p = 0.0;
    std::size_t shots = 1000;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::optional<std::size_t> assume_d;
    std::optional<std::size_t> exhaustive_weight;
    std::string format = "native";
    std::string matrix = "hx";
    std::string logical;
    std::string save_tables;
    std::string load_tables;
    bool paper_literal = false;
};

/// "lk:4", "lkplus:4" (or "lk+:4"), optionally prefixed with "dual:".
inline ClassicalCode parse_code_arg(const std::string& arg) {
    std::string rest = arg;
    bool dual = false;
    if (rest.starts_with("dual:")) {
        dual = true;
        rest = rest.substr(5);
    }
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
        throw UsageError("classical code must look like lk:4 or lkplus:4, got '" + arg + "'");
    }
    const std::string family = rest.substr(0, colon);
    std::size_t k = 0;
    try {
        k = std::stoul(rest.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("bad k in classical code '" + arg + "'");
    }
    ClassicalCode c;
    if (family == "lk") {
        c = build_lk(k);
    } else if (family == "lkplus" || family == "lk+") {
        c = build_lk_plus(k);
    } else {
        throw UsageError("unknown classical family '" + family + "'");
    }
    certify(c);
    return dual ? dual_code(c) : c;
}

inline CssCode resolve_code(const CommandConfig& cfg) {
    if (!cfg.dir.empty()) return load_css_code(cfg.dir);
    if (cfg.family == "qlk") {
        if (cfg.k < 3) throw UsageError("--k must be >= 3 for the qlk family");
        return build_qlk(cfg.k);
    }
    if (cfg.family == "shor" || cfg.family == "hgp") {
        if (cfg.c1.empty() || cfg.c2.empty()) throw UsageError("--family " + cfg.family + " needs --c1 and --c2");
        const ClassicalCode a = parse_code_arg(cfg.c1);
        const ClassicalCode b = parse_code_arg(cfg.c2);
        return cfg.family == "shor" ? generalized_shor(a, b) : hypergraph_product(a, b);
    }
    throw UsageError("unknown --family '" + cfg.family + "' (expected qlk, shor or hgp)");
}

inline std::string parameter_string(const CssCode& code) {
    return "[[" + std::to_string(code.n) + "," + std::to_string(code.k_logical) + "," +
           (code.distance ? std::to_string(*code.distance) : "?") + "]]";
}

inline std::string support_string(const BitVector& v) {
    std::string s;
    for (std::size_t q : v.support()) s += (s.empty() ? "" : ",") + std::to_string(q + 1);
    return "{" + s + "}";
}

inline int cmd_build(const CommandConfig& cfg, std::ostream& out) {
    const CssCode code = resolve_code(cfg);
    out << "family " << code.provenance.family;
    if (code.provenance.k) out << " k=" << *code.provenance.k;
    if (!code.provenance.sources.empty()) out << " sources " << code.provenance.sources;
    out << '\n' << parameter_string(code) << '\n';
    if (code.provenance.predicted_distance) {
        out << "predicted d = " << *code.provenance.predicted_distance << " (not certified; run 'distance')\n";
    }
    if (cfg.family == "hgp" && cfg.dir.empty()) {
        const HgpParameters hp = hgp_parameters(parse_code_arg(cfg.c1), parse_code_arg(cfg.c2));
        out << "formula n=" << hp.n << " k=" << hp.k << " d<=" << hp.d_bound
            << (hp.formula_applicable ? "" : " (not applicable: dependent check rows)") << '\n';
        if (hp.k_dual_reading != hp.k) {
            out << "note: reading k-perp as n-k would give k=" << hp.k_dual_reading << ", which the ranks rule out\n";
        }
    }
    for (const auto& note : code.provenance.notes) out << "note: " << note << '\n';
    if (!cfg.out.empty()) {
        save_css_code(cfg.out, code);
        out << "wrote " << cfg.out << "/{HX.txt,HZ.txt,code.hdr}\n";
    }
    return kExitOk;
}

inline int cmd_check(const CommandConfig& cfg, std::ostream& out) {
    const CssCode code = resolve_code(cfg);
    bool ok = true;

    const auto pairs = anticommuting_pairs(code);
    out << "commutation H_X H_Z^T = 0: " << (pairs.empty() ? "pass" : "fail") << '\n';
    for (const auto& [i, j] : pairs) out << "  anticommuting pair: X row " << i + 1 << ", Z row " << j + 1 << '\n';
    ok = ok && pairs.empty();

    bool rank_ok = true;
    out << "rank audit: rank(H_X)=" << code.rank_x << " rank(H_Z)=" << code.rank_z << " k_logical=" << code.k_logical;
    if (code.provenance.family == "qlk" && code.provenance.k) {
        const std::size_t k = *code.provenance.k;
        rank_ok = code.n == 6 * k * k && code.k_logical == k * k && code.rank_x == 3 * k * k &&
                  code.rank_z == 2 * k * k;
        out << " (expected n=" << 6 * k * k << " k_logical=" << k * k << ")";
    }
    out << ": " << (rank_ok ? "pass" : "fail") << '\n';
    ok = ok && rank_ok;

    bool weight_ok = true;
    std::ostringstream weight_details;
    if (code.provenance.family == "qlk" && code.provenance.k) {
        const std::size_t k = *code.provenance.k;
        for (std::size_t r = 0; r < code.hx.rows(); ++r) {
            if (code.hx.row_weight(r) != k) {
                weight_ok = false;
                weight_details << "  X row " << r + 1 << " has weight " << code.hx.row_weight(r) << ", expected " << k
                               << '\n';
            }
        }
        for (std::size_t r = 0; r < code.hz.rows(); ++r) {
            const std::size_t w = code.hz.row_weight(r);
            if (w != k * k && w != 2 * k) {
                weight_ok = false;
                weight_details << "  Z row " << r + 1 << " has weight " << w << ", expected " << k * k << " or "
                               << 2 * k << '\n';
            }
        }
    }
    out << "row-weight audit: " << (weight_ok ? "pass" : "fail") << '\n' << weight_details.str();
    ok = ok && weight_ok;

    out << (ok ? "check passed" : "check FAILED") << '\n';
    return ok ? kExitOk : kExitFailure;
}

inline int cmd_distance(const CommandConfig& cfg, std::ostream& out) {
    CssCode code = resolve_code(cfg);
    const DistanceResult r = certify_distance(code, cfg.w_max, cfg.threads);
    out << parameter_string(code) << " searched weights <= " << cfg.w_max << '\n';
    out << "d_X " << (r.x.exact ? "= " : "") << r.x.describe() << '\n';
    out << "d_Z " << (r.z.exact ? "= " : "") << r.z.describe() << '\n';
    out << "d " << (r.exact() ? "= " : "") << r.describe() << '\n';
    if (r.x.witness) out << "X-logical witness " << support_string(*r.x.witness) << '\n';
    if (r.z.witness) out << "Z-logical witness " << support_string(*r.z.witness) << '\n';
    if (code.provenance.predicted_distance) out << "predicted d = " << *code.provenance.predicted_distance << '\n';
    if (!cfg.dir.empty()) {
        save_css_code(cfg.dir, code);
        out << "cached certified distances in " << cfg.dir << "/code.hdr\n";
    }
    return kExitOk;
}

inline CircuitFormat parse_format(const std::string& f) {
    if (f == "native") return CircuitFormat::Native;
    if (f == "qasm-like" || f == "qasm") return CircuitFormat::QasmLike;
    throw UsageError("unknown --format '" + f + "' (expected native or qasm-like)");
}

inline int cmd_circuit(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    const CircuitFormat format = parse_format(cfg.format);
    if (cfg.paper_literal && cfg.k < 3) throw UsageError("--paper-literal needs --k >= 3");
    const CssCode code = cfg.paper_literal ? build_qlk(cfg.k) : resolve_code(cfg);
    const Circuit circuit = cfg.paper_literal ? paper_circuit(cfg.k) : standard_form_encoder(code);
    BitVector input(code.k_logical);
    if (!cfg.logical.empty()) {
        input = BitVector::from_string(cfg.logical);
        if (input.size() != code.k_logical) {
            throw UsageError("--logical must have k_logical = " + std::to_string(code.k_logical) + " bits");
        }
    }
    const EncodingReport report = verify_encoding(circuit, code, input);

    const std::string text = export_circuit(circuit, format);
    std::ostream* report_stream = &out;
    if (cfg.out.empty()) {
        out << text;
        report_stream = &err;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + cfg.out + " for writing");
        file << text;
        out << "wrote " << circuit.size() << " gates on " << circuit.num_qubits() << " qubits to " << cfg.out << '\n';
    }
    std::ostream& rs = *report_stream;
    rs << (cfg.paper_literal ? "fan-out transcription" : "standard-form")
       << " encoder verification: " << report.summary() << '\n';
    if (!report.pass) {
        auto list = [&rs](const char* label, const std::vector<std::size_t>& rows) {
            if (rows.empty()) return;
            rs << "  failing " << label << " rows:";
            for (std::size_t i = 0; i < rows.size() && i < 12; ++i) rs << ' ' << rows[i] + 1;
            if (rows.size() > 12) rs << " ... (" << rows.size() << " total)";
            rs << '\n';
        };
        list("X", report.failing_x_rows);
        list("Z", report.failing_z_rows);
    }
    if (!report.pass && !cfg.paper_literal) {
        rs << "internal error: standard-form encoder failed verification\n";
        return kExitFailure;
    }
    return kExitOk;
}

inline int cmd_simulate(const CommandConfig& cfg, std::ostream& out) {
    CssCode code = resolve_code(cfg);
    std::size_t d = 0;
    if (cfg.assume_d) {
        d = *cfg.assume_d;
    } else if (code.distance) {
        d = *code.distance;
    } else if (cfg.dir.empty()) {
        const DistanceResult r = certify_distance(code, cfg.w_max, cfg.threads);
        if (!r.exact()) {
            throw UsageError("distance not certified up to --w-max " + std::to_string(cfg.w_max) +
                             "; pass --assume-d or raise --w-max");
        }
        d = *r.exact();
    } else {
        throw UsageError("code in " + cfg.dir + " has no certified distance; run 'distance' or pass --assume-d");
    }
    const std::size_t t = d == 0 ? 0 : (d - 1) / 2;
    DecodingTables tables = cfg.load_tables.empty() ? build_lookup(code, t) : load_tables(cfg.load_tables);
    if (!cfg.save_tables.empty()) save_tables(cfg.save_tables, tables);
    const TwoStageDecoder decoder(code, std::move(tables));

    if (cfg.exhaustive_weight) {
        const MonteCarloSummary s = exhaustive_sweep(decoder, *cfg.exhaustive_weight);
        out << "exhaustive weight " << *cfg.exhaustive_weight << " (t=" << t << "): " << s.successes << '/' << s.shots
            << " corrected, fail_x=" << s.fail_x << " fail_z=" << s.fail_z << " fail_y=" << s.fail_y
            << " heralded=" << s.heralded << '\n';
        return kExitOk;
    }
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
    const MonteCarloSummary s = run_monte_carlo(decoder, cfg.p, cfg.shots, cfg.seed, cfg.threads);
    out << "# X and Z parts are decoded independently (Y correlations ignored), t=" << t << '\n';
    const std::string row = csv_row(code, cfg.p, cfg.seed, s);
    if (cfg.out.empty()) {
        out << csv_header() << '\n' << row << '\n';
    } else {
        const bool fresh = !std::filesystem::exists(cfg.out) || std::filesystem::file_size(cfg.out) == 0;
        std::ofstream file(cfg.out, std::ios::binary | std::ios::app);
        if (!file) throw std::runtime_error("cannot open " + cfg.out + " for appending");
        if (fresh) file << csv_header() << '\n';
        file << row << '\n';
        out << row << '\n';
    }
    return kExitOk;
}

inline int cmd_export_alist(const CommandConfig& cfg, std::ostream& out) {
    const CssCode code = resolve_code(cfg);
    if (cfg.matrix != "hx" && cfg.matrix != "hz") throw UsageError("--matrix must be hx or hz");
    const std::string text = matrix_to_alist(cfg.matrix == "hx" ? code.hx : code.hz);
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + cfg.out + " for writing");
        file << text;
        out << "wrote " << cfg.out << '\n';
    }
    return kExitOk;
}

inline void add_code_source(CLI::App* sub, CommandConfig& cfg) {
    sub->add_option("--family", cfg.family, "code family: qlk, shor or hgp")->capture_default_str();
    sub->add_option("--k", cfg.k, "family parameter k (>= 3)");
    sub->add_option("--c1", cfg.c1, "first classical code for shor/hgp, e.g. lk:4, lkplus:4, dual:lk:4");
    sub->add_option("--c2", cfg.c2, "second classical code for shor/hgp");
    sub->add_option("--dir", cfg.dir, "read the code from a directory written by 'build'");
}

/// Runs one CLI invocation; args exclude the program name.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CommandConfig cfg;
    CLI::App app{"Construct, certify, encode and simulate QL_k CSS codes", "qlk"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "build a code and write HX/HZ/header files");
    add_code_source(build, cfg);
    build->add_option("--out", cfg.out, "output directory");

    auto* check = app.add_subcommand("check", "audit commutation, ranks and row weights");
    add_code_source(check, cfg);

    auto* distance = app.add_subcommand("distance", "certify d_X, d_Z by exhaustive low-weight search");
    add_code_source(distance, cfg);
    distance->add_option("--w-max", cfg.w_max, "largest weight searched")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    distance->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

    auto* circuit = app.add_subcommand("circuit", "emit and verify an encoding circuit");
    add_code_source(circuit, cfg);
    circuit->add_flag("--paper-literal", cfg.paper_literal, "emit the fan-out rule transcription instead");
    circuit->add_option("--format", cfg.format, "native or qasm-like")->capture_default_str();
    circuit->add_option("--out", cfg.out, "circuit output file (default stdout)");
    circuit->add_option("--logical", cfg.logical, "logical input bits used for verification");

    auto* simulate = app.add_subcommand("simulate", "two-stage lookup decoding under depolarizing noise");
    add_code_source(simulate, cfg);
    simulate->add_option("--p", cfg.p, "depolarizing probability")->capture_default_str();
    simulate->add_option("--shots", cfg.shots, "number of shots")->check(CLI::PositiveNumber)->capture_default_str();
    simulate->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    simulate->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    simulate->add_option("--assume-d", cfg.assume_d, "use this distance instead of certifying");
    simulate->add_option("--w-max", cfg.w_max, "search depth when certifying the distance")->capture_default_str();
    simulate->add_option("--exhaustive-weight", cfg.exhaustive_weight, "decode every Pauli error of this weight");
    simulate->add_option("--out", cfg.out, "append the CSV row to this file");
    simulate->add_option("--save-tables", cfg.save_tables, "write the lookup tables to this file");
    simulate->add_option("--load-tables", cfg.load_tables, "read lookup tables instead of building them");

    auto* alist = app.add_subcommand("export-alist", "write H_X or H_Z in alist format");
    add_code_source(alist, cfg);
    alist->add_option("--matrix", cfg.matrix, "hx or hz")->capture_default_str();
    alist->add_option("--out", cfg.out, "output file (default stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitFailure;
    }

    try {
        if (build->parsed()) return cmd_build(cfg, out);
        if (check->parsed()) return cmd_check(cfg, out);
        if (distance->parsed()) return cmd_distance(cfg, out);
        if (circuit->parsed()) return cmd_circuit(cfg, out, err);
        if (simulate->parsed()) return cmd_simulate(cfg, out);
        if (alist->parsed()) return cmd_export_alist(cfg, out);
    } catch (const CapacityError& e) {
        err << "capacity exceeded: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace qlk::cli
