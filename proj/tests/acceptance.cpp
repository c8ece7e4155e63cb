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

// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock time.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qlk/qlk.hpp"
#include "support/published.hpp"
#include "support/state_vector.hpp"

namespace {

using namespace qlk;
namespace pub = qlk::testing::published;

// Pinned budgets and tolerances.
constexpr double kBudgetClassicalSeconds = 1.0;
constexpr double kBudgetIdentitiesSeconds = 1.0;
constexpr double kBudgetCommutationSeconds = 5.0;
constexpr double kBudgetDistanceSeconds = 300.0;
constexpr double kBudgetSymplecticSeconds = 1.0;
constexpr double kBudgetEncodingSeconds = 30.0;
constexpr double kBudgetStructureSeconds = 1.0;
constexpr double kBudgetDecodingSeconds = 120.0;
constexpr double kBudgetTableauSeconds = 60.0;
constexpr double kSeparationSigmas = 3.0;
constexpr std::size_t kMonteCarloShots = 100'000;
constexpr std::uint64_t kMonteCarloSeed = 20260101;

/// Collects failure reasons for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Check&)> body;
};

std::string text_of(const BitMatrix& m) { return matrix_to_text(m); }

void classical_distances(Check& c) {
    c.expect(min_distance(build_lk(3)) == 3, "d(L_3) != 3");
    for (std::size_t k = 4; k <= 8; ++k) {
        c.expect(min_distance(build_lk(k)) == 4, "d(L_" + std::to_string(k) + ") != 4");
    }
    c.expect(min_distance(build_lk_plus(4)) == 5, "d(L_4^+) != 5");
    for (std::size_t k = 5; k <= 8; ++k) {
        c.expect(min_distance(build_lk_plus(k)) == 6, "d(L_" + std::to_string(k) + "^+) != 6");
    }
}

void construction_identities(Check& c) {
    for (std::size_t k = 3; k <= 10; ++k) {
        for (const ClassicalCode& code : {build_lk(k), build_lk_plus(k)}) {
            c.expect(mat_mul(code.generator, transpose(code.parity_check)).is_zero(), "G H^T != 0 for " + code.name);
        }
    }
    c.expect(text_of(build_lk(4).generator) == pub::kGeneratorL4, "G of L_4 differs from the printed matrix");
    c.expect(text_of(build_lk(4).parity_check) == pub::kParityL4, "H of L_4 differs from the printed matrix");
    c.expect(text_of(build_lk_plus(5).generator) == pub::kGeneratorL5Plus,
             "G of L_5^+ differs from the printed matrix");
    c.expect(text_of(build_lk_plus(4).parity_check) == pub::kParityL4Plus,
             "H of L_4^+ differs from the printed matrix");
    c.expect(text_of(build_gk(5)) == pub::kG5, "G_5 differs from the printed matrix");
    c.expect(text_of(build_gk(4)) == pub::kG4, "G_4 differs from the printed matrix");
}

void css_validity(Check& c) {
    for (std::size_t k = 3; k <= 10; ++k) {
        c.expect(check_css(build_qlk(k)), "QL_" + std::to_string(k) + " fails H_X H_Z^T = 0");
    }
    std::vector<ClassicalCode> pool;
    for (std::size_t k = 3; k <= 6; ++k) {
        pool.push_back(build_lk(k));
        pool.push_back(build_lk_plus(k));
    }
    std::size_t pairs = 0;
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            c.expect(check_css(hypergraph_product(a, b)), "hypergraph product " + a.name + " x " + b.name);
            ++pairs;
        }
    }
    c.note(std::to_string(pairs) + " hypergraph pairs");
}

void parameters(Check& c) {
    for (std::size_t k = 3; k <= 10; ++k) {
        const CssCode code = build_qlk(k);
        c.expect(code.n == 6 * k * k, "n != 6k^2 at k=" + std::to_string(k));
        c.expect(code.k_logical == k * k, "k_logical != k^2 at k=" + std::to_string(k));
        c.expect(code.n - rank(code.hx) - rank(code.hz) == k * k, "rank count != k^2 at k=" + std::to_string(k));
    }
    const CssCode c4 = build_qlk(4);
    c.expect(c4.n == pub::kExample1N && c4.k_logical == pub::kExample1K, "first example is not [[96,16,.]]");
    const CssCode c5 = build_qlk(5);
    c.expect(c5.n == 150 && c5.k_logical == pub::kExample2K, "k=5 is not [[150,25,.]]");
    c.expect(c5.n != pub::kExample2PrintedN, "k=5 unexpectedly matches the printed n");
    const bool noted = c5.provenance.notes.size() == 1 &&
                       c5.provenance.notes[0].find("150") != std::string::npos &&
                       c5.provenance.notes[0].find(std::to_string(pub::kExample2PrintedN)) != std::string::npos;
    c.expect(noted, "k=5 erratum note missing");
    c.note("k=5: n=150, printed " + std::to_string(pub::kExample2PrintedN) + " recorded as erratum");
}

void quantum_distance(Check& c) {
    const CssCode q3 = build_qlk(3);
    const DistanceResult r3 = css_distance(q3, 3);
    c.expect(r3.exact() == std::optional<std::size_t>(3), "QL_3 d = " + r3.describe() + ", expected 3");

    const CssCode q4 = build_qlk(4);
    const DistanceResult r4 = css_distance(q4, 4);
    c.expect(r4.exact() == std::optional<std::size_t>(4), "QL_4 d = " + r4.describe() + ", expected 4");
    const SideDistance& hit = r4.z.exact == std::optional<std::size_t>(4) ? r4.z : r4.x;
    const bool witness_ok = hit.witness && hit.witness->popcount() == 4;
    c.expect(witness_ok, "QL_4 has no stored weight-4 witness");
    if (witness_ok) {
        const bool z_side = &hit == &r4.z;
        const BitMatrix& commute = z_side ? q4.hx : q4.hz;
        const BitMatrix& stab = z_side ? q4.hz : q4.hx;
        c.expect(commute.multiply(*hit.witness).none() && !in_row_space(stab, *hit.witness),
                 "QL_4 witness is not a logical operator");
    }
    // Exhaustive absence below 4 on both sides.
    const DistanceResult below = css_distance(q4, 3);
    c.expect(!below.x.exact && !below.z.exact && below.x.searched_up_to == 3 && below.z.searched_up_to == 3,
             "QL_4 has a logical of weight <= 3");

    const CssCode q5 = build_qlk(5);
    const DistanceResult r5 = css_distance(q5, 4);
    const bool bound =
        (r5.x.exact && *r5.x.exact <= 4 && r5.x.witness) || (r5.z.exact && *r5.z.exact <= 4 && r5.z.witness);
    c.expect(bound, "QL_5: no logical of weight <= 4 found");
    c.note("QL_3 d=" + r3.describe() + "; QL_4 d_X " + r4.x.describe() + ", d_Z " + r4.z.describe() +
           "; QL_5 d_X " + r5.x.describe() + ", d_Z " + r5.z.describe() + ", d " + r5.describe());
}

void symplectic_example(Check& c) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        const BitVector v = phi(PauliOperator::parse(pub::kExampleGenerators[i]));
        c.expect(v.to_string() == pub::kExamplePhi[i], "phi(g" + std::to_string(i + 1) + ") = " + v.to_string());
        rows.push_back(v);
    }
    const BitMatrix h = BitMatrix::from_rows(rows, 8);
    c.expect(text_of(h) == pub::kExampleSymplectic, "symplectic matrix differs");
    const auto [hx, hz] = stabilizer_matrix_split(h);
    c.expect(hx.is_zero() && text_of(hz) == "3 4\n1100\n0110\n0011\n", "split [H_X | H_Z] differs");
    c.expect(commutation_matrix(h).is_zero(), "example generators do not commute");
}

void encoding(Check& c) {
    const CssCode q3 = build_qlk(3);
    const Circuit e3 = standard_form_encoder(q3);
    c.expect(verify_encoding(e3, q3).pass, "QL_3 standard encoder fails on |0...0>");
    for (std::size_t j = 0; j < q3.k_logical; ++j) {
        const EncodingReport r = verify_encoding(e3, q3, BitVector::unit(q3.k_logical, j));
        c.expect(r.pass, "QL_3 standard encoder fails on logical input e_" + std::to_string(j + 1) + ": " +
                             r.summary());
    }
    const CssCode q4 = build_qlk(4);
    const EncodingReport r4 = verify_encoding(standard_form_encoder(q4), q4);
    c.expect(r4.pass, "QL_4 standard encoder: " + r4.summary());

    const EncodingReport lit_a = verify_encoding(paper_circuit(4), q4);
    const EncodingReport lit_b = verify_encoding(paper_circuit(4), q4);
    const bool stable = lit_a.pass == lit_b.pass && lit_a.failing_x_rows == lit_b.failing_x_rows &&
                        lit_a.failing_z_rows == lit_b.failing_z_rows;
    c.expect(stable, "fan-out transcription verdict is not stable");
    c.note("QL_4 standard " + r4.summary() + "; fan-out transcription " + lit_a.summary());
}

void hx_structure(Check& c) {
    auto as_set = [](const auto& v) { return std::set<std::size_t>(v.begin(), v.end()); };
    c.expect(as_set(hx_support(4, 1)) == as_set(pub::kQl4Row1), "row 1 support differs");
    c.expect(as_set(hx_support(4, 2)) == as_set(pub::kQl4Row2), "row 2 support differs");
    c.expect(as_set(hx_support(4, 13)) == as_set(pub::kQl4Row13), "row 13 support differs");
    for (std::size_t k = 3; k <= 8; ++k) {
        const CssCode code = build_qlk(k);
        for (std::size_t r = 0; r < code.hx.rows(); ++r) {
            if (code.hx.row_weight(r) != k) {
                c.expect(false, "H_X row " + std::to_string(r + 1) + " of QL_" + std::to_string(k) + " has weight " +
                                    std::to_string(code.hx.row_weight(r)));
            }
        }
    }
}

void decoding(Check& c) {
    const CssCode q4 = build_qlk(4);
    const TwoStageDecoder dec(q4, build_lookup(q4, 1));
    const MonteCarloSummary sweep = exhaustive_sweep(dec, 1);
    c.expect(sweep.shots == 288 && sweep.successes == 288,
             "single-qubit sweep " + std::to_string(sweep.successes) + "/" + std::to_string(sweep.shots));

    const MonteCarloSummary zero = run_monte_carlo(dec, 0.0, 10'000, kMonteCarloSeed, 0);
    c.expect(zero.failures() == 0 && zero.rate() == 0.0, "p = 0 gives a nonzero rate");

    const std::array<double, 3> ps{0.001, 0.01, 0.05};
    std::array<MonteCarloSummary, 3> runs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        runs[i] = run_monte_carlo(dec, ps[i], kMonteCarloShots, kMonteCarloSeed, 0);
    }
    std::ostringstream rates;
    for (std::size_t i = 0; i < ps.size(); ++i) rates << (i ? ", " : "") << "p=" << ps[i] << ": " << runs[i].rate();
    c.note(rates.str());
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        const double a = runs[i].rate();
        const double b = runs[i + 1].rate();
        const double n = static_cast<double>(kMonteCarloShots);
        const double sigma = std::sqrt(a * (1 - a) / n + b * (1 - b) / n);
        c.expect(b - a > kSeparationSigmas * sigma, "rates at p=" + std::to_string(ps[i]) + " and p=" +
                                                        std::to_string(ps[i + 1]) + " not separated by 3 sigma");
    }

    auto csv_at = [&](std::size_t threads) {
        return csv_row(q4, 0.01, kMonteCarloSeed,
                       run_monte_carlo(dec, 0.01, kMonteCarloShots, kMonteCarloSeed, threads));
    };
    const std::string one = csv_at(1);
    const std::string four = csv_at(4);
    c.expect(one == four, "CSV differs between 1 and 4 threads");
    c.expect(one == csv_row(q4, 0.01, kMonteCarloSeed, runs[1]), "CSV differs from the default-thread run");
}

/// Compares tableau and state-vector verdicts on all 4^n Paulis with both signs.
bool agrees(const Circuit& circuit, std::string& why) {
    Tableau t(circuit.num_qubits());
    t.apply(circuit);
    qlk::testing::StateVector sv(circuit.num_qubits());
    sv.apply(circuit);
    for (PauliOperator p : qlk::testing::all_paulis(circuit.num_qubits())) {
        for (std::uint8_t phase : {0, 2}) {
            p.set_phase_exp(phase);
            if (t.is_stabilized(p) != sv.classify(p)) {
                why = p.to_string() + " after\n" + export_circuit(circuit);
                return false;
            }
        }
    }
    return true;
}

std::vector<Gate> gate_alphabet(std::size_t n) {
    std::vector<Gate> out;
    for (std::size_t q = 1; q <= n; ++q) {
        out.push_back(Gate::h(q));
        out.push_back(Gate::x(q));
        out.push_back(Gate::z(q));
    }
    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = 1; b <= n; ++b) {
            if (a != b) out.push_back(Gate::cnot(a, b));
            if (a < b) out.push_back(Gate::cz(a, b));
        }
    }
    return out;
}

/// Every gate sequence of length <= max_len over the alphabet.
std::size_t exhaustive_family(std::size_t n, std::size_t max_len, Check& c) {
    const std::vector<Gate> alphabet = gate_alphabet(n);
    std::size_t circuits = 0;
    std::vector<std::size_t> digits;
    for (std::size_t len = 0; len <= max_len; ++len) {
        digits.assign(len, 0);
        for (;;) {
            Circuit circuit(n);
            for (std::size_t d : digits) circuit.append(alphabet[d]);
            std::string why;
            if (!agrees(circuit, why)) {
                c.expect(false, "disagreement on " + why);
                return circuits;
            }
            ++circuits;
            std::size_t i = 0;
            while (i < len && ++digits[i] == alphabet.size()) digits[i++] = 0;
            if (i == len) break;
        }
    }
    return circuits;
}

void tableau_soundness(Check& c) {
    std::size_t total = 0;
    // Exhaustive where the family is small enough: n = 1 up to 8 gates, n = 2 up to 4 gates.
    total += exhaustive_family(1, 8, c);
    total += exhaustive_family(2, 4, c);
    // Seeded random 8-gate circuits elsewhere.
    std::mt19937_64 rng(424242);
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::vector<Gate> alphabet = gate_alphabet(n);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        for (int trial = 0; trial < 3000; ++trial) {
            Circuit circuit(n);
            for (int g = 0; g < 8; ++g) circuit.append(alphabet[pick(rng)]);
            std::string why;
            if (!agrees(circuit, why)) {
                c.expect(false, "disagreement on " + why);
                return;
            }
            ++total;
        }
    }
    c.note(std::to_string(total) + " circuits");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "classical distances", kBudgetClassicalSeconds, classical_distances},
        {2, "duality and printed matrices", kBudgetIdentitiesSeconds, construction_identities},
        {3, "CSS commutation", kBudgetCommutationSeconds, css_validity},
        {4, "code parameters", 0.0, parameters},
        {5, "quantum distance", kBudgetDistanceSeconds, quantum_distance},
        {6, "symplectic example", kBudgetSymplecticSeconds, symplectic_example},
        {7, "encoding correctness", kBudgetEncodingSeconds, encoding},
        {8, "H_X structure", kBudgetStructureSeconds, hx_structure},
        {9, "decoding", kBudgetDecodingSeconds, decoding},
        {10, "tableau soundness", kBudgetTableauSeconds, tableau_soundness},
    };
    int failed = 0;
    for (const auto& crit : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (crit.budget_seconds > 0 && seconds > crit.budget_seconds) {
            check.expect(false, "took " + std::to_string(seconds) + " s, budget " +
                                    std::to_string(crit.budget_seconds) + " s");
        }
        const bool ok = check.failures.empty();
        failed += ok ? 0 : 1;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", seconds);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << crit.id << " (" << crit.title << ") [" << timing << "]";
        for (const auto& n : check.notes) std::cout << " | " << n;
        std::cout << '\n';
        for (const auto& f : check.failures) std::cout << "    " << f << '\n';
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
