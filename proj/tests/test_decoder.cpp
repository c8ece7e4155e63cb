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

#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "qlk/css_code.hpp"
#include "qlk/decoder.hpp"
#include "qlk/errors.hpp"
#include "support/oracles.hpp"

namespace qlk {
namespace {

CssCode steane() {
    const BitMatrix h = BitMatrix::from_strings({"1010101", "0110011", "0001111"});
    return CssCode::from_checks(h, h);
}

/// Colex order on supports: compare the largest differing element.
bool colex_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    const int top = 63 - __builtin_clzll(diff);
    return ((b >> top) & 1u) != 0;
}

/// Oracle: for each syndrome of a weight <= t error, the min-weight, colex-first preimage.
void expect_table_matches_brute_force(const DecodingTable& table, const BitMatrix& checks, std::size_t t) {
    std::map<std::uint64_t, std::uint64_t> best;
    const std::size_t n = checks.cols();
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
        if (static_cast<std::size_t>(__builtin_popcountll(e)) > t) continue;
        std::uint64_t syn = 0;
        for (std::size_t r = 0; r < checks.rows(); ++r) {
            syn |= static_cast<std::uint64_t>(__builtin_popcountll(testing::as_mask(checks.row(r)) & e) & 1) << r;
        }
        auto it = best.find(syn);
        if (it == best.end()) {
            best.emplace(syn, e);
            continue;
        }
        const int we = __builtin_popcountll(e);
        const int wb = __builtin_popcountll(it->second);
        if (we < wb || (we == wb && colex_less(e, it->second))) it->second = e;
    }
    ASSERT_EQ(table.size(), best.size());
    for (const auto& [key, value] : table.entries) {
        auto it = best.find(testing::as_mask(key));
        ASSERT_NE(it, best.end());
        EXPECT_EQ(testing::as_mask(value), it->second) << key.to_string();
    }
}

TEST(combinations, colex_order_and_count) {
    std::vector<std::uint64_t> seen;
    detail::for_each_combination(6, 3, [&](const std::vector<std::size_t>& s) {
        std::uint64_t m = 0;
        for (std::size_t q : s) m |= std::uint64_t{1} << q;
        seen.push_back(m);
    });
    EXPECT_EQ(seen.size(), 20u);
    for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_TRUE(colex_less(seen[i - 1], seen[i]));
    std::size_t empty_calls = 0;
    detail::for_each_combination(4, 0, [&](const std::vector<std::size_t>& s) { empty_calls += s.empty() ? 1 : 0; });
    EXPECT_EQ(empty_calls, 1u);
    std::size_t none = 0;
    detail::for_each_combination(2, 3, [&](const std::vector<std::size_t>&) { ++none; });
    EXPECT_EQ(none, 0u);
}

TEST(lookup, matches_brute_force_tables) {
    const CssCode s = steane();
    for (std::size_t t = 0; t <= 2; ++t) {
        const DecodingTables tables = build_lookup(s, t);
        expect_table_matches_brute_force(tables.x_errors, s.hz, t);
        expect_table_matches_brute_force(tables.z_errors, s.hx, t);
    }
    const CssCode shor = generalized_shor(
        make_code(BitMatrix::from_strings({"111"}), BitMatrix::from_strings({"110", "011"})),
        make_code(BitMatrix::from_strings({"111"}), BitMatrix::from_strings({"110", "011"})));
    const DecodingTables tables = build_lookup(shor, 2);
    expect_table_matches_brute_force(tables.x_errors, shor.hz, 2);
    expect_table_matches_brute_force(tables.z_errors, shor.hx, 2);
}

TEST(lookup, capacity_guard) {
    const CssCode code = build_qlk(4);
    EXPECT_THROW(build_lookup(code, 2, 1000), CapacityError);
    EXPECT_NO_THROW(build_lookup(code, 1, 1000));
    EXPECT_EQ(detail::binomial_capped(96, 2, 1'000'000), 4560u);
    EXPECT_EQ(detail::binomial_capped(96, 50, 1000), 1001u);
}

TEST(decode, corrects_every_single_error_on_steane) {
    const CssCode code = steane();
    const TwoStageDecoder dec(code, build_lookup(code, 1));
    const MonteCarloSummary s = exhaustive_sweep(dec, 1);
    EXPECT_EQ(s.shots, 21u);
    EXPECT_EQ(s.successes, 21u);
    EXPECT_EQ(s.heralded, 0u);
}

TEST(decode, weight_two_errors_can_fail_on_distance_three) {
    const CssCode code = steane();
    const TwoStageDecoder dec(code, build_lookup(code, 1));
    const MonteCarloSummary s = exhaustive_sweep(dec, 2);
    EXPECT_EQ(s.shots, 21u * 9u);
    EXPECT_GT(s.failures(), 0u);
    EXPECT_EQ(s.successes + s.failures(), s.shots);
}

TEST(decode, qlk4_all_single_paulis) {
    const CssCode code = build_qlk(4);
    const TwoStageDecoder dec(code, build_lookup(code, 1));
    const MonteCarloSummary s = exhaustive_sweep(dec, 1);
    EXPECT_EQ(s.shots, 288u);
    EXPECT_EQ(s.successes, 288u);
    EXPECT_EQ(s.heralded, 0u);
}

TEST(decode, trial_record_fields) {
    const CssCode code = build_qlk(3);
    const TwoStageDecoder dec(code, build_lookup(code, 1));
    const PauliOperator e = PauliOperator::single(code.n, 10, Pauli::Y);
    const TrialRecord r = dec.run_trial(e);
    EXPECT_EQ(r.verdict, Verdict::Success);
    EXPECT_FALSE(r.heralded);
    EXPECT_EQ(r.syndrome.s_x, code.hx.multiply(e.z_bits()));
    EXPECT_EQ(r.syndrome.s_z, code.hz.multiply(e.x_bits()));
    EXPECT_TRUE(in_row_space(code.hx, r.residual.x_bits()));
    EXPECT_STREQ(to_string(r.verdict), "success");
}

TEST(decode, logical_error_is_reported) {
    CssCode code = build_qlk(3);
    const DistanceResult d = css_distance(code, 3);
    ASSERT_TRUE(d.z.witness.has_value());
    const TwoStageDecoder dec(code, build_lookup(code, 1));
    const TrialRecord r = dec.run_trial(PauliOperator::z_type(*d.z.witness));
    EXPECT_TRUE(r.syndrome.is_zero());
    EXPECT_EQ(r.verdict, Verdict::LogicalZ);
}

TEST(decode, syndrome_size_checked) {
    const CssCode code = steane();
    EXPECT_THROW(decode(code, build_lookup(code, 1), Syndrome{BitVector(2), BitVector(3)}), DimensionError);
}

TEST(sampler, deterministic_per_seed_and_shot) {
    EXPECT_EQ(sample_depolarizing(50, 0.2, 9, 3), sample_depolarizing(50, 0.2, 9, 3));
    EXPECT_NE(sample_depolarizing(50, 0.2, 9, 3), sample_depolarizing(50, 0.2, 9, 4));
    EXPECT_NE(sample_depolarizing(50, 0.2, 9, 3), sample_depolarizing(50, 0.2, 10, 3));
    EXPECT_TRUE(sample_depolarizing(50, 0.0, 9, 3).is_identity());
    EXPECT_EQ(sample_depolarizing(50, 1.0, 9, 3).weight(), 50u);
    EXPECT_THROW(sample_depolarizing(5, 1.5, 0), DomainError);
    EXPECT_THROW(sample_depolarizing(5, -0.1, 0), DomainError);
}

TEST(sampler, statistics) {
    // Per-qubit marginals: P(X) = P(Y) = P(Z) = p/3; allow 5 sigma.
    const std::size_t n = 100;
    const std::size_t shots = 2000;
    const double p = 0.3;
    std::array<std::size_t, 4> counts{};
    for (std::size_t s = 0; s < shots; ++s) {
        const PauliOperator e = sample_depolarizing(n, p, 1234, s);
        for (std::size_t q = 0; q < n; ++q) ++counts[static_cast<int>(e.at(q))];
    }
    const double total = static_cast<double>(n * shots);
    for (int kind = 1; kind <= 3; ++kind) {
        const double expect = total * p / 3;
        const double sigma = std::sqrt(total * (p / 3) * (1 - p / 3));
        EXPECT_NEAR(static_cast<double>(counts[kind]), expect, 5 * sigma) << kind;
    }
}

TEST(monte_carlo, zero_noise_never_fails) {
    const CssCode code = build_qlk(4);
    const MonteCarloSummary s = run_monte_carlo(code, build_lookup(code, 1), 0.0, 500, 1, 2);
    EXPECT_EQ(s.shots, 500u);
    EXPECT_EQ(s.successes, 500u);
    EXPECT_EQ(s.rate(), 0.0);
}

TEST(monte_carlo, thread_count_does_not_change_results) {
    const CssCode code = build_qlk(3);
    const TwoStageDecoder dec(code, build_lookup(code, 1));
    const MonteCarloSummary a = run_monte_carlo(dec, 0.03, 997, 77, 1);
    const MonteCarloSummary b = run_monte_carlo(dec, 0.03, 997, 77, 3);
    const MonteCarloSummary c = run_monte_carlo(dec, 0.03, 997, 77, 8);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_EQ(csv_row(code, 0.03, 77, a), csv_row(code, 0.03, 77, c));
    EXPECT_THROW(run_monte_carlo(dec, 0.03, 0, 77), DomainError);
}

TEST(monte_carlo, shot_replay_matches_summary) {
    const CssCode code = build_qlk(3);
    const TwoStageDecoder dec(code, build_lookup(code, 1));
    MonteCarloSummary manual;
    for (std::size_t s = 0; s < 200; ++s) manual.add(dec.run_trial(sample_depolarizing(code.n, 0.05, 5, s)));
    EXPECT_EQ(run_monte_carlo(dec, 0.05, 200, 5, 4), manual);
}

TEST(csv, header_and_row_format) {
    const CssCode code = build_qlk(4);
    MonteCarloSummary s;
    s.shots = 8;
    s.successes = 5;
    s.fail_x = 1;
    s.fail_z = 1;
    s.fail_y = 1;
    s.heralded = 2;
    EXPECT_EQ(csv_header(), "k,n,p,shots,seed,successes,fail_x,fail_z,fail_y,heralded,rate");
    EXPECT_EQ(csv_row(code, 0.01, 42, s), "4,96,0.01,8,42,5,1,1,1,2,0.375");
}

TEST(table_io, round_trip_and_stable_bytes) {
    const CssCode code = build_qlk(3);
    const DecodingTables tables = build_lookup(code, 1);
    std::stringstream a;
    write_tables(a, tables);
    const std::string bytes = a.str();
    EXPECT_EQ(bytes.substr(0, 8), "QLKLUT01");
    std::stringstream in(bytes);
    const DecodingTables back = read_tables(in);
    EXPECT_EQ(back, tables);
    std::stringstream again;
    write_tables(again, back);
    EXPECT_EQ(again.str(), bytes);
}

TEST(table_io, rejects_garbage) {
    std::stringstream bad("NOTATABLE");
    EXPECT_THROW(read_tables(bad), ParseError);
    const DecodingTables tables = build_lookup(steane(), 1);
    std::stringstream good;
    write_tables(good, tables);
    std::stringstream truncated(good.str().substr(0, good.str().size() - 3));
    EXPECT_THROW(read_tables(truncated), ParseError);
}

}  // namespace
}  // namespace qlk
