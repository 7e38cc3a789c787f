// Copyright 2026 The qccwb Authors
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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcc/qcc_code.hpp"
#include "sim/channel.hpp"

namespace qcc::sim {
namespace {

using gf::Poly;
using gf::PolyMatrix;

cc::ConvCode parent57() { return cc::ConvCode(PolyMatrix(2, 1, 2, {Poly(2, {1, 0, 1}), Poly(2, {1, 1, 1})})); }

PauliWindow S(const char *s) { return PauliWindow::from_string(s); }

pauli::StabilizerWindow five_qubit() {
    return pauli::StabilizerWindow(2, 5, {S("XZZXI"), S("IXZZX"), S("XIXZZ"), S("ZXIXZ")}, {S("XXXXX")},
                                   {S("ZZZZZ")});
}

TEST(Sample, ZeroProbabilityIsIdentity) {
    for (auto m : {Model::Depolarizing, Model::IndependentXZ}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            EXPECT_TRUE(sample_error({0.0, m, 3}, 30, seed).is_identity());
        }
    }
}

TEST(Sample, UnitProbabilityHitsEveryRegister) {
    EXPECT_EQ(sample_error({1.0, Model::Depolarizing, 2}, 40, 7).weight(), 40);
}

TEST(Sample, MarginalWithinThreeSigma) {
    const double p = 0.1;
    const int L = 10;
    const int trials = 10000;
    std::uint64_t hits = 0;
    std::vector<std::uint64_t> kinds(4, 0);
    for (int t = 0; t < trials; ++t) {
        auto rng = trial_rng(99, t);
        auto e = sample_error({p, Model::Depolarizing, 2}, L, rng);
        hits += e.weight();
        for (int j = 0; j < L; ++j) kinds[e.x(j) + 2 * e.z(j)]++;
    }
    const double n = double(trials) * L;
    EXPECT_NEAR(hits / n, p, 3 * std::sqrt(p * (1 - p) / n));
    for (int k = 1; k < 4; ++k) {
        double q = p / 3;
        EXPECT_NEAR(kinds[k] / n, q, 3 * std::sqrt(q * (1 - q) / n));
    }
}

TEST(Sample, IndependentModelRates) {
    const double p = 0.2;
    const int L = 10, trials = 5000;
    std::uint64_t xs = 0, zs = 0;
    for (int t = 0; t < trials; ++t) {
        auto rng = trial_rng(5, t);
        auto e = sample_error({p, Model::IndependentXZ, 3}, L, rng);
        for (int j = 0; j < L; ++j) {
            xs += e.x(j) != 0;
            zs += e.z(j) != 0;
        }
    }
    const double n = double(trials) * L;
    EXPECT_NEAR(xs / n, p, 3 * std::sqrt(p * (1 - p) / n));
    EXPECT_NEAR(zs / n, p, 3 * std::sqrt(p * (1 - p) / n));
}

TEST(Sample, RejectsBadProbability) {
    EXPECT_THROW(sample_error({1.5, Model::Depolarizing, 2}, 3, 1), Error);
    EXPECT_THROW(sample_error({0.1, Model::Depolarizing, 4}, 3, 1), Error);
    EXPECT_THROW(parse_model("bursty"), Error);
}

TEST(Wilson, KnownValues) {
    auto z = wilson(0, 10);
    EXPECT_EQ(z.lo, 0.0);
    EXPECT_EQ(wilson(0, 100000).lo, 0.0);
    EXPECT_EQ(wilson(7, 7).hi, 1.0);
    const double z2 = 1.959963984540054 * 1.959963984540054;
    EXPECT_NEAR(z.hi, z2 / (10 + z2), 1e-12);
    auto h = wilson(50, 100);
    EXPECT_NEAR(h.lo + h.hi, 1.0, 1e-12);
    EXPECT_LT(h.lo, 0.5);
}

TEST(UnionBound, Arithmetic) {
    auto zero = union_bound(5, 5, 3, 1, 0.0);
    EXPECT_EQ(zero.pe, 0.0);
    EXPECT_EQ(zero.pb, 0.0);
    auto b = union_bound(1, 2, 2, 2, 0.01);
    EXPECT_NEAR(b.pe, 1 * 4 * 0.01, 1e-15);
    EXPECT_NEAR(b.pb, 1 * 4 * 0.01, 1e-15);
    EXPECT_NEAR(union_bound(1, 1, 3, 1, 0.04).pe, 8 * 0.008, 1e-15);
    EXPECT_THROW(union_bound(1, 1, 0, 1, 0.1), Error);
}

TEST(Distance, FiveQubitCode) {
    auto r = measure_distance(five_qubit(), 4);
    EXPECT_EQ(r.d, 3);
    EXPECT_EQ(r.A_d, 30u);
    EXPECT_EQ(r.B_d, 30u);
}

TEST(Distance, RepetitionBlock) {
    pauli::StabilizerWindow rep(2, 3, {S("ZZI"), S("ZIZ")}, {S("XXX")}, {S("ZII")});
    auto r = measure_distance(rep, 3);
    EXPECT_EQ(r.d, 1);
    EXPECT_EQ(r.A_d, 3u);
}

// Direct enumeration of weight <= 2 operators outside the stabilizer group
// that commute with every generator.
TEST(Distance, Parent57WindowMatchesEnumeration) {
    auto code = code::build_qcc(parent57(), 2, 3);
    const int L = code.length();
    std::vector<std::string> gens;
    oracle::Gf2Span span;
    for (const auto &g : code.stab().generators()) {
        gens.push_back(g.to_string());
        span.insert(oracle::symplectic(gens.back()));
    }
    auto logical = [&](const std::string &s) {
        for (const auto &g : gens)
            if (oracle::symp_product(s, g)) return false;
        return !span.contains(oracle::symplectic(s));
    };
    const char kinds[] = {'X', 'Z', 'Y'};
    int w1 = 0, w2 = 0;
    for (int a = 0; a < L; ++a) {
        for (char ka : kinds) {
            std::string s(L, 'I');
            s[a] = ka;
            w1 += logical(s);
            for (int b = a + 1; b < L; ++b) {
                for (char kb : kinds) {
                    s[b] = kb;
                    w2 += logical(s);
                }
                s[b] = 'I';
            }
        }
    }
    auto r = measure_distance(code.stab(), 3);
    ASSERT_EQ(w1, 0);
    EXPECT_EQ(r.d, 2);
    EXPECT_EQ(r.A_d, static_cast<std::uint64_t>(w2));
}

TEST(Trials, ZeroProbabilityGivesZeroRates) {
    auto code = code::build_qcc(parent57(), 2, 3);
    auto r = run_trials(code, {0.0, Model::Depolarizing, 2}, 500, 1);
    EXPECT_EQ(r.pe_hat, 0.0);
    EXPECT_EQ(r.pb_hat, 0.0);
    EXPECT_EQ(r.logical_block_errors, 0u);
}

TEST(Trials, DeterministicAcrossJobCounts) {
    auto code = code::build_qcc(parent57(), 2, 3);
    ChannelSpec spec{0.05, Model::Depolarizing, 2};
    auto a = run_trials(code, spec, 3000, 42, 1);
    auto b = run_trials(code, spec, 3000, 42, 3);
    auto c = run_trials(code, spec, 3000, 43, 1);
    EXPECT_EQ(a.logical_block_errors, b.logical_block_errors);
    EXPECT_EQ(a.info_symbol_errors, b.info_symbol_errors);
    EXPECT_NE(a.info_symbol_errors, c.info_symbol_errors);
    EXPECT_EQ(a.decoded_info_symbols, 3000u * 3);
    EXPECT_LE(a.pe_ci.lo, a.pe_hat);
    EXPECT_GE(a.pe_ci.hi, a.pe_hat);
}

// Errors at least eight registers apart, away from the window edges.
// Z on registers 4, 7 and 19 is a weight-3 logical operator in the interior,
// so two errors fifteen registers apart share a syndrome with a single error.
TEST(Trials, DistantPairCanAliasSingleError) {
    auto code = code::build_qcc(parent57(), 2, 10);
    const auto &stab = code.stab();
    const int L = code.length();
    PauliWindow logical(2, L);
    for (int r : {4, 7, 19}) logical.set(r, 0, 1);
    EXPECT_TRUE(stab.in_normalizer(logical));
    EXPECT_FALSE(stab.in_group(logical));

    PauliWindow e(2, L);
    e.set(4, 0, 1);
    e.set(19, 0, 1);
    qva::ErrorTrellis t(stab, 4);
    auto c = qva::qva_decode(t, syndrome(e, stab)).correction;
    EXPECT_EQ(c.weight(), 1);
    EXPECT_EQ(pauli::classify_residual(compose(e, inverse(c)), stab).kind, pauli::ResidualClass::LogicalError);
}

// Sparse patterns: the decoder never returns a correction heavier than the
// error, and a logical residual only appears when another pattern of equal or
// smaller weight has the same syndrome.
TEST(Trials, SparseErrorFailuresAreForced) {
    auto code = code::build_qcc(parent57(), 2, 10);
    const auto &stab = code.stab();
    const int L = code.length();
    qva::ErrorTrellis t(stab, 4);
    std::mt19937 rng(77);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        PauliWindow e(2, L);
        int r = 4 + rng() % 8;
        while (r < L - 4) {
            gf::Symbol x = rng() % 2, z = rng() % 2;
            if (!x && !z) x = 1;
            e.set(r, x, z);
            r += 8 + rng() % 6;
        }
        auto c = qva::qva_decode(t, syndrome(e, stab)).correction;
        EXPECT_EQ(syndrome(c, stab), syndrome(e, stab));
        EXPECT_LE(c.weight(), e.weight()) << e.to_string();
        failures += pauli::classify_residual(compose(e, inverse(c)), stab).kind == pauli::ResidualClass::LogicalError;
    }
    EXPECT_LT(failures, 200);
}

// Exact failure probability from all patterns of weight <= 2, with the
// remaining probability mass as slack.
TEST(Trials, SmallWindowMatchesWeightedEnumeration) {
    auto window = code::build_window(parent57(), 3, code::WindowPolicy::Truncated);
    const auto &stab = window.stab;
    const int L = stab.length();
    const double p = 0.02;
    qva::ErrorTrellis t(stab, 4);
    oracle::Gf2Span span;
    for (const auto &g : stab.generators()) span.insert(oracle::symplectic(g.to_string()));
    auto fails = [&](const PauliWindow &e) {
        auto c = qva::qva_decode(t, syndrome(e, stab)).correction;
        return !span.contains(oracle::symplectic(compose(e, inverse(c)).to_string()));
    };
    auto weight_prob = [&](int w) { return std::pow(p / 3, w) * std::pow(1 - p, L - w); };
    double exact = 0, covered = weight_prob(0);
    for (int a = 0; a < L; ++a) {
        for (int ka = 1; ka < 4; ++ka) {
            PauliWindow e(2, L);
            e.set(a, ka & 1, ka >> 1);
            covered += weight_prob(1);
            if (fails(e)) exact += weight_prob(1);
            for (int b = a + 1; b < L; ++b) {
                for (int kb = 1; kb < 4; ++kb) {
                    e.set(b, kb & 1, kb >> 1);
                    covered += weight_prob(2);
                    if (fails(e)) exact += weight_prob(2);
                }
                e.set(b, 0, 0);
            }
        }
    }
    const double slack = 1.0 - covered;
    auto r = run_trials(stab, 3, 4, {p, Model::Depolarizing, 2}, 20000, 2024);
    const double frac = double(r.logical_block_errors) / double(r.trials);
    auto ci = wilson(r.logical_block_errors, r.trials);
    EXPECT_LE(ci.lo, exact + slack) << "estimate " << frac;
    EXPECT_GE(ci.hi, exact) << "estimate " << frac;
}

}  // namespace
}  // namespace qcc::sim
