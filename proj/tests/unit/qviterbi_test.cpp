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

#include <random>

#include <gtest/gtest.h>

#include "caps.hpp"
#include "oracles.hpp"
#include "qcc/qcc_code.hpp"
#include "qva/error_trellis.hpp"

namespace qcc::qva {
namespace {

using gf::Poly;
using gf::PolyMatrix;

cc::ConvCode parent57(gf::Symbol p = 2) {
    return cc::ConvCode(PolyMatrix(p, 1, 2, {Poly(p, {1, 0, 1}), Poly(p, {1, 1, 1})}));
}

std::vector<std::string> gen_strings(const StabilizerWindow &s) {
    std::vector<std::string> out;
    for (const auto &g : s.generators()) out.push_back(g.to_string());
    return out;
}

PauliWindow random_error(std::mt19937 &rng, gf::Symbol p, int L, int w) {
    PauliWindow e(p, L);
    for (int i = 0; i < w; ++i) {
        int j = rng() % L;
        gf::Symbol x = rng() % p, z = rng() % p;
        if (!x && !z) z = 1;
        e.set(j, x, z);
    }
    return e;
}

TEST(Qva, ZeroSyndromeGivesIdentity) {
    auto code = code::build_qcc(parent57(), 2, 3);
    ErrorTrellis t(code.stab(), 4);
    auto r = qva_decode(t, Vec(code.stab().generators().size(), 0));
    EXPECT_TRUE(r.correction.is_identity());
    EXPECT_EQ(r.cost, 0);
}

TEST(Qva, InteriorSingleErrorsAreCorrected) {
    auto code = code::build_qcc(parent57(), 2, 3);
    const auto &stab = code.stab();
    ErrorTrellis t(stab, 4);
    oracle::Gf2Span span;
    for (const auto &g : gen_strings(stab)) span.insert(oracle::symplectic(g));
    for (int r = 4; r < 20; ++r) {
        for (auto [x, z] : {std::pair{1u, 0u}, {0u, 1u}, {1u, 1u}}) {
            auto e = PauliWindow::single(2, 24, r, x, z);
            auto path = qva_decode(t, syndrome(e, stab));
            EXPECT_EQ(path.cost, 1);
            auto res = compose(e, inverse(path.correction));
            EXPECT_TRUE(span.contains(oracle::symplectic(res.to_string()))) << "register " << r;
        }
    }
}

TEST(Qva, WeightMatchesBruteForceOn12Registers) {
    auto window = code::build_window(parent57(), 3, code::WindowPolicy::Truncated);
    const auto &stab = window.stab;
    ASSERT_EQ(stab.length(), 12);
    auto gens = gen_strings(stab);
    auto table = oracle::min_weight_table(gens);
    ErrorTrellis t(stab, 4);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto e = random_error(rng, 2, 12, 1 + trial % 4);
        auto syn = syndrome(e, stab);
        auto path = qva_decode(t, syn);
        EXPECT_EQ(syndrome(path.correction, stab), syn);
        EXPECT_EQ(path.cost, table[oracle::syndrome_bits(e.to_string(), gens)]);
        EXPECT_EQ(path.cost, path.correction.weight());
    }
}

TEST(Qva, TiesGoToSmallestInterleavedVector) {
    auto window = code::build_window(parent57(), 2, code::WindowPolicy::Truncated);
    const auto &stab = window.stab;
    const int L = stab.length();
    ErrorTrellis t(stab, 4);
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        auto e = random_error(rng, 2, L, 2);
        auto syn = syndrome(e, stab);
        // Scan every Pauli in interleaved lexicographic order; the first of
        // minimum weight wins.
        int best_w = L + 1;
        PauliWindow best(2, L);
        for (std::uint32_t v = 0; v < (1u << (2 * L)); ++v) {
            PauliWindow c(2, L);
            for (int j = 0; j < L; ++j) {
                c.set(j, (v >> (2 * L - 1 - 2 * j)) & 1, (v >> (2 * L - 2 - 2 * j)) & 1);
            }
            if (c.weight() < best_w && syndrome(c, stab) == syn) {
                best_w = c.weight();
                best = c;
            }
        }
        EXPECT_EQ(qva_decode(t, syn).correction.to_string(), best.to_string());
    }
}

// Rank of the left parts of straddling generators, computed independently.
TEST(ErrorTrellis, StateCountsMatchRankOfStraddlingGenerators) {
    auto code = code::build_qcc(parent57(), 2, 3);
    ErrorTrellis t(code.stab(), 4);
    auto gens = gen_strings(code.stab());
    const int L = code.length();
    for (int cut = 0; cut <= L; ++cut) {
        oracle::Gf2Span s;
        for (const auto &g : gens) {
            auto first = g.find_first_not_of('I'), last = g.find_last_not_of('I');
            if (static_cast<int>(first) < cut && static_cast<int>(last) >= cut) {
                std::string left = g.substr(0, cut) + std::string(L - cut, 'I');
                s.insert(oracle::symplectic(left));
            }
        }
        EXPECT_EQ(t.state_count(cut), 1ull << s.dimension()) << "cut " << cut;
    }
    EXPECT_EQ(t.state_count(0), 1u);
    EXPECT_EQ(t.state_count(L), 1u);
}

TEST(ErrorTrellis, BlockLocalCodeHasOneStateAtBlockBoundaries) {
    cc::ConvCode rep(PolyMatrix(2, 1, 3, {Poly(2, {1}), Poly(2, {1}), Poly(2, {1})}));
    auto code = code::build_qcc(rep, 2, 3);
    ErrorTrellis t(code.stab(), code.period());
    for (auto c : t.block_state_count()) EXPECT_EQ(c, 1u);
    EXPECT_EQ(t.branches_per_register(), 4);
}

TEST(ErrorTrellis, CapIsEnforced) {
    auto code = code::build_qcc(parent57(), 2, 3);
    auto saved = caps();
    set_caps({saved.trellis_states, 8, saved.statevec_entries});
    try {
        ErrorTrellis t(code.stab(), 4);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapacityExceeded);
    }
    set_caps(saved);
}

TEST(Qva, QutritSingleErrors) {
    auto code = code::build_qcc(parent57(3), 3, 4);
    const auto &stab = code.stab();
    ErrorTrellis t(stab, code.period());
    int corrected = 0, total = 0;
    for (int r = 4; r < code.length() - 4; ++r) {
        for (gf::Symbol x = 0; x < 3; ++x) {
            for (gf::Symbol z = 0; z < 3; ++z) {
                if (!x && !z) continue;
                auto e = PauliWindow::single(3, code.length(), r, x, z);
                auto path = qva_decode(t, syndrome(e, stab));
                EXPECT_EQ(path.cost, 1);
                auto cls = pauli::classify_residual(compose(e, inverse(path.correction)), stab);
                corrected += cls.kind != pauli::ResidualClass::LogicalError;
                ++total;
            }
        }
    }
    EXPECT_EQ(corrected, total);
}

TEST(Qva, RejectsWrongSyndromeLength) {
    auto code = code::build_qcc(parent57(), 2, 3);
    ErrorTrellis t(code.stab(), 4);
    EXPECT_THROW(qva_decode(t, Vec(3, 0)), Error);
}

TEST(Streaming, AllZeroStream) {
    auto code = code::build_qcc(parent57(), 2, 4);
    ErrorTrellis t(code.stab(), 4);
    auto segs = streaming_decode(t, Vec(code.stab().generators().size(), 0), code.min_traceback(),
                                 code.support_bound());
    auto c = assemble(segs, 2, code.length(), 4);
    EXPECT_TRUE(c.is_identity());
}

TEST(Streaming, IsolatedErrorsMatchWindowDecoder) {
    auto code = code::build_qcc(parent57(), 2, 5);
    const auto &stab = code.stab();
    ErrorTrellis t(stab, 4);
    for (int r = 0; r < code.length(); ++r) {
        for (auto [x, z] : {std::pair{1u, 0u}, {0u, 1u}, {1u, 1u}}) {
            auto e = PauliWindow::single(2, code.length(), r, x, z);
            auto syn = syndrome(e, stab);
            auto full = qva_decode(t, syn).correction;
            auto segs = streaming_decode(t, syn, code.min_traceback(), code.support_bound());
            EXPECT_EQ(assemble(segs, 2, code.length(), 4), full) << "register " << r;
        }
    }
}

TEST(Streaming, HeavyBurstStillTerminates) {
    auto code = code::build_qcc(parent57(), 2, 5);
    const auto &stab = code.stab();
    ErrorTrellis t(stab, 4);
    PauliWindow e(2, code.length());
    for (int r = 8; r < 14; ++r) e.set(r, 1, 1);
    auto syn = syndrome(e, stab);
    auto segs = streaming_decode(t, syn, code.min_traceback(), code.support_bound());
    EXPECT_EQ(static_cast<int>(segs.size()), code.length() / 4);
    auto c = assemble(segs, 2, code.length(), 4);
    auto res = compose(e, inverse(c));
    if (stab.in_normalizer(res)) {
        EXPECT_NO_THROW(pauli::classify_residual(res, stab));
    }
}

TEST(Streaming, ShortTracebackRejected) {
    auto code = code::build_qcc(parent57(), 2, 4);
    ErrorTrellis t(code.stab(), 4);
    try {
        streaming_decode(t, Vec(code.stab().generators().size(), 0), code.min_traceback() - 1,
                         code.support_bound());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
}

// One flipped syndrome entry moves the correction by a bounded amount.
TEST(Qva, SyndromePerturbationStaysLocal) {
    auto code = code::build_qcc(parent57(), 2, 6);
    const auto &stab = code.stab();
    ErrorTrellis t(stab, 4);
    std::mt19937 rng(41);
    int worst = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto e = random_error(rng, 2, code.length(), 1 + trial % 2);
        auto syn = syndrome(e, stab);
        auto base = qva_decode(t, syn).correction;
        for (std::size_t g = 0; g < syn.size(); ++g) {
            auto s2 = syn;
            s2[g] ^= 1;
            auto other = qva_decode(t, s2).correction;
            int diff = 0;
            for (int j = 0; j < code.length(); ++j) diff += base.x(j) != other.x(j) || base.z(j) != other.z(j);
            worst = std::max(worst, diff);
        }
    }
    EXPECT_LE(worst, code.support_bound());
}

}  // namespace
}  // namespace qcc::qva
