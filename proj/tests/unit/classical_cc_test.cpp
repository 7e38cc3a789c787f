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
#include "cc/trellis.hpp"
#include "oracles.hpp"

namespace qcc::cc {
namespace {

using qcc::caps;
using qcc::set_all_caps;
using qcc::set_caps;

ConvCode code_of(std::vector<std::vector<Symbol>> taps, Symbol p = 2) {
    std::vector<gf::Poly> e;
    for (auto &t : taps) e.emplace_back(p, t);
    return ConvCode(gf::PolyMatrix(p, 1, static_cast<int>(e.size()), e));
}

const std::vector<std::vector<int>> kEq1Taps = {{1, 0, 1}, {1, 1, 1}};

TEST(ConvCode, Parameters) {
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    EXPECT_EQ(c.k(), 1);
    EXPECT_EQ(c.n(), 2);
    EXPECT_EQ(c.m(), 2);
    EXPECT_EQ(c.vda_window(), 3);
}

TEST(Encode, KnownStreams) {
    ConvCode good = code_of({{1, 0, 1}, {1, 1, 1}});
    EXPECT_EQ(encode_stream(good, {1, 0, 0, 0}, false), (Symbols{1, 1, 0, 1, 1, 1, 0, 0}));
    ConvCode bad = code_of({{1, 1}, {1, 0, 1}});
    EXPECT_EQ(encode_stream(bad, {1, 1, 1}, false), (Symbols{1, 1, 0, 1, 0, 0}));
    EXPECT_EQ(encode_stream(good, {0, 0, 0}, true), Symbols(10, 0));
}

TEST(Encode, MatchesDirectConvolution) {
    std::mt19937 rng(2);
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    for (int t = 0; t < 50; ++t) {
        Symbols info(1 + rng() % 10);
        for (auto &v : info) v = rng() % 2;
        for (bool term : {false, true}) {
            EXPECT_EQ(encode_stream(c, info, term), oracle::conv_encode(kEq1Taps, info, 2, term));
        }
    }
}

TEST(Encode, RejectsOutOfRangeInput) {
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    EXPECT_THROW(encode_stream(c, {2}, false), Error);
}

TEST(Trellis, StateCounts) {
    EXPECT_EQ(Trellis(code_of({{1, 0, 1}, {1, 1, 1}})).state_count(), 4u);
    EXPECT_EQ(Trellis(code_of({{1, 0, 1}, {1, 1, 1}})).input_count(), 2u);
    EXPECT_EQ(Trellis(code_of({{1}, {1}})).state_count(), 1u);
    EXPECT_EQ(Trellis(code_of({{1, 1}, {1, 0, 1}})).state_count(), 4u);
    EXPECT_EQ(Trellis(code_of({{1, 2, 1}, {1, 1}}, 3)).state_count(), 9u);
}

TEST(Trellis, CapIsEnforced) {
    auto saved = caps();
    set_all_caps(2);
    try {
        Trellis t(code_of({{1, 0, 1}, {1, 1, 1}}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapacityExceeded);
    }
    set_caps(saved);
}

TEST(Viterbi, ExactCodewordDecodesWithZeroMetric) {
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    Trellis t(c);
    Symbols info{1, 0, 1, 1, 0, 1};
    auto path = viterbi_decode(t, encode_stream(c, info, true));
    EXPECT_EQ(path.info, info);
    EXPECT_EQ(path.metric, 0);
}

TEST(Viterbi, SingleFlipRecovered) {
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    Trellis t(c);
    Symbols info{1, 0, 0, 0};
    auto rx = encode_stream(c, info, true);
    for (std::size_t i = 0; i < rx.size(); ++i) {
        auto bad = rx;
        bad[i] ^= 1;
        auto path = viterbi_decode(t, bad);
        EXPECT_EQ(path.info, info) << "flip at " << i;
        EXPECT_EQ(path.metric, 1);
    }
}

TEST(Viterbi, MetricMatchesExhaustiveSearch) {
    std::mt19937 rng(17);
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    Trellis t(c);
    for (int trial = 0; trial < 60; ++trial) {
        const int T = 1 + trial % 8;
        Symbols rx(2 * (T + 2));
        for (auto &v : rx) v = rng() % 2;
        auto path = viterbi_decode(t, rx);
        EXPECT_EQ(path.metric, oracle::exhaustive_min_distance(kEq1Taps, rx, T, 2, true));
        // The reported metric is the distance of the returned path.
        auto re = oracle::conv_encode(kEq1Taps, path.info, 2, true);
        int d = 0;
        for (std::size_t i = 0; i < rx.size(); ++i) d += re[i] != rx[i];
        EXPECT_EQ(d, path.metric);
    }
}

TEST(Viterbi, UnterminatedStreams) {
    std::mt19937 rng(19);
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    Trellis t(c);
    for (int trial = 0; trial < 40; ++trial) {
        const int T = 1 + trial % 8;
        Symbols rx(2 * T);
        for (auto &v : rx) v = rng() % 2;
        auto path = viterbi_decode(t, rx, {false, 0});
        EXPECT_EQ(path.info.size(), static_cast<std::size_t>(T));
        EXPECT_EQ(path.metric, oracle::exhaustive_min_distance(kEq1Taps, rx, T, 2, false));
    }
}

TEST(Viterbi, TernaryCodeMatchesExhaustive) {
    std::mt19937 rng(23);
    const std::vector<std::vector<int>> taps = {{1, 2}, {1, 1, 1}};
    ConvCode c = code_of({{1, 2}, {1, 1, 1}}, 3);
    Trellis t(c);
    for (int trial = 0; trial < 30; ++trial) {
        const int T = 1 + trial % 5;
        Symbols rx(2 * (T + 2));
        for (auto &v : rx) v = rng() % 3;
        EXPECT_EQ(viterbi_decode(t, rx).metric, oracle::exhaustive_min_distance(taps, rx, T, 3, true));
    }
}

TEST(Viterbi, StreamingAgreesOnLightErrors) {
    std::mt19937 rng(29);
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    Trellis t(c);
    for (int trial = 0; trial < 30; ++trial) {
        Symbols info(40);
        for (auto &v : info) v = rng() % 2;
        auto rx = encode_stream(c, info, true);
        rx[rng() % rx.size()] ^= 1;
        auto path = viterbi_decode(t, rx, {true, -1});
        EXPECT_EQ(path.info, info);
    }
}

TEST(Viterbi, RejectsMalformedLength) {
    ConvCode c = code_of({{1, 0, 1}, {1, 1, 1}});
    Trellis t(c);
    EXPECT_THROW(viterbi_decode(t, Symbols{1, 0, 1}), Error);
}

}  // namespace
}  // namespace qcc::cc
