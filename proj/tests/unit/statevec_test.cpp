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

#include "caps.hpp"
#include "oracles.hpp"
#include "statevec/circuits.hpp"
#include "statevec/verify.hpp"

namespace qcc::statevec {
namespace {

constexpr double kTol = 1e-9;

StateVector random_state(std::mt19937 &rng, Symbol N, int L) {
    StateVector s(N, L);
    std::normal_distribution<double> g;
    std::vector<Complex> a(s.size());
    double norm = 0;
    for (auto &v : a) {
        v = {g(rng), g(rng)};
        norm += std::norm(v);
    }
    for (auto &v : a) v /= std::sqrt(norm);
    return StateVector::from_amplitudes(N, L, a);
}

std::vector<Symbol> to_symbols(const std::vector<int> &k) { return {k.begin(), k.end()}; }

TEST(Gates, FourierOfZero) {
    StateVector s(2, 1);
    s.fourier(0);
    EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), kTol);
    EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), kTol);
}

TEST(Gates, AdditionPermutesBasis) {
    auto s = StateVector::basis(2, {1, 1});
    s.add(0, 1);
    EXPECT_NEAR(std::abs(s.amplitude(s.index_of({0, 1}))), 1.0, kTol);
}

TEST(Gates, FourierSquaredNegates) {
    for (Symbol N : {2u, 3u, 5u, 7u}) {
        for (Symbol x = 0; x < N; ++x) {
            auto s = StateVector::basis(N, {x});
            s.fourier(0);
            s.fourier(0);
            Symbol minus = (N - x) % N;
            EXPECT_NEAR(std::abs(s.amplitude(minus)), 1.0, kTol);
        }
    }
}

TEST(Gates, FourierMatchesDftMatrix) {
    std::mt19937 rng(3);
    const Symbol N = 5;
    auto s = random_state(rng, N, 1);
    auto t = s;
    t.fourier(0);
    for (Symbol y = 0; y < N; ++y) {
        Complex acc = 0;
        for (Symbol x = 0; x < N; ++x)
            acc += std::polar(1.0, 2 * std::numbers::pi * x * y / N) * s.amplitude(x) / std::sqrt(5.0);
        EXPECT_NEAR(std::abs(acc - t.amplitude(y)), 0.0, 1e-12);
    }
}

TEST(Gates, UnitarityAndInverses) {
    std::mt19937 rng(5);
    for (Symbol N : {2u, 3u}) {
        auto s = random_state(rng, N, 3);
        auto t = s;
        t.fourier(1);
        t.add(0, 2, 1);
        t.multiply(2, N - 1);
        t.phase2(0, 1, 1);
        EXPECT_NEAR(t.norm(), 1.0, kTol);
        t.phase2(0, 1, N - 1);
        t.multiply(2, N - 1);
        t.subtract(0, 2);
        t.inverse_fourier(1);
        EXPECT_NEAR(fidelity(s, t), 1.0, kTol);
    }
}

TEST(Gates, Validation) {
    StateVector s(2, 2);
    EXPECT_THROW(s.add(0, 0), Error);
    EXPECT_THROW(s.fourier(2), Error);
    EXPECT_THROW(s.multiply(0, 0), Error);
    EXPECT_THROW(StateVector::basis(2, {2}), Error);
}

TEST(Gates, CapIsEnforced) {
    auto saved = caps();
    set_caps({saved.trellis_states, saved.error_trellis_states, 8});
    EXPECT_THROW(StateVector(2, 4), Error);
    EXPECT_NO_THROW(StateVector(2, 3));
    set_caps(saved);
}

TEST(Pauli, XShiftsAndZPhases) {
    auto s = StateVector::basis(3, {1});
    s.apply_pauli(pauli::PauliWindow(3, {1}, {0}));
    EXPECT_NEAR(std::abs(s.amplitude(2)), 1.0, kTol);
    s.apply_pauli(pauli::PauliWindow(3, {0}, {1}));
    EXPECT_NEAR(std::arg(s.amplitude(2)), 2 * 2 * std::numbers::pi / 3 - 2 * std::numbers::pi, 1e-9);
}

class Encoder : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Encoder, MatchesClosedForm) {
    auto [N, T] = GetParam();
    std::mt19937 rng(N * 10 + T);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> k(T);
        for (auto &v : k) v = rng() % N;
        auto gate = encode_eq1(to_symbols(k), N);
        auto want = oracle::closed_form_codeword(N, k);
        EXPECT_GE(oracle::fidelity(want, gate.amplitudes()), 1 - kTol);
    }
}

INSTANTIATE_TEST_SUITE_P(Sizes, Encoder,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 1},
                                           std::pair{3, 2}, std::pair{3, 3}));

TEST(Encoder, ZeroCodewordIsFixedByGenerators) {
    gf::PolyMatrix g(2, 1, 2, {gf::Poly(2, {1, 0, 1}), gf::Poly(2, {1, 1, 1})});
    auto w = code::build_window(cc::ConvCode(g), 3, code::WindowPolicy::Truncated);
    auto zero = encode_eq1({0, 0, 0}, 2);
    for (const auto &gen : w.stab.generators()) {
        auto t = zero;
        t.apply_pauli(gen);
        EXPECT_NEAR(std::abs(inner(zero, t) - Complex(1.0, 0.0)), 0.0, kTol) << gen.to_string();
    }
}

TEST(Encoder, DirectSummationAgrees) {
    gf::PolyMatrix g(3, 1, 2, {gf::Poly(3, {1, 0, 1}), gf::Poly(3, {1, 1, 1})});
    auto form = code::codeword_form(cc::ConvCode(g));
    auto s = codeword_state(form, {2, 1}, 2, code::WindowPolicy::Truncated);
    EXPECT_GE(oracle::fidelity(oracle::closed_form_codeword(3, {2, 1}), s.amplitudes()), 1 - kTol);
}

TEST(DecodeStep, ReadsFirstSymbol) {
    auto step = decode_step_eq1(encode_eq1({1, 0}, 2), 2);
    EXPECT_EQ(step.k1, 1u);
    EXPECT_NEAR(step.probability, 1.0, kTol);
    EXPECT_EQ(step.ancilla, (std::vector<Symbol>{0, 0, 0}));

    auto zero = decode_step_eq1(encode_eq1({0, 0}, 2), 2);
    EXPECT_EQ(zero.k1, 0u);
}

TEST(DecodeStep, RemainderIsShorterCodeword) {
    for (int N : {2, 3}) {
        std::vector<int> k = {N - 1, 1, 0};
        auto step = decode_step_eq1(encode_eq1(to_symbols(k), N), 3);
        EXPECT_EQ(step.k1, static_cast<Symbol>(N - 1));
        EXPECT_GE(oracle::fidelity(oracle::closed_form_codeword(N, {1, 0}), step.remainder.amplitudes()), 1 - kTol);
    }
}

TEST(DecodeStep, RejectsNonCodeword) {
    StateVector s(2, 8);
    s.fourier(3);
    EXPECT_THROW(decode_step_eq1(s, 2), Error);
}

TEST(Logical, ShiftAndPhase) {
    gf::PolyMatrix g(2, 1, 2, {gf::Poly(2, {1, 0, 1}), gf::Poly(2, {1, 1, 1})});
    auto w = code::build_window(cc::ConvCode(g), 3, code::WindowPolicy::Truncated);
    auto zero = encode_eq1({0, 0, 0}, 2);
    auto one = encode_eq1({1, 0, 0}, 2);
    EXPECT_TRUE(verify_logical(zero, w.stab.logical_x()[0], one));
    EXPECT_TRUE(verify_logical(zero, pauli::PauliWindow(2, 12), zero));

    // Relative phase through a superposition of the two codewords.
    std::vector<Complex> plus(zero.size()), minus(zero.size());
    for (std::size_t i = 0; i < zero.size(); ++i) {
        plus[i] = (zero.amplitude(i) + one.amplitude(i)) / std::sqrt(2.0);
        minus[i] = (zero.amplitude(i) - one.amplitude(i)) / std::sqrt(2.0);
    }
    auto sp = StateVector::from_amplitudes(2, 12, plus);
    auto sm = StateVector::from_amplitudes(2, 12, minus);
    EXPECT_TRUE(verify_logical(sp, w.stab.logical_z()[0], sm));
    // The eight-register phase pattern acts on k1 when it starts at the
    // second block; at the first block it is a stabilizer.
    EXPECT_TRUE(verify_logical(sp, pauli::PauliWindow::from_string("IIIIXXXIXIXX"), sm));
    EXPECT_TRUE(verify_logical(sp, pauli::PauliWindow::from_string("XXXIXIXXIIII"), sp));
}

TEST(Suite, AllChecksPassAtSmallSizes) {
    for (auto &c : verify_eq1_suite(2, 2)) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

}  // namespace
}  // namespace qcc::statevec
