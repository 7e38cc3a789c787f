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

#include "statevec/circuits.hpp"

#include <cmath>
#include <string>

namespace qcc::statevec {

namespace {

// Register of r_{j,i}: j in 1..4 within block i in 1..T.
int reg(int j, int i) { return (i - 1) * 4 + (j - 1); }

}  // namespace

std::vector<Elementary> encode_eq1_gates(Symbol N, int T) {
    if (T < 1) {
        fail(ErrorKind::InvalidArgument, "encode_eq1 needs at least one block");
    }
    const Symbol minus = N - 1;
    std::vector<Elementary> g;
    auto add = [&](int t, int c, Symbol a = 1) { g.push_back({OpKind::Add, t, c, a}); };

    for (int i = 1; i <= T; ++i) {
        if (i >= 2) {
            add(reg(2, i), reg(1, i - 1));
        }
        if (i >= 3) {
            add(reg(3, i), reg(1, i - 2));
        }
    }
    for (int i = 1; i <= T; ++i) {
        add(reg(1, i), reg(3, i));
        add(reg(2, i), reg(1, i));
    }
    for (int i = T; i >= 3; --i) {
        add(reg(3, i), reg(1, i - 2), minus);
        add(reg(3, i), reg(3, i - 2));
    }
    for (int i = 1; i <= T; ++i) {
        g.push_back({OpKind::Fourier, reg(1, i)});
        g.push_back({OpKind::Fourier, reg(2, i)});
    }
    for (int i = 1; i <= T; ++i) {
        add(reg(3, i), reg(2, i));
        add(reg(4, i), reg(2, i));
        add(reg(4, i), reg(1, i));
        if (i >= 2) {
            add(reg(3, i), reg(2, i - 1));
            add(reg(4, i), reg(2, i - 1));
        }
    }
    for (int i = 1; i <= T; ++i) {
        add(reg(2, i), reg(3, i), minus);
        g.push_back({OpKind::Multiply, reg(2, i), -1, minus});
        add(reg(2, i), reg(1, i));
        if (i >= 2) {
            add(reg(2, i), reg(1, i - 1));
        }
    }
    for (int i = T; i >= 2; --i) {
        add(reg(1, i), reg(1, i - 1));
    }
    return g;
}

StateVector encode_eq1(const std::vector<Symbol> &info, Symbol N) {
    const int T = static_cast<int>(info.size());
    std::vector<Symbol> digits(4 * T, 0);
    for (int i = 1; i <= T; ++i) {
        digits[reg(1, i)] = info[i - 1];
    }
    StateVector s = StateVector::basis(N, digits);
    for (const auto &op : encode_eq1_gates(N, T)) {
        s.apply(op);
    }
    return s;
}

DecodeStep decode_step_eq1(const StateVector &state, int T) {
    if (T < 1 || state.registers() != 4 * T) {
        fail(ErrorKind::InvalidArgument, "state does not hold 4*T registers");
    }
    if (std::abs(state.norm() - 1.0) > 1e-9) {
        fail(ErrorKind::InvalidArgument, "input state is not normalized");
    }
    const Symbol N = state.N();
    const Symbol minus = N - 1;
    StateVector s = state;
    s.subtract(reg(2, 1), reg(1, 1));
    if (T >= 2) {
        s.subtract(reg(1, 2), reg(1, 1));
        s.subtract(reg(2, 2), reg(1, 1));
        s.subtract(reg(2, 2), reg(3, 1));
        s.subtract(reg(3, 2), reg(3, 1));
        s.subtract(reg(4, 2), reg(3, 1));
    }
    s.subtract(reg(4, 1), reg(1, 1));
    s.subtract(reg(4, 1), reg(3, 1));
    s.inverse_fourier(reg(1, 1));
    s.phase2(reg(1, 1), reg(3, 1), minus);
    if (T >= 3) {
        s.phase2(reg(1, 1), reg(4, 3), minus);
    } else if (T == 2) {
        s.phase2(reg(1, 1), reg(3, 2), minus);
    }
    s.fourier(reg(3, 1));

    // The first block must now be a basis state.
    std::vector<Symbol> head(4, 0);
    double prob = 1.0;
    for (int j = 0; j < 4; ++j) {
        auto m = s.marginal(j);
        Symbol best = 0;
        for (Symbol v = 1; v < N; ++v) {
            if (m[v] > m[best]) {
                best = v;
            }
        }
        if (m[best] < 1.0 - 1e-9) {
            fail(ErrorKind::InvalidArgument, "input is not an encoded state: register " + std::to_string(j) +
                                                 " is not deterministic after decoding");
        }
        head[j] = best;
        if (j == 0) {
            prob = m[best];
        }
    }
    const int rest = 4 * (T - 1);
    std::vector<Complex> amps(s.size() / (N * N * N * N));
    std::size_t offset = 0;
    for (int j = 0; j < 4; ++j) {
        offset = offset * N + head[j];
    }
    offset *= amps.size();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = s.amplitude(offset + i);
    }
    DecodeStep out{head[0], prob, {head[1], head[2], head[3]},
                   StateVector::from_amplitudes(N, rest, std::move(amps))};
    return out;
}

StateVector codeword_state(const code::CodewordForm &form, const std::vector<Symbol> &info, int info_blocks,
                           code::WindowPolicy policy) {
    cc::ConvCode inner(form.a_coeffs);
    cc::ConvCode outer(form.b_coeffs);
    const bool term = policy == code::WindowPolicy::Terminated;
    gf::Matrix a = code::encoder_matrix(inner, info_blocks, info_blocks + (term ? inner.m() : 0));
    if (static_cast<int>(info.size()) != a.rows()) {
        fail(ErrorKind::DimensionMismatch, "info length does not match the window");
    }
    const int stream = a.cols();
    const int outer_in = (stream + outer.k() - 1) / outer.k();
    gf::Matrix b_full = code::encoder_matrix(outer, outer_in, outer_in + (term ? outer.m() : 0));
    const int len = b_full.cols();
    const Symbol N = inner.p();

    gf::Vec x(info.begin(), info.end());
    gf::Vec c = a.left_mul(x);
    StateVector s(N, len);
    std::vector<Complex> amps(s.size(), Complex(0.0, 0.0));
    gf::Field f(N);
    gf::Vec y(stream, 0);
    gf::Vec regs(len, 0);
    while (true) {
        std::int64_t e = 0;
        for (int t = 0; t < stream; ++t) {
            e += static_cast<std::int64_t>(c[t]) * y[t];
        }
        std::fill(regs.begin(), regs.end(), 0);
        for (int t = 0; t < stream; ++t) {
            if (!y[t]) {
                continue;
            }
            for (int r = 0; r < len; ++r) {
                regs[r] = static_cast<std::uint8_t>(f.add(regs[r], f.mul(y[t], b_full(t, r))));
            }
        }
        std::size_t idx = 0;
        for (int r = 0; r < len; ++r) {
            idx = idx * N + regs[r];
        }
        amps[idx] += omega_pow(N, e);
        int t = stream - 1;
        while (t >= 0 && y[t] == N - 1) {
            y[t] = 0;
            --t;
        }
        if (t < 0) {
            break;
        }
        ++y[t];
    }
    double norm = 0;
    for (const auto &v : amps) {
        norm += std::norm(v);
    }
    norm = std::sqrt(norm);
    for (auto &v : amps) {
        v /= norm;
    }
    return StateVector::from_amplitudes(N, len, std::move(amps));
}

}  // namespace qcc::statevec
