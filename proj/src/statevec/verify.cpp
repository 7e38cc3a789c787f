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

#include "statevec/verify.hpp"

#include <cmath>
#include <cstdio>

#include "statevec/circuits.hpp"

namespace qcc::statevec {

namespace {

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// All info strings of length T over Z_N, lexicographic.
std::vector<std::vector<Symbol>> all_infos(Symbol N, int T) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> k(T, 0);
    while (true) {
        out.push_back(k);
        int i = T - 1;
        while (i >= 0 && k[i] == N - 1) {
            k[i] = 0;
            --i;
        }
        if (i < 0) {
            return out;
        }
        ++k[i];
    }
}

}  // namespace

std::vector<Check> verify_eq1_suite(Symbol N, int T, double tol) {
    gf::Field field(N);
    if (T < 1) {
        fail(ErrorKind::InvalidArgument, "need at least one block");
    }
    gf::PolyMatrix g(N, 1, 2, {gf::Poly(N, {1, 0, 1}), gf::Poly(N, {1, 1, 1})});
    cc::ConvCode parent(g);
    auto form = code::codeword_form(parent);
    auto window = code::build_window(parent, T, code::WindowPolicy::Truncated);
    const auto &stab = window.stab;

    const auto infos = all_infos(N, T);
    std::vector<StateVector> gate, direct;
    gate.reserve(infos.size());
    direct.reserve(infos.size());
    double worst = 1.0;
    for (const auto &k : infos) {
        gate.push_back(encode_eq1(k, N));
        direct.push_back(codeword_state(form, k, T, code::WindowPolicy::Truncated));
        worst = std::min(worst, fidelity(gate.back(), direct.back()));
    }
    std::vector<Check> out;
    out.push_back({"encoder matches direct summation", worst >= 1.0 - tol, fmt("min fidelity %.12f", worst)});

    double overlap = 0.0;
    for (std::size_t a = 0; a < gate.size(); ++a) {
        for (std::size_t b = a + 1; b < gate.size(); ++b) {
            overlap = std::max(overlap, std::abs(inner(gate[a], gate[b])));
        }
    }
    out.push_back({"codewords are orthonormal", overlap <= tol, fmt("max overlap %.3e", overlap)});

    double stab_worst = 1.0;
    for (const auto &s : stab.generators()) {
        for (const auto &c : gate) {
            StateVector t = c;
            t.apply_pauli(s);
            stab_worst = std::min(stab_worst, std::abs(inner(c, t)));
        }
    }
    out.push_back({"stabilizer generators fix every codeword", stab_worst >= 1.0 - tol,
                   fmt("min |<c|S|c>| %.12f", stab_worst)});

    // X-bar_s shifts k_s by one; Z-bar_s multiplies by w^{k_s}.
    bool shift_ok = true;
    bool phase_ok = true;
    for (int s = 0; s < T; ++s) {
        for (std::size_t i = 0; i < infos.size(); ++i) {
            auto k = infos[i];
            k[s] = static_cast<Symbol>((k[s] + 1) % N);
            std::size_t j = 0;
            for (auto v : k) {
                j = j * N + v;
            }
            if (!verify_logical(gate[i], stab.logical_x()[s], gate[j], tol)) {
                shift_ok = false;
            }
            StateVector t = gate[i];
            t.apply_pauli(stab.logical_z()[s]);
            Complex want = omega_pow(N, infos[i][s]);
            if (std::abs(inner(gate[i], t) - want) > 1e-7) {
                phase_ok = false;
            }
        }
    }
    out.push_back({"logical X shifts one info symbol", shift_ok, ""});
    out.push_back({"logical Z applies the info phase", phase_ok, ""});

    bool det = true;
    bool rest = true;
    double min_prob = 1.0;
    for (std::size_t i = 0; i < infos.size(); ++i) {
        DecodeStep step = decode_step_eq1(gate[i], T);
        min_prob = std::min(min_prob, step.probability);
        if (step.k1 != infos[i][0] || step.ancilla != std::vector<Symbol>{0, 0, 0}) {
            det = false;
        }
        if (T >= 2) {
            std::vector<Symbol> tail(infos[i].begin() + 1, infos[i].end());
            if (fidelity(step.remainder, encode_eq1(tail, N)) < 1.0 - tol) {
                rest = false;
            }
        }
    }
    out.push_back({"decode step reads k1 deterministically", det && min_prob >= 1.0 - tol,
                   fmt("min probability %.12f", min_prob)});
    out.push_back({"decode step leaves the codeword of k2..kT", rest, T >= 2 ? "" : "no remaining blocks"});
    return out;
}

}  // namespace qcc::statevec
