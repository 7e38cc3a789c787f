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

#include "statevec/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "caps.hpp"

namespace qcc::statevec {

Complex omega_pow(Symbol N, std::int64_t e) {
    std::int64_t r = e % static_cast<std::int64_t>(N);
    if (r < 0) {
        r += N;
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(N);
    return {std::cos(angle), std::sin(angle)};
}

StateVector::StateVector(Symbol N, int registers) : N_(gf::Field(N).p()), L_(registers) {
    if (registers < 0) {
        fail(ErrorKind::InvalidArgument, "negative register count");
    }
    const std::uint64_t cap = caps().statevec_entries;
    std::uint64_t size = 1;
    strides_.assign(registers, 1);
    for (int j = registers - 1; j >= 0; --j) {
        strides_[j] = size;
        size *= N;
        if (size > cap) {
            fail(ErrorKind::CapacityExceeded,
                 "state of " + std::to_string(registers) + " registers exceeds the cap of " + std::to_string(cap));
        }
    }
    amp_.assign(size, Complex(0.0, 0.0));
    amp_[0] = 1.0;
}

StateVector StateVector::basis(Symbol N, const std::vector<Symbol> &digits) {
    StateVector s(N, static_cast<int>(digits.size()));
    s.amp_[0] = 0.0;
    s.amp_[s.index_of(digits)] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(Symbol N, int registers, std::vector<Complex> amps) {
    StateVector s(N, registers);
    if (amps.size() != s.amp_.size()) {
        fail(ErrorKind::DimensionMismatch, "amplitude count does not match N^L");
    }
    s.amp_ = std::move(amps);
    return s;
}

std::size_t StateVector::index_of(const std::vector<Symbol> &digits) const {
    if (static_cast<int>(digits.size()) != L_) {
        fail(ErrorKind::DimensionMismatch, "digit count does not match register count");
    }
    std::size_t idx = 0;
    for (int j = 0; j < L_; ++j) {
        if (digits[j] >= N_) {
            fail(ErrorKind::InvalidArgument, "basis digit out of range");
        }
        idx += digits[j] * strides_[j];
    }
    return idx;
}

Symbol StateVector::digit(std::size_t index, int reg) const noexcept {
    return static_cast<Symbol>((index / strides_[reg]) % N_);
}

void StateVector::check_reg(int reg) const {
    if (reg < 0 || reg >= L_) {
        fail(ErrorKind::InvalidArgument, "register index " + std::to_string(reg) + " out of range");
    }
}

void StateVector::apply(const Elementary &op) {
    check_reg(op.target);
    const Symbol a = op.a % N_;
    const std::size_t st = stride(op.target);
    switch (op.kind) {
        case OpKind::AddConstant:
        case OpKind::Add:
        case OpKind::Multiply: {
            if (op.kind == OpKind::Add) {
                check_reg(op.control);
                if (op.control == op.target) {
                    fail(ErrorKind::InvalidArgument, "addition needs distinct registers");
                }
            }
            if (op.kind == OpKind::Multiply && a == 0) {
                fail(ErrorKind::InvalidArgument, "multiplier must be invertible");
            }
            // Permutation of basis states.
            std::vector<Complex> out(amp_.size(), Complex(0.0, 0.0));
            for (std::size_t i = 0; i < amp_.size(); ++i) {
                if (amp_[i] == Complex(0.0, 0.0)) {
                    continue;
                }
                const Symbol x = digit(i, op.target);
                Symbol y;
                if (op.kind == OpKind::AddConstant) {
                    y = (x + a) % N_;
                } else if (op.kind == OpKind::Add) {
                    y = (x + a * digit(i, op.control)) % N_;
                } else {
                    y = (x * a) % N_;
                }
                out[i - x * st + y * st] = amp_[i];
            }
            amp_.swap(out);
            break;
        }
        case OpKind::Fourier:
        case OpKind::InverseFourier: {
            const int sign = op.kind == OpKind::Fourier ? 1 : -1;
            const double norm = 1.0 / std::sqrt(static_cast<double>(N_));
            std::vector<Complex> w(N_);
            for (Symbol e = 0; e < N_; ++e) {
                w[e] = omega_pow(N_, sign * static_cast<std::int64_t>(e));
            }
            std::vector<Complex> buf(N_);
            for (std::size_t i = 0; i < amp_.size(); ++i) {
                if (digit(i, op.target) != 0) {
                    continue;
                }
                for (Symbol y = 0; y < N_; ++y) {
                    Complex acc(0.0, 0.0);
                    for (Symbol x = 0; x < N_; ++x) {
                        acc += w[(x * y) % N_] * amp_[i + x * st];
                    }
                    buf[y] = acc * norm;
                }
                for (Symbol y = 0; y < N_; ++y) {
                    amp_[i + y * st] = buf[y];
                }
            }
            break;
        }
        case OpKind::Phase: {
            for (std::size_t i = 0; i < amp_.size(); ++i) {
                amp_[i] *= omega_pow(N_, static_cast<std::int64_t>(a) * digit(i, op.target));
            }
            break;
        }
        case OpKind::Phase2: {
            check_reg(op.control);
            for (std::size_t i = 0; i < amp_.size(); ++i) {
                amp_[i] *= omega_pow(N_, static_cast<std::int64_t>(a) * digit(i, op.target) * digit(i, op.control));
            }
            break;
        }
    }
}

void StateVector::apply_pauli(const pauli::PauliWindow &op) {
    if (op.p() != N_ || op.length() != L_) {
        fail(ErrorKind::DimensionMismatch, "Pauli operator does not match the state");
    }
    // tau^phase X^x Z^z: Z acts first.
    for (int j = 0; j < L_; ++j) {
        if (op.z(j)) {
            phase(j, op.z(j));
        }
        if (op.x(j)) {
            add_constant(j, op.x(j));
        }
    }
    if (op.phase_exp()) {
        const double angle = std::numbers::pi * op.phase_exp() / static_cast<double>(N_);
        const Complex t(std::cos(angle), std::sin(angle));
        for (auto &v : amp_) {
            v *= t;
        }
    }
}

double StateVector::norm() const noexcept {
    double s = 0;
    for (const auto &v : amp_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

std::vector<double> StateVector::marginal(int reg) const {
    check_reg(reg);
    std::vector<double> prob(N_, 0.0);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        prob[digit(i, reg)] += std::norm(amp_[i]);
    }
    return prob;
}

std::vector<StateVector::Entry> StateVector::nonzero_entries(double threshold) const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (std::abs(amp_[i]) > threshold) {
            out.push_back({i, amp_[i].real(), amp_[i].imag()});
        }
    }
    return out;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.N() != b.N() || a.registers() != b.registers()) {
        fail(ErrorKind::DimensionMismatch, "states of different shape");
    }
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) { return std::norm(inner(a, b)); }

bool verify_logical(const StateVector &codeword, const pauli::PauliWindow &op, const StateVector &expected,
                    double tol) {
    StateVector out = codeword;
    out.apply_pauli(op);
    return fidelity(out, expected) >= 1.0 - tol;
}

}  // namespace qcc::statevec
