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

#ifndef QCC_STATEVEC_STATE_VECTOR_HPP
#define QCC_STATEVEC_STATE_VECTOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "pauli/pauli_window.hpp"

namespace qcc::statevec {

using Complex = std::complex<double>;
using gf::Symbol;

enum class OpKind {
    AddConstant,     // |x> -> |x + a>
    Add,             // |t, c> -> |t + a c, c>
    Multiply,        // |x> -> |a x>, a != 0
    Fourier,         // |x> -> sum_y w^{xy} |y> / sqrt(N)
    InverseFourier,  // |x> -> sum_y w^{-xy} |y> / sqrt(N)
    Phase,           // |x> -> w^{a x} |x>
    Phase2,          // |x, y> -> w^{a x y} |x, y>
};

struct Elementary {
    OpKind kind;
    int target;
    int control = -1;  // second register for Add and Phase2
    Symbol a = 1;
};

/// Dense state over (Z_N)^L. Register 0 is the most significant digit of the
/// basis index.
class StateVector {
   public:
    /// |0...0>
    StateVector(Symbol N, int registers);
    static StateVector basis(Symbol N, const std::vector<Symbol> &digits);
    static StateVector from_amplitudes(Symbol N, int registers, std::vector<Complex> amps);

    Symbol N() const noexcept { return N_; }
    int registers() const noexcept { return L_; }
    std::size_t size() const noexcept { return amp_.size(); }
    const std::vector<Complex> &amplitudes() const noexcept { return amp_; }
    Complex amplitude(std::size_t index) const { return amp_.at(index); }
    std::size_t index_of(const std::vector<Symbol> &digits) const;
    Symbol digit(std::size_t index, int reg) const noexcept;

    void apply(const Elementary &op);
    void add_constant(int reg, Symbol a) { apply({OpKind::AddConstant, reg, -1, a}); }
    void add(int target, int control, Symbol a = 1) { apply({OpKind::Add, target, control, a}); }
    void subtract(int target, int control) { add(target, control, N_ - 1); }
    void multiply(int reg, Symbol a) { apply({OpKind::Multiply, reg, -1, a}); }
    void fourier(int reg) { apply({OpKind::Fourier, reg}); }
    void inverse_fourier(int reg) { apply({OpKind::InverseFourier, reg}); }
    void phase(int reg, Symbol a) { apply({OpKind::Phase, reg, -1, a}); }
    void phase2(int r1, int r2, Symbol a) { apply({OpKind::Phase2, r1, r2, a}); }
    void apply_pauli(const pauli::PauliWindow &op);

    double norm() const noexcept;
    /// Probability of each value of one register.
    std::vector<double> marginal(int reg) const;

    struct Entry {
        std::size_t index;
        double re;
        double im;
    };
    std::vector<Entry> nonzero_entries(double threshold = 1e-12) const;

   private:
    std::size_t stride(int reg) const noexcept { return strides_[reg]; }
    void check_reg(int reg) const;

    Symbol N_;
    int L_;
    std::vector<std::size_t> strides_;
    std::vector<Complex> amp_;
};

/// |<a|b>|^2
double fidelity(const StateVector &a, const StateVector &b);
Complex inner(const StateVector &a, const StateVector &b);

/// omega^e for omega = exp(2 pi i / N).
Complex omega_pow(Symbol N, std::int64_t e);

/// True iff op maps `codeword` onto `expected` up to global phase
/// (fidelity within tol of 1).
bool verify_logical(const StateVector &codeword, const pauli::PauliWindow &op, const StateVector &expected,
                    double tol = 1e-9);

}  // namespace qcc::statevec

#endif
