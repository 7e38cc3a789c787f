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

#ifndef QCC_STATEVEC_CIRCUITS_HPP
#define QCC_STATEVEC_CIRCUITS_HPP

#include <vector>

#include "qcc/qcc_code.hpp"
#include "statevec/state_vector.hpp"

namespace qcc::statevec {

/// Encoder of the [1+D^2, 1+D+D^2] QCC on T blocks of four registers, built
/// from addition, multiplication and Fourier gates. Block i starts as
/// |k_i, 0, 0, 0> and info outside [1, T] is zero.
StateVector encode_eq1(const std::vector<Symbol> &info, Symbol N);

/// Gate list used by encode_eq1, for inspection and replay.
std::vector<Elementary> encode_eq1_gates(Symbol N, int T);

struct DecodeStep {
    Symbol k1;                   // value read from register 0
    double probability;          // probability of that value
    std::vector<Symbol> ancilla; // registers 1..3 after the step
    StateVector remainder;       // registers 4.. after projecting the first block
};

/// One decoding step: register subtractions, inverse Fourier on the first
/// register, a phase correction and a Fourier transform on the third. The
/// first block then holds |k1, 0, 0, 0> and the rest encodes (k2, ..., kT).
DecodeStep decode_step_eq1(const StateVector &state, int T);

/// Direct summation of the codeword for `info` from a codeword form on a
/// finite window: sum over dummy strings y of w^{(info A) . y} |y B>.
StateVector codeword_state(const code::CodewordForm &form, const std::vector<Symbol> &info, int info_blocks,
                           code::WindowPolicy policy);

}  // namespace qcc::statevec

#endif
