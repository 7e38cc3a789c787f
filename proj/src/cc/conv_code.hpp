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

#ifndef QCC_CC_CONV_CODE_HPP
#define QCC_CC_CONV_CODE_HPP

#include <cstdint>
#include <vector>

#include "gf/poly_matrix.hpp"

namespace qcc::cc {

using gf::Symbol;
using Symbols = std::vector<std::uint8_t>;

/// k-input n-output convolutional code over GF(p) with memory m.
class ConvCode {
   public:
    explicit ConvCode(gf::PolyMatrix g);

    const gf::PolyMatrix &generator() const noexcept { return g_; }
    Symbol p() const noexcept { return g_.modulus(); }
    int k() const noexcept { return g_.rows(); }
    int n() const noexcept { return g_.cols(); }
    int m() const noexcept { return m_; }

    /// Coefficient of D^d in G[i][j].
    Symbol tap(int i, int j, int d) const noexcept { return g_.at(i, j).coeff(d); }

    /// Initial decoding window floor(k*m/(n-k) + 1) in blocks; m+1 when n == k.
    int vda_window() const noexcept;

   private:
    gf::PolyMatrix g_;
    int m_;
};

/// Encodes k*T info symbols block by block; with terminate, m zero blocks are
/// appended so the output has n*(T+m) symbols.
Symbols encode_stream(const ConvCode &code, const Symbols &info, bool terminate);

}  // namespace qcc::cc

#endif
