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

#ifndef QCC_CODE_QCC_CODE_HPP
#define QCC_CODE_QCC_CODE_HPP

#include <optional>
#include <vector>

#include "cc/conv_code.hpp"
#include "gf/linalg.hpp"
#include "pauli/pauli_window.hpp"

namespace qcc::code {

using pauli::PauliWindow;
using pauli::StabilizerWindow;

/// How a finite window closes on the right. Terminated windows flush the
/// encoder memory with zero blocks; truncated windows drop the tail.
enum class WindowPolicy { Terminated, Truncated };

/// Block encoder of a convolutional code over a finite span:
/// rows are input symbols (block-major), columns output symbols.
gf::Matrix encoder_matrix(const cc::ConvCode &code, int in_blocks, int out_blocks);

/// Solves E u = y for u using a polynomial right inverse G H = D^l I, then
/// checks the result; falls back to a dense solve when edge truncation
/// breaks the identity. Returns nullopt only if E u = y has no solution.
std::optional<gf::Vec> solve_with_inverse(const gf::Matrix &e, const gf::Vec &y, const gf::PolyMatrix &h, int delay);

/// Stabilizer of a classical code: Z-type generators span the
/// dual of the codeword space, X-bar re-encodes unit info vectors.
StabilizerWindow classical_stabilizer(const cc::ConvCode &code, int window_blocks,
                                      WindowPolicy policy = WindowPolicy::Terminated);

/// Exchanges X and Z parts: (x, z) -> (-z, x).
PauliWindow fourier_dual(const PauliWindow &op);
StabilizerWindow fourier_dual(const StabilizerWindow &stab);

/// Reduces X-type and Z-type generator lists separately to minimal-span form
/// and sorts them by (start, end). Mixed-type generators are rejected.
std::vector<PauliWindow> minimal_span_css(std::vector<PauliWindow> gens);

/// One instantiated window of the C, Fourier, C construction.
struct QccWindow {
    int info_blocks;
    WindowPolicy policy;
    int stream_length; // dummy symbols between the two encoders
    gf::Matrix inner;       // k*T x stream_length
    gf::Matrix outer;       // stream_length x L
    StabilizerWindow stab;  // minimal-span generators, one logical pair per info symbol
};

QccWindow build_window(const cc::ConvCode &parent, int info_blocks, WindowPolicy policy);

/// A pattern with its offset relative to the start of a period of `step`
/// registers.
struct Template {
    PauliWindow pattern;
    int offset;
};

class QccCode {
   public:
    QccCode(cc::ConvCode parent, QccWindow window, std::vector<Template> stabilizers,
            std::vector<Template> logical_x, std::vector<Template> logical_z, gf::PolyMatrix inverse, int delay);

    const cc::ConvCode &parent() const noexcept { return parent_; }
    gf::Symbol N() const noexcept { return parent_.p(); }
    /// Registers per period; a period carries k^2 logical qudits.
    int period() const noexcept { return parent_.n() * parent_.n(); }
    int logicals_per_period() const noexcept { return parent_.k() * parent_.k(); }
    const std::vector<Template> &stabilizer_templates() const noexcept { return stab_t_; }
    const std::vector<Template> &logical_x_templates() const noexcept { return lx_t_; }
    const std::vector<Template> &logical_z_templates() const noexcept { return lz_t_; }
    /// Largest register span of any stabilizer template.
    int support_bound() const noexcept { return support_bound_; }
    /// Smallest streaming traceback in periods.
    int min_traceback() const noexcept { return (support_bound_ + period() - 1) / period(); }
    const QccWindow &window() const noexcept { return window_; }
    const StabilizerWindow &stab() const noexcept { return window_.stab; }
    int length() const noexcept { return window_.stab.length(); }
    const gf::PolyMatrix &inverse() const noexcept { return inverse_; }
    int inverse_delay() const noexcept { return delay_; }

   private:
    cc::ConvCode parent_;
    QccWindow window_;
    std::vector<Template> stab_t_;
    std::vector<Template> lx_t_;
    std::vector<Template> lz_t_;
    gf::PolyMatrix inverse_;
    int delay_;
    int support_bound_;
};

/// Builds the QCC of a non-catastrophic parent with register dimension N,
/// instantiated on a window of `window_blocks` info blocks.
QccCode build_qcc(const cc::ConvCode &parent, gf::Symbol N, int window_blocks,
                  WindowPolicy policy = WindowPolicy::Terminated);

/// Closed-form description of the codewords: the phase coupling between info
/// symbols and dummy symbols, and the map from dummy symbols to registers.
struct CodewordForm {
    gf::PolyMatrix a_coeffs;  // info -> dummy phase schedule (inner role)
    gf::PolyMatrix b_coeffs;  // dummy -> register schedule (outer role)
};

CodewordForm codeword_form(const cc::ConvCode &parent);

}  // namespace qcc::code

#endif
