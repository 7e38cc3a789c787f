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

#ifndef QCC_QVA_ERROR_TRELLIS_HPP
#define QCC_QVA_ERROR_TRELLIS_HPP

#include <cstdint>
#include <vector>

#include "pauli/pauli_window.hpp"

namespace qcc::qva {

using gf::Symbol;
using gf::Vec;
using pauli::PauliWindow;
using pauli::StabilizerWindow;

/// Register-sectioned syndrome trellis of a stabilizer window. The state at
/// cut c (between registers c-1 and c) is the vector of partial syndromes of
/// the generators that started before c and end at or after c. A branch at
/// register c is one of the p^2 single-register Paulis, ordered with the X
/// exponent major, and costs 1 unless it is the identity.
class ErrorTrellis {
   public:
    /// `section` groups registers into blocks for reporting.
    ErrorTrellis(const StabilizerWindow &stab, int section);

    const StabilizerWindow &stab() const noexcept { return *stab_; }
    int length() const noexcept { return stab_->length(); }
    int section() const noexcept { return section_; }
    Symbol p() const noexcept { return stab_->p(); }
    int branches_per_register() const noexcept { return static_cast<int>(p() * p()); }

    /// Generators straddling cut c, in generator order.
    const std::vector<int> &active(int cut) const { return active_.at(cut); }
    /// Reachable state count at cut c, p^(rank of the straddling generators
    /// restricted to registers before c).
    std::uint64_t state_count(int cut) const { return counts_.at(cut); }
    std::uint64_t max_state_count() const noexcept;
    /// State counts at block boundaries (cuts 0, section, 2*section, ...).
    std::vector<std::uint64_t> block_state_count() const;

    /// Per register: generators touching it and where their partial sums live.
    struct Touch {
        int gen;
        int from;  // slot in active(c), or -1 if the generator starts at c
        int to;    // slot in active(c+1), or -1 if it ends at c
        std::uint8_t gx;
        std::uint8_t gz;
    };
    const std::vector<Touch> &touches(int reg) const { return touch_.at(reg); }
    int bits_per_symbol() const noexcept { return bits_; }

   private:
    const StabilizerWindow *stab_;
    int section_;
    int bits_;
    std::vector<std::vector<int>> active_;
    std::vector<std::vector<Touch>> touch_;
    std::vector<std::uint64_t> counts_;
};

struct RecoveryPath {
    PauliWindow correction;
    int cost;
    /// Number of trellis states visited at each cut during the search.
    std::vector<std::uint32_t> states_per_cut;
};

/// Minimum-weight Pauli with the given syndrome; ties go to the smallest
/// vector in register-interleaved order (x_0, z_0, x_1, z_1, ...).
RecoveryPath qva_decode(const ErrorTrellis &trellis, const Vec &syndrome);

struct StreamSegment {
    int block;
    PauliWindow correction;  // registers of this block only
    int cost;
};

/// Sliding-window decoding: block b is committed after looking `traceback`
/// blocks ahead. Traceback below ceil(support_bound / section) is rejected.
std::vector<StreamSegment> streaming_decode(const ErrorTrellis &trellis, const Vec &syndrome, int traceback,
                                            int support_bound);

/// Concatenates segments back into a window-length correction.
PauliWindow assemble(const std::vector<StreamSegment> &segments, Symbol p, int length, int section);

}  // namespace qcc::qva

#endif
