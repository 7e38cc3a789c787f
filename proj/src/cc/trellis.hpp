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

#ifndef QCC_CC_TRELLIS_HPP
#define QCC_CC_TRELLIS_HPP

#include <cstdint>
#include <vector>

#include "cc/conv_code.hpp"

namespace qcc::cc {

/// Shift-register trellis. A state holds the previous m input blocks, most
/// recent first, read as a base-p number with the first symbol most
/// significant. Inputs are numbered the same way, so numeric order on input
/// indices is lexicographic order on input vectors.
class Trellis {
   public:
    explicit Trellis(const ConvCode &code);

    const ConvCode &code() const noexcept { return code_; }
    std::uint32_t state_count() const noexcept { return states_; }
    std::uint32_t input_count() const noexcept { return inputs_; }
    std::uint32_t next(std::uint32_t state, std::uint32_t input) const noexcept {
        return next_[static_cast<size_t>(state) * inputs_ + input];
    }
    /// n output symbols on the branch.
    const std::uint8_t *output(std::uint32_t state, std::uint32_t input) const noexcept {
        return &out_[(static_cast<size_t>(state) * inputs_ + input) * code_.n()];
    }
    Symbols input_vector(std::uint32_t input) const;
    std::uint32_t input_index(const std::uint8_t *symbols) const noexcept;

   private:
    ConvCode code_;
    std::uint32_t states_;
    std::uint32_t inputs_;
    std::vector<std::uint32_t> next_;
    std::vector<std::uint8_t> out_;
};

struct DecodePath {
    Symbols info;                     // k symbols per decoded block
    std::int64_t metric;              // Hamming distance to the received word
    std::vector<std::uint32_t> states;  // survivor state sequence, one per block boundary
};

struct ViterbiOptions {
    /// Zero-tail: the last m received blocks carry no info and the path must
    /// end in the zero state.
    bool terminated = true;
    /// Streaming decision depth in blocks. Zero selects exact full-window
    /// decoding; a negative value selects 5*(m+1).
    int traceback = 0;
};

DecodePath viterbi_decode(const Trellis &trellis, const Symbols &received, const ViterbiOptions &opts = {});

}  // namespace qcc::cc

#endif
