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

#ifndef QCC_CAPS_HPP
#define QCC_CAPS_HPP

#include <cstdint>

namespace qcc {

/// Size limits shared by the trellis builders and the state-vector engine.
/// Defaults: 2^20 classical trellis states, 2^24 error-trellis states per
/// cut, 2^24 state-vector amplitudes.
struct Caps {
    std::uint64_t trellis_states;
    std::uint64_t error_trellis_states;
    std::uint64_t statevec_entries;
};

Caps caps() noexcept;
void set_caps(const Caps &c) noexcept;
/// Sets every cap to the same value.
void set_all_caps(std::uint64_t cap) noexcept;
void reset_caps() noexcept;

}  // namespace qcc

#endif
