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

#include "caps.hpp"

#include <atomic>

namespace qcc {

namespace {

constexpr Caps kDefaultCaps{1ull << 20, 1ull << 24, 1ull << 24};

std::atomic<std::uint64_t> g_trellis{kDefaultCaps.trellis_states};
std::atomic<std::uint64_t> g_error_trellis{kDefaultCaps.error_trellis_states};
std::atomic<std::uint64_t> g_statevec{kDefaultCaps.statevec_entries};

}  // namespace

Caps caps() noexcept { return {g_trellis.load(), g_error_trellis.load(), g_statevec.load()}; }

void set_caps(const Caps &c) noexcept {
    g_trellis.store(c.trellis_states);
    g_error_trellis.store(c.error_trellis_states);
    g_statevec.store(c.statevec_entries);
}

void set_all_caps(std::uint64_t cap) noexcept { set_caps({cap, cap, cap}); }

void reset_caps() noexcept { set_caps(kDefaultCaps); }

}  // namespace qcc
