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

#ifndef QCC_STATEVEC_VERIFY_HPP
#define QCC_STATEVEC_VERIFY_HPP

#include <string>
#include <vector>

#include "gf/field.hpp"

namespace qcc::statevec {

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

/// Checks the gate-level encoder and decoding step of the [1+D^2, 1+D+D^2]
/// code against direct summation on T blocks with registers of dimension N.
std::vector<Check> verify_eq1_suite(gf::Symbol N, int T, double tol = 1e-9);

}  // namespace qcc::statevec

#endif
