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

#include "gf/field.hpp"

#include <string>

namespace qcc {

const char *error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "invalid argument";
        case ErrorKind::Parse:
            return "parse error";
        case ErrorKind::ModulusMismatch:
            return "modulus mismatch";
        case ErrorKind::DimensionMismatch:
            return "dimension mismatch";
        case ErrorKind::Catastrophic:
            return "catastrophic encoder";
        case ErrorKind::RankDeficient:
            return "rank-deficient encoder";
        case ErrorKind::DegreeOverflow:
            return "degree overflow";
        case ErrorKind::CapacityExceeded:
            return "capacity exceeded";
        case ErrorKind::InconsistentSyndrome:
            return "inconsistent syndrome";
        case ErrorKind::WindowTooSmall:
            return "window too small";
        case ErrorKind::Internal:
            return "internal error";
    }
    return "unknown";
}

}  // namespace qcc

namespace qcc::gf {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Field::Field(Symbol p) : p_(p) {
    if (!is_prime(p) || p > kMaxPrime) {
        fail(ErrorKind::InvalidArgument, "field modulus must be a prime <= 251, got " + std::to_string(p));
    }
}

Symbol Field::inv(Symbol a) const {
    a %= p_;
    if (a == 0) {
        fail(ErrorKind::InvalidArgument, "inverse of zero in GF(" + std::to_string(p_) + ")");
    }
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a;
    Symbol e = p_ - 2;
    while (e) {
        if (e & 1) {
            result = result * base % p_;
        }
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Symbol>(result);
}

FieldElement::FieldElement(Symbol value, Symbol p) : value_(value), p_(Field(p).p()) {
    if (value >= p) {
        fail(ErrorKind::InvalidArgument, "field element out of range");
    }
}

}  // namespace qcc::gf
