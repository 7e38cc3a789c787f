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

#ifndef QCC_GF_FIELD_HPP
#define QCC_GF_FIELD_HPP

#include <cstdint>

#include "error.hpp"

namespace qcc::gf {

using Symbol = std::uint32_t;

/// Prime fields are capped so that products fit comfortably in 64 bits and
/// symbols fit the u8 wire format used for bulk streams.
inline constexpr Symbol kMaxPrime = 251;

bool is_prime(std::uint64_t n) noexcept;

/// GF(p) for prime p. Cheap to copy; carries only the modulus.
class Field {
   public:
    explicit Field(Symbol p);

    Symbol p() const noexcept { return p_; }
    Symbol add(Symbol a, Symbol b) const noexcept { return (a + b) % p_; }
    Symbol sub(Symbol a, Symbol b) const noexcept { return (a + p_ - b) % p_; }
    Symbol neg(Symbol a) const noexcept { return (p_ - a) % p_; }
    Symbol mul(Symbol a, Symbol b) const noexcept {
        return static_cast<Symbol>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Symbol>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const Field &a, const Field &b) noexcept { return a.p_ == b.p_; }

   private:
    Symbol p_;
};

/// A checked element of GF(p). Most internal code works on raw Symbols with a
/// Field at hand; this type is for API edges where the invariant matters.
class FieldElement {
   public:
    FieldElement(Symbol value, Symbol p);

    Symbol value() const noexcept { return value_; }
    Symbol modulus() const noexcept { return p_; }

    friend bool operator==(const FieldElement &, const FieldElement &) = default;

   private:
    Symbol value_;
    Symbol p_;
};

}  // namespace qcc::gf

#endif
