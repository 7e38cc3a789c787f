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

#ifndef QCC_GF_POLY_HPP
#define QCC_GF_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "gf/field.hpp"

namespace qcc::gf {

inline constexpr int kDefaultDegreeCap = 64;

/// Process-wide cap on the degree of any polynomial produced by
/// multiplication. Exceeding it throws DegreeOverflow.
int degree_cap() noexcept;
void set_degree_cap(int cap);

/// Polynomial in the delay variable D over GF(p). Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
class Poly {
   public:
    explicit Poly(Symbol p);
    Poly(Symbol p, std::vector<Symbol> coeffs);

    static Poly constant(Symbol p, Symbol c);
    static Poly monomial(Symbol p, Symbol c, int degree);

    Symbol modulus() const noexcept { return p_; }
    Field field() const { return Field(p_); }
    const std::vector<Symbol> &coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Symbol coeff(int i) const noexcept {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
    }
    Symbol lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    /// Lowest power with a nonzero coefficient; -1 for zero.
    int valuation() const noexcept;
    /// True iff this equals c*D^l for some nonzero c and l >= 0.
    bool is_monomial() const noexcept;

    Poly monic() const;
    Poly scaled(Symbol s) const;
    Poly shifted(int l) const;
    Poly operator-() const;

    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    Poly &operator+=(const Poly &b) { return *this = *this + b; }
    Poly &operator-=(const Poly &b) { return *this = *this - b; }
    Poly &operator*=(const Poly &b) { return *this = *this * b; }

    friend bool operator==(const Poly &a, const Poly &b) noexcept { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Human-readable form, e.g. "1+D+D^2".
    std::string to_string() const;

   private:
    void trim() noexcept;

    Symbol p_;
    std::vector<Symbol> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(const Poly &a, const Poly &b);

struct ExtGcd {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*a + t*b == g
};

ExtGcd ext_gcd(const Poly &a, const Poly &b);

}  // namespace qcc::gf

#endif
