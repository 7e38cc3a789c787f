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

#include "gf/poly.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace qcc::gf {

namespace {

std::atomic<int> g_degree_cap{kDefaultDegreeCap};

void check_same_modulus(const Poly &a, const Poly &b) {
    if (a.modulus() != b.modulus()) {
        fail(ErrorKind::ModulusMismatch, "polynomials over different fields");
    }
}

void check_degree(int deg) {
    if (deg > g_degree_cap.load(std::memory_order_relaxed)) {
        fail(ErrorKind::DegreeOverflow,
             "polynomial degree " + std::to_string(deg) + " exceeds cap " + std::to_string(degree_cap()));
    }
}

}  // namespace

int degree_cap() noexcept { return g_degree_cap.load(std::memory_order_relaxed); }

void set_degree_cap(int cap) {
    if (cap < 1) {
        fail(ErrorKind::InvalidArgument, "degree cap must be positive");
    }
    g_degree_cap.store(cap, std::memory_order_relaxed);
}

Poly::Poly(Symbol p) : p_(Field(p).p()) {}

Poly::Poly(Symbol p, std::vector<Symbol> coeffs) : p_(Field(p).p()), c_(std::move(coeffs)) {
    for (Symbol c : c_) {
        if (c >= p_) {
            fail(ErrorKind::InvalidArgument, "coefficient out of range for GF(" + std::to_string(p_) + ")");
        }
    }
    trim();
}

Poly Poly::constant(Symbol p, Symbol c) { return Poly(p, {c % p}); }

Poly Poly::monomial(Symbol p, Symbol c, int degree) {
    if (degree < 0) {
        fail(ErrorKind::InvalidArgument, "negative monomial degree");
    }
    check_degree(degree);
    std::vector<Symbol> v(degree + 1, 0);
    v[degree] = c % p;
    return Poly(p, std::move(v));
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

int Poly::valuation() const noexcept {
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i]) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

bool Poly::is_monomial() const noexcept { return !c_.empty() && valuation() == degree(); }

Poly Poly::monic() const {
    if (c_.empty()) {
        return *this;
    }
    return scaled(Field(p_).inv(lead()));
}

Poly Poly::scaled(Symbol s) const {
    Field f(p_);
    Poly r(p_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        r.c_[i] = f.mul(c_[i], s % p_);
    }
    r.trim();
    return r;
}

Poly Poly::shifted(int l) const {
    if (l < 0) {
        fail(ErrorKind::InvalidArgument, "negative shift");
    }
    if (c_.empty()) {
        return *this;
    }
    check_degree(degree() + l);
    Poly r(p_);
    r.c_.assign(l, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::operator-() const { return scaled(p_ - 1); }

Poly operator+(const Poly &a, const Poly &b) {
    check_same_modulus(a, b);
    Field f(a.p_);
    Poly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] = f.add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    }
    r.trim();
    return r;
}

Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }

Poly operator*(const Poly &a, const Poly &b) {
    check_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) {
        return Poly(a.p_);
    }
    check_degree(a.degree() + b.degree());
    Field f(a.p_);
    Poly r(a.p_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) {
            continue;
        }
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
        }
    }
    r.trim();
    return r;
}

std::string Poly::to_string() const {
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) {
            continue;
        }
        if (!first) {
            out << '+';
        }
        first = false;
        if (i == 0) {
            out << c_[i];
            continue;
        }
        if (c_[i] != 1) {
            out << c_[i] << '*';
        }
        out << 'D';
        if (i > 1) {
            out << '^' << i;
        }
    }
    return out.str();
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
    check_same_modulus(a, b);
    if (b.is_zero()) {
        fail(ErrorKind::InvalidArgument, "polynomial division by zero");
    }
    Field f(a.modulus());
    std::vector<Symbol> rem = a.coeffs();
    int db = b.degree();
    Symbol inv_lead = f.inv(b.lead());
    if (a.degree() < db) {
        return {Poly(a.modulus()), a};
    }
    std::vector<Symbol> quo(a.degree() - db + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        Symbol c = rem[i];
        if (!c) {
            continue;
        }
        Symbol q = f.mul(c, inv_lead);
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) {
            rem[i - db + j] = f.sub(rem[i - db + j], f.mul(q, b.coeff(j)));
        }
    }
    rem.resize(db);
    return {Poly(a.modulus(), std::move(quo)), Poly(a.modulus(), std::move(rem))};
}

Poly poly_gcd(const Poly &a, const Poly &b) {
    check_same_modulus(a, b);
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly &a, const Poly &b) {
    check_same_modulus(a, b);
    Symbol p = a.modulus();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(p, 1), s1(p);
    Poly t0(p), t1 = Poly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        return {r0, Poly(p), Poly(p)};
    }
    Symbol inv = Field(p).inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace qcc::gf
