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

#include "pauli/pauli_window.hpp"

#include <string>

namespace qcc::pauli {

namespace {

void check_pair(const PauliWindow &a, const PauliWindow &b) {
    if (a.p() != b.p()) {
        fail(ErrorKind::ModulusMismatch, "Pauli operators over different dimensions");
    }
    if (a.length() != b.length()) {
        fail(ErrorKind::DimensionMismatch, "Pauli operators on windows of different length");
    }
}

}  // namespace

PauliWindow::PauliWindow(Symbol p, int length) : p_(gf::Field(p).p()), phase_(0) {
    if (length < 0) {
        fail(ErrorKind::InvalidArgument, "negative window length");
    }
    x_.assign(length, 0);
    z_.assign(length, 0);
}

PauliWindow::PauliWindow(Symbol p, Vec x, Vec z, Symbol phase_exp)
    : p_(gf::Field(p).p()), x_(std::move(x)), z_(std::move(z)), phase_(phase_exp % (2 * p)) {
    if (x_.size() != z_.size()) {
        fail(ErrorKind::DimensionMismatch, "x and z parts differ in length");
    }
    for (size_t j = 0; j < x_.size(); ++j) {
        if (x_[j] >= p_ || z_[j] >= p_) {
            fail(ErrorKind::InvalidArgument, "Pauli exponent out of range");
        }
    }
}

PauliWindow PauliWindow::from_string(std::string_view text) {
    PauliWindow op(2, static_cast<int>(text.size()));
    for (size_t j = 0; j < text.size(); ++j) {
        switch (text[j]) {
            case 'I':
            case '_':
                break;
            case 'X':
                op.x_[j] = 1;
                break;
            case 'Z':
                op.z_[j] = 1;
                break;
            case 'Y':
                op.x_[j] = 1;
                op.z_[j] = 1;
                op.phase_ = (op.phase_ + 1) % 4;
                break;
            default:
                fail(ErrorKind::Parse, std::string("invalid Pauli character '") + text[j] + "'");
        }
    }
    return op;
}

PauliWindow PauliWindow::single(Symbol p, int length, int reg, Symbol x, Symbol z) {
    PauliWindow op(p, length);
    op.set(reg, x, z);
    return op;
}

void PauliWindow::set(int j, Symbol x, Symbol z) {
    if (j < 0 || j >= length()) {
        fail(ErrorKind::InvalidArgument, "register index out of range");
    }
    if (x >= p_ || z >= p_) {
        fail(ErrorKind::InvalidArgument, "Pauli exponent out of range");
    }
    x_[j] = static_cast<std::uint8_t>(x);
    z_[j] = static_cast<std::uint8_t>(z);
}

bool PauliWindow::is_identity() const noexcept {
    for (size_t j = 0; j < x_.size(); ++j) {
        if (x_[j] || z_[j]) {
            return false;
        }
    }
    return true;
}

int PauliWindow::weight() const noexcept {
    int w = 0;
    for (size_t j = 0; j < x_.size(); ++j) {
        w += (x_[j] || z_[j]);
    }
    return w;
}

std::pair<int, int> PauliWindow::span() const noexcept {
    int lo = -1, hi = -1;
    for (int j = 0; j < length(); ++j) {
        if (x_[j] || z_[j]) {
            if (lo < 0) {
                lo = j;
            }
            hi = j;
        }
    }
    return {lo, hi};
}

Vec PauliWindow::symplectic() const {
    Vec v = x_;
    v.insert(v.end(), z_.begin(), z_.end());
    return v;
}

std::string PauliWindow::to_string() const {
    if (p_ == 2) {
        static constexpr char kAlphabet[] = {'I', 'X', 'Z', 'Y'};
        std::string s(length(), 'I');
        for (int j = 0; j < length(); ++j) {
            s[j] = kAlphabet[x_[j] + 2 * z_[j]];
        }
        return s;
    }
    // Qudits: one token per register, X^a Z^b written as "XaZb".
    std::string s;
    for (int j = 0; j < length(); ++j) {
        if (j) {
            s += ' ';
        }
        if (!x_[j] && !z_[j]) {
            s += 'I';
            continue;
        }
        if (x_[j]) {
            s += 'X';
            if (x_[j] != 1) {
                s += std::to_string(x_[j]);
            }
        }
        if (z_[j]) {
            s += 'Z';
            if (z_[j] != 1) {
                s += std::to_string(z_[j]);
            }
        }
    }
    return s;
}

PauliWindow PauliWindow::from_string(std::string_view text, Symbol p) {
    gf::Field f(p);
    if (p == 2 && text.find(' ') == std::string_view::npos) {
        return from_string(text);
    }
    Vec x, z;
    size_t i = 0;
    auto number = [&](size_t &at) -> Symbol {
        size_t start = at;
        unsigned v = 0;
        while (at < text.size() && text[at] >= '0' && text[at] <= '9') {
            v = v * 10 + static_cast<unsigned>(text[at] - '0');
            if (v > 1000) {
                break;
            }
            ++at;
        }
        if (at == start) {
            return 1;
        }
        if (v == 0 || v >= p) {
            fail(ErrorKind::Parse, "Pauli exponent out of range in '" + std::string(text) + "'");
        }
        return static_cast<Symbol>(v);
    };
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        Symbol a = 0, b = 0;
        if (text[i] == 'I' || text[i] == '_') {
            ++i;
        } else {
            if (text[i] == 'X') {
                ++i;
                a = number(i);
            }
            if (i < text.size() && text[i] == 'Z') {
                ++i;
                b = number(i);
            }
            if (!a && !b) {
                fail(ErrorKind::Parse, std::string("invalid Pauli character '") + text[i] + "'");
            }
        }
        if (i < text.size() && text[i] != ' ') {
            fail(ErrorKind::Parse, "malformed Pauli token in '" + std::string(text) + "'");
        }
        x.push_back(a);
        z.push_back(b);
    }
    return PauliWindow(p, std::move(x), std::move(z));
}

PauliWindow PauliWindow::placed(int length, int offset) const {
    PauliWindow out(p_, length);
    out.phase_ = phase_;
    for (int j = 0; j < this->length(); ++j) {
        if (!x_[j] && !z_[j]) {
            continue;
        }
        int t = j + offset;
        if (t < 0 || t >= length) {
            fail(ErrorKind::WindowTooSmall, "operator support falls outside the window");
        }
        out.x_[t] = x_[j];
        out.z_[t] = z_[j];
    }
    return out;
}

PauliWindow compose(const PauliWindow &a, const PauliWindow &b) {
    check_pair(a, b);
    gf::Field f(a.p());
    const Symbol two_p = 2 * a.p();
    Vec x(a.length()), z(a.length());
    std::uint64_t cross = 0;
    for (int j = 0; j < a.length(); ++j) {
        x[j] = static_cast<std::uint8_t>(f.add(a.x(j), b.x(j)));
        z[j] = static_cast<std::uint8_t>(f.add(a.z(j), b.z(j)));
        cross += static_cast<std::uint64_t>(a.z(j)) * b.x(j);
    }
    Symbol phase = static_cast<Symbol>((a.phase_exp() + b.phase_exp() + 2 * (cross % a.p())) % two_p);
    return PauliWindow(a.p(), std::move(x), std::move(z), phase);
}

PauliWindow inverse(const PauliWindow &a) {
    gf::Field f(a.p());
    Vec x(a.length()), z(a.length());
    for (int j = 0; j < a.length(); ++j) {
        x[j] = static_cast<std::uint8_t>(f.neg(a.x(j)));
        z[j] = static_cast<std::uint8_t>(f.neg(a.z(j)));
    }
    return PauliWindow(a.p(), std::move(x), std::move(z));
}

Symbol symplectic_product(const PauliWindow &a, const PauliWindow &b) {
    check_pair(a, b);
    const std::uint64_t p = a.p();
    std::uint64_t plus = 0, minus = 0;
    for (int j = 0; j < a.length(); ++j) {
        plus += static_cast<std::uint64_t>(a.x(j)) * b.z(j);
        minus += static_cast<std::uint64_t>(a.z(j)) * b.x(j);
    }
    return static_cast<Symbol>((plus % p + p - minus % p) % p);
}

bool commutes(const PauliWindow &a, const PauliWindow &b) { return symplectic_product(a, b) == 0; }

StabilizerWindow::StabilizerWindow(Symbol p, int length, std::vector<PauliWindow> generators,
                                   std::vector<PauliWindow> logical_x, std::vector<PauliWindow> logical_z)
    : p_(gf::Field(p).p()),
      length_(length),
      gens_(std::move(generators)),
      lx_(std::move(logical_x)),
      lz_(std::move(logical_z)),
      span_(p, 2 * length) {
    auto check_member = [&](const PauliWindow &op) {
        if (op.p() != p_ || op.length() != length_) {
            fail(ErrorKind::DimensionMismatch, "operator does not match the stabilizer window");
        }
    };
    for (const auto &g : gens_) {
        check_member(g);
    }
    for (size_t i = 0; i < gens_.size(); ++i) {
        for (size_t j = i + 1; j < gens_.size(); ++j) {
            if (!commutes(gens_[i], gens_[j])) {
                fail(ErrorKind::InvalidArgument,
                     "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
            }
        }
        span_.insert(gens_[i].symplectic());
    }
    if (lx_.size() != lz_.size()) {
        fail(ErrorKind::DimensionMismatch, "logical X and Z lists differ in length");
    }
    for (size_t i = 0; i < lx_.size(); ++i) {
        check_member(lx_[i]);
        check_member(lz_[i]);
        if (!in_normalizer(lx_[i]) || !in_normalizer(lz_[i])) {
            fail(ErrorKind::InvalidArgument, "logical operator " + std::to_string(i) + " anticommutes with a generator");
        }
        for (size_t j = 0; j < lx_.size(); ++j) {
            bool pair = symplectic_product(lx_[i], lz_[j]) != 0;
            if (pair != (i == j)) {
                fail(ErrorKind::InvalidArgument, "logical operators are not canonically paired");
            }
            if (j > i && (!commutes(lx_[i], lx_[j]) || !commutes(lz_[i], lz_[j]))) {
                fail(ErrorKind::InvalidArgument, "logical operators of the same type do not commute");
            }
        }
    }
}

bool StabilizerWindow::in_group(const PauliWindow &op) const { return span_.contains(op.symplectic()); }

bool StabilizerWindow::in_normalizer(const PauliWindow &op) const {
    for (const auto &g : gens_) {
        if (!commutes(op, g)) {
            return false;
        }
    }
    return true;
}

Vec syndrome(const PauliWindow &error, const StabilizerWindow &stab) {
    Vec s(stab.generators().size());
    for (size_t i = 0; i < s.size(); ++i) {
        s[i] = static_cast<std::uint8_t>(symplectic_product(error, stab.generators()[i]));
    }
    return s;
}

Classification classify_residual(const PauliWindow &residual, const StabilizerWindow &stab) {
    if (!stab.in_normalizer(residual)) {
        fail(ErrorKind::InconsistentSyndrome, "residual has a nonzero syndrome");
    }
    if (residual.is_identity()) {
        return {ResidualClass::Identity, {}};
    }
    if (stab.in_group(residual)) {
        return {ResidualClass::Stabilizer, {}};
    }
    Classification c{ResidualClass::LogicalError, {}};
    for (size_t i = 0; i < stab.logical_x().size(); ++i) {
        if (!commutes(residual, stab.logical_x()[i]) || !commutes(residual, stab.logical_z()[i])) {
            c.affected.push_back(static_cast<int>(i));
        }
    }
    return c;
}

}  // namespace qcc::pauli
