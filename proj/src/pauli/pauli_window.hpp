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

#ifndef QCC_PAULI_PAULI_WINDOW_HPP
#define QCC_PAULI_PAULI_WINDOW_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gf/linalg.hpp"

namespace qcc::pauli {

using gf::Symbol;
using gf::Vec;

/// Generalized Pauli operator tau^phase X^x Z^z on L registers of dimension
/// p, with tau^2 = omega = exp(2 pi i / p) and Z X = omega X Z.
class PauliWindow {
   public:
    PauliWindow(Symbol p, int length);
    PauliWindow(Symbol p, Vec x, Vec z, Symbol phase_exp = 0);

    /// Parses an I/X/Y/Z string (p = 2 only). 'Y' contributes tau X Z.
    static PauliWindow from_string(std::string_view text);
    /// Qudit form: space-separated tokens I, X, X2, Z3, X2Z, ... For p = 2 an
    /// unspaced string is read in the qubit alphabet.
    static PauliWindow from_string(std::string_view text, Symbol p);
    static PauliWindow single(Symbol p, int length, int reg, Symbol x, Symbol z);

    Symbol p() const noexcept { return p_; }
    int length() const noexcept { return static_cast<int>(x_.size()); }
    const Vec &x() const noexcept { return x_; }
    const Vec &z() const noexcept { return z_; }
    Symbol phase_exp() const noexcept { return phase_; }
    std::uint8_t x(int j) const { return x_.at(j); }
    std::uint8_t z(int j) const { return z_.at(j); }
    void set(int j, Symbol x, Symbol z);

    bool is_identity() const noexcept;
    /// Number of registers acted on nontrivially.
    int weight() const noexcept;
    /// First and last nontrivial register, or (-1, -1) for the identity.
    std::pair<int, int> span() const noexcept;
    /// Symplectic vector (x || z).
    Vec symplectic() const;

    /// I/X/Y/Z text, p = 2 only; phases are not printed.
    std::string to_string() const;

    /// Operator with the same symplectic part placed at a register offset in
    /// a window of the given length; support falling outside is an error.
    PauliWindow placed(int length, int offset) const;

    friend bool operator==(const PauliWindow &, const PauliWindow &) = default;

   private:
    Symbol p_;
    Vec x_;
    Vec z_;
    Symbol phase_;
};

/// a then b as operators: the product a * b.
PauliWindow compose(const PauliWindow &a, const PauliWindow &b);
/// Inverse up to phase of the symplectic part (negated vectors).
PauliWindow inverse(const PauliWindow &a);
/// <a.x, b.z> - <a.z, b.x> mod p.
Symbol symplectic_product(const PauliWindow &a, const PauliWindow &b);
bool commutes(const PauliWindow &a, const PauliWindow &b);
inline int weight(const PauliWindow &a) noexcept { return a.weight(); }

enum class ResidualClass { Identity, Stabilizer, LogicalError };

struct Classification {
    ResidualClass kind;
    std::vector<int> affected;  // logical indices hit, for LogicalError
};

/// Stabilizer group on a window with paired logical operators.
class StabilizerWindow {
   public:
    StabilizerWindow(Symbol p, int length, std::vector<PauliWindow> generators,
                     std::vector<PauliWindow> logical_x, std::vector<PauliWindow> logical_z);

    Symbol p() const noexcept { return p_; }
    int length() const noexcept { return length_; }
    const std::vector<PauliWindow> &generators() const noexcept { return gens_; }
    const std::vector<PauliWindow> &logical_x() const noexcept { return lx_; }
    const std::vector<PauliWindow> &logical_z() const noexcept { return lz_; }
    int rank() const noexcept { return span_.dimension(); }

    /// Group membership of the symplectic part, phases ignored.
    bool in_group(const PauliWindow &op) const;
    /// Commutes with every generator.
    bool in_normalizer(const PauliWindow &op) const;

   private:
    Symbol p_;
    int length_;
    std::vector<PauliWindow> gens_;
    std::vector<PauliWindow> lx_;
    std::vector<PauliWindow> lz_;
    gf::RowSpace span_;
};

Vec syndrome(const PauliWindow &error, const StabilizerWindow &stab);

/// Residual must have zero syndrome.
Classification classify_residual(const PauliWindow &residual, const StabilizerWindow &stab);

}  // namespace qcc::pauli

#endif
