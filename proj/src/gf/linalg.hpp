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

#ifndef QCC_GF_LINALG_HPP
#define QCC_GF_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gf/field.hpp"

namespace qcc::gf {

using Vec = std::vector<std::uint8_t>;

/// Dense row-major matrix over GF(p), p <= 251 so entries fit a byte.
class Matrix {
   public:
    Matrix(Symbol p, int rows, int cols);

    Symbol modulus() const noexcept { return p_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::uint8_t &operator()(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
    std::uint8_t operator()(int r, int c) const { return d_[static_cast<size_t>(r) * cols_ + c]; }
    Vec row(int r) const;
    void append_row(const Vec &v);

    /// x * M for a row vector x of length rows().
    Vec left_mul(const Vec &x) const;
    /// M * y for a column vector y of length cols().
    Vec right_mul(const Vec &y) const;

   private:
    Symbol p_;
    int rows_;
    int cols_;
    std::vector<std::uint8_t> d_;
};

struct Echelon {
    Matrix rref;             // reduced rows, rank x cols
    std::vector<int> pivots; // pivot column of each row
};

Echelon row_reduce(const Matrix &m);
int rank(const Matrix &m);

/// Basis of {y : M y = 0}, one vector per free column in increasing order.
std::vector<Vec> right_nullspace(const Matrix &m);

/// Some y with M y = b, or nullopt. Free variables are set to zero.
std::optional<Vec> solve(const Matrix &m, const Vec &b);

/// Incremental row-space membership over GF(p).
class RowSpace {
   public:
    RowSpace(Symbol p, int width);
    /// Adds v; returns false if it was already in the span.
    bool insert(const Vec &v);
    bool contains(const Vec &v) const;
    /// Reduce v against the basis; the zero vector iff v is in the span.
    Vec reduce(Vec v) const;
    int dimension() const noexcept { return static_cast<int>(basis_.size()); }

   private:
    Field f_;
    int width_;
    std::vector<Vec> basis_;  // each normalized with pivot entry 1
    std::vector<int> pivots_;
};

}  // namespace qcc::gf

#endif
