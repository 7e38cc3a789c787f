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

#ifndef QCC_GF_POLY_MATRIX_HPP
#define QCC_GF_POLY_MATRIX_HPP

#include <vector>

#include "gf/poly.hpp"

namespace qcc::gf {

/// Row-major matrix over GF(p)[D].
class PolyMatrix {
   public:
    PolyMatrix(Symbol p, int rows, int cols);
    PolyMatrix(Symbol p, int rows, int cols, std::vector<Poly> entries);

    static PolyMatrix identity(Symbol p, int size);

    Symbol modulus() const noexcept { return p_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const Poly &at(int r, int c) const { return e_[index(r, c)]; }
    Poly &at(int r, int c) { return e_[index(r, c)]; }
    const std::vector<Poly> &entries() const noexcept { return e_; }

    /// Largest entry degree; -1 for the zero matrix.
    int max_degree() const noexcept;
    PolyMatrix submatrix(const std::vector<int> &row_set, const std::vector<int> &col_set) const;
    PolyMatrix transposed() const;

    friend PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b);
    friend PolyMatrix operator+(const PolyMatrix &a, const PolyMatrix &b);
    friend bool operator==(const PolyMatrix &a, const PolyMatrix &b) noexcept {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

   private:
    size_t index(int r, int c) const;

    Symbol p_;
    int rows_;
    int cols_;
    std::vector<Poly> e_;
};

/// Determinant by fraction-free (Bareiss) elimination; square matrices only.
Poly determinant(const PolyMatrix &m);

/// Adjugate of a square matrix: adj(M) * M == M * adj(M) == det(M) * I.
PolyMatrix adjugate(const PolyMatrix &m);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

/// Determinants of all k x k submatrices ordered by (row set, column set).
std::vector<Poly> minors(const PolyMatrix &g, int k);

enum class Verdict { NonCatastrophic, Catastrophic };

struct CatastrophicityVerdict {
    Verdict verdict;
    Poly witness;  // monic gcd of the maximal minors
    int delay;     // l when witness == D^l, otherwise -1
};

CatastrophicityVerdict catastrophic_check(const PolyMatrix &g);

struct RightInverse {
    PolyMatrix h;  // n x k
    int delay;     // g * h == D^delay * I_k
};

RightInverse right_inverse(const PolyMatrix &g);

}  // namespace qcc::gf

#endif
