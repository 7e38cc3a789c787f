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

#include "gf/poly_matrix.hpp"

#include <algorithm>
#include <string>

namespace qcc::gf {

PolyMatrix::PolyMatrix(Symbol p, int rows, int cols) : p_(Field(p).p()), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
        fail(ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    }
    e_.assign(static_cast<size_t>(rows) * cols, Poly(p));
}

PolyMatrix::PolyMatrix(Symbol p, int rows, int cols, std::vector<Poly> entries)
    : p_(Field(p).p()), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows <= 0 || cols <= 0 || e_.size() != static_cast<size_t>(rows) * cols) {
        fail(ErrorKind::DimensionMismatch, "matrix dimensions do not match entry count");
    }
    for (const Poly &e : e_) {
        if (e.modulus() != p_) {
            fail(ErrorKind::ModulusMismatch, "matrix entries over different fields");
        }
    }
}

PolyMatrix PolyMatrix::identity(Symbol p, int size) {
    PolyMatrix m(p, size, size);
    for (int i = 0; i < size; ++i) {
        m.at(i, i) = Poly::constant(p, 1);
    }
    return m;
}

size_t PolyMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        fail(ErrorKind::InvalidArgument, "matrix index out of range");
    }
    return static_cast<size_t>(r) * cols_ + c;
}

int PolyMatrix::max_degree() const noexcept {
    int d = -1;
    for (const Poly &e : e_) {
        d = std::max(d, e.degree());
    }
    return d;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int> &row_set, const std::vector<int> &col_set) const {
    PolyMatrix s(p_, static_cast<int>(row_set.size()), static_cast<int>(col_set.size()));
    for (size_t i = 0; i < row_set.size(); ++i) {
        for (size_t j = 0; j < col_set.size(); ++j) {
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(row_set[i], col_set[j]);
        }
    }
    return s;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            t.at(j, i) = at(i, j);
        }
    }
    return t;
}

PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.p_ != b.p_) {
        fail(ErrorKind::ModulusMismatch, "matrices over different fields");
    }
    if (a.cols_ != b.rows_) {
        fail(ErrorKind::DimensionMismatch, "matrix product dimension mismatch");
    }
    PolyMatrix r(a.p_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < b.cols_; ++j) {
            Poly acc(a.p_);
            for (int t = 0; t < a.cols_; ++t) {
                acc += a.at(i, t) * b.at(t, j);
            }
            r.at(i, j) = std::move(acc);
        }
    }
    return r;
}

PolyMatrix operator+(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.p_ != b.p_) {
        fail(ErrorKind::ModulusMismatch, "matrices over different fields");
    }
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        fail(ErrorKind::DimensionMismatch, "matrix sum dimension mismatch");
    }
    PolyMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] += b.e_[i];
    }
    return r;
}

Poly determinant(const PolyMatrix &m) {
    if (m.rows() != m.cols()) {
        fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    }
    const int n = m.rows();
    const Symbol p = m.modulus();
    std::vector<std::vector<Poly>> a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i].push_back(m.at(i, j));
        }
    }
    Poly prev = Poly::constant(p, 1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!a[i][k].is_zero()) {
                    swap = i;
                    break;
                }
            }
            if (swap < 0) {
                return Poly(p);
            }
            std::swap(a[k], a[swap]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto [q, r] = divmod(num, prev);
                if (!r.is_zero()) {
                    fail(ErrorKind::Internal, "inexact Bareiss division");
                }
                a[i][j] = std::move(q);
            }
        }
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    return negate ? -det : det;
}

PolyMatrix adjugate(const PolyMatrix &m) {
    if (m.rows() != m.cols()) {
        fail(ErrorKind::DimensionMismatch, "adjugate of a non-square matrix");
    }
    const int n = m.rows();
    const Symbol p = m.modulus();
    PolyMatrix adj(p, n, n);
    if (n == 1) {
        adj.at(0, 0) = Poly::constant(p, 1);
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> rs, cs;
            for (int t = 0; t < n; ++t) {
                if (t != i) {
                    rs.push_back(t);
                }
                if (t != j) {
                    cs.push_back(t);
                }
            }
            Poly c = determinant(m.submatrix(rs, cs));
            // adj[j][i] is the (i, j) cofactor.
            adj.at(j, i) = ((i + j) % 2) ? -c : c;
        }
    }
    return adj;
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) {
        return out;
    }
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = i;
    }
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++c[i];
        for (int j = i + 1; j < k; ++j) {
            c[j] = c[j - 1] + 1;
        }
    }
    return out;
}

std::vector<Poly> minors(const PolyMatrix &g, int k) {
    if (k < 1 || k > std::min(g.rows(), g.cols())) {
        fail(ErrorKind::InvalidArgument, "minor order " + std::to_string(k) + " out of range");
    }
    std::vector<Poly> out;
    auto row_sets = combinations(g.rows(), k);
    auto col_sets = combinations(g.cols(), k);
    for (const auto &rs : row_sets) {
        for (const auto &cs : col_sets) {
            out.push_back(determinant(g.submatrix(rs, cs)));
        }
    }
    return out;
}

namespace {

void require_generator_shape(const PolyMatrix &g) {
    if (g.rows() > g.cols()) {
        fail(ErrorKind::DimensionMismatch, "generator matrix must have k <= n");
    }
}

}  // namespace

CatastrophicityVerdict catastrophic_check(const PolyMatrix &g) {
    require_generator_shape(g);
    Poly w(g.modulus());
    for (const Poly &minor : minors(g, g.rows())) {
        w = poly_gcd(w, minor);
    }
    if (w.is_zero()) {
        fail(ErrorKind::RankDeficient, "generator matrix is rank-deficient over GF(p)(D)");
    }
    if (w.is_monomial()) {
        return {Verdict::NonCatastrophic, w, w.degree()};
    }
    return {Verdict::Catastrophic, w, -1};
}

RightInverse right_inverse(const PolyMatrix &g) {
    require_generator_shape(g);
    const int k = g.rows();
    const int n = g.cols();
    const Symbol p = g.modulus();
    auto col_sets = combinations(n, k);

    // Bezout combination of the maximal minors: sum_S u_S * det(G_S) = gcd.
    Poly acc(p);
    std::vector<Poly> u;
    std::vector<PolyMatrix> adjs;
    for (const auto &cs : col_sets) {
        PolyMatrix gs = g.submatrix(combinations(k, k)[0], cs);
        Poly d = determinant(gs);
        ExtGcd e = ext_gcd(acc, d);
        for (Poly &x : u) {
            x = x * e.s;
        }
        u.push_back(e.t);
        adjs.push_back(adjugate(gs));
        acc = e.g;
    }
    if (acc.is_zero()) {
        fail(ErrorKind::RankDeficient, "generator matrix is rank-deficient over GF(p)(D)");
    }
    if (!acc.is_monomial()) {
        fail(ErrorKind::Catastrophic, "catastrophic encoder has no polynomial right inverse (witness " +
                                          acc.to_string() + ")");
    }

    PolyMatrix h(p, n, k);
    for (size_t s = 0; s < col_sets.size(); ++s) {
        if (u[s].is_zero()) {
            continue;
        }
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                h.at(col_sets[s][i], j) += u[s] * adjs[s].at(i, j);
            }
        }
    }
    const int l = acc.degree();
    PolyMatrix expect(p, k, k);
    for (int i = 0; i < k; ++i) {
        expect.at(i, i) = Poly::monomial(p, 1, l);
    }
    if (!(g * h == expect)) {
        fail(ErrorKind::Internal, "right inverse failed verification");
    }
    return {h, l};
}

}  // namespace qcc::gf
