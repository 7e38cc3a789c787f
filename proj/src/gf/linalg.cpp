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

#include "gf/linalg.hpp"

namespace qcc::gf {

Matrix::Matrix(Symbol p, int rows, int cols) : p_(Field(p).p()), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        fail(ErrorKind::DimensionMismatch, "negative matrix dimension");
    }
    d_.assign(static_cast<size_t>(rows) * cols, 0);
}

Vec Matrix::row(int r) const {
    auto begin = d_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
    return Vec(begin, begin + cols_);
}

void Matrix::append_row(const Vec &v) {
    if (static_cast<int>(v.size()) != cols_) {
        fail(ErrorKind::DimensionMismatch, "row length mismatch");
    }
    d_.insert(d_.end(), v.begin(), v.end());
    ++rows_;
}

Vec Matrix::left_mul(const Vec &x) const {
    if (static_cast<int>(x.size()) != rows_) {
        fail(ErrorKind::DimensionMismatch, "vector-matrix dimension mismatch");
    }
    Field f(p_);
    Vec out(cols_, 0);
    for (int r = 0; r < rows_; ++r) {
        if (!x[r]) {
            continue;
        }
        for (int c = 0; c < cols_; ++c) {
            out[c] = static_cast<std::uint8_t>(f.add(out[c], f.mul(x[r], (*this)(r, c))));
        }
    }
    return out;
}

Vec Matrix::right_mul(const Vec &y) const {
    if (static_cast<int>(y.size()) != cols_) {
        fail(ErrorKind::DimensionMismatch, "matrix-vector dimension mismatch");
    }
    Field f(p_);
    Vec out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        Symbol acc = 0;
        for (int c = 0; c < cols_; ++c) {
            acc = f.add(acc, f.mul((*this)(r, c), y[c]));
        }
        out[r] = static_cast<std::uint8_t>(acc);
    }
    return out;
}

Echelon row_reduce(const Matrix &m) {
    Field f(m.modulus());
    Matrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (a(i, c)) {
                sel = i;
                break;
            }
        }
        if (sel < 0) {
            continue;
        }
        if (sel != r) {
            for (int j = 0; j < a.cols(); ++j) {
                std::swap(a(sel, j), a(r, j));
            }
        }
        Symbol inv = f.inv(a(r, c));
        for (int j = 0; j < a.cols(); ++j) {
            a(r, j) = static_cast<std::uint8_t>(f.mul(a(r, j), inv));
        }
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || !a(i, c)) {
                continue;
            }
            Symbol factor = a(i, c);
            for (int j = 0; j < a.cols(); ++j) {
                a(i, j) = static_cast<std::uint8_t>(f.sub(a(i, j), f.mul(factor, a(r, j))));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(m.modulus(), 0, m.cols());
    for (int i = 0; i < r; ++i) {
        reduced.append_row(a.row(i));
    }
    return {reduced, pivots};
}

int rank(const Matrix &m) { return static_cast<int>(row_reduce(m).pivots.size()); }

std::vector<Vec> right_nullspace(const Matrix &m) {
    Field f(m.modulus());
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivots) {
        is_pivot[c] = true;
    }
    std::vector<Vec> out;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            v[e.pivots[i]] = static_cast<std::uint8_t>(f.neg(e.rref(static_cast<int>(i), free)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix &m, const Vec &b) {
    if (static_cast<int>(b.size()) != m.rows()) {
        fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    }
    Matrix aug(m.modulus(), m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = b[i];
    }
    Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    Vec x(m.cols(), 0);
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        x[e.pivots[i]] = e.rref(static_cast<int>(i), m.cols());
    }
    return x;
}

RowSpace::RowSpace(Symbol p, int width) : f_(p), width_(width) {}

Vec RowSpace::reduce(Vec v) const {
    if (static_cast<int>(v.size()) != width_) {
        fail(ErrorKind::DimensionMismatch, "vector width mismatch");
    }
    for (size_t i = 0; i < basis_.size(); ++i) {
        Symbol c = v[pivots_[i]];
        if (!c) {
            continue;
        }
        const Vec &b = basis_[i];
        for (int j = pivots_[i]; j < width_; ++j) {
            if (b[j]) {
                v[j] = static_cast<std::uint8_t>(f_.sub(v[j], f_.mul(c, b[j])));
            }
        }
    }
    return v;
}

bool RowSpace::contains(const Vec &v) const {
    Vec r = reduce(v);
    for (auto x : r) {
        if (x) {
            return false;
        }
    }
    return true;
}

bool RowSpace::insert(const Vec &v) {
    Vec r = reduce(v);
    int piv = -1;
    for (int j = 0; j < width_; ++j) {
        if (r[j]) {
            piv = j;
            break;
        }
    }
    if (piv < 0) {
        return false;
    }
    Symbol inv = f_.inv(r[piv]);
    for (auto &x : r) {
        x = static_cast<std::uint8_t>(f_.mul(x, inv));
    }
    // Keep earlier basis rows reduced at the new pivot so reduce() stays a
    // single forward pass.
    for (auto &b : basis_) {
        Symbol c = b[piv];
        if (!c) {
            continue;
        }
        for (int j = piv; j < width_; ++j) {
            b[j] = static_cast<std::uint8_t>(f_.sub(b[j], f_.mul(c, r[j])));
        }
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

}  // namespace qcc::gf
