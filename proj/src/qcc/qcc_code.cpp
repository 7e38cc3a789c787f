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

#include "qcc/qcc_code.hpp"

#include <algorithm>
#include <string>

namespace qcc::code {

using gf::Matrix;
using gf::Symbol;
using gf::Vec;

gf::Matrix encoder_matrix(const cc::ConvCode &code, int in_blocks, int out_blocks) {
    const int k = code.k();
    const int n = code.n();
    Matrix e(code.p(), in_blocks * k, out_blocks * n);
    for (int s = 0; s < in_blocks; ++s) {
        for (int d = 0; d <= code.m() && s + d < out_blocks; ++d) {
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < n; ++j) {
                    e(s * k + i, (s + d) * n + j) = static_cast<std::uint8_t>(code.tap(i, j, d));
                }
            }
        }
    }
    return e;
}

std::optional<Vec> solve_with_inverse(const Matrix &e, const Vec &y, const gf::PolyMatrix &h, int delay) {
    const int n = h.rows();
    const int k = h.cols();
    if (e.cols() % n) {
        fail(ErrorKind::DimensionMismatch, "encoder width is not a multiple of n");
    }
    gf::Field f(e.modulus());
    const int out_blocks = e.cols() / n;
    Vec u(e.cols(), 0);
    // u[t][c] = sum_{s,j} y[s][j] H[c][j][s + l - t]
    for (int idx = 0; idx < static_cast<int>(y.size()); ++idx) {
        if (!y[idx]) {
            continue;
        }
        const int s = idx / k;
        const int j = idx % k;
        for (int c = 0; c < n; ++c) {
            const gf::Poly &hp = h.at(c, j);
            for (int d = 0; d <= hp.degree(); ++d) {
                Symbol coef = hp.coeff(d);
                int t = s + delay - d;
                if (!coef || t < 0 || t >= out_blocks) {
                    continue;
                }
                auto &slot = u[static_cast<size_t>(t) * n + c];
                slot = static_cast<std::uint8_t>(f.add(slot, f.mul(coef, y[idx])));
            }
        }
    }
    if (e.right_mul(u) == y) {
        return u;
    }
    return gf::solve(e, y);
}

PauliWindow fourier_dual(const PauliWindow &op) {
    gf::Field f(op.p());
    Vec x(op.length()), z(op.length());
    for (int j = 0; j < op.length(); ++j) {
        x[j] = static_cast<std::uint8_t>(f.neg(op.z(j)));
        z[j] = op.x(j);
    }
    return PauliWindow(op.p(), std::move(x), std::move(z));
}

StabilizerWindow fourier_dual(const StabilizerWindow &stab) {
    std::vector<PauliWindow> g, lx, lz;
    for (const auto &op : stab.generators()) {
        g.push_back(fourier_dual(op));
    }
    for (const auto &op : stab.logical_x()) {
        lx.push_back(fourier_dual(op));
    }
    for (const auto &op : stab.logical_z()) {
        lz.push_back(fourier_dual(op));
    }
    return StabilizerWindow(stab.p(), stab.length(), std::move(g), std::move(lx), std::move(lz));
}

namespace {

bool is_x_type(const PauliWindow &op) {
    return std::all_of(op.z().begin(), op.z().end(), [](auto v) { return v == 0; });
}

bool is_z_type(const PauliWindow &op) {
    return std::all_of(op.x().begin(), op.x().end(), [](auto v) { return v == 0; });
}

// Rows sharing a start (or an end) are combined until all starts and all
// ends are distinct.
void reduce_single_type(std::vector<Vec> &rows, Symbol p) {
    gf::Field f(p);
    auto span = [](const Vec &v) {
        int lo = -1, hi = -1;
        for (int j = 0; j < static_cast<int>(v.size()); ++j) {
            if (v[j]) {
                if (lo < 0) {
                    lo = j;
                }
                hi = j;
            }
        }
        return std::pair<int, int>(lo, hi);
    };
    auto axpy = [&](Vec &dst, const Vec &src, Symbol c) {
        for (size_t j = 0; j < dst.size(); ++j) {
            if (src[j]) {
                dst[j] = static_cast<std::uint8_t>(f.sub(dst[j], f.mul(c, src[j])));
            }
        }
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rows.size(); ++i) {
            for (size_t j = 0; j < rows.size(); ++j) {
                if (i == j) {
                    continue;
                }
                auto [si, ei] = span(rows[i]);
                auto [sj, ej] = span(rows[j]);
                if (si < 0 || sj < 0) {
                    continue;
                }
                if (si == sj && ei <= ej) {
                    axpy(rows[j], rows[i], f.div(rows[j][sj], rows[i][si]));
                    changed = true;
                } else if (ei == ej && si >= sj) {
                    axpy(rows[j], rows[i], f.div(rows[j][ej], rows[i][ei]));
                    changed = true;
                }
            }
        }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [&](const Vec &v) { return span(v).first < 0; }),
               rows.end());
}

}  // namespace

std::vector<PauliWindow> minimal_span_css(std::vector<PauliWindow> gens) {
    if (gens.empty()) {
        return gens;
    }
    const Symbol p = gens[0].p();
    const int len = gens[0].length();
    std::vector<Vec> xs, zs;
    for (const auto &g : gens) {
        if (g.is_identity()) {
            continue;
        }
        if (is_x_type(g)) {
            xs.push_back(g.x());
        } else if (is_z_type(g)) {
            zs.push_back(g.z());
        } else {
            fail(ErrorKind::InvalidArgument, "minimal-span reduction needs X-type or Z-type generators");
        }
    }
    reduce_single_type(xs, p);
    reduce_single_type(zs, p);
    std::vector<PauliWindow> out;
    for (auto &x : xs) {
        out.emplace_back(p, std::move(x), Vec(len, 0));
    }
    for (auto &z : zs) {
        out.emplace_back(p, Vec(len, 0), std::move(z));
    }
    std::stable_sort(out.begin(), out.end(), [](const PauliWindow &a, const PauliWindow &b) {
        auto sa = a.span(), sb = b.span();
        if (sa != sb) {
            return sa < sb;
        }
        return a.symplectic() > b.symplectic();
    });
    return out;
}

namespace {

std::vector<PauliWindow> nullspace_ops(const Matrix &m, int len, bool x_type, const Matrix *map) {
    std::vector<PauliWindow> out;
    for (const Vec &v : gf::right_nullspace(m)) {
        Vec body = map ? map->left_mul(v) : v;
        if (x_type) {
            out.emplace_back(m.modulus(), std::move(body), Vec(len, 0));
        } else {
            out.emplace_back(m.modulus(), Vec(len, 0), std::move(body));
        }
    }
    return out;
}

Vec negated_unit(Symbol p, int size, int idx) {
    Vec e(size, 0);
    e[idx] = static_cast<std::uint8_t>((p - 1) % p);
    return e;
}

Matrix first_rows(const Matrix &m, int rows) {
    Matrix out(m.modulus(), 0, m.cols());
    for (int r = 0; r < rows; ++r) {
        out.append_row(m.row(r));
    }
    return out;
}

}  // namespace

StabilizerWindow classical_stabilizer(const cc::ConvCode &code, int window_blocks, WindowPolicy policy) {
    if (window_blocks < code.m() + 1) {
        fail(ErrorKind::WindowTooSmall, "classical stabilizer window needs at least m+1 blocks");
    }
    auto verdict = gf::catastrophic_check(code.generator());
    if (verdict.verdict == gf::Verdict::Catastrophic) {
        fail(ErrorKind::Catastrophic, "catastrophic parent (witness " + verdict.witness.to_string() + ")");
    }
    auto inv = gf::right_inverse(code.generator());
    const Symbol p = code.p();
    const int out_blocks = window_blocks + (policy == WindowPolicy::Terminated ? code.m() : 0);
    Matrix b = encoder_matrix(code, window_blocks, out_blocks);
    const int len = b.cols();

    auto gens = minimal_span_css(nullspace_ops(b, len, false, nullptr));
    std::vector<PauliWindow> lx, lz;
    for (int s = 0; s < b.rows(); ++s) {
        lx.emplace_back(p, b.row(s), Vec(len, 0));
        Vec unit(b.rows(), 0);
        unit[s] = 1;
        auto w = solve_with_inverse(b, unit, inv.h, inv.delay);
        if (!w) {
            fail(ErrorKind::RankDeficient, "window encoder is not injective");
        }
        lz.emplace_back(p, Vec(len, 0), std::move(*w));
    }
    return StabilizerWindow(p, len, std::move(gens), std::move(lx), std::move(lz));
}

QccWindow build_window(const cc::ConvCode &parent, int info_blocks, WindowPolicy policy) {
    if (info_blocks < 1) {
        fail(ErrorKind::InvalidArgument, "window needs at least one info block");
    }
    const int k = parent.k();
    const int m = parent.m();
    const Symbol p = parent.p();
    const bool term = policy == WindowPolicy::Terminated;
    auto inv = gf::right_inverse(parent.generator());

    const int stream_blocks = info_blocks + (term ? m : 0);
    Matrix a = encoder_matrix(parent, info_blocks, stream_blocks);
    const int stream = a.cols();
    const int outer_in = (stream + k - 1) / k;
    const int outer_out = outer_in + (term ? m : 0);
    Matrix b = first_rows(encoder_matrix(parent, outer_in, outer_out), stream);
    const int len = b.cols();

    if (gf::rank(a) != a.rows()) {
        fail(ErrorKind::RankDeficient, "window inner encoder is not injective; use a terminated window");
    }

    auto gens = nullspace_ops(a, len, true, &b);
    auto zgens = nullspace_ops(b, len, false, nullptr);
    gens.insert(gens.end(), zgens.begin(), zgens.end());
    gens = minimal_span_css(std::move(gens));

    std::vector<PauliWindow> lx, lz;
    for (int s = 0; s < a.rows(); ++s) {
        auto w = solve_with_inverse(b, a.row(s), inv.h, inv.delay);
        auto u = solve_with_inverse(a, negated_unit(p, a.rows(), s), inv.h, inv.delay);
        if (!w || !u) {
            fail(ErrorKind::Internal, "logical operator equations have no solution");
        }
        lx.emplace_back(p, Vec(len, 0), std::move(*w));
        lz.emplace_back(p, b.left_mul(*u), Vec(len, 0));
    }
    StabilizerWindow stab(p, len, std::move(gens), std::move(lx), std::move(lz));
    return QccWindow{info_blocks, policy, stream, std::move(a), std::move(b), std::move(stab)};
}

QccCode::QccCode(cc::ConvCode parent, QccWindow window, std::vector<Template> stabilizers,
                 std::vector<Template> logical_x, std::vector<Template> logical_z, gf::PolyMatrix inverse, int delay)
    : parent_(std::move(parent)),
      window_(std::move(window)),
      stab_t_(std::move(stabilizers)),
      lx_t_(std::move(logical_x)),
      lz_t_(std::move(logical_z)),
      inverse_(std::move(inverse)),
      delay_(delay),
      support_bound_(0) {
    for (const auto &t : stab_t_) {
        support_bound_ = std::max(support_bound_, t.pattern.length());
    }
}

namespace {

Template cut_template(const PauliWindow &op, int origin) {
    auto [lo, hi] = op.span();
    if (lo < 0) {
        return {PauliWindow(op.p(), 0), 0};
    }
    Vec x(op.x().begin() + lo, op.x().begin() + hi + 1);
    Vec z(op.z().begin() + lo, op.z().begin() + hi + 1);
    return {PauliWindow(op.p(), std::move(x), std::move(z)), lo - origin};
}

struct Templates {
    std::vector<Template> stab, lx, lz;
};

// Reads periodic templates off the middle period of a long terminated window
// and checks that neighbouring shifts are stabilizer elements too.
Templates extract_templates(const cc::ConvCode &parent) {
    const int k = parent.k();
    const int period = parent.n() * parent.n();
    for (int periods = 4 * parent.m() + 8; periods <= 16 * parent.m() + 64; periods *= 2) {
        QccWindow w = build_window(parent, periods * k, WindowPolicy::Terminated);
        const int c = periods / 2;
        const int origin = c * period;
        const int len = w.stab.length();
        Templates t;
        bool ok = true;
        for (const auto &g : w.stab.generators()) {
            int start = g.span().first;
            if (start < origin || start >= origin + period) {
                continue;
            }
            Template tp = cut_template(g, origin);
            for (int shift : {-period, period}) {
                int at = origin + tp.offset + shift;
                if (at < 0 || at + tp.pattern.length() > len ||
                    !w.stab.in_group(tp.pattern.placed(len, at))) {
                    ok = false;
                }
            }
            t.stab.push_back(std::move(tp));
        }
        if (!ok) {
            continue;
        }
        for (int blk = c * k; blk < (c + 1) * k; ++blk) {
            for (int i = 0; i < k; ++i) {
                int s = blk * k + i;
                t.lx.push_back(cut_template(w.stab.logical_x()[s], origin));
                t.lz.push_back(cut_template(w.stab.logical_z()[s], origin));
            }
        }
        return t;
    }
    fail(ErrorKind::Internal, "stabilizer templates are not shift invariant");
}

}  // namespace

QccCode build_qcc(const cc::ConvCode &parent, Symbol N, int window_blocks, WindowPolicy policy) {
    if (N != parent.p()) {
        fail(ErrorKind::ModulusMismatch, "register dimension N must equal the field size p of the parent");
    }
    auto verdict = gf::catastrophic_check(parent.generator());
    if (verdict.verdict == gf::Verdict::Catastrophic) {
        fail(ErrorKind::Catastrophic, "catastrophic parent (witness " + verdict.witness.to_string() + ")");
    }
    auto inv = gf::right_inverse(parent.generator());
    Templates t = extract_templates(parent);
    QccWindow window = build_window(parent, window_blocks, policy);
    QccCode code(parent, std::move(window), std::move(t.stab), std::move(t.lx), std::move(t.lz), inv.h,
                 inv.delay);
    if (code.length() <= code.support_bound()) {
        fail(ErrorKind::WindowTooSmall, "window of " + std::to_string(code.length()) +
                                            " registers does not exceed the template support " +
                                            std::to_string(code.support_bound()));
    }
    return code;
}

CodewordForm codeword_form(const cc::ConvCode &parent) {
    auto verdict = gf::catastrophic_check(parent.generator());
    if (verdict.verdict == gf::Verdict::Catastrophic) {
        fail(ErrorKind::Catastrophic, "catastrophic parent (witness " + verdict.witness.to_string() + ")");
    }
    return {parent.generator(), parent.generator()};
}

}  // namespace qcc::code
