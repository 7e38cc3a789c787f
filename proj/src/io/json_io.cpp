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

#include "io/json_io.hpp"

namespace qcc::io {

namespace {

int get_int(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        fail(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
    }
    if (!it->is_number_integer()) {
        fail(ErrorKind::Parse, std::string("field \"") + key + "\" must be an integer");
    }
    return it->get<int>();
}

// G as k rows of n coefficient arrays.
std::vector<gf::Poly> parse_rows(gf::Symbol p, const json &g, int rows, int cols) {
    if (!g.is_array() || static_cast<int>(g.size()) != rows) {
        fail(ErrorKind::Parse, "matrix must have " + std::to_string(rows) + " rows");
    }
    std::vector<gf::Poly> entries;
    for (const auto &row : g) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            fail(ErrorKind::Parse, "every matrix row must have " + std::to_string(cols) + " entries");
        }
        for (const auto &e : row) {
            entries.push_back(poly_from_json(p, e));
        }
    }
    return entries;
}

json templates(const std::vector<code::Template> &list) {
    json out = json::array();
    for (const auto &t : list) {
        out.push_back({{"pattern", t.pattern.to_string()}, {"offset", t.offset}});
    }
    return out;
}

}  // namespace

gf::Poly poly_from_json(gf::Symbol p, const json &coeffs) {
    if (!coeffs.is_array()) {
        fail(ErrorKind::Parse, "polynomial must be an array of coefficients");
    }
    std::vector<gf::Symbol> c;
    for (const auto &v : coeffs) {
        if (!v.is_number_integer()) {
            fail(ErrorKind::Parse, "polynomial coefficients must be integers");
        }
        auto x = v.get<long long>();
        if (x < 0 || x >= p) {
            fail(ErrorKind::Parse, "coefficient " + std::to_string(x) + " is outside GF(" + std::to_string(p) + ")");
        }
        c.push_back(static_cast<gf::Symbol>(x));
    }
    return gf::Poly(p, std::move(c));
}

json poly_to_json(const gf::Poly &poly) {
    json out = json::array();
    for (auto c : poly.coeffs()) {
        out.push_back(static_cast<int>(c));
    }
    return out;
}

json matrix_to_json(const gf::PolyMatrix &m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(poly_to_json(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return {{"p", m.modulus()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

gf::PolyMatrix matrix_from_json(const json &doc) {
    if (!doc.is_object()) {
        fail(ErrorKind::Parse, "matrix must be a JSON object");
    }
    gf::Field f(static_cast<gf::Symbol>(get_int(doc, "p")));
    const int rows = get_int(doc, "rows");
    const int cols = get_int(doc, "cols");
    if (rows < 1 || cols < 1) {
        fail(ErrorKind::Parse, "matrix dimensions must be positive");
    }
    auto it = doc.find("entries");
    if (it == doc.end()) {
        fail(ErrorKind::Parse, "missing field \"entries\"");
    }
    return gf::PolyMatrix(f.p(), rows, cols, parse_rows(f.p(), *it, rows, cols));
}

Descriptor descriptor_from_json(const json &doc) {
    if (!doc.is_object()) {
        fail(ErrorKind::Parse, "code descriptor must be a JSON object");
    }
    const int p = get_int(doc, "p");
    if (p < 2 || p > 251 || !gf::is_prime(static_cast<unsigned>(p))) {
        fail(ErrorKind::InvalidArgument, "p must be a prime at most 251");
    }
    const int k = get_int(doc, "k");
    const int n = get_int(doc, "n");
    if (k < 1 || n < k) {
        fail(ErrorKind::InvalidArgument, "need 1 <= k <= n");
    }
    auto it = doc.find("G");
    if (it == doc.end()) {
        fail(ErrorKind::Parse, "missing field \"G\"");
    }
    const auto sp = static_cast<gf::Symbol>(p);
    gf::PolyMatrix g(sp, k, n, parse_rows(sp, *it, k, n));
    int N = p;
    if (doc.contains("N")) {
        N = get_int(doc, "N");
    }
    if (N < 2 || N > 251 || !gf::is_prime(static_cast<unsigned>(N))) {
        fail(ErrorKind::InvalidArgument, "N must be a prime at most 251");
    }
    return {cc::ConvCode(std::move(g)), static_cast<gf::Symbol>(N)};
}

Descriptor parse_descriptor(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    return descriptor_from_json(doc);
}

json descriptor_to_json(const cc::ConvCode &code, gf::Symbol N) {
    json g = matrix_to_json(code.generator())["entries"];
    return {{"p", code.p()}, {"k", code.k()}, {"n", code.n()}, {"G", std::move(g)}, {"N", N}};
}

json code_to_json(const code::QccCode &code) {
    const auto &w = code.window();
    json parent = descriptor_to_json(code.parent(), code.N());
    json out;
    out["version"] = QCCWB_VERSION;
    out["parent"] = std::move(parent);
    out["N"] = code.N();
    out["registers_per_period"] = code.period();
    out["logicals_per_period"] = code.logicals_per_period();
    out["shift_step"] = code.period();
    out["support_bound"] = code.support_bound();
    out["min_traceback"] = code.min_traceback();
    out["inverse"] = {{"delay", code.inverse_delay()}, {"H", matrix_to_json(code.inverse())}};
    out["window"] = {{"info_blocks", w.info_blocks},
                     {"policy", w.policy == code::WindowPolicy::Terminated ? "terminated" : "truncated"},
                     {"registers", code.length()},
                     {"generators", static_cast<int>(w.stab.generators().size())},
                     {"logicals", static_cast<int>(w.stab.logical_x().size())}};
    out["stabilizers"] = templates(code.stabilizer_templates());
    out["logical_x"] = templates(code.logical_x_templates());
    out["logical_z"] = templates(code.logical_z_templates());
    return out;
}

json state_to_json(const statevec::StateVector &state, double threshold) {
    json amps = json::array();
    for (const auto &e : state.nonzero_entries(threshold)) {
        amps.push_back({e.index, e.re, e.im});
    }
    return {{"N", state.N()}, {"registers", state.registers()}, {"amplitudes", std::move(amps)}};
}

}  // namespace qcc::io
