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

#ifndef QCC_IO_JSON_IO_HPP
#define QCC_IO_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "qcc/qcc_code.hpp"
#include "statevec/state_vector.hpp"

namespace qcc::io {

using nlohmann::json;

/// {"p", "k", "n", "G", "N"}; N defaults to p.
struct Descriptor {
    cc::ConvCode code;
    gf::Symbol N;
};

Descriptor parse_descriptor(const std::string &text);
Descriptor descriptor_from_json(const json &doc);
json descriptor_to_json(const cc::ConvCode &code, gf::Symbol N);

/// Coefficients lowest degree first; the zero polynomial is [].
json poly_to_json(const gf::Poly &poly);
gf::Poly poly_from_json(gf::Symbol p, const json &coeffs);
/// {"p", "rows", "cols", "entries": row-major nested coefficient arrays}
json matrix_to_json(const gf::PolyMatrix &m);
gf::PolyMatrix matrix_from_json(const json &doc);

json code_to_json(const code::QccCode &code);
/// Nonzero amplitudes as [index, re, im] triples.
json state_to_json(const statevec::StateVector &state, double threshold = 1e-12);

}  // namespace qcc::io

#endif
