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

#include "cc/conv_code.hpp"

#include <algorithm>

namespace qcc::cc {

ConvCode::ConvCode(gf::PolyMatrix g) : g_(std::move(g)), m_(std::max(0, g_.max_degree())) {
    if (g_.rows() > g_.cols()) {
        fail(ErrorKind::DimensionMismatch, "convolutional code requires k <= n");
    }
    if (g_.max_degree() < 0) {
        fail(ErrorKind::RankDeficient, "generator matrix is zero");
    }
}

int ConvCode::vda_window() const noexcept {
    if (n() == k()) {
        return m_ + 1;
    }
    return k() * m_ / (n() - k()) + 1;
}

Symbols encode_stream(const ConvCode &code, const Symbols &info, bool terminate) {
    const int k = code.k();
    const int n = code.n();
    const int m = code.m();
    if (info.empty() || info.size() % k) {
        fail(ErrorKind::InvalidArgument, "info length must be a positive multiple of k");
    }
    for (auto s : info) {
        if (s >= code.p()) {
            fail(ErrorKind::InvalidArgument, "info symbol out of range");
        }
    }
    gf::Field f(code.p());
    const int t_in = static_cast<int>(info.size()) / k;
    const int t_out = t_in + (terminate ? m : 0);
    Symbols out(static_cast<size_t>(t_out) * n, 0);
    for (int t = 0; t < t_out; ++t) {
        for (int j = 0; j < n; ++j) {
            Symbol acc = 0;
            for (int d = 0; d <= m && d <= t; ++d) {
                if (t - d >= t_in) {
                    continue;
                }
                for (int i = 0; i < k; ++i) {
                    acc = f.add(acc, f.mul(code.tap(i, j, d), info[(t - d) * k + i]));
                }
            }
            out[static_cast<size_t>(t) * n + j] = static_cast<std::uint8_t>(acc);
        }
    }
    return out;
}

}  // namespace qcc::cc
