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

#include "cc/trellis.hpp"

#include <limits>
#include <string>

#include "caps.hpp"

namespace qcc::cc {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::uint64_t ipow(std::uint64_t b, int e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > limit) {
            return limit + 1;
        }
    }
    return r;
}

}  // namespace

Trellis::Trellis(const ConvCode &code) : code_(code) {
    const int k = code.k();
    const int n = code.n();
    const int m = code.m();
    const std::uint64_t p = code.p();
    const std::uint64_t cap = caps().trellis_states;
    std::uint64_t states = ipow(p, k * m, cap);
    if (states > cap) {
        fail(ErrorKind::CapacityExceeded,
             "trellis needs p^(k*m) states, above the cap of " + std::to_string(cap));
    }
    states_ = static_cast<std::uint32_t>(states);
    inputs_ = static_cast<std::uint32_t>(ipow(p, k, ~0ull));
    const std::uint32_t high = static_cast<std::uint32_t>(m > 0 ? ipow(p, k * (m - 1), ~0ull) : 0);

    gf::Field f(code.p());
    next_.resize(static_cast<size_t>(states_) * inputs_);
    out_.resize(next_.size() * n);
    std::vector<std::uint8_t> hist(static_cast<size_t>(k) * (m + 1));
    for (std::uint32_t s = 0; s < states_; ++s) {
        // hist block d (0 = current input, d >= 1 from the state).
        std::uint32_t rest = s;
        for (int pos = k * m - 1; pos >= 0; --pos) {
            hist[k + pos] = static_cast<std::uint8_t>(rest % p);
            rest /= static_cast<std::uint32_t>(p);
        }
        for (std::uint32_t in = 0; in < inputs_; ++in) {
            Symbols u = input_vector(in);
            std::copy(u.begin(), u.end(), hist.begin());
            size_t b = static_cast<size_t>(s) * inputs_ + in;
            next_[b] = m > 0 ? in * high + s / inputs_ : 0;
            for (int j = 0; j < n; ++j) {
                Symbol acc = 0;
                for (int d = 0; d <= m; ++d) {
                    for (int i = 0; i < k; ++i) {
                        acc = f.add(acc, f.mul(code.tap(i, j, d), hist[d * k + i]));
                    }
                }
                out_[b * n + j] = static_cast<std::uint8_t>(acc);
            }
        }
    }
}

Symbols Trellis::input_vector(std::uint32_t input) const {
    const int k = code_.k();
    Symbols u(k);
    for (int i = k - 1; i >= 0; --i) {
        u[i] = static_cast<std::uint8_t>(input % code_.p());
        input /= code_.p();
    }
    return u;
}

std::uint32_t Trellis::input_index(const std::uint8_t *symbols) const noexcept {
    std::uint32_t idx = 0;
    for (int i = 0; i < code_.k(); ++i) {
        idx = idx * code_.p() + symbols[i];
    }
    return idx;
}

namespace {

std::int64_t branch_metric(const std::uint8_t *label, const std::uint8_t *rx, int n) {
    std::int64_t d = 0;
    for (int j = 0; j < n; ++j) {
        d += label[j] != rx[j];
    }
    return d;
}

DecodePath finish(const Trellis &tr, const Symbols &received, int info_blocks, std::vector<std::uint32_t> inputs) {
    const int k = tr.code().k();
    const int n = tr.code().n();
    DecodePath path;
    path.metric = 0;
    std::uint32_t s = 0;
    path.states.push_back(s);
    for (size_t t = 0; t < inputs.size(); ++t) {
        path.metric += branch_metric(tr.output(s, inputs[t]), &received[t * n], n);
        s = tr.next(s, inputs[t]);
        path.states.push_back(s);
        if (static_cast<int>(t) < info_blocks) {
            Symbols u = tr.input_vector(inputs[t]);
            path.info.insert(path.info.end(), u.begin(), u.begin() + k);
        }
    }
    return path;
}

DecodePath decode_exact(const Trellis &tr, const Symbols &received, bool terminated) {
    const int n = tr.code().n();
    const int blocks = static_cast<int>(received.size()) / n;
    const int info_blocks = terminated ? blocks - tr.code().m() : blocks;
    const std::uint32_t S = tr.state_count();
    const std::uint32_t I = tr.input_count();

    // cost[t][s]: minimum metric over blocks t.. from state s.
    std::vector<std::int64_t> cost(static_cast<size_t>(blocks + 1) * S, kInf);
    for (std::uint32_t s = 0; s < S; ++s) {
        cost[static_cast<size_t>(blocks) * S + s] = (!terminated || s == 0) ? 0 : kInf;
    }
    for (int t = blocks - 1; t >= 0; --t) {
        const std::uint32_t in_count = t < info_blocks ? I : 1;
        for (std::uint32_t s = 0; s < S; ++s) {
            std::int64_t best = kInf;
            for (std::uint32_t in = 0; in < in_count; ++in) {
                std::int64_t c = cost[static_cast<size_t>(t + 1) * S + tr.next(s, in)];
                if (c >= kInf) {
                    continue;
                }
                best = std::min(best, c + branch_metric(tr.output(s, in), &received[static_cast<size_t>(t) * n], n));
            }
            cost[static_cast<size_t>(t) * S + s] = best;
        }
    }
    std::vector<std::uint32_t> inputs;
    std::uint32_t s = 0;
    for (int t = 0; t < blocks; ++t) {
        const std::uint32_t in_count = t < info_blocks ? I : 1;
        const std::int64_t target = cost[static_cast<size_t>(t) * S + s];
        for (std::uint32_t in = 0; in < in_count; ++in) {
            std::int64_t c = cost[static_cast<size_t>(t + 1) * S + tr.next(s, in)];
            if (c < kInf &&
                c + branch_metric(tr.output(s, in), &received[static_cast<size_t>(t) * n], n) == target) {
                inputs.push_back(in);
                s = tr.next(s, in);
                break;
            }
        }
    }
    return finish(tr, received, info_blocks, std::move(inputs));
}

DecodePath decode_streaming(const Trellis &tr, const Symbols &received, bool terminated, int depth) {
    const int n = tr.code().n();
    const int blocks = static_cast<int>(received.size()) / n;
    const int info_blocks = terminated ? blocks - tr.code().m() : blocks;
    const std::uint32_t S = tr.state_count();
    const std::uint32_t I = tr.input_count();

    std::vector<std::int64_t> metric(S, kInf), next_metric(S);
    metric[0] = 0;
    // Survivor: predecessor state and input into (t+1, s).
    std::vector<std::uint32_t> prev(static_cast<size_t>(blocks) * S), inp(static_cast<size_t>(blocks) * S);
    std::vector<std::uint32_t> decided(blocks, 0);
    std::vector<bool> have(blocks, false);

    auto trace = [&](int t_end, std::uint32_t s, int down_to) {
        for (int t = t_end - 1; t >= down_to; --t) {
            size_t b = static_cast<size_t>(t) * S + s;
            if (!have[t]) {
                decided[t] = inp[b];
            }
            s = prev[b];
        }
    };

    for (int t = 0; t < blocks; ++t) {
        std::fill(next_metric.begin(), next_metric.end(), kInf);
        const std::uint32_t in_count = t < info_blocks ? I : 1;
        for (std::uint32_t s = 0; s < S; ++s) {
            if (metric[s] >= kInf) {
                continue;
            }
            for (std::uint32_t in = 0; in < in_count; ++in) {
                std::uint32_t ns = tr.next(s, in);
                std::int64_t c = metric[s] + branch_metric(tr.output(s, in), &received[static_cast<size_t>(t) * n], n);
                // Visiting (s, in) in increasing order keeps the smallest
                // predecessor on ties.
                if (c < next_metric[ns]) {
                    next_metric[ns] = c;
                    prev[static_cast<size_t>(t) * S + ns] = s;
                    inp[static_cast<size_t>(t) * S + ns] = in;
                }
            }
        }
        metric.swap(next_metric);
        int commit = t - depth;
        if (commit >= 0) {
            std::uint32_t best = 0;
            for (std::uint32_t s = 1; s < S; ++s) {
                if (metric[s] < metric[best]) {
                    best = s;
                }
            }
            // Trace to block `commit` and keep only that decision.
            std::uint32_t s = best;
            for (int u = t; u > commit; --u) {
                s = prev[static_cast<size_t>(u) * S + s];
            }
            decided[commit] = inp[static_cast<size_t>(commit) * S + s];
            have[commit] = true;
        }
    }
    std::uint32_t final_state = 0;
    if (!terminated) {
        for (std::uint32_t s = 1; s < S; ++s) {
            if (metric[s] < metric[final_state]) {
                final_state = s;
            }
        }
    }
    trace(blocks, final_state, 0);

    // Streaming decisions may not form a connected path; re-encode the
    // decided inputs from the zero state so the metric is consistent.
    std::vector<std::uint32_t> inputs(decided.begin(), decided.end());
    for (int t = info_blocks; t < blocks; ++t) {
        inputs[t] = 0;
    }
    return finish(tr, received, info_blocks, std::move(inputs));
}

}  // namespace

DecodePath viterbi_decode(const Trellis &trellis, const Symbols &received, const ViterbiOptions &opts) {
    const int n = trellis.code().n();
    if (received.empty() || received.size() % n) {
        fail(ErrorKind::InvalidArgument, "received length must be a positive multiple of n");
    }
    for (auto s : received) {
        if (s >= trellis.code().p()) {
            fail(ErrorKind::InvalidArgument, "received symbol out of range");
        }
    }
    const int blocks = static_cast<int>(received.size()) / n;
    if (opts.terminated && blocks <= trellis.code().m()) {
        fail(ErrorKind::WindowTooSmall, "terminated decoding needs more than m received blocks");
    }
    if (opts.traceback == 0) {
        return decode_exact(trellis, received, opts.terminated);
    }
    int depth = opts.traceback < 0 ? 5 * (trellis.code().m() + 1) : opts.traceback;
    return decode_streaming(trellis, received, opts.terminated, depth);
}

}  // namespace qcc::cc
