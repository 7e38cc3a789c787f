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

#include "qva/error_trellis.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "caps.hpp"

namespace qcc::qva {

namespace {

int bits_for(Symbol p) {
    int b = 0;
    while ((1u << b) < p) {
        ++b;
    }
    return std::max(b, 1);
}

}  // namespace

ErrorTrellis::ErrorTrellis(const StabilizerWindow &stab, int section) : stab_(&stab), section_(section) {
    if (section < 1) {
        fail(ErrorKind::InvalidArgument, "trellis section must be positive");
    }
    const int len = stab.length();
    const auto &gens = stab.generators();
    bits_ = bits_for(stab.p());
    std::vector<std::pair<int, int>> spans;
    for (const auto &g : gens) {
        auto s = g.span();
        if (s.first < 0) {
            fail(ErrorKind::InvalidArgument, "identity generator in stabilizer window");
        }
        spans.push_back(s);
    }
    active_.assign(len + 1, {});
    for (int c = 0; c <= len; ++c) {
        for (size_t g = 0; g < gens.size(); ++g) {
            if (spans[g].first < c && c <= spans[g].second) {
                active_[c].push_back(static_cast<int>(g));
            }
        }
        if (static_cast<int>(active_[c].size()) * bits_ > 64) {
            fail(ErrorKind::CapacityExceeded, "too many generators straddle cut " + std::to_string(c));
        }
    }
    touch_.assign(len, {});
    for (int c = 0; c < len; ++c) {
        for (size_t g = 0; g < gens.size(); ++g) {
            if (spans[g].first > c || c > spans[g].second) {
                continue;
            }
            Touch t{static_cast<int>(g), -1, -1, gens[g].x(c), gens[g].z(c)};
            auto slot = [&](int cut) {
                const auto &a = active_[cut];
                auto it = std::find(a.begin(), a.end(), static_cast<int>(g));
                return it == a.end() ? -1 : static_cast<int>(it - a.begin());
            };
            t.from = slot(c);
            t.to = slot(c + 1);
            touch_[c].push_back(t);
        }
    }
    const std::uint64_t cap = caps().error_trellis_states;
    counts_.assign(len + 1, 1);
    for (int c = 1; c < len; ++c) {
        gf::Matrix left(stab.p(), 0, 2 * c);
        for (int g : active_[c]) {
            Vec row(2 * c);
            for (int j = 0; j < c; ++j) {
                row[j] = gens[g].x(j);
                row[c + j] = gens[g].z(j);
            }
            left.append_row(row);
        }
        std::uint64_t count = 1;
        for (int r = gf::rank(left); r > 0; --r) {
            count *= stab.p();
            if (count > cap) {
                fail(ErrorKind::CapacityExceeded, "error trellis exceeds the state cap of " + std::to_string(cap));
            }
        }
        counts_[c] = count;
    }
}

std::uint64_t ErrorTrellis::max_state_count() const noexcept {
    return *std::max_element(counts_.begin(), counts_.end());
}

std::vector<std::uint64_t> ErrorTrellis::block_state_count() const {
    std::vector<std::uint64_t> out;
    for (int c = 0; c <= length(); c += section_) {
        out.push_back(counts_[c]);
    }
    return out;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Dynamic program over cuts [begin, end] starting from one state.
class Search {
   public:
    Search(const ErrorTrellis &tr, const Vec &syn, int begin, int end, std::uint64_t start, bool free_end)
        : tr_(tr), syn_(syn), begin_(begin), end_(end) {
        const int cuts = end - begin + 1;
        states_.assign(cuts, {});
        index_.assign(cuts, {});
        next_.assign(cuts, {});
        ctg_.assign(cuts, {});
        states_[0].push_back(start);
        index_[0].emplace(start, 0);
        forward();
        backward(free_end);
    }

    int cost() const { return ctg_[0][0]; }

    // Greedy lexicographic walk over registers [begin, stop); returns the
    // state index reached and writes branches into `out`.
    std::uint64_t walk(int stop, PauliWindow &out, int out_offset) const {
        const int B = tr_.branches_per_register();
        const Symbol p = tr_.p();
        std::uint32_t i = 0;
        for (int c = begin_; c < stop; ++c) {
            const int k = c - begin_;
            const int target = ctg_[k][i];
            bool found = false;
            for (int b = 0; b < B; ++b) {
                std::int32_t nx = next_[k][static_cast<size_t>(i) * B + b];
                if (nx < 0) {
                    continue;
                }
                if ((b != 0) + ctg_[k + 1][nx] == target) {
                    out.set(c - out_offset, b / p, b % p);
                    i = static_cast<std::uint32_t>(nx);
                    found = true;
                    break;
                }
            }
            if (!found) {
                fail(ErrorKind::Internal, "trellis walk lost the optimal path");
            }
        }
        return states_[stop - begin_][i];
    }

    std::vector<std::uint32_t> counts() const {
        std::vector<std::uint32_t> c;
        for (const auto &s : states_) {
            c.push_back(static_cast<std::uint32_t>(s.size()));
        }
        return c;
    }

   private:
    void forward() {
        const int B = tr_.branches_per_register();
        const Symbol p = tr_.p();
        const int bits = tr_.bits_per_symbol();
        const std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
        const std::uint64_t cap = caps().error_trellis_states;
        for (int c = begin_; c < end_; ++c) {
            const int k = c - begin_;
            const auto &touches = tr_.touches(c);
            auto &nx = next_[k];
            nx.assign(states_[k].size() * B, -1);
            for (size_t i = 0; i < states_[k].size(); ++i) {
                const std::uint64_t sigma = states_[k][i];
                for (int b = 0; b < B; ++b) {
                    const Symbol x = b / p;
                    const Symbol z = b % p;
                    std::uint64_t ns = 0;
                    bool ok = true;
                    for (const auto &t : touches) {
                        Symbol val = t.from >= 0 ? static_cast<Symbol>((sigma >> (bits * t.from)) & mask) : 0;
                        val = (val + x * t.gz + (p - (z * t.gx) % p)) % p;
                        if (t.to < 0) {
                            if (val != syn_[t.gen]) {
                                ok = false;
                                break;
                            }
                        } else {
                            ns |= static_cast<std::uint64_t>(val) << (bits * t.to);
                        }
                    }
                    if (!ok) {
                        continue;
                    }
                    auto [it, inserted] = index_[k + 1].emplace(ns, static_cast<std::uint32_t>(states_[k + 1].size()));
                    if (inserted) {
                        states_[k + 1].push_back(ns);
                        if (states_[k + 1].size() > cap) {
                            fail(ErrorKind::CapacityExceeded, "error trellis exceeds the state cap");
                        }
                    }
                    nx[i * B + b] = static_cast<std::int32_t>(it->second);
                }
            }
        }
    }

    void backward(bool free_end) {
        const int B = tr_.branches_per_register();
        const int last = end_ - begin_;
        ctg_[last].assign(states_[last].size(), free_end ? 0 : kInf);
        if (!free_end) {
            auto it = index_[last].find(0);
            if (it != index_[last].end()) {
                ctg_[last][it->second] = 0;
            }
        }
        for (int k = last - 1; k >= 0; --k) {
            ctg_[k].assign(states_[k].size(), kInf);
            for (size_t i = 0; i < states_[k].size(); ++i) {
                int best = kInf;
                for (int b = 0; b < B; ++b) {
                    std::int32_t nx = next_[k][i * B + b];
                    if (nx >= 0 && ctg_[k + 1][nx] < kInf) {
                        best = std::min(best, (b != 0) + ctg_[k + 1][nx]);
                    }
                }
                ctg_[k][i] = best;
            }
        }
    }

    const ErrorTrellis &tr_;
    const Vec &syn_;
    int begin_;
    int end_;
    std::vector<std::vector<std::uint64_t>> states_;
    std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index_;
    std::vector<std::vector<std::int32_t>> next_;
    std::vector<std::vector<int>> ctg_;
};

void check_syndrome(const ErrorTrellis &tr, const Vec &syn) {
    if (syn.size() != tr.stab().generators().size()) {
        fail(ErrorKind::InconsistentSyndrome, "syndrome length " + std::to_string(syn.size()) +
                                                  " does not match " +
                                                  std::to_string(tr.stab().generators().size()) + " generators");
    }
    for (auto s : syn) {
        if (s >= tr.p()) {
            fail(ErrorKind::InconsistentSyndrome, "syndrome value out of range");
        }
    }
}

}  // namespace

RecoveryPath qva_decode(const ErrorTrellis &trellis, const Vec &syndrome) {
    check_syndrome(trellis, syndrome);
    const int len = trellis.length();
    PauliWindow corr(trellis.p(), len);
    if (std::all_of(syndrome.begin(), syndrome.end(), [](auto v) { return v == 0; })) {
        return {corr, 0, {}};
    }
    Search search(trellis, syndrome, 0, len, 0, false);
    if (search.cost() >= kInf) {
        fail(ErrorKind::InconsistentSyndrome, "no Pauli error produces this syndrome");
    }
    search.walk(len, corr, 0);
    return {corr, search.cost(), search.counts()};
}

std::vector<StreamSegment> streaming_decode(const ErrorTrellis &trellis, const Vec &syndrome, int traceback,
                                            int support_bound) {
    check_syndrome(trellis, syndrome);
    const int section = trellis.section();
    const int minimum = (support_bound + section - 1) / section;
    if (traceback < minimum) {
        fail(ErrorKind::InvalidArgument, "traceback " + std::to_string(traceback) + " is below the minimum of " +
                                             std::to_string(minimum) + " blocks");
    }
    const int len = trellis.length();
    std::vector<StreamSegment> out;
    std::uint64_t state = 0;
    for (int b = 0; b * section < len; ++b) {
        const int begin = b * section;
        const int stop = std::min(len, begin + section);
        const int end = std::min(len, begin + (traceback + 1) * section);
        Search search(trellis, syndrome, begin, end, state, end < len);
        if (search.cost() >= kInf) {
            fail(ErrorKind::InconsistentSyndrome, "no Pauli error produces this syndrome");
        }
        PauliWindow seg(trellis.p(), stop - begin);
        state = search.walk(stop, seg, begin);
        int w = seg.weight();
        out.push_back({b, std::move(seg), w});
    }
    return out;
}

PauliWindow assemble(const std::vector<StreamSegment> &segments, Symbol p, int length, int section) {
    PauliWindow out(p, length);
    for (const auto &s : segments) {
        for (int j = 0; j < s.correction.length(); ++j) {
            out.set(s.block * section + j, s.correction.x(j), s.correction.z(j));
        }
    }
    return out;
}

}  // namespace qcc::qva
