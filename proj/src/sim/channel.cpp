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

#include "sim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace qcc::sim {

const char *model_name(Model m) noexcept {
    return m == Model::Depolarizing ? "depolarizing" : "independent-xz";
}

Model parse_model(const std::string &name) {
    if (name == "depolarizing") {
        return Model::Depolarizing;
    }
    if (name == "independent-xz" || name == "independent") {
        return Model::IndependentXZ;
    }
    fail(ErrorKind::Parse, "unknown channel model '" + name + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_spec(const ChannelSpec &spec) {
    gf::Field f(spec.N);
    if (!(spec.p_err >= 0.0 && spec.p_err <= 1.0)) {
        fail(ErrorKind::InvalidArgument, "error probability must lie in [0, 1]");
    }
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t a = splitmix64(seed);
    std::uint64_t b = splitmix64(a ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

PauliWindow sample_error(const ChannelSpec &spec, int length, std::mt19937_64 &rng) {
    check_spec(spec);
    const Symbol N = spec.N;
    PauliWindow e(N, length);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (spec.model == Model::Depolarizing) {
        std::uniform_int_distribution<int> pick(1, N * N - 1);
        for (int j = 0; j < length; ++j) {
            if (coin(rng) < spec.p_err) {
                int v = pick(rng);
                e.set(j, static_cast<Symbol>(v / N), static_cast<Symbol>(v % N));
            }
        }
    } else {
        std::uniform_int_distribution<int> pick(1, N - 1);
        for (int j = 0; j < length; ++j) {
            Symbol x = 0;
            Symbol z = 0;
            if (coin(rng) < spec.p_err) {
                x = static_cast<Symbol>(pick(rng));
            }
            if (coin(rng) < spec.p_err) {
                z = static_cast<Symbol>(pick(rng));
            }
            e.set(j, x, z);
        }
    }
    return e;
}

PauliWindow sample_error(const ChannelSpec &spec, int length, std::uint64_t seed) {
    auto rng = trial_rng(seed, 0);
    return sample_error(spec, length, rng);
}

Interval wilson(std::uint64_t successes, std::uint64_t n, double z) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    const double nn = static_cast<double>(n);
    const double ph = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (ph + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn)) / denom;
    const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double hi = successes == n ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

TrialReport run_trials(const code::QccCode &code, const ChannelSpec &spec, std::uint64_t trials,
                       std::uint64_t seed, int jobs) {
    return run_trials(code.stab(), code.window().info_blocks, code.period(), spec, trials, seed, jobs);
}

TrialReport run_trials(const pauli::StabilizerWindow &stab, int timesteps, int section, const ChannelSpec &spec,
                       std::uint64_t trials, std::uint64_t seed, int jobs) {
    check_spec(spec);
    if (spec.N != stab.p()) {
        fail(ErrorKind::ModulusMismatch, "channel dimension differs from the code");
    }
    if (jobs < 1) {
        fail(ErrorKind::InvalidArgument, "jobs must be positive");
    }
    if (timesteps < 1) {
        fail(ErrorKind::InvalidArgument, "timesteps must be positive");
    }
    const int L = stab.length();
    const auto K = static_cast<std::uint64_t>(stab.logical_x().size());
    qva::ErrorTrellis trellis(stab, section);

    struct Counts {
        std::uint64_t blocks = 0;
        std::uint64_t symbols = 0;
    };
    auto work = [&](std::uint64_t begin, std::uint64_t end, Counts &out) {
        for (std::uint64_t t = begin; t < end; ++t) {
            auto rng = trial_rng(seed, t);
            PauliWindow e = sample_error(spec, L, rng);
            if (e.is_identity()) {
                continue;
            }
            gf::Vec syn = pauli::syndrome(e, stab);
            PauliWindow residual = e;
            if (std::any_of(syn.begin(), syn.end(), [](std::uint8_t v) { return v != 0; })) {
                auto path = qva::qva_decode(trellis, syn);
                residual = compose(e, inverse(path.correction));
            }
            auto cls = pauli::classify_residual(residual, stab);
            if (cls.kind == pauli::ResidualClass::LogicalError) {
                ++out.blocks;
                out.symbols += cls.affected.size();
            }
        }
    };

    const auto nj = static_cast<std::uint64_t>(jobs);
    std::vector<Counts> parts(nj);
    if (nj == 1) {
        work(0, trials, parts[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nj);
        for (std::uint64_t j = 0; j < nj; ++j) {
            const std::uint64_t b = trials * j / nj;
            const std::uint64_t e = trials * (j + 1) / nj;
            pool.emplace_back([&, j, b, e] {
                try {
                    work(b, e, parts[j]);
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        for (auto &err : errors) {
            if (err) {
                std::rethrow_exception(err);
            }
        }
    }

    TrialReport r;
    r.trials = trials;
    for (const auto &c : parts) {
        r.logical_block_errors += c.blocks;
        r.info_symbol_errors += c.symbols;
    }
    r.decoded_info_symbols = trials * K;
    r.timesteps = timesteps;
    const double T = r.timesteps;
    if (trials > 0) {
        r.pe_hat = static_cast<double>(r.logical_block_errors) / static_cast<double>(trials) / T;
        Interval ci = wilson(r.logical_block_errors, trials);
        r.pe_ci = {ci.lo / T, ci.hi / T};
    } else {
        r.pe_ci = {0.0, 1.0 / T};
    }
    if (r.decoded_info_symbols > 0) {
        r.pb_hat = static_cast<double>(r.info_symbol_errors) / static_cast<double>(r.decoded_info_symbols);
    }
    r.pb_ci = wilson(r.info_symbol_errors, r.decoded_info_symbols);
    return r;
}

Bounds union_bound(double A_d, double B_d, int d, double k, double p_err) {
    if (d <= 0 || k <= 0 || p_err < 0) {
        fail(ErrorKind::InvalidArgument, "union bound needs d > 0, k > 0 and p >= 0");
    }
    const double f = std::pow(2.0, d) * std::pow(p_err, d / 2.0);
    return {A_d * f, B_d / k * f};
}

DistanceReport measure_distance(const pauli::StabilizerWindow &stab, int max_weight) {
    const int L = stab.length();
    const Symbol p = stab.p();
    const auto &gens = stab.generators();
    const int G = static_cast<int>(gens.size());
    if (max_weight < 1 || max_weight > L) {
        fail(ErrorKind::InvalidArgument, "max weight out of range");
    }
    gf::Field f(p);

    // contrib[(j * p + x) * p + z] = syndrome of the single-register Pauli.
    std::vector<gf::Vec> contrib(static_cast<std::size_t>(L) * p * p, gf::Vec(G, 0));
    for (int j = 0; j < L; ++j) {
        for (Symbol x = 0; x < p; ++x) {
            for (Symbol z = 0; z < p; ++z) {
                auto &c = contrib[(static_cast<std::size_t>(j) * p + x) * p + z];
                for (int g = 0; g < G; ++g) {
                    int v = x * gens[g].z(j) - z * gens[g].x(j);
                    c[g] = static_cast<std::uint8_t>(((v % p) + p) % p);
                }
            }
        }
    }

    DistanceReport rep;
    std::vector<int> regs;
    std::vector<std::pair<Symbol, Symbol>> vals;
    std::vector<gf::Vec> acc;

    auto visit = [&](auto &&self, int depth, int w, int start) -> void {
        if (depth == w) {
            const auto &s = acc[depth];
            if (std::any_of(s.begin(), s.end(), [](std::uint8_t v) { return v != 0; })) {
                return;
            }
            PauliWindow op(p, L);
            for (int i = 0; i < w; ++i) {
                op.set(regs[i], vals[i].first, vals[i].second);
            }
            if (stab.in_group(op)) {
                return;
            }
            auto cls = pauli::classify_residual(op, stab);
            ++rep.A_d;
            rep.B_d += cls.affected.size();
            return;
        }
        for (int j = start; j <= L - (w - depth); ++j) {
            regs[depth] = j;
            for (Symbol x = 0; x < p; ++x) {
                for (Symbol z = 0; z < p; ++z) {
                    if (!x && !z) {
                        continue;
                    }
                    vals[depth] = {x, z};
                    const auto &c = contrib[(static_cast<std::size_t>(j) * p + x) * p + z];
                    auto &next = acc[depth + 1];
                    const auto &cur = acc[depth];
                    for (int g = 0; g < G; ++g) {
                        next[g] = static_cast<std::uint8_t>(f.add(cur[g], c[g]));
                    }
                    self(self, depth + 1, w, j + 1);
                }
            }
        }
    };

    for (int w = 1; w <= max_weight; ++w) {
        regs.assign(w, 0);
        vals.assign(w, {0, 0});
        acc.assign(w + 1, gf::Vec(G, 0));
        visit(visit, 0, w, 0);
        if (rep.A_d > 0) {
            rep.d = w;
            return rep;
        }
    }
    return rep;
}

}  // namespace qcc::sim
