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

#include "qcc/qcc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "caps.hpp"
#include "cc/trellis.hpp"
#include "io/json_io.hpp"
#include "qva/error_trellis.hpp"
#include "sim/channel.hpp"
#include "statevec/circuits.hpp"
#include "statevec/verify.hpp"

struct qcc_conv {
    qcc::cc::ConvCode code;
    qcc::gf::Symbol N;
};

struct qcc_code {
    qcc::code::QccCode code;
    qcc::qva::ErrorTrellis trellis;

    explicit qcc_code(qcc::code::QccCode c) : code(std::move(c)), trellis(code.stab(), code.period()) {}
    qcc_code(const qcc_code &) = delete;
    qcc_code &operator=(const qcc_code &) = delete;
};

namespace {

thread_local std::string last_error;

qcc_status status_of(qcc::ErrorKind kind) {
    using qcc::ErrorKind;
    switch (kind) {
        case ErrorKind::InvalidArgument: return QCC_ERR_INVALID_ARGUMENT;
        case ErrorKind::Parse: return QCC_ERR_PARSE;
        case ErrorKind::ModulusMismatch: return QCC_ERR_MODULUS_MISMATCH;
        case ErrorKind::DimensionMismatch: return QCC_ERR_DIMENSION_MISMATCH;
        case ErrorKind::Catastrophic: return QCC_ERR_CATASTROPHIC;
        case ErrorKind::RankDeficient: return QCC_ERR_RANK_DEFICIENT;
        case ErrorKind::DegreeOverflow: return QCC_ERR_DEGREE_OVERFLOW;
        case ErrorKind::CapacityExceeded: return QCC_ERR_CAPACITY_EXCEEDED;
        case ErrorKind::InconsistentSyndrome: return QCC_ERR_INCONSISTENT_SYNDROME;
        case ErrorKind::WindowTooSmall: return QCC_ERR_WINDOW_TOO_SMALL;
        case ErrorKind::Internal: return QCC_ERR_INTERNAL;
    }
    return QCC_ERR_INTERNAL;
}

template <class F>
qcc_status guard(F &&body) {
    try {
        body();
        last_error.clear();
        return QCC_OK;
    } catch (const qcc::Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return QCC_ERR_CAPACITY_EXCEEDED;
    } catch (const std::exception &e) {
        last_error = e.what();
        return QCC_ERR_INTERNAL;
    }
}

void need(const void *ptr, const char *what) {
    if (!ptr) {
        qcc::fail(qcc::ErrorKind::InvalidArgument, std::string(what) + " is null");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

uint8_t *dup_bytes(const std::vector<uint8_t> &v) {
    uint8_t *out = static_cast<uint8_t *>(std::malloc(v.empty() ? 1 : v.size()));
    if (!out) {
        throw std::bad_alloc();
    }
    if (!v.empty()) {
        std::memcpy(out, v.data(), v.size());
    }
    return out;
}

qcc::pauli::PauliWindow parse_pauli(const qcc_code *code, const char *text) {
    need(text, "pauli");
    auto op = qcc::pauli::PauliWindow::from_string(text, code->code.N());
    if (op.length() != code->code.length()) {
        qcc::fail(qcc::ErrorKind::DimensionMismatch, "Pauli string has " + std::to_string(op.length()) +
                                                        " registers, window has " +
                                                        std::to_string(code->code.length()));
    }
    return op;
}

}  // namespace

extern "C" {

const char *qcc_version(void) { return QCCWB_VERSION; }

const char *qcc_status_name(qcc_status status) {
    switch (status) {
        case QCC_OK: return "ok";
        case QCC_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case QCC_ERR_PARSE: return "parse";
        case QCC_ERR_MODULUS_MISMATCH: return "modulus-mismatch";
        case QCC_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
        case QCC_ERR_CATASTROPHIC: return "catastrophic";
        case QCC_ERR_RANK_DEFICIENT: return "rank-deficient";
        case QCC_ERR_DEGREE_OVERFLOW: return "degree-overflow";
        case QCC_ERR_CAPACITY_EXCEEDED: return "capacity-exceeded";
        case QCC_ERR_INCONSISTENT_SYNDROME: return "inconsistent-syndrome";
        case QCC_ERR_WINDOW_TOO_SMALL: return "window-too-small";
        case QCC_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char *qcc_last_error(void) { return last_error.c_str(); }

void qcc_string_free(char *s) { std::free(s); }
void qcc_bytes_free(uint8_t *b) { std::free(b); }

qcc_status qcc_set_caps(uint64_t trellis_states, uint64_t error_trellis_states, uint64_t statevec_entries) {
    return guard([&] {
        qcc::Caps c = qcc::caps();
        if (trellis_states) c.trellis_states = trellis_states;
        if (error_trellis_states) c.error_trellis_states = error_trellis_states;
        if (statevec_entries) c.statevec_entries = statevec_entries;
        qcc::set_caps(c);
    });
}

void qcc_reset_caps(void) { qcc::reset_caps(); }

qcc_status qcc_set_degree_cap(int degree) {
    return guard([&] { qcc::gf::set_degree_cap(degree); });
}

qcc_status qcc_conv_from_json(const char *json, qcc_conv **out) {
    return guard([&] {
        need(json, "json");
        need(out, "out");
        auto d = qcc::io::parse_descriptor(json);
        *out = new qcc_conv{std::move(d.code), d.N};
    });
}

void qcc_conv_free(qcc_conv *conv) { delete conv; }

qcc_status qcc_conv_get_info(const qcc_conv *conv, qcc_conv_info *out) {
    return guard([&] {
        need(conv, "conv");
        need(out, "out");
        *out = {static_cast<int>(conv->code.p()), conv->code.k(), conv->code.n(), conv->code.m(),
                static_cast<int>(conv->N)};
    });
}

qcc_status qcc_conv_check_catastrophic(const qcc_conv *conv, int *catastrophic, char **json_out) {
    return guard([&] {
        need(conv, "conv");
        auto v = qcc::gf::catastrophic_check(conv->code.generator());
        const bool cat = v.verdict == qcc::gf::Verdict::Catastrophic;
        if (catastrophic) {
            *catastrophic = cat ? 1 : 0;
        }
        if (json_out) {
            nlohmann::json minors = nlohmann::json::array();
            for (const auto &mnr : qcc::gf::minors(conv->code.generator(), conv->code.k())) {
                minors.push_back(mnr.to_string());
            }
            nlohmann::json doc = {{"version", QCCWB_VERSION},
                                  {"verdict", cat ? "catastrophic" : "non-catastrophic"},
                                  {"witness", v.witness.to_string()},
                                  {"delay", v.delay},
                                  {"minors", std::move(minors)}};
            *json_out = dup_string(doc.dump());
        }
    });
}

qcc_status qcc_conv_encode(const qcc_conv *conv, const uint8_t *info, size_t len, int terminate, uint8_t **out,
                           size_t *out_len) {
    return guard([&] {
        need(conv, "conv");
        need(out, "out");
        need(out_len, "out_len");
        if (len && !info) {
            qcc::fail(qcc::ErrorKind::InvalidArgument, "info is null");
        }
        qcc::cc::Symbols in(info, info + len);
        auto enc = qcc::cc::encode_stream(conv->code, in, terminate != 0);
        *out = dup_bytes(enc);
        *out_len = enc.size();
    });
}

qcc_status qcc_conv_viterbi(const qcc_conv *conv, const uint8_t *received, size_t len, int terminated,
                            int traceback, uint8_t **info_out, size_t *info_len, int64_t *metric) {
    return guard([&] {
        need(conv, "conv");
        need(info_out, "info_out");
        need(info_len, "info_len");
        if (len && !received) {
            qcc::fail(qcc::ErrorKind::InvalidArgument, "received is null");
        }
        qcc::cc::Trellis trellis(conv->code);
        qcc::cc::ViterbiOptions opts;
        opts.terminated = terminated != 0;
        opts.traceback = traceback;
        auto path = qcc::cc::viterbi_decode(trellis, qcc::cc::Symbols(received, received + len), opts);
        *info_out = dup_bytes(path.info);
        *info_len = path.info.size();
        if (metric) {
            *metric = path.metric;
        }
    });
}

qcc_status qcc_code_build(const qcc_conv *parent, int N, int window_blocks, int truncated, qcc_code **out) {
    return guard([&] {
        need(parent, "parent");
        need(out, "out");
        if (N <= 0) {
            N = parent->N;
        }
        auto policy = truncated ? qcc::code::WindowPolicy::Truncated : qcc::code::WindowPolicy::Terminated;
        auto code = qcc::code::build_qcc(parent->code, static_cast<qcc::gf::Symbol>(N), window_blocks, policy);
        *out = new qcc_code(std::move(code));
    });
}

void qcc_code_free(qcc_code *code) { delete code; }

qcc_status qcc_code_get_info(const qcc_code *code, qcc_code_info *out) {
    return guard([&] {
        need(code, "code");
        need(out, "out");
        const auto &c = code->code;
        out->N = c.N();
        out->registers = c.length();
        out->period = c.period();
        out->info_blocks = c.window().info_blocks;
        out->generators = static_cast<int>(c.stab().generators().size());
        out->logicals = static_cast<int>(c.stab().logical_x().size());
        out->support_bound = c.support_bound();
        out->min_traceback = c.min_traceback();
        out->inverse_delay = c.inverse_delay();
    });
}

qcc_status qcc_code_to_json(const qcc_code *code, char **json_out) {
    return guard([&] {
        need(code, "code");
        need(json_out, "json_out");
        *json_out = dup_string(qcc::io::code_to_json(code->code).dump(2));
    });
}

qcc_status qcc_code_operators_text(const qcc_code *code, char **text_out) {
    return guard([&] {
        need(code, "code");
        need(text_out, "text_out");
        const auto &stab = code->code.stab();
        std::ostringstream os;
        for (const auto &g : stab.generators()) {
            os << "S " << g.to_string() << '\n';
        }
        for (std::size_t i = 0; i < stab.logical_x().size(); ++i) {
            os << "X" << i + 1 << ' ' << stab.logical_x()[i].to_string() << '\n';
            os << "Z" << i + 1 << ' ' << stab.logical_z()[i].to_string() << '\n';
        }
        *text_out = dup_string(os.str());
    });
}

qcc_status qcc_code_syndrome(const qcc_code *code, const char *pauli, uint8_t *syndrome_out) {
    return guard([&] {
        need(code, "code");
        need(syndrome_out, "syndrome_out");
        auto syn = qcc::pauli::syndrome(parse_pauli(code, pauli), code->code.stab());
        std::copy(syn.begin(), syn.end(), syndrome_out);
    });
}

qcc_status qcc_code_decode(const qcc_code *code, const uint8_t *syndrome, size_t len, int traceback,
                           char **correction_out, int *cost) {
    return guard([&] {
        need(code, "code");
        need(correction_out, "correction_out");
        const auto &stab = code->code.stab();
        if (len != stab.generators().size()) {
            qcc::fail(qcc::ErrorKind::DimensionMismatch, "syndrome has " + std::to_string(len) +
                                                            " entries, expected " +
                                                            std::to_string(stab.generators().size()));
        }
        if (len && !syndrome) {
            qcc::fail(qcc::ErrorKind::InvalidArgument, "syndrome is null");
        }
        qcc::gf::Vec syn(syndrome, syndrome + len);
        for (auto v : syn) {
            if (v >= stab.p()) {
                qcc::fail(qcc::ErrorKind::InvalidArgument, "syndrome entry out of range");
            }
        }
        if (traceback == 0) {
            auto path = qcc::qva::qva_decode(code->trellis, syn);
            *correction_out = dup_string(path.correction.to_string());
            if (cost) {
                *cost = path.cost;
            }
            return;
        }
        auto segs = qcc::qva::streaming_decode(code->trellis, syn, traceback, code->code.support_bound());
        auto corr = qcc::qva::assemble(segs, stab.p(), stab.length(), code->code.period());
        *correction_out = dup_string(corr.to_string());
        if (cost) {
            *cost = corr.weight();
        }
    });
}

qcc_status qcc_code_classify(const qcc_code *code, const char *pauli, int *kind, int *affected) {
    return guard([&] {
        need(code, "code");
        need(kind, "kind");
        auto cls = qcc::pauli::classify_residual(parse_pauli(code, pauli), code->code.stab());
        *kind = static_cast<int>(cls.kind);
        if (affected) {
            *affected = static_cast<int>(cls.affected.size());
        }
    });
}

qcc_status qcc_code_distance(const qcc_code *code, int max_weight, qcc_distance *out) {
    return guard([&] {
        need(code, "code");
        need(out, "out");
        auto r = qcc::sim::measure_distance(code->code.stab(), max_weight);
        *out = {r.d, r.A_d, r.B_d};
    });
}

qcc_status qcc_simulate(const qcc_code *code, const qcc_sim_params *params, qcc_sim_result *out) {
    return guard([&] {
        need(code, "code");
        need(params, "params");
        need(out, "out");
        if (params->model != QCC_MODEL_DEPOLARIZING && params->model != QCC_MODEL_INDEPENDENT_XZ) {
            qcc::fail(qcc::ErrorKind::InvalidArgument, "unknown channel model");
        }
        qcc::sim::ChannelSpec spec{params->p,
                                   params->model == QCC_MODEL_DEPOLARIZING ? qcc::sim::Model::Depolarizing
                                                                          : qcc::sim::Model::IndependentXZ,
                                   code->code.N()};
        auto r = qcc::sim::run_trials(code->code, spec, params->trials, params->seed, params->jobs);
        *out = {r.trials,   r.logical_block_errors, r.info_symbol_errors, r.decoded_info_symbols,
                r.timesteps, r.pe_hat,              r.pe_ci.lo,           r.pe_ci.hi,
                r.pb_hat,   r.pb_ci.lo,            r.pb_ci.hi};
    });
}

qcc_status qcc_union_bound(double A_d, double B_d, int d, double k, double p, double *pe, double *pb) {
    return guard([&] {
        auto b = qcc::sim::union_bound(A_d, B_d, d, k, p);
        if (pe) *pe = b.pe;
        if (pb) *pb = b.pb;
    });
}

qcc_status qcc_verify_statevec(int N, int T, int *failures, char **json_out) {
    return guard([&] {
        if (N < 2 || N > 251) {
            qcc::fail(qcc::ErrorKind::InvalidArgument, "N out of range");
        }
        auto checks = qcc::statevec::verify_eq1_suite(static_cast<qcc::gf::Symbol>(N), T);
        int bad = 0;
        nlohmann::json list = nlohmann::json::array();
        for (const auto &c : checks) {
            bad += c.passed ? 0 : 1;
            list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        if (failures) {
            *failures = bad;
        }
        if (json_out) {
            nlohmann::json doc = {{"version", QCCWB_VERSION}, {"N", N}, {"T", T}, {"checks", std::move(list)}};
            *json_out = dup_string(doc.dump());
        }
    });
}

qcc_status qcc_encode_eq1_json(int N, const uint8_t *info, size_t T, char **json_out) {
    return guard([&] {
        need(json_out, "json_out");
        if (N < 2 || N > 251) {
            qcc::fail(qcc::ErrorKind::InvalidArgument, "N out of range");
        }
        if (T == 0 || !info) {
            qcc::fail(qcc::ErrorKind::InvalidArgument, "need at least one info symbol");
        }
        std::vector<qcc::gf::Symbol> k(info, info + T);
        for (auto v : k) {
            if (v >= static_cast<unsigned>(N)) {
                qcc::fail(qcc::ErrorKind::InvalidArgument, "info symbol out of range");
            }
        }
        auto s = qcc::statevec::encode_eq1(k, static_cast<qcc::gf::Symbol>(N));
        *json_out = dup_string(qcc::io::state_to_json(s).dump());
    });
}

}  // extern "C"
