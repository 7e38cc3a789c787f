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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcc/qcc.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

struct CliError {
    int code;
    std::string message;
};

int exit_code(qcc_status s) {
    switch (s) {
        case QCC_OK:
            return kExitOk;
        case QCC_ERR_CATASTROPHIC:
        case QCC_ERR_RANK_DEFICIENT:
        case QCC_ERR_WINDOW_TOO_SMALL:
        case QCC_ERR_CAPACITY_EXCEEDED:
        case QCC_ERR_INCONSISTENT_SYNDROME:
            return kExitDomain;
        case QCC_ERR_INTERNAL:
            return kExitCheckFailed;
        default:
            return kExitInput;
    }
}

void check(qcc_status s) {
    if (s != QCC_OK) {
        throw CliError{exit_code(s), std::string(qcc_status_name(s)) + ": " + qcc_last_error()};
    }
}

struct ConvDeleter {
    void operator()(qcc_conv *c) const { qcc_conv_free(c); }
};
struct CodeDeleter {
    void operator()(qcc_code *c) const { qcc_code_free(c); }
};
struct StringDeleter {
    void operator()(char *s) const { qcc_string_free(s); }
};
struct BytesDeleter {
    void operator()(uint8_t *b) const { qcc_bytes_free(b); }
};
using ConvPtr = std::unique_ptr<qcc_conv, ConvDeleter>;
using CodePtr = std::unique_ptr<qcc_code, CodeDeleter>;
using StrPtr = std::unique_ptr<char, StringDeleter>;
using BytesPtr = std::unique_ptr<uint8_t, BytesDeleter>;

std::string read_input(const std::string &path, bool binary = false) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) {
        throw CliError{kExitInput, "cannot open '" + path + "'"};
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

ConvPtr load_conv(const std::string &path) {
    std::string text = read_input(path);
    qcc_conv *c = nullptr;
    check(qcc_conv_from_json(text.c_str(), &c));
    return ConvPtr(c);
}

void warn_delay(const qcc_code *code) {
    qcc_code_info info{};
    check(qcc_code_get_info(code, &info));
    if (info.inverse_delay > 0) {
        std::cerr << "warning: the parent's inverse needs a look-ahead of " << info.inverse_delay
                  << " blocks (minor gcd D^" << info.inverse_delay << ")\n";
    }
}

// window_blocks == 0 picks the smallest window from 3 blocks up that holds
// every stabilizer template.
CodePtr build_code(const qcc_conv *conv, int N, int window_blocks, bool truncated) {
    qcc_code *c = nullptr;
    if (window_blocks > 0) {
        check(qcc_code_build(conv, N, window_blocks, truncated ? 1 : 0, &c));
        return CodePtr(c);
    }
    for (int t = 3; t <= 256; ++t) {
        qcc_status s = qcc_code_build(conv, N, t, truncated ? 1 : 0, &c);
        if (s == QCC_ERR_WINDOW_TOO_SMALL) {
            continue;
        }
        check(s);
        return CodePtr(c);
    }
    throw CliError{kExitDomain, "no window up to 256 blocks holds the stabilizer templates"};
}

std::string header() { return std::string("# qccwb ") + qcc_version(); }

void apply_caps(long long state_cap) {
    unsigned long long cap = 0;
    if (state_cap > 0) {
        cap = static_cast<unsigned long long>(state_cap);
    } else if (const char *env = std::getenv("QCC_STATE_CAP")) {
        char *end = nullptr;
        cap = std::strtoull(env, &end, 10);
        if (!*env || *end || cap == 0) {
            throw CliError{kExitInput, std::string("QCC_STATE_CAP must be a positive integer, got '") + env + "'"};
        }
    }
    if (cap) {
        check(qcc_set_caps(cap, cap, cap));
    }
}

std::string fmt(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

int cmd_check_catastrophic(const std::string &path) {
    auto conv = load_conv(path);
    int cat = 0;
    char *out = nullptr;
    check(qcc_conv_check_catastrophic(conv.get(), &cat, &out));
    StrPtr hold(out);
    std::cout << out << '\n';
    return kExitOk;
}

struct BuildOpts {
    std::string code;
    int window = 0;
    bool truncated = false;
    int N = 0;
    bool window_ops = false;
};

int cmd_build_qcc(const BuildOpts &o) {
    auto conv = load_conv(o.code);
    auto code = build_code(conv.get(), o.N, o.window, o.truncated);
    warn_delay(code.get());
    char *out = nullptr;
    check(qcc_code_to_json(code.get(), &out));
    StrPtr hold(out);
    std::cout << out << '\n';
    return kExitOk;
}

int cmd_print_stabilizers(const BuildOpts &o) {
    auto conv = load_conv(o.code);
    auto code = build_code(conv.get(), o.N, o.window, o.truncated);
    warn_delay(code.get());
    char *out = nullptr;
    check(qcc_code_to_json(code.get(), &out));
    json doc = json::parse(out);
    qcc_string_free(out);
    std::cout << header() << "; N=" << doc["N"] << "; shift step " << doc["shift_step"]
              << " registers; offsets relative to a period start\n";
    auto dump = [](const char *label, const json &list) {
        for (const auto &t : list) {
            std::cout << label << ' ' << t["pattern"].get<std::string>() << " @" << t["offset"] << '\n';
        }
    };
    dump("stabilizer", doc["stabilizers"]);
    dump("logical-x", doc["logical_x"]);
    dump("logical-z", doc["logical_z"]);
    if (o.window_ops) {
        char *text = nullptr;
        check(qcc_code_operators_text(code.get(), &text));
        StrPtr h(text);
        std::cout << "# window of " << doc["window"]["registers"] << " registers\n" << text;
    }
    return kExitOk;
}

struct SimOpts {
    std::string code;
    std::vector<double> p;
    uint64_t trials = 10000;
    uint64_t seed = 1;
    int window = 0;
    bool truncated = false;
    std::string model = "depolarizing";
    int jobs = 1;
    int max_weight = 4;
};

int cmd_simulate(const SimOpts &o) {
    if (o.p.empty()) {
        throw CliError{kExitInput, "--p needs at least one value"};
    }
    int model;
    if (o.model == "depolarizing") {
        model = QCC_MODEL_DEPOLARIZING;
    } else if (o.model == "independent-xz") {
        model = QCC_MODEL_INDEPENDENT_XZ;
    } else {
        throw CliError{kExitInput, "unknown --model '" + o.model + "'"};
    }
    auto conv = load_conv(o.code);
    auto code = build_code(conv.get(), 0, o.window, o.truncated);
    warn_delay(code.get());
    qcc_code_info info{};
    check(qcc_code_get_info(code.get(), &info));
    qcc_distance dist{};
    const int maxw = std::min(o.max_weight, info.registers);
    check(qcc_code_distance(code.get(), maxw, &dist));

    // Window totals of A_d and B_d spread over the window's timesteps.
    const double T = info.info_blocks;
    const double k = static_cast<double>(info.logicals) / T;
    std::ostringstream os;
    os << header() << "; model=" << o.model << "; N=" << info.N << "; window_blocks=" << info.info_blocks
       << "; registers=" << info.registers << "; logicals=" << info.logicals << "; trials=" << o.trials
       << "; seed=" << o.seed << "; d=" << dist.d << "; A_d=" << dist.A_d << "; B_d=" << dist.B_d
       << "; Pe per timestep; bounds use A_d/T, B_d/(T k), exponent d/2\n";
    os << "p,trials,Pe_hat,Pe_lo,Pe_hi,Pb_hat,Pb_lo,Pb_hi,Pe_bound,Pb_bound\n";
    for (double p : o.p) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw CliError{kExitInput, "--p values must lie in [0, 1]"};
        }
        qcc_sim_params params{p, model, o.trials, o.seed, o.jobs};
        qcc_sim_result r{};
        check(qcc_simulate(code.get(), &params, &r));
        double pe_b = NAN, pb_b = NAN;
        if (dist.d > 0) {
            check(qcc_union_bound(static_cast<double>(dist.A_d) / T, static_cast<double>(dist.B_d) / T, dist.d, k,
                                  p, &pe_b, &pb_b));
        }
        os << fmt(p) << ',' << r.trials << ',' << fmt(r.pe_hat) << ',' << fmt(r.pe_lo) << ',' << fmt(r.pe_hi)
           << ',' << fmt(r.pb_hat) << ',' << fmt(r.pb_lo) << ',' << fmt(r.pb_hi) << ',' << fmt(pe_b) << ','
           << fmt(pb_b) << '\n';
    }
    std::cout << os.str();
    return kExitOk;
}

int cmd_verify_statevec(const std::vector<int> &Ns, const std::vector<int> &Ts) {
    int total_bad = 0;
    std::cout << header() << "\n";
    for (int N : Ns) {
        for (int T : Ts) {
            int bad = 0;
            char *out = nullptr;
            check(qcc_verify_statevec(N, T, &bad, &out));
            json doc = json::parse(out);
            qcc_string_free(out);
            for (const auto &c : doc["checks"]) {
                std::cout << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " N=" << N << " T=" << T << ' '
                          << c["name"].get<std::string>();
                if (!c["detail"].get<std::string>().empty()) {
                    std::cout << " (" << c["detail"].get<std::string>() << ')';
                }
                std::cout << '\n';
            }
            total_bad += bad;
        }
    }
    std::cout << (total_bad ? "FAILED " : "OK ") << total_bad << " failing checks\n";
    return total_bad ? kExitCheckFailed : kExitOk;
}

struct ViterbiOpts {
    std::string code;
    std::string input = "-";
    bool binary = false;
    bool truncated = false;
    int traceback = 0;
};

int cmd_viterbi(const ViterbiOpts &o) {
    auto conv = load_conv(o.code);
    qcc_conv_info ci{};
    check(qcc_conv_get_info(conv.get(), &ci));
    std::string raw = read_input(o.input, o.binary);
    std::vector<uint8_t> rx;
    if (o.binary) {
        rx.assign(raw.begin(), raw.end());
    } else {
        json doc;
        try {
            doc = json::parse(raw);
        } catch (const json::parse_error &e) {
            throw CliError{kExitInput, std::string("malformed symbol array: ") + e.what()};
        }
        if (!doc.is_array()) {
            throw CliError{kExitInput, "received symbols must be a JSON integer array"};
        }
        for (const auto &v : doc) {
            if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= ci.p) {
                throw CliError{kExitInput, "received symbols must be integers in [0, p)"};
            }
            rx.push_back(static_cast<uint8_t>(v.get<int>()));
        }
    }
    for (auto v : rx) {
        if (v >= ci.p) {
            throw CliError{kExitInput, "received symbol out of range"};
        }
    }
    uint8_t *info = nullptr;
    size_t len = 0;
    int64_t metric = 0;
    check(qcc_conv_viterbi(conv.get(), rx.data(), rx.size(), o.truncated ? 0 : 1, o.traceback, &info, &len, &metric));
    BytesPtr hold(info);
    json out = {{"version", qcc_version()}, {"info", std::vector<int>(info, info + len)}, {"metric", metric}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

struct DecodeOpts {
    std::string code;
    int window = 0;
    bool truncated = false;
    std::string syndrome;
    std::string error;
    int traceback = 0;
};

int cmd_decode(const DecodeOpts &o) {
    if (o.syndrome.empty() == o.error.empty()) {
        throw CliError{kExitInput, "give exactly one of --syndrome and --error"};
    }
    auto conv = load_conv(o.code);
    auto code = build_code(conv.get(), 0, o.window, o.truncated);
    qcc_code_info info{};
    check(qcc_code_get_info(code.get(), &info));
    std::vector<uint8_t> syn(info.generators, 0);
    json out = {{"version", qcc_version()}};
    if (!o.error.empty()) {
        check(qcc_code_syndrome(code.get(), o.error.c_str(), syn.data()));
        out["error"] = o.error;
    } else {
        json doc;
        try {
            doc = json::parse(read_input(o.syndrome));
        } catch (const json::parse_error &e) {
            throw CliError{kExitInput, std::string("malformed syndrome: ") + e.what()};
        }
        if (!doc.is_array() || static_cast<int>(doc.size()) != info.generators) {
            throw CliError{kExitInput, "syndrome must be an array of " + std::to_string(info.generators) +
                                           " integers"};
        }
        for (int i = 0; i < info.generators; ++i) {
            if (!doc[i].is_number_integer() || doc[i].get<long long>() < 0 || doc[i].get<long long>() >= info.N) {
                throw CliError{kExitInput, "syndrome entries must be integers in [0, N)"};
            }
            syn[i] = static_cast<uint8_t>(doc[i].get<int>());
        }
    }
    char *corr = nullptr;
    int cost = 0;
    check(qcc_code_decode(code.get(), syn.data(), syn.size(), o.traceback, &corr, &cost));
    StrPtr hold(corr);
    out["syndrome"] = syn;
    out["correction"] = corr;
    out["cost"] = cost;
    std::cout << out.dump() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum convolutional code workbench"};
    app.set_version_flag("--version", std::string("qccwb ") + qcc_version());
    app.require_subcommand(1);
    long long state_cap = 0;
    app.add_option("--state-cap", state_cap, "Cap on trellis and state-vector sizes (overrides QCC_STATE_CAP)");

    std::string cat_path;
    auto *cat = app.add_subcommand("check-catastrophic", "Minor-gcd catastrophicity test of a parent code");
    cat->add_option("code", cat_path, "Code descriptor JSON file, or - for stdin")->required();

    BuildOpts build;
    auto *bq = app.add_subcommand("build-qcc", "Build the quantum convolutional code and dump it as JSON");
    auto *ps = app.add_subcommand("print-stabilizers", "Print stabilizer and logical templates as Pauli strings");
    for (auto *sc : {bq, ps}) {
        sc->add_option("code", build.code, "Code descriptor JSON file, or - for stdin")->required();
        sc->add_option("--window", build.window, "Window length in info blocks (0 picks the smallest)")
            ->check(CLI::NonNegativeNumber);
        sc->add_option("--N", build.N, "Register dimension (defaults to the descriptor)");
        sc->add_flag("--truncated", build.truncated, "Drop the encoder tail instead of flushing it");
    }
    ps->add_flag("--window-ops", build.window_ops, "Also print every generator and logical on the window");

    SimOpts sim;
    auto *si = app.add_subcommand("simulate", "Monte Carlo logical error rates under a Pauli channel");
    si->add_option("--code", sim.code, "Code descriptor JSON file")->required();
    si->add_option("--p", sim.p, "Physical error probabilities")->delimiter(',')->required();
    si->add_option("--trials", sim.trials, "Trials per probability");
    si->add_option("--seed", sim.seed, "Random seed");
    si->add_option("--window", sim.window, "Window length in info blocks (0 picks the smallest)")
        ->check(CLI::NonNegativeNumber);
    si->add_flag("--truncated", sim.truncated, "Drop the encoder tail instead of flushing it");
    si->add_option("--model", sim.model, "depolarizing or independent-xz");
    si->add_option("--jobs", sim.jobs, "Worker threads")->check(CLI::PositiveNumber);
    si->add_option("--max-weight", sim.max_weight, "Largest weight searched for the window distance")
        ->check(CLI::PositiveNumber);

    std::vector<int> vs_N{2}, vs_T{2};
    auto *vs = app.add_subcommand("verify-statevec", "State-vector checks of the gate-level encoder and decoder");
    vs->add_option("--N", vs_N, "Register dimensions")->delimiter(',');
    vs->add_option("--T", vs_T, "Block counts")->delimiter(',');

    ViterbiOpts vit;
    auto *vi = app.add_subcommand("viterbi", "Classical Viterbi decoding of a received symbol stream");
    vi->add_option("--code", vit.code, "Code descriptor JSON file")->required();
    vi->add_option("--input", vit.input, "Received symbols: JSON array, or u8 frame with --binary; - for stdin");
    vi->add_flag("--binary", vit.binary, "Input is one byte per symbol");
    vi->add_flag("--truncated", vit.truncated, "Stream is not zero-tail terminated");
    vi->add_option("--traceback", vit.traceback, "Decision depth in blocks (0 exact, negative 5(m+1))");

    DecodeOpts dec;
    auto *de = app.add_subcommand("decode", "Minimum-weight syndrome decoding on a code window");
    de->add_option("--code", dec.code, "Code descriptor JSON file")->required();
    de->add_option("--window", dec.window, "Window length in info blocks (0 picks the smallest)")
        ->check(CLI::NonNegativeNumber);
    de->add_flag("--truncated", dec.truncated, "Drop the encoder tail instead of flushing it");
    de->add_option("--syndrome", dec.syndrome, "Syndrome JSON array file, or - for stdin");
    de->add_option("--error", dec.error, "Pauli error string; its syndrome is decoded");
    de->add_option("--traceback", dec.traceback, "Streaming decision depth in periods (0 decodes the window)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        apply_caps(state_cap);
        if (*cat) return cmd_check_catastrophic(cat_path);
        if (*bq) return cmd_build_qcc(build);
        if (*ps) return cmd_print_stabilizers(build);
        if (*si) return cmd_simulate(sim);
        if (*vs) return cmd_verify_statevec(vs_N, vs_T);
        if (*vi) return cmd_viterbi(vit);
        if (*de) return cmd_decode(dec);
    } catch (const CliError &e) {
        std::cerr << "qccwb: " << e.message << '\n';
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "qccwb: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitInput;
}
