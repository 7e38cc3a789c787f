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

#ifndef QCC_SIM_CHANNEL_HPP
#define QCC_SIM_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcc/qcc_code.hpp"
#include "qva/error_trellis.hpp"

namespace qcc::sim {

using gf::Symbol;
using pauli::PauliWindow;

enum class Model { Depolarizing, IndependentXZ };

const char *model_name(Model m) noexcept;
Model parse_model(const std::string &name);

struct ChannelSpec {
    double p_err;
    Model model;
    Symbol N;
};

/// Generator for trial `trial` under `seed`; streams for distinct trials are
/// independent of the order in which trials run.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

PauliWindow sample_error(const ChannelSpec &spec, int length, std::mt19937_64 &rng);
PauliWindow sample_error(const ChannelSpec &spec, int length, std::uint64_t seed);

struct Interval {
    double lo;
    double hi;
};

/// Wilson score interval at 95% confidence.
Interval wilson(std::uint64_t successes, std::uint64_t n, double z = 1.959963984540054);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t logical_block_errors = 0;  // trials with a logical residual
    std::uint64_t info_symbol_errors = 0;    // logical qudits hit, summed over trials
    std::uint64_t decoded_info_symbols = 0;  // trials * K
    int timesteps = 0;                       // info blocks per window
    double pe_hat = 0;
    Interval pe_ci{0, 0};
    double pb_hat = 0;
    Interval pb_ci{0, 0};
};

/// Monte Carlo over the code's window. P_e is the fraction of windows with a
/// logical residual divided by the number of timesteps; P_b is the fraction
/// of logical qudits hit.
TrialReport run_trials(const code::QccCode &code, const ChannelSpec &spec, std::uint64_t trials,
                       std::uint64_t seed, int jobs = 1);
/// Same on a bare stabilizer window; `timesteps` normalizes P_e and
/// `section` is the trellis block size.
TrialReport run_trials(const pauli::StabilizerWindow &stab, int timesteps, int section, const ChannelSpec &spec,
                       std::uint64_t trials, std::uint64_t seed, int jobs = 1);

struct Bounds {
    double pe;
    double pb;
};

/// A_d 2^d p^{d/2} and (B_d / k) 2^d p^{d/2}.
Bounds union_bound(double A_d, double B_d, int d, double k, double p_err);

struct DistanceReport {
    int d = 0;             // 0 if no logical operator up to max_weight
    std::uint64_t A_d = 0; // logical operators of weight d
    std::uint64_t B_d = 0; // logical qudits hit, summed over those operators
};

/// Exhaustive search for the lightest logical operators on the window.
DistanceReport measure_distance(const pauli::StabilizerWindow &stab, int max_weight);

}  // namespace qcc::sim

#endif
