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

#ifndef QCC_QCC_H
#define QCC_QCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QCC_API __declspec(dllexport)
#else
#define QCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcc_status {
    QCC_OK = 0,
    QCC_ERR_INVALID_ARGUMENT = 1,
    QCC_ERR_PARSE = 2,
    QCC_ERR_MODULUS_MISMATCH = 3,
    QCC_ERR_DIMENSION_MISMATCH = 4,
    QCC_ERR_CATASTROPHIC = 5,
    QCC_ERR_RANK_DEFICIENT = 6,
    QCC_ERR_DEGREE_OVERFLOW = 7,
    QCC_ERR_CAPACITY_EXCEEDED = 8,
    QCC_ERR_INCONSISTENT_SYNDROME = 9,
    QCC_ERR_WINDOW_TOO_SMALL = 10,
    QCC_ERR_INTERNAL = 11
} qcc_status;

/* Opaque handles. */
typedef struct qcc_conv qcc_conv;
typedef struct qcc_code qcc_code;

QCC_API const char *qcc_version(void);
QCC_API const char *qcc_status_name(qcc_status status);
/* Message of the last failing call on this thread; "" if none. */
QCC_API const char *qcc_last_error(void);

/* Strings and buffers returned by the library are released with these. */
QCC_API void qcc_string_free(char *s);
QCC_API void qcc_bytes_free(uint8_t *b);

/* Resource caps; 0 leaves a cap unchanged. */
QCC_API qcc_status qcc_set_caps(uint64_t trellis_states, uint64_t error_trellis_states, uint64_t statevec_entries);
QCC_API void qcc_reset_caps(void);
QCC_API qcc_status qcc_set_degree_cap(int degree);

/* ---- classical parent ---------------------------------------------------- */

/* Descriptor {"p", "k", "n", "G", "N"}; G holds k rows of n coefficient
   arrays, lowest degree first. */
QCC_API qcc_status qcc_conv_from_json(const char *json, qcc_conv **out);
QCC_API void qcc_conv_free(qcc_conv *conv);

typedef struct qcc_conv_info {
    int p;
    int k;
    int n;
    int m;
    int N; /* register dimension requested by the descriptor */
} qcc_conv_info;

QCC_API qcc_status qcc_conv_get_info(const qcc_conv *conv, qcc_conv_info *out);

/* Sets *catastrophic and writes {"verdict", "witness", "delay", "minors"}. */
QCC_API qcc_status qcc_conv_check_catastrophic(const qcc_conv *conv, int *catastrophic, char **json_out);

/* Encodes k*T symbols; with terminate the encoder is flushed. */
QCC_API qcc_status qcc_conv_encode(const qcc_conv *conv, const uint8_t *info, size_t len, int terminate,
                                   uint8_t **out, size_t *out_len);

/* traceback 0 decodes the whole stream exactly; < 0 picks 5(m+1). */
QCC_API qcc_status qcc_conv_viterbi(const qcc_conv *conv, const uint8_t *received, size_t len, int terminated,
                                    int traceback, uint8_t **info_out, size_t *info_len, int64_t *metric);

/* ---- quantum convolutional code ----------------------------------------- */

QCC_API qcc_status qcc_code_build(const qcc_conv *parent, int N, int window_blocks, int truncated, qcc_code **out);
QCC_API void qcc_code_free(qcc_code *code);

typedef struct qcc_code_info {
    int N;
    int registers;      /* window length */
    int period;         /* registers per shift step */
    int info_blocks;
    int generators;
    int logicals;
    int support_bound;
    int min_traceback;  /* in periods */
    int inverse_delay;
} qcc_code_info;

QCC_API qcc_status qcc_code_get_info(const qcc_code *code, qcc_code_info *out);
QCC_API qcc_status qcc_code_to_json(const qcc_code *code, char **json_out);
/* Window generators and logical operators as Pauli strings, one per line. */
QCC_API qcc_status qcc_code_operators_text(const qcc_code *code, char **text_out);

/* syndrome_out must hold qcc_code_info.generators entries. */
QCC_API qcc_status qcc_code_syndrome(const qcc_code *code, const char *pauli, uint8_t *syndrome_out);

/* traceback 0 decodes the whole window; otherwise the value is in periods. */
QCC_API qcc_status qcc_code_decode(const qcc_code *code, const uint8_t *syndrome, size_t len, int traceback,
                                   char **correction_out, int *cost);

/* Residual class of a zero-syndrome Pauli: 0 identity, 1 stabilizer,
   2 logical error. */
QCC_API qcc_status qcc_code_classify(const qcc_code *code, const char *pauli, int *kind, int *affected);

typedef struct qcc_distance {
    int d;        /* 0 when no logical operator up to max_weight */
    uint64_t A_d; /* logical operators of weight d on the window */
    uint64_t B_d; /* logical qudits they hit, summed */
} qcc_distance;

QCC_API qcc_status qcc_code_distance(const qcc_code *code, int max_weight, qcc_distance *out);

/* ---- simulation ----------------------------------------------------------- */

typedef enum qcc_model { QCC_MODEL_DEPOLARIZING = 0, QCC_MODEL_INDEPENDENT_XZ = 1 } qcc_model;

typedef struct qcc_sim_params {
    double p;
    int model;
    uint64_t trials;
    uint64_t seed;
    int jobs;
} qcc_sim_params;

typedef struct qcc_sim_result {
    uint64_t trials;
    uint64_t logical_block_errors;
    uint64_t info_symbol_errors;
    uint64_t decoded_info_symbols;
    int timesteps;
    double pe_hat, pe_lo, pe_hi;
    double pb_hat, pb_lo, pb_hi;
} qcc_sim_result;

QCC_API qcc_status qcc_simulate(const qcc_code *code, const qcc_sim_params *params, qcc_sim_result *out);
QCC_API qcc_status qcc_union_bound(double A_d, double B_d, int d, double k, double p, double *pe, double *pb);

/* ---- state vector -------------------------------------------------------- */

/* Runs the encoder/decoder reproduction checks for the [1+D^2, 1+D+D^2]
   code. Writes {"N", "T", "checks": [{"name", "passed", "detail"}]}. */
QCC_API qcc_status qcc_verify_statevec(int N, int T, int *failures, char **json_out);

/* Gate-level codeword of `info` (T symbols) as nonzero amplitudes. */
QCC_API qcc_status qcc_encode_eq1_json(int N, const uint8_t *info, size_t T, char **json_out);

#ifdef __cplusplus
}
#endif

#endif
