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

#ifndef QCC_ERROR_HPP
#define QCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qcc {

enum class ErrorKind {
    InvalidArgument,
    Parse,
    ModulusMismatch,
    DimensionMismatch,
    Catastrophic,
    RankDeficient,
    DegreeOverflow,
    CapacityExceeded,
    InconsistentSyndrome,
    WindowTooSmall,
    Internal,
};

const char *error_kind_name(ErrorKind kind) noexcept;

/// All library failures are reported as qcc::Error; the kind maps onto the
/// C API status codes.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const char *what) {
    if (!cond) {
        throw Error(kind, what);
    }
}

}  // namespace qcc

#endif
