// Copyright 2026 The vacsup Authors
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

#include "vacsup/error.h"

namespace vacsup {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kNonHermitian:
            return "NonHermitian";
        case ErrorKind::kNegativeEigenvalue:
            return "NegativeEigenvalue";
        case ErrorKind::kBadIndex:
            return "BadIndex";
        case ErrorKind::kBadLetter:
            return "BadLetter";
        case ErrorKind::kBadProbability:
            return "BadProbability";
        case ErrorKind::kBadNormalization:
            return "BadNormalization";
        case ErrorKind::kNotUnitary:
            return "NotUnitary";
        case ErrorKind::kDimMismatch:
            return "DimMismatch";
        case ErrorKind::kUnknownScenario:
            return "UnknownScenario";
        case ErrorKind::kDivisionByZero:
            return "DivisionByZero";
        case ErrorKind::kInvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

}  // namespace vacsup
