/*
   Copyright 2026 The polydet Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYDET_ERROR_HPP
#define POLYDET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polydet {

enum class ErrorCode {
    DivisionByZero,
    DomainMismatch,
    NotPrime,
    NotSquare,
    BadSubsetSize,
    SizeMismatch,
    BadExponents,
    ZeroLeadingCoeff,
    SingularB,
    InvalidConfig,
    Parse,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorCode::DomainMismatch: return "DOMAIN_MISMATCH";
        case ErrorCode::NotPrime: return "NOT_PRIME";
        case ErrorCode::NotSquare: return "NOT_SQUARE";
        case ErrorCode::BadSubsetSize: return "BAD_SUBSET_SIZE";
        case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
        case ErrorCode::BadExponents: return "BAD_EXPONENTS";
        case ErrorCode::ZeroLeadingCoeff: return "ZERO_LEADING_COEFF";
        case ErrorCode::SingularB: return "SINGULAR_B";
        case ErrorCode::InvalidConfig: return "INVALID_CONFIG";
        case ErrorCode::Parse: return "PARSE";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace polydet

#endif
