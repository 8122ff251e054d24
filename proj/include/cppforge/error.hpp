/*
   Copyright 2026 The cppforge Authors

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

#ifndef CPPFORGE_ERROR_HPP
#define CPPFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cppforge {

enum class ErrorCode {
    not_prime,
    modulus_reducible,
    modulus_degree_mismatch,
    field_too_large,
    divide_by_zero,
    k_not_divisor,
    not_in_subfield,
    zero_input,
    not_monic,
    no_root_found,
    zero_coefficient,
    field_too_large_for_charsum,
    s_not_divisor,
    odd_degree,
    degree_mismatch,
    char_five,
    eta_not_in_subfield,
    even_characteristic,
    gcd_violation,
    char_excluded,
    uv_both_zero,
    k_not_coprime,
    wrong_characteristic,
    u_zero,
    hypothesis_violation,
    v_zero,
    g_not_subfield,
    a_excluded,
    cap_exceeded,
    invalid_argument,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::not_prime: return "not-prime";
        case ErrorCode::modulus_reducible: return "modulus-reducible";
        case ErrorCode::modulus_degree_mismatch: return "modulus-degree-mismatch";
        case ErrorCode::field_too_large: return "field-too-large";
        case ErrorCode::divide_by_zero: return "divide-by-zero";
        case ErrorCode::k_not_divisor: return "k-not-divisor";
        case ErrorCode::not_in_subfield: return "not-in-subfield";
        case ErrorCode::zero_input: return "zero-input";
        case ErrorCode::not_monic: return "not-monic";
        case ErrorCode::no_root_found: return "no-root-found";
        case ErrorCode::zero_coefficient: return "zero-coefficient";
        case ErrorCode::field_too_large_for_charsum: return "field-too-large-for-charsum";
        case ErrorCode::s_not_divisor: return "s-not-divisor";
        case ErrorCode::odd_degree: return "odd-degree";
        case ErrorCode::degree_mismatch: return "degree-mismatch";
        case ErrorCode::char_five: return "char-five";
        case ErrorCode::eta_not_in_subfield: return "eta-not-in-subfield";
        case ErrorCode::even_characteristic: return "even-characteristic";
        case ErrorCode::gcd_violation: return "gcd-violation";
        case ErrorCode::char_excluded: return "char-excluded";
        case ErrorCode::uv_both_zero: return "uv-both-zero";
        case ErrorCode::k_not_coprime: return "k-not-coprime";
        case ErrorCode::wrong_characteristic: return "wrong-characteristic";
        case ErrorCode::u_zero: return "u-zero";
        case ErrorCode::hypothesis_violation: return "hypothesis-violation";
        case ErrorCode::v_zero: return "v-zero";
        case ErrorCode::g_not_subfield: return "g-not-subfield";
        case ErrorCode::a_excluded: return "a-excluded";
        case ErrorCode::cap_exceeded: return "cap-exceeded";
        case ErrorCode::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cppforge

#endif  // CPPFORGE_ERROR_HPP
