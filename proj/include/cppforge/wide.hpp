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

#ifndef CPPFORGE_WIDE_HPP
#define CPPFORGE_WIDE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cppforge {

/// Unsigned 128-bit integer used for exponents, field sizes and element encodings.
using wide_t = unsigned __int128;

inline constexpr wide_t kWideMax = ~wide_t{0};

inline std::string to_string(wide_t v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

/// Decimal parse; nullopt on empty input, stray characters or overflow.
inline std::optional<wide_t> parse_wide(std::string_view s) {
    if (s.empty()) return std::nullopt;
    wide_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        const auto digit = static_cast<unsigned>(c - '0');
        if (v > (kWideMax - digit) / 10) return std::nullopt;
        v = v * 10 + digit;
    }
    return v;
}

inline wide_t gcd(wide_t a, wide_t b) {
    while (b != 0) {
        wide_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::optional<wide_t> checked_mul(wide_t a, wide_t b) {
    if (a != 0 && b > kWideMax / a) return std::nullopt;
    return a * b;
}

inline std::optional<wide_t> checked_add(wide_t a, wide_t b) {
    if (b > kWideMax - a) return std::nullopt;
    return a + b;
}

inline std::optional<wide_t> checked_pow(wide_t base, unsigned e) {
    wide_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        auto next = checked_mul(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

/// (base^e) mod m for small moduli (m < 2^63).
inline std::uint64_t powmod_u64(std::uint64_t base, wide_t e, std::uint64_t m) {
    if (m == 1) return 0;
    unsigned __int128 result = 1;
    unsigned __int128 b = base % m;
    while (e != 0) {
        if (e & 1) result = (result * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors by trial division. Callers keep n small enough
/// (the largest use is a multiplicative group order of at most 2^40).
inline std::vector<wide_t> prime_factors(wide_t n) {
    std::vector<wide_t> out;
    for (wide_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace cppforge

#endif  // CPPFORGE_WIDE_HPP
