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

/**
 * @file families.hpp
 * @brief Exponents, coefficient predicates and generators for the CPP
 *        families a^{-1} x^d, plus the multinomial construction.
 *
 * Conventions: a coefficient a is "good" for d when a^{-1} x^d is a CPP,
 * i.e. gcd(d, p^n - 1) = 1 and x^d + a x permutes F_{p^n}.
 */

#ifndef CPPFORGE_FAMILIES_HPP
#define CPPFORGE_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "field.hpp"
#include "ha_dickson.hpp"
#include "niho.hpp"
#include "perm_oracle.hpp"
#include "poly.hpp"

namespace cppforge {

inline wide_t wide_pow(wide_t base, unsigned e) {
    auto v = checked_pow(base, e);
    if (!v) fail(ErrorCode::field_too_large, "exponent arithmetic overflow");
    return *v;
}

inline void require_odd_prime(std::uint32_t p) {
    if (!is_prime_u64(p)) fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
    if (p == 2) fail(ErrorCode::even_characteristic, "characteristic must be odd");
}

// ---------------------------------------------------------------- Niho

/// d = (p^k - 1)(p^i - 1)/2 + p^i over F_{p^{2k}}, 1 <= i <= 2k.
inline wide_t niho2_exponent(std::uint32_t p, unsigned k, unsigned i) {
    require_odd_prime(p);
    if (k == 0 || i == 0 || i > 2 * k) fail(ErrorCode::invalid_argument, "need 1 <= i <= 2k");
    const wide_t pk = wide_pow(p, k), pi = wide_pow(p, i);
    const wide_t d = (pk - 1) * ((pi - 1) / 2) + pi;
    if (gcd(d, wide_pow(p, 2 * k) - 1) != 1) fail(ErrorCode::gcd_violation, "gcd(d, p^n - 1) != 1");
    return d;
}

/// d = 3^k + 2 over F_{3^{2k}}.
inline wide_t p3k2_exponent(unsigned k) {
    if (k == 0) fail(ErrorCode::invalid_argument, "k must be positive");
    return wide_pow(3, k) + 2;
}

inline std::vector<Elem> niho2_coefficient_set(const NihoCtx& c) { return v_set(c); }

// ---------------------------------------------------------------- d_r

/// d = (p^{rk} - 1)/(p^k - 1) + 1, requiring gcd(r + 1, p^k - 1) = 1.
inline wide_t dr_exponent(std::uint32_t p, unsigned k, unsigned r) {
    if (k == 0 || r == 0) fail(ErrorCode::invalid_argument, "k and r must be positive");
    const wide_t pk = wide_pow(p, k);
    if (gcd(wide_t{r} + 1, pk - 1) != 1) fail(ErrorCode::gcd_violation, "gcd(r + 1, p^k - 1) != 1");
    return (wide_pow(p, r * k) - 1) / (pk - 1) + 1;
}

namespace detail {

inline void require_r4(const Field& f, unsigned k) {
    if (k == 0 || f.n() != 4 * k) fail(ErrorCode::degree_mismatch, "field degree must be 4k");
}

}  // namespace detail

/// First of the eight r = 4 conditions (p not 2 or 5) that a satisfies:
/// "cond1" .. "cond8".
inline std::optional<std::string> thm_r4_condition(const Field& f, Elem a, unsigned k) {
    const std::uint32_t p = f.p();
    if (p == 2 || p == 5) fail(ErrorCode::char_excluded, "characteristic 2 and 5 are excluded");
    detail::require_r4(f, k);
    const wide_t q = f.subfield_size(k);
    if (gcd(5, q - 1) != 1) fail(ErrorCode::gcd_violation, "gcd(5, p^k - 1) != 1");
    if (a.is_zero()) return std::nullopt;

    const LambdaVec lv = lambda_coeffs(f, a, 4, k);
    const Elem l1 = lv[1], l2 = lv[2], l3 = lv[3], l4 = lv[4];
    const auto c = [&](std::int64_t v) { return f.from_int(v); };
    const Elem l1sq = f.mul(l1, l1), l1cu = f.mul(l1sq, l1), l1qu = f.mul(l1sq, l1sq);
    const Depressed d = depressed_quintic(f, lv);

    if (d.A3.is_zero() && d.A1.is_zero() && d.A2.is_zero()) return "cond1";
    if ((q % 5 == 2 || q % 5 == 3) && d.A2.is_zero() && f.mul(ratio(f, 1, 5), f.mul(d.A3, d.A3)) == d.A1)
        return "cond2";
    const bool l3_cube = l3 == f.neg(l1cu);
    if (p == 3 && k == 2 && l2 == l1sq && l3_cube) {
        const Elem t = f.add(l4, l1qu);
        if (f.mul(t, t) == c(-1)) return "cond3";
    }
    if (p == 3 && k == 1 && l3_cube) {
        if (l2 == f.add(l1sq, c(1)) && l4 == f.neg(l1qu)) return "cond4";
        if (l2 == f.add(l1sq, c(2)) && l4 == f.add(f.neg(l1qu), c(1))) return "cond5";
    }
    if (p == 7 && k == 1) {
        const Elem e3 = f.add(l1sq, l2);
        const Elem e1 = f.add(f.sub(f.add(f.mul(l1, l3), f.mul(c(3), l1qu)), f.mul(l2, l1sq)), l4);
        const Elem e2 = f.sub(f.add(l3, l1cu), f.mul(c(2), f.mul(l1, l2)));
        if (e3.is_zero() && e1.is_zero() && (e2 == c(2) || e2 == c(-2))) return "cond6";
        for (std::int64_t v : {3, 5, 6})
            if (e3 == c(v) && e1 == c(3 * v * v) && (e2 == c(1) || e2 == c(-1))) return "cond7";
    }
    if (p == 13 && k == 1) {
        const Elem e3 = f.add(f.mul(c(-3), l1sq), l2);
        Elem e1 = f.add(f.mul(c(-3), f.mul(l1, l3)), f.mul(c(-2), l1qu));
        e1 = f.add(f.sub(e1, f.mul(c(3), f.mul(l2, l1sq))), l4);
        const Elem e2 = f.add(f.sub(l3, f.mul(c(4), l1cu)), f.mul(c(2), f.mul(l1, l2)));
        for (std::int64_t v : {2, -2, 5, -5, 6, -6})
            if (e3 == c(v) && e1 == c(3 * v * v) && e2.is_zero()) return "cond8";
    }
    return std::nullopt;
}

/// The characteristic-3 restatement: "coro1" (k = 2 mod 4), "coro2"
/// (k odd), or the inherited "cond3".."cond5".
inline std::optional<std::string> coro_p3n4k_condition(const Field& f, Elem a, unsigned k) {
    if (f.p() != 3) fail(ErrorCode::wrong_characteristic, "characteristic must be 3");
    detail::require_r4(f, k);
    if (gcd(5, f.subfield_size(k) - 1) != 1) fail(ErrorCode::gcd_violation, "gcd(5, 3^k - 1) != 1");
    if (a.is_zero()) return std::nullopt;
    const LambdaVec lv = lambda_coeffs(f, a, 4, k);
    const Elem l1 = lv[1], l2 = lv[2], l3 = lv[3], l4 = lv[4];
    const Elem l1sq = f.mul(l1, l1), l1cu = f.mul(l1sq, l1);
    const bool l3_cube = l3 == f.neg(l1cu);
    if (k % 4 == 2 && l2 == l1sq && l3_cube && l4 == f.neg(f.mul(l1sq, l1sq))) return "coro1";
    if (k % 2 == 1 && l3_cube) {
        const Elem t = f.sub(l2, l1sq);
        if (f.neg(f.mul(t, t)) == f.sub(l4, f.mul(l1, l3))) return "coro2";
    }
    auto tag = thm_r4_condition(f, a, k);
    if (tag && (*tag == "cond3" || *tag == "cond4" || *tag == "cond5")) return tag;
    return std::nullopt;
}

/// Which inverse appears in the third p = 5 condition.
enum class P5Variant { lambda2_inverse, lambda1_inverse };

/// "cond1".."cond3" of the p = 5, r = 4 characterisation.
inline std::optional<std::string> thm_r4_p5_condition(const Field& f, Elem a, unsigned k,
                                                      P5Variant variant = P5Variant::lambda2_inverse) {
    if (f.p() != 5) fail(ErrorCode::wrong_characteristic, "characteristic must be 5");
    detail::require_r4(f, k);
    if (a.is_zero()) return std::nullopt;
    const LambdaVec lv = lambda_coeffs(f, a, 4, k);
    const Elem l1 = lv[1], l2 = lv[2], l3 = lv[3], l4 = lv[4];
    if (!l1.is_zero()) return std::nullopt;
    if (l2.is_zero() && l3.is_zero()) {
        if (!l4.is_zero() && !f.residue_test(f.neg(l4), k, ResiduePower::fourth)) return "cond1";
        return std::nullopt;
    }
    if (l2.is_zero()) return std::nullopt;
    const Elem l3sq3 = f.mul(f.from_int(3), f.mul(l3, l3));
    const Elem shifted = f.add(l4, f.div(l3sq3, l2));
    if (f.neg(f.mul(l2, l2)) == shifted && !f.residue_test(f.mul(f.from_int(2), l2), k, ResiduePower::square))
        return "cond2";
    if (k == 1 && (l2 == f.from_int(2) || l2 == f.from_int(-2))) {
        if (variant == P5Variant::lambda1_inverse) return std::nullopt;  // lambda_1 = 0 has no inverse
        if (shifted == f.from_int(4)) return "cond3";
    }
    return std::nullopt;
}

/// a with a^{2(5^k-1)} = -1 or a^{5^k-1} = -1, ascending.
inline std::vector<Elem> coro_p5_vset(const Field& f, unsigned k) {
    if (f.p() != 5) fail(ErrorCode::wrong_characteristic, "characteristic must be 5");
    detail::require_r4(f, k);
    const wide_t m = f.subfield_size(k) - 1;
    std::vector<Elem> out;
    const Elem w = f.element_of_order(4 * m);  // w^{2m} = -1
    const Elem z = f.element_of_order(2 * m);
    Elem cur = w;
    for (wide_t i = 0; i < 2 * m; ++i, cur = f.mul(cur, z)) out.push_back(cur);
    const Elem a0 = f.element_of_order(2 * m);  // a0^m = -1
    for (Elem u : f.subfield_elements(k))
        if (!u.is_zero()) out.push_back(f.mul(a0, u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ------------------------------------------------- basis-defined families

/// The smallest-encoding root of x^4 - x - 1.
inline Elem p3_beta(const Field& f) {
    if (f.p() != 3) fail(ErrorCode::wrong_characteristic, "characteristic must be 3");
    return find_root(f, poly::from_ints(f, {-1, -1, 0, 0, 1}));
}

/// The smallest-encoding root of x^6 + x + 2.
inline Elem r6_beta(const Field& f) { return find_root(f, poly::from_ints(f, {2, 1, 0, 0, 0, 0, 1})); }

namespace detail {

inline void require_coprime(unsigned k, unsigned m) {
    if (gcd(k, m) != 1) fail(ErrorCode::k_not_coprime, "k must be coprime to " + std::to_string(m));
}

/// Coordinates of the four characteristic-3 families in the basis 1, b, b^2, b^3.
inline std::array<Elem, 4> p3_family_coords(const Field& f, int family, Elem u, Elem v) {
    const Elem nu = f.neg(u), nv = f.neg(v);
    switch (family) {
        case 1: return {u, v, nu, f.add(nu, v)};
        case 2: return {u, v, f.sub(nu, v), nv};
        case 3: return {u, u, v, nv};
        case 4: return {u, v, v, u};
    }
    fail(ErrorCode::invalid_argument, "family must be 1..4");
}

}  // namespace detail

/// Both polynomial identities in the coordinates u_0..u_3 that single out
/// the second characteristic-3 condition for k = 1 generators.
inline bool p3_beta_identities_hold(const Field& f, const std::array<Elem, 4>& u) {
    const auto c = [&](std::int64_t v) { return f.from_int(v); };
    const auto m = [&](std::initializer_list<Elem> xs) {
        Elem acc = f.one();
        for (Elem x : xs) acc = f.mul(acc, x);
        return acc;
    };
    const Elem u0 = u[0], u1 = u[1], u2 = u[2], u3 = u[3];
    Elem ea = m({u1, u1, u1});
    for (Elem t : {m({u3, u2, u2}), m({u3, u3, u2}), m({u1, u1, u2}), m({u2, u2, u2}), m({u1, u3, u3}),
                   m({c(2), u0, u2, u2}), m({u3, u3, u3}), m({c(2), u0, u0, u0}), m({u3, u1, u0})})
        ea = f.add(ea, t);
    Elem eb = m({u0, u0, u0, u0});
    for (Elem t : {m({c(2), u1, u1, u1, u1}), m({c(2), u3, u3, u3, u3}), m({c(2), u2, u2, u2, u2}),
                   m({c(2), u1, u3, u3, u3}), m({u2, u3, u3, u3}), m({c(2), u1, u2, u2, u2})})
        eb = f.add(eb, t);
    return ea.is_zero() && eb.is_zero();
}

/// a = sum_j c_j beta^j for family 1..4 with (u, v) in F_{3^k}, not both 0.
inline Elem coro_p3_beta_generate(const Field& f, Elem beta, int family, Elem u, Elem v, unsigned k) {
    if (f.p() != 3) fail(ErrorCode::wrong_characteristic, "characteristic must be 3");
    detail::require_r4(f, k);
    detail::require_coprime(k, 4);
    if (u.is_zero() && v.is_zero()) fail(ErrorCode::uv_both_zero, "u and v must not both be zero");
    if (!f.in_subfield(u, k) || !f.in_subfield(v, k)) fail(ErrorCode::not_in_subfield, "u, v must lie in F_{3^k}");
    const auto coords = detail::p3_family_coords(f, family, u, v);
    if (!p3_beta_identities_hold(f, coords))
        fail(ErrorCode::hypothesis_violation, "generated coordinates violate the defining identities");
    return from_basis_coordinates(f, beta, {coords.begin(), coords.end()});
}

/// Every coefficient the four families produce, deduplicated, ascending.
inline std::vector<Elem> coro_p3_beta_all(const Field& f, Elem beta, unsigned k) {
    const auto sub = f.subfield_elements(k);
    std::vector<Elem> out;
    for (int fam = 1; fam <= 4; ++fam)
        for (Elem u : sub)
            for (Elem v : sub)
                if (!(u.is_zero() && v.is_zero())) out.push_back(coro_p3_beta_generate(f, beta, fam, u, v, k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

using R6Coords = std::array<int, 6>;

/// Integer multipliers of u for each listed r = 6 family (p = 3 or 5).
inline const std::vector<R6Coords>& r6_families(std::uint32_t p) {
    static const std::vector<R6Coords> p3{
        {0, 0, 1, 1, 1, 1},    {0, 1, 0, 0, 1, -1},  {0, 1, 0, -1, -1, 0},  {1, 0, 1, 0, 1, 1},
        {1, 0, -1, 1, 0, -1},  {1, 1, 0, -1, 1, 1},  {1, 1, 1, 0, -1, 0},   {1, 1, 1, 0, -1, -1},
        {1, 1, -1, 0, -1, -1}, {1, 1, -1, 1, 0, 0},  {1, -1, 1, 0, 0, -1},  {1, -1, -1, -1, 1, -1},
    };
    static const std::vector<R6Coords> p5{
        {1, 0, -1, 3, 0, -3},  {1, 1, 0, -2, 2, 0},  {1, 1, 0, -1, 1, 2},  {1, 1, 1, 1, 1, 2},
        {1, 1, 2, -1, 0, -1},  {1, 1, -2, 2, -1, 1}, {1, 1, -1, 0, 3, 3},  {1, 2, 0, 1, 3, 1},
        {1, 2, 1, 0, 2, 2},    {1, 2, 1, 2, 1, 1},   {1, 2, 2, -2, -1, 1}, {1, 2, -2, -1, 2, 1},
        {1, -2, 2, 1, -2, 2},  {1, 2, -1, 0, 0, 1},  {1, -1, -2, 2, -1, 2}, {0, 0, 1, 1, -2, 0},
        {0, 0, 1, 3, -1, -3},  {0, 1, 1, 1, 1, 0},
    };
    if (p == 3) return p3;
    if (p == 5) return p5;
    fail(ErrorCode::wrong_characteristic, "r = 6 families exist for p = 3 and p = 5 only");
}

struct R6Member {
    Elem a;
    std::optional<Elem> eta;  // D_7 parameter when h_a matches a Dickson polynomial
};

inline R6Member coro_r6_generate(const Field& f, Elem beta, std::size_t family_index, Elem u, unsigned k) {
    const auto& fams = r6_families(f.p());
    if (k == 0 || f.n() != 6 * k) fail(ErrorCode::degree_mismatch, "field degree must be 6k");
    detail::require_coprime(k, 6);
    if (u.is_zero()) fail(ErrorCode::u_zero, "u must be nonzero");
    if (!f.in_subfield(u, k)) fail(ErrorCode::not_in_subfield, "u must lie in F_{p^k}");
    if (family_index >= fams.size()) fail(ErrorCode::invalid_argument, "family index out of range");
    std::vector<Elem> coords;
    for (int c : fams[family_index]) coords.push_back(f.mul(f.from_int(c), u));
    R6Member m{from_basis_coordinates(f, beta, coords), std::nullopt};
    m.eta = is_dickson_of_degree(f, lambda_coeffs(f, m.a, 6, k), 7, k);
    return m;
}

// ------------------------------------------------------- r + 1 = p

struct RtK1 {
    Field field;
    wide_t d = 0;
    std::vector<Elem> coefficients;  // a with a^{p-1} = -1
};

/// d = t (p^r - 1)/(p - 1) + 1 over F_{p^r}, r = p - 1.
inline RtK1 thm_rt_k1(std::uint32_t p, std::uint64_t t) {
    require_odd_prime(p);
    const unsigned r = p - 1;
    if (t == 0) fail(ErrorCode::invalid_argument, "t must be positive");
    if (gcd(wide_t{r} * t + 1, p - 1) != 1) fail(ErrorCode::gcd_violation, "gcd(rt + 1, p - 1) != 1");
    Field f = Field::build(p, r);
    const wide_t d = wide_t{t} * ((f.size() - 1) / (p - 1)) + 1;
    const Elem a0 = f.element_of_order(2 * wide_t{p - 1});
    std::vector<Elem> coeffs;
    for (Elem u : f.subfield_elements(1))
        if (!u.is_zero()) coeffs.push_back(f.mul(a0, u));
    std::sort(coeffs.begin(), coeffs.end());
    return RtK1{f, d, coeffs};
}

struct Conj2Result {
    std::uint32_t p = 0;
    unsigned k = 0;
    wide_t d = 0;
    std::string modulus;
    std::uint64_t tested = 0;
    bool gcd_ok = false;
    std::vector<Elem> failures;
    std::vector<Elem> reformulation_failures;

    bool pass() const { return gcd_ok && failures.empty() && reformulation_failures.empty(); }
};

/// Every a with a^{p^k-1} = -1 in F_{p^{(p-1)k}} is good for d, checked via
/// h_a; separately x (x^2 - a^2)^{(p-1)/2} must permute F_{p^k}.
inline Conj2Result conj2_verify(std::uint32_t p, unsigned k) {
    require_odd_prime(p);
    if (k == 0) fail(ErrorCode::invalid_argument, "k must be positive");
    const unsigned r = p - 1;
    Field f = Field::build(p, r * k);
    Conj2Result res;
    res.p = p;
    res.k = k;
    res.d = dr_exponent(p, k, r);
    res.modulus = format_field_spec(f);
    res.gcd_ok = gcd(res.d, f.group_order()) == 1;
    const wide_t m = f.subfield_size(k) - 1;
    const Elem a0 = f.element_of_order(2 * m);
    const HaChecker checker(f, r, k);
    const auto& sub = checker.index().elements();
    for (Elem u : sub) {
        if (u.is_zero()) continue;
        const Elem a = f.mul(a0, u);
        ++res.tested;
        if (!checker.check(a)) res.failures.push_back(a);
        const Elem a2 = f.mul(a, a);
        const bool ok = permutes_set(sub, [&](Elem x) {
            return f.mul(x, f.pow(f.sub(f.mul(x, x), a2), (p - 1) / 2));
        });
        if (!ok) res.reformulation_failures.push_back(a);
    }
    return res;
}

struct Conj1Result {
    std::uint32_t p = 0;
    unsigned r = 0, k = 0;
    std::string modulus;
    std::uint64_t scanned = 0;
    bool sampled = false;
    std::vector<std::pair<Elem, Elem>> witnesses;  // (a, eta)
};

inline void require_conj1_hypotheses(std::uint32_t p, unsigned r, unsigned k) {
    if (!is_prime_u64(p)) fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
    const std::uint64_t l = std::uint64_t{r} + 1;
    if (k == 0 || !is_prime_u64(l) || l == p || gcd(r, k) != 1 || gcd(l, wide_t{p} * p - 1) != 1)
        fail(ErrorCode::hypothesis_violation,
             "need r + 1 prime, r + 1 != p, gcd(r, k) = 1 and gcd(r + 1, p^2 - 1) = 1");
}

/// Searches F_{p^{rk}}^* for a whose h_a is a Dickson polynomial of degree
/// r + 1. Without a budget the scan is exhaustive (capped at 2^24
/// elements); with one, `budget` coefficients are drawn from a fixed-seed
/// generator, so results are reproducible.
inline Conj1Result conj1_search(std::uint32_t p, unsigned r, unsigned k, std::optional<std::uint64_t> budget = {}) {
    require_conj1_hypotheses(p, r, k);
    Field f = Field::build(p, r * k);
    Conj1Result res;
    res.p = p;
    res.r = r;
    res.k = k;
    res.modulus = format_field_spec(f);
    const DicksonMatcher matcher(f, std::uint64_t{r} + 1, k);
    const auto visit = [&](Elem a) {
        ++res.scanned;
        if (auto eta = matcher.match(lambda_coeffs(f, a, r, k))) res.witnesses.emplace_back(a, *eta);
    };
    const wide_t nonzero = f.size() - 1;
    if (!budget || wide_t{*budget} >= nonzero) {
        if (nonzero > (wide_t{1} << 24)) fail(ErrorCode::cap_exceeded, "exhaustive search too large; pass a budget");
        for (wide_t v = 1; v < f.size(); ++v) visit(Elem(v));
        return res;
    }
    res.sampled = true;
    std::mt19937_64 rng(0x5eedc0ffeeULL);
    std::vector<Elem> picks;
    for (std::uint64_t i = 0; i < *budget; ++i) {
        const wide_t hi = rng(), lo = rng();
        picks.emplace_back(((hi << 64) | lo) % nonzero + 1);
    }
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    for (Elem a : picks) visit(a);
    return res;
}

// ----------------------------------------------------------- multinomial

enum class GPreset { zero, monomial, dickson_quartic };

inline const char* preset_name(GPreset g) {
    switch (g) {
        case GPreset::zero: return "zero";
        case GPreset::monomial: return "monomial";
        case GPreset::dickson_quartic: return "dickson_quartic";
    }
    return "?";
}

inline std::optional<GPreset> parse_preset(std::string_view s) {
    if (s == "zero") return GPreset::zero;
    if (s == "monomial") return GPreset::monomial;
    if (s == "dickson_quartic") return GPreset::dickson_quartic;
    return std::nullopt;
}

struct MultinomialParams {
    SubfieldPoly g;
    Elem v;
    std::string description;
};

/// x g(x) + v x permutes F_{p^k}.
inline bool multinomial_base_is_pp(const Field& f, const SubfieldPoly& g, Elem v) {
    const auto sub = f.subfield_elements(g.k);
    return permutes_set(sub, [&](Elem x) { return f.mul(x, f.add(poly::eval(f, g.coeffs, x), v)); });
}

/// Preset (g, v), or nullopt when the preset does not apply to F_{p^k}:
///  zero            g = 0, v = 1;
///  monomial        g = x^{e-1} for the least e in [2, p^k] with
///                  gcd(e, p^k - 1) = 1 and some v making x^e + v x a PP
///                  (v is the least such encoding);
///  dickson_quartic g = x^4 - 5x^2 + (5 - v) with v = 1, so x g + v x is
///                  D_5(x, 1); needs gcd(5, p^{2k} - 1) = 1.
inline std::optional<MultinomialParams> multinomial_preset(const Field& f, unsigned k, GPreset preset) {
    f.require_divisor(k);
    const wide_t q = f.subfield_size(k);
    const auto sub = f.subfield_elements(k);
    switch (preset) {
        case GPreset::zero: return MultinomialParams{make_subfield_poly(f, {}, k), f.one(), "g=0, v=1"};
        case GPreset::monomial: {
            for (wide_t e = 2; e <= q; ++e) {
                if (gcd(e, q - 1) != 1) continue;
                Poly g(static_cast<std::size_t>(e), f.zero());
                g.back() = f.one();
                auto sp = make_subfield_poly(f, g, k);
                for (Elem v : sub) {
                    if (v.is_zero()) continue;
                    if (multinomial_base_is_pp(f, sp, v))
                        return MultinomialParams{sp, v, "g=x^" + to_string(e - 1) + ", v=" + to_string(v)};
                }
            }
            return std::nullopt;
        }
        case GPreset::dickson_quartic: {
            if (f.p() == 5 || !dickson_is_pp(f.p(), 5, k)) return std::nullopt;
            const Elem v = f.one();
            Poly g{f.sub(f.from_int(5), v), f.zero(), f.from_int(-5), f.zero(), f.one()};
            return MultinomialParams{make_subfield_poly(f, g, k), v, "g=x^4-5x^2+4, v=1"};
        }
    }
    return std::nullopt;
}

/// f(x) = x((a/v) g(T) + T^{p-1}) + (p - 1) x^p + a x, T = Tr_k^n(x).
inline FieldMap multinomial_map(const Field& f, const SubfieldPoly& g, Elem v, Elem a, unsigned k) {
    f.require_divisor(k);
    const std::uint32_t p = f.p();
    const unsigned r = f.n() / k;
    if (v.is_zero()) fail(ErrorCode::v_zero, "v must be nonzero");
    if (g.k != k) fail(ErrorCode::g_not_subfield, "g must be defined over F_{p^k}");
    for (Elem c : g.coeffs)
        if (!f.in_subfield(c, k)) fail(ErrorCode::g_not_subfield, "g has a coefficient outside F_{p^k}");
    if (!f.in_subfield(v, k)) fail(ErrorCode::hypothesis_violation, "v must lie in F_{p^k}");
    if (gcd(p - 1, r) != 1 || r % p == 0) fail(ErrorCode::gcd_violation, "need gcd(p - 1, r) = gcd(r, p) = 1");
    if (a.is_zero() || a == f.from_int(-1) || !f.in_subfield(a, k))
        fail(ErrorCode::a_excluded, "a must lie in F_{p^k} minus {0, -1}");
    if (!multinomial_base_is_pp(f, g, v)) fail(ErrorCode::hypothesis_violation, "x g(x) + v x is not a PP of F_{p^k}");
    const Elem av = f.div(a, v);
    const Elem pm1 = f.from_int(static_cast<std::int64_t>(p) - 1);
    Poly gc = g.coeffs;
    return FieldMap{f, [f, k, p, av, pm1, a, gc](Elem x) {
                        const Elem t = f.trace(x, k);
                        const Elem inner = f.add(f.mul(av, poly::eval(f, gc, t)), f.pow(t, p - 1));
                        return f.add(f.add(f.mul(x, inner), f.mul(pm1, f.pow(x, p))), f.mul(a, x));
                    }};
}

/// (a/v)(T g(T) + v T), the value Tr_k^n(f(x)) must take.
inline Elem multinomial_trace_image(const Field& f, const SubfieldPoly& g, Elem v, Elem a, unsigned k, Elem x) {
    const Elem t = f.trace(x, k);
    return f.mul(f.div(a, v), f.add(f.mul(t, poly::eval(f, g.coeffs, t)), f.mul(v, t)));
}

/// Admissible a for the multinomial family: F_{p^k} minus {0, -1}.
inline std::vector<Elem> multinomial_coefficients(const Field& f, unsigned k) {
    std::vector<Elem> out;
    for (Elem a : f.subfield_elements(k))
        if (!a.is_zero() && a != f.from_int(-1)) out.push_back(a);
    return out;
}

}  // namespace cppforge

#endif  // CPPFORGE_FAMILIES_HPP
