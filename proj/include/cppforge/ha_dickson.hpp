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
 * @file ha_dickson.hpp
 * @brief The subfield polynomial h_a, quintic normal forms and Dickson
 *        polynomials.
 *
 * For n = rk and a in F_{p^n} let a_i = a^{p^{ik}}. Then
 *
 *     h_a(x) = x * prod_{i<r} (x + a_i) = x * sum_i lambda_i x^{r-i}
 *
 * has coefficients in F_{p^k}, and x^d + a x with d = (p^{rk}-1)/(p^k-1) + 1
 * permutes F_{p^n} exactly when h_a permutes F_{p^k}.
 */

#ifndef CPPFORGE_HA_DICKSON_HPP
#define CPPFORGE_HA_DICKSON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "perm_oracle.hpp"
#include "poly.hpp"
#include "subfield.hpp"

namespace cppforge {

/// (lambda_0 = 1, lambda_1, ..., lambda_r), each in F_{p^k}.
struct LambdaVec {
    unsigned r = 0;
    unsigned k = 0;
    std::vector<Elem> lambda;

    Elem operator[](std::size_t i) const { return lambda[i]; }
};

/// Polynomial whose coefficients all lie in F_{p^k}.
struct SubfieldPoly {
    Poly coeffs;
    unsigned k = 0;

    int degree() const { return poly::degree(coeffs); }
};

inline SubfieldPoly make_subfield_poly(const Field& f, Poly coeffs, unsigned k) {
    poly::trim(coeffs);
    for (auto c : coeffs)
        if (!f.in_subfield(c, k)) fail(ErrorCode::not_in_subfield, "coefficient outside F_{p^k}");
    return SubfieldPoly{std::move(coeffs), k};
}

inline void require_rk(const Field& f, unsigned r, unsigned k) {
    if (r == 0 || k == 0 || f.n() != r * k)
        fail(ErrorCode::degree_mismatch, "field degree must equal r*k");
}

inline LambdaVec lambda_coeffs(const Field& f, Elem a, unsigned r, unsigned k) {
    require_rk(f, r, k);
    LambdaVec lv{r, k, std::vector<Elem>(r + 1, f.zero())};
    auto& e = lv.lambda;
    e[0] = f.one();
    Elem ai = a;
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = i + 1; j >= 1; --j) e[j] = f.add(e[j], f.mul(e[j - 1], ai));
        if (i + 1 < r) ai = f.frobenius(ai, k);
    }
    for (unsigned i = 1; i <= r; ++i)
        if (!f.in_subfield(e[i], k)) fail(ErrorCode::not_in_subfield, "lambda coefficient escaped F_{p^k}");
    return lv;
}

inline Elem h_a_eval(const Field& f, const LambdaVec& lv, Elem x) {
    Elem acc = f.one();
    for (unsigned i = 1; i <= lv.r; ++i) acc = f.add(f.mul(acc, x), lv.lambda[i]);
    return f.mul(acc, x);
}

/// Ascending coefficients of h_a (degree r + 1, zero constant term).
inline Poly h_a_poly(const Field& f, const LambdaVec& lv) {
    Poly h(lv.r + 2, f.zero());
    for (unsigned i = 0; i <= lv.r; ++i) h[lv.r + 1 - i] = lv.lambda[i];
    return h;
}

/// Reusable h_a permutation test over one subfield; safe for concurrent use.
class HaChecker {
public:
    HaChecker(const Field& f, unsigned r, unsigned k) : field_(f), r_(r), k_(k), index_(f, k) {
        require_rk(f, r, k);
        if (index_.size() > (std::size_t{1} << 26)) fail(ErrorCode::cap_exceeded, "subfield too large");
        for (Elem x : index_.elements()) raw_.push_back(static_cast<std::uint32_t>(x.v));
    }

    const Field& field() const { return field_; }
    unsigned r() const { return r_; }
    unsigned k() const { return k_; }
    const SubfieldIndex& index() const { return index_; }

    LambdaVec lambdas(Elem a) const { return lambda_coeffs(field_, a, r_, k_); }

    bool is_pp(const LambdaVec& lv) const {
        Bitset seen(index_.size());
        if (auto* t = field_.tables()) {
            std::vector<std::uint32_t> lam(r_ + 1);
            for (unsigned i = 0; i <= r_; ++i) lam[i] = static_cast<std::uint32_t>(lv.lambda[i].v);
            for (std::uint32_t x : raw_) {
                std::uint32_t acc = 1;
                for (unsigned i = 1; i <= r_; ++i) acc = t->add(t->mul(acc, x), lam[i]);
                const std::size_t s = index_.slot(Elem(t->mul(acc, x)));
                if (s == SubfieldIndex::npos || seen.test_and_set(s)) return false;
            }
            return true;
        }
        for (Elem x : index_.elements()) {
            const std::size_t s = index_.slot(h_a_eval(field_, lv, x));
            if (s == SubfieldIndex::npos || seen.test_and_set(s)) return false;
        }
        return true;
    }

    bool check(Elem a) const { return is_pp(lambdas(a)); }

private:
    Field field_;
    unsigned r_, k_;
    SubfieldIndex index_;
    std::vector<std::uint32_t> raw_;
};

/// h_a permutes F_{p^k}.
inline bool ha_pp_check(const Field& f, Elem a, unsigned r, unsigned k) { return HaChecker(f, r, k).check(a); }

/// Coefficients of x^5 + A3 x^3 + A2 x^2 + A1 x, the quintic h_a after
/// x -> x - lambda_1/5 with the constant term dropped.
struct Depressed {
    Elem A3, A2, A1;
};

inline Elem ratio(const Field& f, std::int64_t num, std::int64_t den) {
    return f.mul(f.from_int(num), f.inv(f.from_int(den)));
}

inline Depressed depressed_quintic(const Field& f, const LambdaVec& lv) {
    if (f.p() == 5) fail(ErrorCode::char_five, "5 is not invertible in characteristic 5");
    if (lv.r != 4) fail(ErrorCode::degree_mismatch, "depressed quintic needs r = 4");
    const Elem l1 = lv[1], l2 = lv[2], l3 = lv[3], l4 = lv[4];
    const Elem l1sq = f.mul(l1, l1);
    const Elem l1cu = f.mul(l1sq, l1);
    Depressed d;
    d.A3 = f.sub(l2, f.mul(ratio(f, 2, 5), l1sq));
    d.A2 = f.add(l3, f.sub(f.mul(ratio(f, 4, 25), l1cu), f.mul(ratio(f, 3, 5), f.mul(l1, l2))));
    Elem a1 = f.sub(l4, f.mul(ratio(f, 2, 5), f.mul(l1, l3)));
    a1 = f.sub(a1, f.mul(ratio(f, 3, 125), f.mul(l1sq, l1sq)));
    d.A1 = f.add(a1, f.mul(ratio(f, 3, 25), f.mul(l2, l1sq)));
    return d;
}

/// Normal-form tag of x^5 + A3 x^3 + A2 x^2 + A1 x among the degree-5
/// normalized permutation polynomials of odd q = p^k, p != 5.
inline std::optional<std::string> classify_quintic_pp(const Field& f, const Depressed& d, unsigned k) {
    if (f.p() == 5) fail(ErrorCode::char_five, "quintic normal forms need p != 5");
    for (Elem e : {d.A3, d.A2, d.A1})
        if (!f.in_subfield(e, k)) fail(ErrorCode::not_in_subfield, "coefficient outside F_{p^k}");
    const wide_t q = f.subfield_size(k);
    const auto is = [&](Elem e, std::int64_t v) { return e == f.from_int(v); };
    const auto nonsquare = [&](Elem v) { return !v.is_zero() && !f.residue_test(v, k, ResiduePower::square); };
    const Elem A3sq = f.mul(d.A3, d.A3);
    const bool zero3 = d.A3.is_zero(), zero2 = d.A2.is_zero(), zero1 = d.A1.is_zero();

    if (zero3 && zero2 && zero1 && q % 5 != 1) return "x^5";
    if (q == 9 && zero3 && zero2 && f.mul(d.A1, d.A1) == f.from_int(-1)) return "x^5+vx";
    if (q == 7 && zero3 && zero1 && (is(d.A2, 2) || is(d.A2, -2))) return "x^5+-2x^2";
    if (q == 7 && nonsquare(d.A3) && (is(d.A2, 1) || is(d.A2, -1)) && d.A1 == f.mul(f.from_int(3), A3sq))
        return "x^5+vx^3+-x^2+3v^2x";
    if ((q % 5 == 2 || q % 5 == 3) && zero2 && d.A1 == f.mul(ratio(f, 1, 5), A3sq)) return "x^5+vx^3+5^-1v^2x";
    if (q == 13 && nonsquare(d.A3) && zero2 && d.A1 == f.mul(f.from_int(3), A3sq)) return "x^5+vx^3+3v^2x";
    if (q == 3 && zero2) {
        if (zero3 && is(d.A1, 1)) return "x^5+x";
        if (is(d.A3, 2) && is(d.A1, 1)) return "x^5+2x^3+x";
        if (is(d.A3, 1) && zero1) return "x^5+x^3";
    }
    return std::nullopt;
}

/// C(n, m) mod p by Lucas' theorem.
inline std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint32_t p) {
    std::uint64_t result = 1;
    while (n != 0 || m != 0) {
        const std::uint64_t ni = n % p, mi = m % p;
        if (mi > ni) return 0;
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < mi; ++i) {
            num = num * ((ni - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        result = result * num % p * powmod_u64(den, p - 2, p) % p;
        n /= p;
        m /= p;
    }
    return static_cast<std::uint32_t>(result);
}

/// Integer coefficient l/(l-j) C(l-j, j) of D_l, reduced mod p. Uses
/// l/(l-j) C(l-j, j) = C(l-j, j) + C(l-j-1, j-1), so no division occurs.
inline std::uint32_t dickson_coefficient_mod_p(std::uint64_t l, std::uint64_t j, std::uint32_t p) {
    if (j == 0) return 1 % p;
    return static_cast<std::uint32_t>((binom_mod_p(l - j, j, p) + binom_mod_p(l - j - 1, j - 1, p)) % p);
}

/// D_l(x, eta) = sum_j l/(l-j) C(l-j, j) (-eta)^j x^{l-2j}.
inline SubfieldPoly dickson_poly(const Field& f, std::uint64_t l, Elem eta, unsigned k) {
    if (l == 0) fail(ErrorCode::invalid_argument, "Dickson degree must be positive");
    if (!f.in_subfield(eta, k)) fail(ErrorCode::eta_not_in_subfield, "eta must lie in F_{p^k}");
    Poly c(static_cast<std::size_t>(l + 1), f.zero());
    const Elem minus_eta = f.neg(eta);
    Elem pw = f.one();
    for (std::uint64_t j = 0; 2 * j <= l; ++j) {
        c[static_cast<std::size_t>(l - 2 * j)] = f.mul(f.from_int(dickson_coefficient_mod_p(l, j, f.p())), pw);
        pw = f.mul(pw, minus_eta);
    }
    poly::trim(c);
    return SubfieldPoly{std::move(c), k};
}

/// gcd(l, p^{2k} - 1) = 1.
inline bool dickson_is_pp(std::uint32_t p, std::uint64_t l, unsigned k) {
    if (l == 0) fail(ErrorCode::invalid_argument, "Dickson degree must be positive");
    if (l == 1) return true;
    const std::uint64_t t = powmod_u64(p, wide_t{2} * k, l);
    return static_cast<std::uint64_t>(gcd(l, (t + l - 1) % l)) == 1;
}

/// Matches h_a against D_l(x, eta), eta in F_{p^k}^*, after the shift
/// x -> x - lambda_1/l and dropping the constant term. When l < p^k the
/// comparison is coefficientwise with eta read off the x^{l-2} term;
/// otherwise both sides are compared as maps on F_{p^k}, since only the
/// map matters for permutation behaviour there.
class DicksonMatcher {
public:
    DicksonMatcher(const Field& f, std::uint64_t l, unsigned k) : field_(f), l_(l), k_(k) {
        f.require_divisor(k);
        if (l == 0) fail(ErrorCode::invalid_argument, "Dickson degree must be positive");
        q_ = f.subfield_size(k);
        if (l_ >= q_) {
            if (q_ > (wide_t{1} << 16)) fail(ErrorCode::cap_exceeded, "subfield too large for map comparison");
            sub_ = f.subfield_elements(k);
            for (Elem eta : sub_) {
                if (eta.is_zero()) continue;
                const auto d = dickson_poly(f, l, eta, k);
                std::vector<Elem> vals;
                for (Elem x : sub_) vals.push_back(poly::eval(f, d.coeffs, x));
                tables_.emplace_back(eta, std::move(vals));
            }
        }
    }

    std::optional<Elem> match(const LambdaVec& lv) const {
        const Field& f = field_;
        if (lv.r + 1 != l_) fail(ErrorCode::degree_mismatch, "Dickson degree must equal r + 1");
        if (l_ % f.p() == 0) return std::nullopt;
        const Poly h = h_a_poly(f, lv);
        const Elem c = f.div(lv[1], f.from_int(static_cast<std::int64_t>(l_ % f.p())));
        Poly g = poly::shift(f, h, f.neg(c));
        if (!g.empty()) g[0] = f.zero();
        poly::trim(g);
        if (l_ < q_) {
            if (l_ < 2) return std::nullopt;
            const Elem sub_lead = g.size() > l_ - 2 ? g[static_cast<std::size_t>(l_ - 2)] : f.zero();
            const Elem eta = f.neg(f.div(sub_lead, f.from_int(static_cast<std::int64_t>(l_ % f.p()))));
            if (eta.is_zero()) return std::nullopt;
            if (dickson_poly(f, l_, eta, k_).coeffs == g) return eta;
            return std::nullopt;
        }
        std::vector<Elem> vals;
        vals.reserve(sub_.size());
        for (Elem x : sub_) vals.push_back(poly::eval(f, g, x));
        for (const auto& [eta, dv] : tables_)
            if (dv == vals) return eta;
        return std::nullopt;
    }

private:
    Field field_;
    std::uint64_t l_;
    unsigned k_;
    wide_t q_ = 0;
    std::vector<Elem> sub_;
    std::vector<std::pair<Elem, std::vector<Elem>>> tables_;
};

inline std::optional<Elem> is_dickson_of_degree(const Field& f, const LambdaVec& lv, std::uint64_t l, unsigned k) {
    return DicksonMatcher(f, l, k).match(lv);
}

}  // namespace cppforge

#endif  // CPPFORGE_HA_DICKSON_HPP
