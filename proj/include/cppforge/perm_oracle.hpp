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
 * @file perm_oracle.hpp
 * @brief Ground-truth permutation tests and three equivalent PP criteria.
 *
 * is_permutation is the reference: every element is evaluated and marked in
 * an occupancy bitset. The character-sum and Zieve criteria are exact
 * reformulations kept for cross-validation.
 */

#ifndef CPPFORGE_PERM_ORACLE_HPP
#define CPPFORGE_PERM_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"
#include "poly.hpp"

namespace cppforge {

/// A total map F_{p^n} -> F_{p^n}.
struct FieldMap {
    Field field;
    std::function<Elem(Elem)> eval;

    Elem operator()(Elem x) const { return eval(x); }
};

/// Largest field a full scan will touch.
inline constexpr wide_t kScanCap = wide_t{1} << 32;
/// Largest field for exact character sums (quadratic cost).
inline constexpr wide_t kCharSumCap = wide_t{1} << 14;

class Bitset {
public:
    explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    /// Sets bit i; returns whether it was already set.
    bool test_and_set(std::size_t i) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        std::uint64_t& w = words_[i >> 6];
        const bool was = (w & mask) != 0;
        w |= mask;
        return was;
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

private:
    std::vector<std::uint64_t> words_;
};

inline void require_scan_cap(const Field& f) {
    if (f.size() > kScanCap) fail(ErrorCode::cap_exceeded, "field too large for an exhaustive scan");
}

inline bool is_permutation(const FieldMap& f) {
    require_scan_cap(f.field);
    const auto q = static_cast<std::size_t>(f.field.size());
    Bitset seen(q);
    for (std::size_t v = 0; v < q; ++v) {
        const Elem y = f(Elem(v));
        if (!f.field.contains(y)) return false;
        if (seen.test_and_set(static_cast<std::size_t>(y.v))) return false;
    }
    return true;
}

/// True iff fn maps the finite set `domain` bijectively onto itself.
template <class Fn>
bool permutes_set(std::span<const Elem> domain, Fn&& fn) {
    std::vector<Elem> dom(domain.begin(), domain.end());
    std::vector<Elem> img;
    img.reserve(dom.size());
    for (Elem x : dom) img.push_back(fn(x));
    std::sort(dom.begin(), dom.end());
    std::sort(img.begin(), img.end());
    return dom == img;
}

inline bool is_cpp(const FieldMap& f) {
    if (!is_permutation(f)) return false;
    const Field& fld = f.field;
    return is_permutation(FieldMap{fld, [&](Elem x) { return fld.add(f(x), x); }});
}

/// x -> x^d + a x is a bijection of the field.
inline bool exponent_pair_is_pp(const Field& f, wide_t d, Elem a) {
    require_scan_cap(f);
    if (auto* t = f.tables()) {
        const std::uint32_t order = t->order;
        const auto dd = static_cast<std::uint64_t>(d % order);
        Bitset seen(static_cast<std::size_t>(f.size()));
        seen.test_and_set(0);  // image of 0
        if (a.is_zero()) {
            for (std::uint64_t lx = 0, ld = 0; lx < order; ++lx, ld = (ld + dd) % order)
                if (seen.test_and_set(t->exp[ld])) return false;
            return true;
        }
        const std::uint32_t la = t->log[static_cast<std::uint32_t>(a.v)];
        std::uint64_t ld = 0;
        std::uint32_t l2 = la;
        for (std::uint32_t lx = 0; lx < order; ++lx) {
            const std::uint32_t y = t->add_logs(static_cast<std::uint32_t>(ld), l2);
            if (seen.test_and_set(y)) return false;
            ld += dd;
            if (ld >= order) ld -= order;
            if (++l2 == order) l2 = 0;
        }
        return true;
    }
    return is_permutation(FieldMap{f, [&](Elem x) { return f.add(f.pow(x, d), f.mul(a, x)); }});
}

/// a^{-1} x^d is a CPP: gcd(d, p^n - 1) = 1 and x^d + a x permutes.
inline bool is_cpp_exponent_pair(const Field& f, wide_t d, Elem a) {
    if (a.is_zero()) fail(ErrorCode::zero_coefficient, "coefficient a must be nonzero");
    if (gcd(d, f.group_order()) != 1) return false;
    return exponent_pair_is_pp(f, d, a);
}

/// Exact element of Z[w], w a primitive p-th root of unity, stored as the
/// coefficient vector of 1, w, ..., w^{p-1} modulo 1 + w + ... + w^{p-1}.
class CycInt {
public:
    explicit CycInt(std::uint32_t p) : c_(p, 0) {}

    static CycInt integer(std::uint32_t p, std::int64_t v) {
        CycInt z(p);
        z.c_[0] = v;
        return z;
    }

    static CycInt omega_pow(std::uint32_t p, std::uint64_t j) {
        CycInt z(p);
        z.c_[j % p] = 1;
        return z;
    }

    std::uint32_t p() const { return static_cast<std::uint32_t>(c_.size()); }
    const std::vector<std::int64_t>& counts() const { return c_; }

    void add_omega(std::uint64_t j, std::int64_t mult = 1) { c_[j % c_.size()] += mult; }

    CycInt canonical() const {
        CycInt z = *this;
        const std::int64_t top = z.c_.back();
        for (auto& v : z.c_) v -= top;
        return z;
    }

    bool is_zero() const {
        const auto z = canonical();
        return std::all_of(z.c_.begin(), z.c_.end(), [](std::int64_t v) { return v == 0; });
    }

    /// Value when the element is a rational integer.
    std::optional<std::int64_t> as_integer() const {
        const auto z = canonical();
        for (std::size_t j = 1; j < z.c_.size(); ++j)
            if (z.c_[j] != 0) return std::nullopt;
        return z.c_[0];
    }

    /// Complex conjugate, w -> w^{p-1}.
    CycInt conj() const {
        CycInt z(p());
        for (std::size_t j = 0; j < c_.size(); ++j) z.c_[(c_.size() - j) % c_.size()] = c_[j];
        return z;
    }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        CycInt z = a;
        for (std::size_t j = 0; j < z.c_.size(); ++j) z.c_[j] += b.c_[j];
        return z;
    }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        const std::size_t p = a.c_.size();
        CycInt z(a.p());
        for (std::size_t i = 0; i < p; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) z.c_[(i + j) % p] += a.c_[i] * b.c_[j];
        }
        return z;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.c_.size() == b.c_.size() && a.canonical().c_ == b.canonical().c_;
    }

    std::string to_string() const {
        if (auto v = as_integer()) return std::to_string(*v);
        const auto z = canonical();
        std::string s;
        for (std::size_t j = 0; j < z.c_.size(); ++j) {
            if (z.c_[j] == 0) continue;
            if (!s.empty()) s += " + ";
            s += std::to_string(z.c_[j]);
            if (j) s += "*w^" + std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }

private:
    std::vector<std::int64_t> c_;
};

inline void require_charsum_cap(const Field& f) {
    if (f.size() > kCharSumCap)
        fail(ErrorCode::field_too_large_for_charsum, "exact character sums limited to 2^14 elements");
}

/// Tr_1^n(y) as an integer in [0, p) for every encoding y.
inline std::vector<std::uint32_t> absolute_trace_table(const Field& f) {
    require_charsum_cap(f);
    const unsigned n = f.n();
    std::vector<std::uint32_t> basis(n);
    wide_t place = 1;
    for (unsigned i = 0; i < n; ++i, place *= f.p()) basis[i] = static_cast<std::uint32_t>(f.trace(Elem(place), 1).v);
    const auto q = static_cast<std::size_t>(f.size());
    std::vector<std::uint32_t> out(q);
    for (std::size_t v = 0; v < q; ++v) {
        std::uint64_t acc = 0;
        std::size_t rest = v;
        for (unsigned i = 0; i < n; ++i) {
            acc += std::uint64_t{basis[i]} * (rest % f.p());
            rest /= f.p();
        }
        out[v] = static_cast<std::uint32_t>(acc % f.p());
    }
    return out;
}

/// sum_x w^{Tr(alpha f(x))}.
inline CycInt char_sum(const FieldMap& f, Elem alpha) {
    const auto tr = absolute_trace_table(f.field);
    CycInt z(f.field.p());
    for (std::size_t v = 0; v < tr.size(); ++v)
        z.add_omega(tr[static_cast<std::size_t>(f.field.mul(alpha, f(Elem(v))).v)]);
    return z;
}

/// f permutes iff every nontrivial additive character sum of f vanishes.
inline bool char_sum_pp_check(const FieldMap& f) {
    const Field& fld = f.field;
    const auto tr = absolute_trace_table(fld);
    const std::size_t q = tr.size();
    std::vector<Elem> img(q);
    for (std::size_t v = 0; v < q; ++v) img[v] = f(Elem(v));
    std::vector<std::int64_t> bucket(fld.p());
    for (std::size_t al = 1; al < q; ++al) {
        std::fill(bucket.begin(), bucket.end(), 0);
        for (std::size_t v = 0; v < q; ++v) ++bucket[tr[static_cast<std::size_t>(fld.mul(Elem(al), img[v]).v)]];
        CycInt z(fld.p());
        for (std::uint32_t j = 0; j < fld.p(); ++j) z.add_omega(j, bucket[j]);
        if (!z.is_zero()) return false;
    }
    return true;
}

/// x^l g(x)^{(p^n-1)/s} permutes mu_s and gcd(l, (p^n-1)/s) = 1.
inline bool zieve_mu_check(const Field& f, wide_t l, const Poly& g, wide_t s) {
    const wide_t order = f.group_order();
    if (s == 0 || order % s != 0) fail(ErrorCode::s_not_divisor, "s must divide p^n - 1");
    if (s > kScanCap) fail(ErrorCode::cap_exceeded, "mu_s too large to enumerate");
    const wide_t m = order / s;
    if (gcd(l, m) != 1) return false;
    const Elem z = f.element_of_order(s);
    std::vector<Elem> mu;
    mu.reserve(static_cast<std::size_t>(s));
    Elem cur = f.one();
    for (wide_t i = 0; i < s; ++i, cur = f.mul(cur, z)) mu.push_back(cur);
    return permutes_set(mu, [&](Elem x) { return f.mul(f.pow(x, l), f.pow(poly::eval(f, g, x), m)); });
}

/// x^l g(x) g^{(p^k)}(x) ... g^{(p^{(r-1)k})}(x) permutes F_{p^k} and
/// gcd(l, (p^n-1)/(p^k-1)) = 1.
inline bool zieve_subfield_check(const Field& f, wide_t l, const Poly& g, unsigned k) {
    f.require_divisor(k);
    const unsigned r = f.n() / k;
    const wide_t m = f.group_order() / (f.subfield_size(k) - 1);
    if (gcd(l, m) != 1) return false;
    std::vector<Poly> conj;
    for (unsigned i = 0; i < r; ++i) conj.push_back(poly::frobenius_coeffs(f, g, i * k));
    const auto sub = f.subfield_elements(k);
    return permutes_set(sub, [&](Elem x) {
        Elem acc = f.pow(x, l);
        for (const auto& gi : conj) acc = f.mul(acc, poly::eval(f, gi, x));
        return acc;
    });
}

}  // namespace cppforge

#endif  // CPPFORGE_PERM_ORACLE_HPP
