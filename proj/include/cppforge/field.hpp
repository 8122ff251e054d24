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
 * @file field.hpp
 * @brief Finite fields F_{p^n} in a polynomial basis over Z_p.
 *
 * An element is stored as its base-p encoding sum(c_i * p^i), where c_i is
 * the coefficient of x^i modulo the field's monic irreducible modulus. The
 * encoding doubles as a total order and as the text form used in reports.
 *
 * Two backends share that representation:
 *  - table: exp/log/Zech tables over a primitive element (p^n <= 2^22), and
 *  - generic: schoolbook multiplication with reduction by the modulus,
 *    extended Euclid for inverses.
 *
 * Subfields F_{p^k} (k | n) are not separate objects; they are the fixed
 * points of x -> x^{p^k} inside the ambient field.
 *
 * A Field is immutable once built and cheap to copy (shared state), so it
 * can be handed to worker threads freely.
 */

#ifndef CPPFORGE_FIELD_HPP
#define CPPFORGE_FIELD_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "wide.hpp"

namespace cppforge {

/// Field element, held as its base-p encoding.
struct Elem {
    wide_t v = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(wide_t encoding) : v(encoding) {}

    constexpr bool is_zero() const { return v == 0; }

    friend constexpr bool operator==(Elem a, Elem b) { return a.v == b.v; }
    friend constexpr bool operator!=(Elem a, Elem b) { return a.v != b.v; }
    friend constexpr bool operator<(Elem a, Elem b) { return a.v < b.v; }
};

inline std::string to_string(Elem e) { return to_string(e.v); }

enum class Backend { table, generic };

inline const char* backend_name(Backend b) { return b == Backend::table ? "table" : "generic"; }

/// Largest field that gets exp/log tables by default.
inline constexpr wide_t kTableCap = wide_t{1} << 22;
/// Largest subfield we are willing to list element by element.
inline constexpr wide_t kEnumerationCap = wide_t{1} << 26;
/// Characteristic bound; keeps coefficient products inside 64 bits.
inline constexpr std::uint32_t kMaxCharacteristic = 1u << 16;

namespace detail {

inline constexpr unsigned kMaxDigits = 128;
using Digits = std::array<std::uint32_t, kMaxDigits>;

/// Dense polynomial over Z_p, ascending, no trailing zeros (zero = empty).
using ZpPoly = std::vector<std::uint32_t>;

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(powmod_u64(a, p - 2, p));
}

inline void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    zp_trim(r);
    return r;
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    ZpPoly r(acc.begin(), acc.end());
    zp_trim(r);
    return r;
}

/// Quotient and remainder; b must be nonzero.
inline std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b, std::uint32_t p) {
    zp_trim(a);
    if (a.size() < b.size()) return {{}, a};
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    ZpPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        const std::uint64_t c = std::uint64_t{a[i]} * lead_inv % p;
        q[i - b.size() + 1] = static_cast<std::uint32_t>(c);
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto& slot = a[i - b.size() + 1 + j];
            slot = static_cast<std::uint32_t>((slot + p - (c * b[j]) % p) % p);
        }
    }
    zp_trim(q);
    zp_trim(a);
    return {q, a};
}

inline ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) { return zp_divmod(a, b, p).second; }

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline ZpPoly zp_powmod(ZpPoly base, wide_t e, const ZpPoly& m, std::uint32_t p) {
    ZpPoly result{1};
    base = zp_mod(base, m, p);
    while (e != 0) {
        if (e & 1) result = zp_mod(zp_mul(result, base, p), m, p);
        e >>= 1;
        if (e != 0) base = zp_mod(zp_mul(base, base, p), m, p);
    }
    return result;
}

/// Rabin's test: f (monic, degree n) is irreducible over Z_p iff
/// x^{p^n} = x mod f and gcd(x^{p^{n/r}} - x, f) = 1 for each prime r | n.
inline bool zp_is_irreducible(const ZpPoly& f, std::uint32_t p) {
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) return true;
    const ZpPoly x{0, 1};
    std::vector<ZpPoly> frob(n + 1);  // frob[i] = x^{p^i} mod f
    frob[0] = x;
    for (unsigned i = 1; i <= n; ++i) frob[i] = zp_powmod(frob[i - 1], p, f, p);
    if (zp_sub(frob[n], x, p) != ZpPoly{}) return false;
    for (wide_t r : prime_factors(n)) {
        const auto g = zp_gcd(f, zp_sub(frob[n / static_cast<unsigned>(r)], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

struct TableData {
    static constexpr std::uint32_t kNone = 0xffffffffu;

    std::uint32_t order = 0;  // p^n - 1
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;   // log[0] = kNone
    std::vector<std::uint32_t> zech;  // zech[i] = log(1 + g^i), kNone when 1 + g^i = 0

    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        if (x == 0 || y == 0) return 0;
        std::uint32_t s = log[x] + log[y];
        if (s >= order) s -= order;
        return exp[s];
    }

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
        if (x == 0) return y;
        if (y == 0) return x;
        return add_logs(log[x], log[y]);
    }

    /// g^lx + g^ly as an encoding.
    std::uint32_t add_logs(std::uint32_t lx, std::uint32_t ly) const {
        const std::uint32_t d = ly >= lx ? ly - lx : ly + order - lx;
        const std::uint32_t z = zech[d];
        if (z == kNone) return 0;
        std::uint32_t s = lx + z;
        if (s >= order) s -= order;
        return exp[s];
    }
};

struct FieldState {
    std::uint32_t p = 0;
    unsigned n = 0;
    wide_t q = 0;
    std::vector<std::uint32_t> modulus;  // ascending, length n+1, monic
    bool default_modulus = true;
    Backend backend = Backend::generic;
    std::optional<wide_t> generator;
    TableData tables;

    Digits unpack(wide_t v) const {
        Digits d{};
        for (unsigned i = 0; i < n; ++i) {
            d[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        return d;
    }

    wide_t pack(const Digits& d) const {
        wide_t v = 0;
        for (unsigned i = n; i-- > 0;) v = v * p + d[i];
        return v;
    }

    Digits mul_digits(const Digits& a, const Digits& b) const {
        std::array<std::uint64_t, 2 * kMaxDigits> acc{};
        for (unsigned i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < n; ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
        }
        for (unsigned deg = 2 * n - 1; deg-- > n;) {
            const std::uint64_t c = acc[deg] % p;
            if (c == 0) continue;
            for (unsigned j = 0; j < n; ++j)
                acc[deg - n + j] += c * ((p - modulus[j]) % p);
        }
        Digits r{};
        for (unsigned i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(acc[i] % p);
        return r;
    }

    wide_t mul_generic(wide_t x, wide_t y) const { return pack(mul_digits(unpack(x), unpack(y))); }

    wide_t pow_generic(wide_t x, wide_t e) const {
        Digits base = unpack(x);
        Digits result{};
        result[0] = 1;
        while (e != 0) {
            if (e & 1) result = mul_digits(result, base);
            e >>= 1;
            if (e != 0) base = mul_digits(base, base);
        }
        return pack(result);
    }

    wide_t inv_generic(wide_t x) const {
        const Digits dx = unpack(x);
        ZpPoly a(dx.begin(), dx.begin() + n);
        zp_trim(a);
        ZpPoly r0(modulus.begin(), modulus.end()), r1 = a;
        ZpPoly s0{}, s1{1};
        while (!r1.empty()) {
            auto [quot, rem] = zp_divmod(r0, r1, p);
            ZpPoly s2 = zp_sub(s0, zp_mul(quot, s1, p), p);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        const std::uint32_t c = inv_mod_p(r0[0], p);
        Digits out{};
        for (std::size_t i = 0; i < s0.size() && i < n; ++i)
            out[i] = static_cast<std::uint32_t>(std::uint64_t{s0[i]} * c % p);
        return pack(out);
    }

    wide_t add_generic(wide_t x, wide_t y) const {
        wide_t r = 0, place = 1;
        for (unsigned i = 0; i < n; ++i) {
            std::uint32_t s = static_cast<std::uint32_t>(x % p + y % p);
            if (s >= p) s -= p;
            r += place * s;
            place *= p;
            x /= p;
            y /= p;
        }
        return r;
    }

    wide_t neg_generic(wide_t x) const {
        wide_t r = 0, place = 1;
        for (unsigned i = 0; i < n; ++i) {
            const auto c = static_cast<std::uint32_t>(x % p);
            r += place * (c == 0 ? 0 : p - c);
            place *= p;
            x /= p;
        }
        return r;
    }

    void build_tables() {
        const wide_t order = q - 1;
        const auto factors = prime_factors(order);
        wide_t g = 1;
        for (wide_t cand = 1; cand < q; ++cand) {
            bool primitive = true;
            for (wide_t r : factors) {
                if (pow_generic(cand, order / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = cand;
                break;
            }
        }
        generator = g;
        auto& t = tables;
        t.order = static_cast<std::uint32_t>(order);
        t.exp.assign(t.order, 0);
        t.log.assign(static_cast<std::size_t>(q), TableData::kNone);
        t.zech.assign(t.order, TableData::kNone);
        Digits cur{};
        cur[0] = 1;
        const Digits gd = unpack(g);
        for (std::uint32_t i = 0; i < t.order; ++i) {
            const auto enc = static_cast<std::uint32_t>(pack(cur));
            t.exp[i] = enc;
            t.log[enc] = i;
            cur = mul_digits(cur, gd);
        }
        for (std::uint32_t i = 0; i < t.order; ++i) {
            const std::uint32_t e = t.exp[i];
            const std::uint32_t low = e % p;
            const std::uint32_t plus_one = low == p - 1 ? e - (p - 1) : e + 1;
            t.zech[i] = plus_one == 0 ? TableData::kNone : t.log[plus_one];
        }
    }
};

}  // namespace detail

enum class ResiduePower { square, fourth };

class Field {
public:
    /// Validates (p, n, modulus) and builds the field. Without a modulus the
    /// lexicographically least irreducible monic (c_0 compared first) is used.
    static Field build(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                       std::optional<Backend> backend = std::nullopt) {
        if (!is_prime_u64(p)) fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
        if (p >= kMaxCharacteristic) fail(ErrorCode::field_too_large, "characteristic must be below 65536");
        if (n == 0) fail(ErrorCode::invalid_argument, "degree must be at least 1");
        auto q = checked_pow(p, n);
        if (!q || *q > (wide_t{1} << 127))
            fail(ErrorCode::field_too_large, "p^n - 1 must be below 2^127");

        auto st = std::make_shared<detail::FieldState>();
        st->p = p;
        st->n = n;
        st->q = *q;
        if (modulus) {
            const auto& m = *modulus;
            if (m.size() != n + 1 || m.back() != 1)
                fail(ErrorCode::modulus_degree_mismatch, "modulus must be monic of degree " + std::to_string(n));
            for (auto c : m)
                if (c >= p) fail(ErrorCode::invalid_argument, "modulus coefficient out of range");
            if (!detail::zp_is_irreducible(m, p)) fail(ErrorCode::modulus_reducible, "modulus is reducible");
            st->modulus = m;
            st->default_modulus = false;
        } else {
            st->modulus = least_irreducible(p, n);
        }
        st->backend = backend.value_or(st->q <= kTableCap ? Backend::table : Backend::generic);
        if (st->backend == Backend::table) {
            if (st->q > kTableCap) fail(ErrorCode::field_too_large, "table backend limited to 2^22 elements");
            st->build_tables();
        }
        return Field(std::move(st));
    }

    std::uint32_t p() const { return s_->p; }
    unsigned n() const { return s_->n; }
    wide_t size() const { return s_->q; }
    wide_t group_order() const { return s_->q - 1; }
    const std::vector<std::uint32_t>& modulus() const { return s_->modulus; }
    bool modulus_is_default() const { return s_->default_modulus; }
    Backend backend() const { return s_->backend; }
    std::optional<Elem> generator() const {
        if (!s_->generator) return std::nullopt;
        return Elem(*s_->generator);
    }
    /// Raw exp/log/Zech tables, or nullptr for the generic backend.
    const detail::TableData* tables() const { return s_->backend == Backend::table ? &s_->tables : nullptr; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return Elem(1); }
    bool contains(Elem x) const { return x.v < s_->q; }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t c) const {
        const auto p = static_cast<std::int64_t>(s_->p);
        return Elem(static_cast<wide_t>(((c % p) + p) % p));
    }

    std::vector<std::uint32_t> coeffs(Elem x) const {
        const auto d = s_->unpack(x.v);
        return {d.begin(), d.begin() + s_->n};
    }

    Elem from_coeffs(std::span<const std::uint32_t> c) const {
        if (c.size() != s_->n) fail(ErrorCode::invalid_argument, "coefficient vector must have length n");
        detail::Digits d{};
        for (unsigned i = 0; i < s_->n; ++i) {
            if (c[i] >= s_->p) fail(ErrorCode::invalid_argument, "coefficient out of range");
            d[i] = c[i];
        }
        return Elem(s_->pack(d));
    }

    Elem add(Elem x, Elem y) const {
        if (auto* t = tables()) return Elem(t->add(small(x), small(y)));
        return Elem(s_->add_generic(x.v, y.v));
    }

    Elem neg(Elem x) const {
        if (x.is_zero()) return x;
        if (auto* t = tables()) {
            if (s_->p == 2) return x;
            std::uint32_t s = t->log[small(x)] + t->order / 2;
            if (s >= t->order) s -= t->order;
            return Elem(t->exp[s]);
        }
        return Elem(s_->neg_generic(x.v));
    }

    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    Elem mul(Elem x, Elem y) const {
        if (auto* t = tables()) return Elem(t->mul(small(x), small(y)));
        if (x.is_zero() || y.is_zero()) return zero();
        return Elem(s_->mul_generic(x.v, y.v));
    }

    Elem inv(Elem x) const {
        if (x.is_zero()) fail(ErrorCode::divide_by_zero, "inverse of zero");
        if (auto* t = tables()) {
            const std::uint32_t l = t->log[small(x)];
            return Elem(t->exp[l == 0 ? 0 : t->order - l]);
        }
        return Elem(s_->inv_generic(x.v));
    }

    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    /// x^e with 0^0 = 1; e is reduced modulo p^n - 1 for nonzero x.
    Elem pow(Elem x, wide_t e) const {
        if (e == 0) return one();
        if (x.is_zero()) return zero();
        const wide_t order = group_order();
        e %= order;
        if (auto* t = tables()) {
            const auto l = static_cast<std::uint64_t>(t->log[small(x)]);
            return Elem(t->exp[static_cast<std::uint32_t>((l * static_cast<std::uint64_t>(e)) % t->order)]);
        }
        return Elem(s_->pow_generic(x.v, e));
    }

    /// x^(p^j).
    Elem frobenius(Elem x, unsigned j) const {
        if (j >= s_->n) fail(ErrorCode::invalid_argument, "frobenius index must be below n");
        if (j == 0 || x.is_zero()) return x;
        return pow(x, *checked_pow(s_->p, j));
    }

    void require_divisor(unsigned k) const {
        if (k == 0 || s_->n % k != 0)
            fail(ErrorCode::k_not_divisor, std::to_string(k) + " does not divide " + std::to_string(s_->n));
    }

    /// Tr_k^n(x) = sum_{i < n/k} x^(p^(ik)).
    Elem trace(Elem x, unsigned k) const {
        require_divisor(k);
        Elem acc = x, y = x;
        for (unsigned i = 1; i < s_->n / k; ++i) {
            y = frobenius(y, k);
            acc = add(acc, y);
        }
        return acc;
    }

    bool in_subfield(Elem x, unsigned k) const {
        require_divisor(k);
        return k == s_->n || frobenius(x, k) == x;
    }

    /// p^k.
    wide_t subfield_size(unsigned k) const {
        require_divisor(k);
        return *checked_pow(s_->p, k);
    }

    /// All p^k fixed points of x -> x^(p^k), ascending by encoding.
    std::vector<Elem> subfield_elements(unsigned k) const {
        require_divisor(k);
        const wide_t sub_q = subfield_size(k);
        if (sub_q > kEnumerationCap) fail(ErrorCode::cap_exceeded, "subfield too large to enumerate");
        std::vector<Elem> out;
        out.reserve(static_cast<std::size_t>(sub_q));
        if (k == s_->n) {
            for (wide_t v = 0; v < sub_q; ++v) out.emplace_back(v);
            return out;
        }
        if (auto* t = tables()) {
            const auto step = static_cast<std::uint32_t>(group_order() / (sub_q - 1));
            out.push_back(zero());
            for (std::uint32_t i = 0; i < t->order; i += step) out.emplace_back(t->exp[i]);
        } else {
            out = subfield_by_trace_image(k);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Subfield listing from the F_p-span of Tr_k^n applied to the polynomial
    /// basis; independent of the tables, used by the generic backend.
    std::vector<Elem> subfield_by_trace_image(unsigned k) const {
        require_divisor(k);
        const std::uint32_t p = s_->p;
        const unsigned n = s_->n;
        std::vector<std::vector<std::uint32_t>> rows;
        wide_t place = 1;
        for (unsigned i = 0; i < n; ++i, place *= p) {
            auto v = coeffs(trace(Elem(place), k));
            for (const auto& r : rows) {
                unsigned pivot = 0;
                while (r[pivot] == 0) ++pivot;
                if (v[pivot] != 0) {
                    const std::uint64_t c = v[pivot];
                    for (unsigned j = 0; j < n; ++j)
                        v[j] = static_cast<std::uint32_t>((v[j] + (p - r[j]) * c) % p);
                }
            }
            unsigned pivot = 0;
            while (pivot < n && v[pivot] == 0) ++pivot;
            if (pivot == n) continue;
            const std::uint64_t inv = detail::inv_mod_p(v[pivot], p);
            for (auto& c : v) c = static_cast<std::uint32_t>(c * inv % p);
            for (auto& r : rows) {
                if (r[pivot] != 0) {
                    const std::uint64_t c = r[pivot];
                    for (unsigned j = 0; j < n; ++j)
                        r[j] = static_cast<std::uint32_t>((r[j] + (p - v[j]) * c) % p);
                }
            }
            rows.push_back(std::move(v));
            if (rows.size() == k) break;
        }
        std::vector<Elem> basis;
        for (const auto& r : rows) basis.push_back(from_coeffs(r));
        std::vector<Elem> out{zero()};
        for (const Elem& b : basis) {
            const std::size_t prior = out.size();
            Elem multiple = b;
            for (std::uint32_t c = 1; c < p; ++c, multiple = add(multiple, b))
                for (std::size_t i = 0; i < prior; ++i) out.push_back(add(out[i], multiple));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// True iff x is a square (or fourth power) inside F_{p^k}.
    bool residue_test(Elem x, unsigned k, ResiduePower power) const {
        if (x.is_zero()) fail(ErrorCode::zero_input, "residue test of zero");
        if (!in_subfield(x, k)) fail(ErrorCode::not_in_subfield, "element not in F_{p^k}");
        const wide_t sub_order = subfield_size(k) - 1;
        const wide_t m = power == ResiduePower::square ? 2 : 4;
        return pow(x, sub_order / gcd(m, sub_order)) == one();
    }

    /// Some element of multiplicative order exactly m (m | p^n - 1).
    Elem element_of_order(wide_t m) const {
        const wide_t order = group_order();
        if (m == 0 || order % m != 0) fail(ErrorCode::s_not_divisor, to_string(m) + " does not divide p^n - 1");
        if (m == 1) return one();
        if (auto g = generator()) return pow(*g, order / m);
        if (m > (wide_t{1} << 40)) fail(ErrorCode::cap_exceeded, "subgroup order too large to factor");
        const auto factors = prime_factors(m);
        for (wide_t x = 2; x < size(); ++x) {
            const Elem z = pow(Elem(x), order / m);
            bool exact = true;
            for (wide_t r : factors) {
                if (pow(z, m / r) == one()) {
                    exact = false;
                    break;
                }
            }
            if (exact) return z;
        }
        fail(ErrorCode::no_root_found, "no element of the requested order");
    }

private:
    explicit Field(std::shared_ptr<const detail::FieldState> s) : s_(std::move(s)) {}

    static std::uint32_t small(Elem x) { return static_cast<std::uint32_t>(x.v); }

    static std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned n) {
        std::vector<std::uint32_t> c(n + 1, 0);
        c[n] = 1;
        if (n == 1) return c;
        // odometer with c_0 most significant; c_0 = 0 is divisible by x
        c[0] = 1;
        while (true) {
            if (detail::zp_is_irreducible(c, p)) return c;
            unsigned i = n;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
            }
        }
    }

    std::shared_ptr<const detail::FieldState> s_;
};

enum class ArithOp { add, sub, mul, neg, inv };

/// Dispatching form of the field operations; y is ignored for neg and inv.
inline Elem arith(const Field& f, ArithOp op, Elem x, Elem y = Elem{}) {
    switch (op) {
        case ArithOp::add: return f.add(x, y);
        case ArithOp::sub: return f.sub(x, y);
        case ArithOp::mul: return f.mul(x, y);
        case ArithOp::neg: return f.neg(x);
        case ArithOp::inv: return f.inv(x);
    }
    return x;
}

/// Parsed "p=<int>,n=<int>[,mod=c0,c1,...,cn]".
struct FieldSpec {
    std::uint32_t p = 0;
    unsigned n = 0;
    std::optional<std::vector<std::uint32_t>> modulus;
};

inline std::vector<std::uint32_t> parse_coefficient_list(std::string_view s) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string_view::npos) end = s.size();
        auto v = parse_wide(s.substr(start, end - start));
        if (!v || *v > 0xffffffffu) fail(ErrorCode::invalid_argument, "bad coefficient list '" + std::string(s) + "'");
        out.push_back(static_cast<std::uint32_t>(*v));
        start = end + 1;
    }
    return out;
}

inline FieldSpec parse_field_spec(std::string_view text) {
    FieldSpec spec;
    bool have_p = false, have_n = false;
    std::string_view rest = text;
    while (!rest.empty()) {
        if (rest.starts_with("mod=")) {
            spec.modulus = parse_coefficient_list(rest.substr(4));
            break;
        }
        std::size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) fail(ErrorCode::invalid_argument, "expected key=value in field spec");
        auto key = item.substr(0, eq);
        auto val = parse_wide(item.substr(eq + 1));
        if (!val || *val > 0xffffffffu) fail(ErrorCode::invalid_argument, "bad value in field spec");
        if (key == "p") {
            spec.p = static_cast<std::uint32_t>(*val);
            have_p = true;
        } else if (key == "n") {
            spec.n = static_cast<unsigned>(*val);
            have_n = true;
        } else {
            fail(ErrorCode::invalid_argument, "unknown field spec key '" + std::string(key) + "'");
        }
    }
    if (!have_p || !have_n) fail(ErrorCode::invalid_argument, "field spec needs p and n");
    return spec;
}

inline Field build_field(const FieldSpec& spec, std::optional<Backend> backend = std::nullopt) {
    return Field::build(spec.p, spec.n, spec.modulus, backend);
}

inline std::string format_field_spec(const Field& f) {
    std::string s = "p=" + std::to_string(f.p()) + ",n=" + std::to_string(f.n()) + ",mod=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.modulus()[i]);
    }
    return s;
}

}  // namespace cppforge

#endif  // CPPFORGE_FIELD_HPP
