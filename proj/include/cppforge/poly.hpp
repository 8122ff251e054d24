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
 * @file poly.hpp
 * @brief Univariate polynomials with coefficients in a Field.
 *
 * Coefficients are ascending (index i multiplies x^i). Besides ring
 * arithmetic this covers irreducibility over a subfield (distinct-degree
 * gcds), root finding (Cantor-Zassenhaus), and coordinates with respect to
 * a power basis 1, beta, ..., beta^{r-1} over F_{p^k}.
 */

#ifndef CPPFORGE_POLY_HPP
#define CPPFORGE_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "field.hpp"

namespace cppforge {

using Poly = std::vector<Elem>;

namespace poly {

inline void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

/// -1 for the zero polynomial.
inline int degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (!a[i].is_zero()) return static_cast<int>(i);
    return -1;
}

/// Polynomial with prime-field coefficients given as integers.
inline Poly from_ints(const Field& f, std::initializer_list<std::int64_t> c) {
    Poly out;
    for (auto v : c) out.push_back(f.from_int(v));
    trim(out);
    return out;
}

inline Elem eval(const Field& f, const Poly& a, Elem x) {
    Elem acc = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

inline Poly add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < a.size() ? a[i] : f.zero(), i < b.size() ? b[i] : f.zero());
    trim(r);
    return r;
}

inline Poly sub(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.sub(i < a.size() ? a[i] : f.zero(), i < b.size() ? b[i] : f.zero());
    trim(r);
    return r;
}

inline Poly scale(const Field& f, const Poly& a, Elem c) {
    Poly r;
    r.reserve(a.size());
    for (auto x : a) r.push_back(f.mul(x, c));
    trim(r);
    return r;
}

inline Poly mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

inline std::pair<Poly, Poly> divmod(const Field& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    if (b.empty()) fail(ErrorCode::divide_by_zero, "polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    const Elem lead_inv = f.inv(b.back());
    Poly q(a.size() - b.size() + 1, f.zero());
    for (std::size_t i = a.size(); i-- >= b.size();) {
        const Elem c = f.mul(a[i], lead_inv);
        q[i - b.size() + 1] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto& slot = a[i - b.size() + 1 + j];
            slot = f.sub(slot, f.mul(c, b[j]));
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

inline Poly mod(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

inline Poly monic(const Field& f, const Poly& a) {
    if (a.empty()) return a;
    return scale(f, a, f.inv(a.back()));
}

/// Monic gcd (zero if both inputs are zero).
inline Poly gcd(const Field& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

inline Poly powmod(const Field& f, Poly base, wide_t e, const Poly& m) {
    Poly result{f.one()};
    result = mod(f, result, m);
    base = mod(f, base, m);
    while (e != 0) {
        if (e & 1) result = mod(f, mul(f, result, base), m);
        e >>= 1;
        if (e != 0) base = mod(f, mul(f, base, base), m);
    }
    return result;
}

/// Raises every coefficient to the p^j-th power.
inline Poly frobenius_coeffs(const Field& f, const Poly& g, unsigned j) {
    Poly r;
    r.reserve(g.size());
    for (auto c : g) r.push_back(f.frobenius(c, j % f.n()));
    return r;
}

/// g(x + c).
inline Poly shift(const Field& f, const Poly& g, Elem c) {
    Poly r;
    for (std::size_t i = g.size(); i-- > 0;) {
        r = mul(f, r, Poly{c, f.one()});
        r = add(f, r, Poly{g[i]});
    }
    return r;
}

}  // namespace poly

/// True iff monic f (coefficients in F_{p^k}) is irreducible over F_{p^k}.
inline bool is_irreducible(const Field& f, const Poly& g, unsigned k) {
    Poly a = g;
    poly::trim(a);
    if (a.size() < 2) fail(ErrorCode::invalid_argument, "degree must be at least 1");
    if (a.back() != f.one()) fail(ErrorCode::not_monic, "polynomial must be monic");
    for (auto c : a)
        if (!f.in_subfield(c, k)) fail(ErrorCode::not_in_subfield, "coefficient outside F_{p^k}");
    const int deg = poly::degree(a);
    const wide_t sub_q = f.subfield_size(k);
    const Poly x{f.zero(), f.one()};
    Poly h = x;
    for (int i = 1; i <= deg / 2; ++i) {
        h = poly::powmod(f, h, sub_q, a);
        if (poly::degree(poly::gcd(f, poly::sub(f, h, x), a)) > 0) return false;
    }
    return true;
}

namespace detail {

inline void split_roots(const Field& f, const Poly& g, std::vector<Elem>& out) {
    const int deg = poly::degree(g);
    if (deg <= 0) return;
    if (deg == 1) {
        out.push_back(f.neg(f.div(g[0], g[1])));
        return;
    }
    const Poly x{f.zero(), f.one()};
    for (wide_t delta = 1; delta < f.size(); ++delta) {
        Poly h;
        if (f.p() == 2) {
            // absolute trace of delta*x, reduced mod g
            Poly term = poly::mod(f, Poly{f.zero(), Elem(delta)}, g);
            h = term;
            for (unsigned i = 1; i < f.n(); ++i) {
                term = poly::mod(f, poly::mul(f, term, term), g);
                h = poly::add(f, h, term);
            }
        } else {
            h = poly::powmod(f, Poly{Elem(delta), f.one()}, (f.size() - 1) / 2, g);
            h = poly::sub(f, h, Poly{f.one()});
        }
        Poly d = poly::gcd(f, h, g);
        const int dd = poly::degree(d);
        if (dd > 0 && dd < deg) {
            split_roots(f, d, out);
            split_roots(f, poly::divmod(f, g, d).first, out);
            return;
        }
    }
    fail(ErrorCode::no_root_found, "root splitting did not converge");
}

}  // namespace detail

/// All distinct roots of g in F, ascending by encoding.
inline std::vector<Elem> find_roots(const Field& f, const Poly& g) {
    Poly a = g;
    poly::trim(a);
    if (a.empty()) fail(ErrorCode::invalid_argument, "zero polynomial has every element as a root");
    std::vector<Elem> out;
    if (f.size() <= 4096) {
        for (wide_t v = 0; v < f.size(); ++v)
            if (poly::eval(f, a, Elem(v)).is_zero()) out.emplace_back(v);
        return out;
    }
    a = poly::monic(f, a);
    const Poly x{f.zero(), f.one()};
    // product of the distinct linear factors
    Poly xq = poly::powmod(f, x, f.size(), a);
    Poly lin = poly::gcd(f, poly::sub(f, xq, x), a);
    detail::split_roots(f, lin, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Root with the smallest encoding.
inline Elem find_root(const Field& f, const Poly& g) {
    auto roots = find_roots(f, g);
    if (roots.empty()) fail(ErrorCode::no_root_found, "polynomial has no root in the field");
    return roots.front();
}

/// sum_j c_j beta^j.
inline Elem from_basis_coordinates(const Field& f, Elem beta, const std::vector<Elem>& coords) {
    Elem acc = f.zero();
    for (std::size_t j = coords.size(); j-- > 0;) acc = f.add(f.mul(acc, beta), coords[j]);
    return acc;
}

/// Coordinates (c_0..c_{r-1}) in F_{p^k} with x = sum c_j beta^j, r = n/k.
/// Solves the Vandermonde system over the conjugates of beta.
inline std::vector<Elem> basis_coordinates(const Field& f, Elem beta, unsigned k, Elem x) {
    f.require_divisor(k);
    const unsigned r = f.n() / k;
    std::vector<std::vector<Elem>> m(r, std::vector<Elem>(r + 1));
    Elem bi = beta, xi = x;
    for (unsigned i = 0; i < r; ++i) {
        Elem pw = f.one();
        for (unsigned j = 0; j < r; ++j) {
            m[i][j] = pw;
            pw = f.mul(pw, bi);
        }
        m[i][r] = xi;
        if (i + 1 < r) {
            bi = f.frobenius(bi, k);
            xi = f.frobenius(xi, k);
        }
    }
    for (unsigned col = 0; col < r; ++col) {
        unsigned piv = col;
        while (piv < r && m[piv][col].is_zero()) ++piv;
        if (piv == r) fail(ErrorCode::hypothesis_violation, "beta does not generate a basis over F_{p^k}");
        std::swap(m[piv], m[col]);
        const Elem inv = f.inv(m[col][col]);
        for (auto& e : m[col]) e = f.mul(e, inv);
        for (unsigned row = 0; row < r; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const Elem c = m[row][col];
            for (unsigned j = col; j <= r; ++j) m[row][j] = f.sub(m[row][j], f.mul(c, m[col][j]));
        }
    }
    std::vector<Elem> out(r);
    for (unsigned i = 0; i < r; ++i) out[i] = m[i][r];
    return out;
}

}  // namespace cppforge

#endif  // CPPFORGE_POLY_HPP
