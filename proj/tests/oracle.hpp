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


// A deliberately naive field used only as a test oracle. It shares no code
// with the library: elements are coefficient vectors, multiplication is
// schoolbook with top-down reduction, inverses come from x^{q-2}.

#ifndef CPPFORGE_TESTS_ORACLE_HPP
#define CPPFORGE_TESTS_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t md(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

struct NaiveField {
    std::int64_t p;
    unsigned n;
    Vec modulus;  // ascending, monic, degree n
    std::uint64_t q;

    NaiveField(std::int64_t p_, unsigned n_, Vec mod) : p(p_), n(n_), modulus(std::move(mod)), q(1) {
        for (unsigned i = 0; i < n; ++i) q *= static_cast<std::uint64_t>(p);
    }

    Vec decode(std::uint64_t e) const {
        Vec v(n);
        for (unsigned i = 0; i < n; ++i, e /= static_cast<std::uint64_t>(p)) v[i] = static_cast<std::int64_t>(e % p);
        return v;
    }

    std::uint64_t encode(const Vec& v) const {
        std::uint64_t e = 0;
        for (unsigned i = n; i-- > 0;) e = e * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(md(v[i], p));
        return e;
    }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        Vec a = decode(x), b = decode(y);
        for (unsigned i = 0; i < n; ++i) a[i] = md(a[i] + b[i], p);
        return encode(a);
    }

    std::uint64_t neg(std::uint64_t x) const {
        Vec a = decode(x);
        for (auto& c : a) c = md(-c, p);
        return encode(a);
    }

    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
        const Vec a = decode(x), b = decode(y);
        Vec prod(2 * n, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) prod[i + j] = md(prod[i + j] + a[i] * b[j], p);
        for (unsigned i = 2 * n - 1; i >= n; --i) {
            const std::int64_t c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j <= n; ++j) prod[i - n + j] = md(prod[i - n + j] - c * modulus[j], p);
        }
        prod.resize(n);
        return encode(prod);
    }

    std::uint64_t pow(std::uint64_t x, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
        return r;
    }

    std::uint64_t fast_pow(std::uint64_t x, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t x) const { return fast_pow(x, q - 2); }
};

/// Irreducibility by trial division with every monic polynomial of degree
/// 1 .. deg/2 (ascending coefficient vectors).
inline bool naive_irreducible(std::int64_t p, const Vec& f) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t e = 0; e < count; ++e) {
            Vec g(d + 1);
            std::uint64_t t = e;
            for (unsigned i = 0; i < d; ++i, t /= static_cast<std::uint64_t>(p)) g[i] = static_cast<std::int64_t>(t % p);
            g[d] = 1;
            Vec r = f;
            for (unsigned i = deg; i >= d; --i) {
                const std::int64_t c = md(r[i], p);
                if (c != 0)
                    for (unsigned j = 0; j <= d; ++j) r[i - d + j] = md(r[i - d + j] - c * g[j], p);
                if (i == d) break;
            }
            bool zero = true;
            for (unsigned i = 0; i < d; ++i) zero = zero && md(r[i], p) == 0;
            if (zero) return false;
        }
    }
    return true;
}

/// Least monic irreducible of degree n, ordering candidates by (c0, c1, ...).
inline Vec naive_least_irreducible(std::int64_t p, unsigned n) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t e = 0; e < count; ++e) {
        Vec f(n + 1);
        std::uint64_t t = e;
        // c0 is the most significant digit of the enumeration counter
        for (unsigned i = n; i-- > 0;) {
            f[i] = static_cast<std::int64_t>(t % p);
            t /= static_cast<std::uint64_t>(p);
        }
        f[n] = 1;
        if (naive_irreducible(p, f)) return f;
    }
    return {};
}

inline bool naive_is_permutation(std::uint64_t q, const std::function<std::uint64_t(std::uint64_t)>& fn) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t x = 0; x < q; ++x) seen.insert(fn(x));
    return seen.size() == q;
}

}  // namespace oracle

#endif  // CPPFORGE_TESTS_ORACLE_HPP
