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
 * @file niho.hpp
 * @brief Unit circle, the set V, N(a) and Walsh values for Niho exponents
 *        d = s(p^k - 1) + 1 over F_{p^{2k}}.
 */

#ifndef CPPFORGE_NIHO_HPP
#define CPPFORGE_NIHO_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "field.hpp"
#include "perm_oracle.hpp"

namespace cppforge {

/// F_{p^n} with n = 2k; conjugation is x -> x^{p^k}.
struct NihoCtx {
    Field field;
    unsigned k = 0;
    wide_t q = 0;  // p^k

    explicit NihoCtx(Field f) : field(std::move(f)) {
        if (field.n() % 2 != 0) fail(ErrorCode::odd_degree, "extension degree must be even");
        k = field.n() / 2;
        q = field.subfield_size(k);
    }

    Elem conj(Elem x) const { return field.frobenius(x, k); }
};

/// The p^k + 1 elements with lambda^{p^k+1} = 1, as consecutive powers of a
/// generator of that subgroup.
inline std::vector<Elem> unit_circle(const NihoCtx& c) {
    const Field& f = c.field;
    const Elem z = f.element_of_order(c.q + 1);
    std::vector<Elem> out;
    Elem cur = f.one();
    for (wide_t i = 0; i <= c.q; ++i, cur = f.mul(cur, z)) out.push_back(cur);
    return out;
}

/// All a with a^{p^k-1} = -1, ascending. For odd p this is a0 * F_{p^k}^*
/// where a0 has order 2(p^k - 1); for p = 2 the equation reads a^{p^k-1} = 1.
inline std::vector<Elem> v_set(const NihoCtx& c) {
    const Field& f = c.field;
    std::vector<Elem> out;
    const auto sub = f.subfield_elements(c.k);
    if (f.p() == 2) {
        for (Elem x : sub)
            if (!x.is_zero()) out.push_back(x);
        return out;
    }
    const Elem a0 = f.element_of_order(2 * (c.q - 1));
    for (Elem x : sub)
        if (!x.is_zero()) out.push_back(f.mul(a0, x));
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of lambda in U with lambda^s + lambda^{1-s} + conj(a) lambda + a = 0.
inline std::uint64_t count_N(const NihoCtx& c, Elem a, wide_t s) {
    const Field& f = c.field;
    const wide_t m = c.q + 1;  // exponents act modulo the order of U
    const wide_t e1 = s % m;
    const wide_t e2 = (1 + m - e1) % m;
    const Elem abar = c.conj(a);
    std::uint64_t count = 0;
    for (Elem lam : unit_circle(c)) {
        Elem v = f.add(f.pow(lam, e1), f.pow(lam, e2));
        v = f.add(v, f.add(f.mul(abar, lam), a));
        if (v.is_zero()) ++count;
    }
    return count;
}

/// (N(a) - 1) p^k.
inline std::int64_t walsh_niho(const NihoCtx& c, Elem a, wide_t s) {
    if (c.q > (wide_t{1} << 40)) fail(ErrorCode::cap_exceeded, "p^k too large for a machine-word Walsh value");
    return (static_cast<std::int64_t>(count_N(c, a, s)) - 1) * static_cast<std::int64_t>(c.q);
}

/// W(a) = sum_x w^{Tr(g(x)) + Tr(a x)}, the Walsh transform of Tr_1^n o g.
inline CycInt direct_walsh(const FieldMap& g, Elem a) {
    const Field& f = g.field;
    const auto tr = absolute_trace_table(f);
    CycInt z(f.p());
    for (std::size_t v = 0; v < tr.size(); ++v) {
        const Elem x(v);
        z.add_omega(std::uint64_t{tr[static_cast<std::size_t>(g(x).v)]} +
                    tr[static_cast<std::size_t>(f.mul(a, x).v)]);
    }
    return z;
}

/// Walsh values for every a, indexed by encoding.
inline std::vector<CycInt> walsh_spectrum(const FieldMap& g) {
    const Field& f = g.field;
    const auto tr = absolute_trace_table(f);
    const std::size_t q = tr.size();
    std::vector<std::uint32_t> tg(q);
    for (std::size_t v = 0; v < q; ++v) tg[v] = tr[static_cast<std::size_t>(g(Elem(v)).v)];
    std::vector<CycInt> out;
    out.reserve(q);
    for (std::size_t a = 0; a < q; ++a) {
        CycInt z(f.p());
        for (std::size_t v = 0; v < q; ++v)
            z.add_omega(std::uint64_t{tg[v]} + tr[static_cast<std::size_t>(f.mul(Elem(a), Elem(v)).v)]);
        out.push_back(std::move(z));
    }
    return out;
}

/// s with d p^j = s(p^k - 1) + 1 modulo p^n - 1. The shift j = n - 1 is
/// tried first, then j = 0, 1, ...; Tr(x^d) is unchanged by the shift.
inline std::optional<wide_t> niho_s_for_exponent(const NihoCtx& c, wide_t d) {
    const wide_t order = c.field.group_order();
    const unsigned n = c.field.n();
    if (order >> 100) fail(ErrorCode::cap_exceeded, "field too large for exponent normalisation");
    std::vector<unsigned> shifts{n - 1};
    for (unsigned j = 0; j + 1 < n; ++j) shifts.push_back(j);
    for (unsigned j : shifts) {
        wide_t dj = d % order;
        for (unsigned i = 0; i < j; ++i) dj = (dj * c.field.p()) % order;
        if (dj == 0) continue;
        if ((dj - 1) % (c.q - 1) == 0) return (dj - 1) / (c.q - 1);
    }
    return std::nullopt;
}

}  // namespace cppforge

#endif  // CPPFORGE_NIHO_HPP
