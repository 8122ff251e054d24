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


#include <gtest/gtest.h>

#include <cppforge/families.hpp>
#include <cppforge/niho.hpp>

namespace {

using namespace cppforge;

NihoCtx ctx(std::uint32_t p, unsigned k) { return NihoCtx(Field::build(p, 2 * k)); }

TEST(UnitCircle, F9) {
    const auto c = ctx(3, 1);
    const auto u = unit_circle(c);
    EXPECT_EQ(u.size(), 4u);
    EXPECT_NE(std::find(u.begin(), u.end(), c.field.one()), u.end());
    for (Elem l : u) EXPECT_EQ(c.field.pow(l, 4), c.field.one());
}

TEST(UnitCircle, LargerFields) {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 3}, {5, 2}, {2, 4}}) {
        const auto c = ctx(p, k);
        auto u = unit_circle(c);
        EXPECT_EQ(u.size(), static_cast<std::size_t>(c.q + 1));
        for (Elem l : u) EXPECT_EQ(c.field.pow(l, c.q + 1), c.field.one());
        std::sort(u.begin(), u.end());
        EXPECT_EQ(std::unique(u.begin(), u.end()), u.end());
    }
}

TEST(VSet, Sizes) {
    const auto c9 = ctx(3, 1);
    EXPECT_EQ(v_set(c9), (std::vector<Elem>{Elem(3), Elem(6)}));  // i and 2i
    EXPECT_EQ(v_set(ctx(3, 2)).size(), 8u);
    EXPECT_EQ(v_set(ctx(5, 2)).size(), 24u);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {5, 2}, {7, 1}}) {
        const auto c = ctx(p, k);
        for (Elem a : v_set(c)) EXPECT_EQ(c.field.pow(a, c.q - 1), c.field.from_int(-1));
    }
}

TEST(VSet, OddDegreeRejected) { EXPECT_THROW(NihoCtx(Field::build(3, 3)), Error); }

TEST(CountN, IsOneOnV) {
    for (unsigned k = 1; k <= 3; ++k) {
        const auto c = ctx(3, k);
        const auto s = niho_s_for_exponent(c, p3k2_exponent(k));
        ASSERT_TRUE(s.has_value());
        for (Elem a : v_set(c)) {
            EXPECT_EQ(count_N(c, a, *s), 1u) << "k=" << k << " a=" << to_string(a);
            EXPECT_EQ(walsh_niho(c, a, *s), 0);
        }
    }
}

TEST(CountN, BruteForceOnF9) {
    const auto c = ctx(3, 1);
    const Field& f = c.field;
    for (wide_t s : {0, 1, 2, 3, 7}) {
        for (wide_t a = 0; a < 9; ++a) {
            std::uint64_t expect = 0;
            for (wide_t x = 1; x < 9; ++x) {
                const Elem l(x);
                if (f.pow(l, 4) != f.one()) continue;
                Elem v = f.add(f.pow(l, s), f.mul(f.pow(l, 3 * 4 + 1 - s % 4), f.one()));
                v = f.add(v, f.add(f.mul(f.frobenius(Elem(a), 1), l), Elem(a)));
                expect += v.is_zero();
            }
            EXPECT_EQ(count_N(c, Elem(a), s), expect) << "s=" << to_string(s) << " a=" << to_string(a);
        }
    }
}

TEST(Walsh, ZeroMap) {
    const Field f = Field::build(3, 2);
    const FieldMap zero{f, [&](Elem) { return f.zero(); }};
    EXPECT_EQ(direct_walsh(zero, f.zero()).as_integer(), 9);
    for (wide_t a = 1; a < 9; ++a) EXPECT_TRUE(direct_walsh(zero, Elem(a)).is_zero());
}

// The formula (N(a) - 1) p^k against exact sums, every a, several exponents.
void cross_check(std::uint32_t p, unsigned k) {
    const auto c = ctx(p, k);
    const Field& f = c.field;
    for (wide_t s = 0; s <= c.q; ++s) {
        const wide_t d = s * (c.q - 1) + 1;
        const FieldMap g{f, [&](Elem x) { return f.pow(x, d); }};
        const auto spectrum = walsh_spectrum(g);
        for (wide_t a = 0; a < f.size(); ++a) {
            const auto& w = spectrum[static_cast<std::size_t>(a)];
            ASSERT_EQ(w.as_integer(), walsh_niho(c, Elem(a), s)) << "p=" << p << " s=" << to_string(s) << " a=" << to_string(a);
            ASSERT_EQ(w, direct_walsh(g, Elem(a)));
        }
    }
}

TEST(Walsh, FormulaMatchesExactSumsF9) { cross_check(3, 1); }
TEST(Walsh, FormulaMatchesExactSumsF25) { cross_check(5, 1); }
TEST(Walsh, FormulaMatchesExactSumsF81) { cross_check(3, 2); }

TEST(Exponents, NihoNormalisation) {
    const auto c = ctx(3, 1);
    // 5 * 3 = 15 = 7 mod 8 and 7 = 3 * 2 + 1
    EXPECT_EQ(niho_s_for_exponent(c, 5), wide_t{3});
    EXPECT_EQ(niho_s_for_exponent(c, 3), wide_t{0});  // 3 * 3 = 1 mod 8
    EXPECT_FALSE(niho_s_for_exponent(ctx(5, 1), 2).has_value());
    const auto c2 = ctx(5, 2);
    for (wide_t s = 0; s < 30; ++s) {
        const auto got = niho_s_for_exponent(c2, s * 24 + 1);
        ASSERT_TRUE(got.has_value());
        // the normalised exponent lies in the cyclotomic coset of the input
        bool in_coset = false;
        wide_t e = (s * 24 + 1) % 624;
        for (int j = 0; j < 4; ++j, e = e * 5 % 624) in_coset = in_coset || e == (*got * 24 + 1) % 624;
        EXPECT_TRUE(in_coset) << to_string(s);
    }
}

}  // namespace
