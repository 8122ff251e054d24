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

#include <set>

#include <cppforge/families.hpp>

namespace {

using namespace cppforge;

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::invalid_argument;
}

Field beta_field_p3() { return Field::build(3, 4, std::vector<std::uint32_t>{2, 2, 0, 0, 1}); }

template <class Pred>
std::vector<Elem> tagged(const Field& f, Pred&& pred) {
    std::vector<Elem> out;
    for (wide_t v = 1; v < f.size(); ++v)
        if (pred(Elem(v))) out.push_back(Elem(v));
    return out;
}

TEST(Exponents, Values) {
    EXPECT_EQ(niho2_exponent(3, 1, 1), wide_t{5});
    EXPECT_EQ(niho2_exponent(3, 2, 1), wide_t{11});
    EXPECT_EQ(niho2_exponent(5, 1, 2), wide_t{73});
    EXPECT_EQ(p3k2_exponent(2), wide_t{11});
    EXPECT_EQ(dr_exponent(3, 1, 4), wide_t{41});
    EXPECT_EQ(dr_exponent(3, 3, 4), wide_t{20441});
    EXPECT_EQ(dr_exponent(5, 2, 4), wide_t{16277});
    EXPECT_EQ(code_of([] { (void)dr_exponent(3, 1, 3); }), ErrorCode::gcd_violation);  // gcd(4, 2) = 2
    EXPECT_EQ(code_of([] { (void)niho2_exponent(2, 1, 1); }), ErrorCode::even_characteristic);
}

TEST(Niho, CoefficientSets) {
    for (auto [p, k, i] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{3, 1, 1}, {3, 2, 1}, {5, 2, 2}}) {
        const NihoCtx c(Field::build(p, 2 * k));
        const wide_t d = niho2_exponent(p, k, i);
        const auto v = niho2_coefficient_set(c);
        EXPECT_EQ(v.size(), static_cast<std::size_t>(c.q - 1));
        for (Elem a : v) EXPECT_TRUE(is_cpp_exponent_pair(c.field, d, a)) << p << ' ' << k << ' ' << i;
    }
}

TEST(R4, CharacteristicThreeCounts) {
    const Field f = Field::build(3, 4);
    const auto t = tagged(f, [&](Elem a) { return thm_r4_condition(f, a, 1).has_value(); });
    EXPECT_EQ(t.size(), 38u);
    for (Elem a : t) EXPECT_TRUE(is_cpp_exponent_pair(f, 41, a));
    EXPECT_FALSE(thm_r4_condition(f, f.zero(), 1).has_value());

    const Field g = Field::build(3, 8);
    std::size_t count = 0;
    for (wide_t v = 1; v < g.size(); ++v) {
        const auto tag = thm_r4_condition(g, Elem(v), 2);
        if (!tag) continue;
        ++count;
        EXPECT_EQ(*tag, "cond3");
    }
    EXPECT_EQ(count, 64u);
}

TEST(R4, HypothesisErrors) {
    EXPECT_EQ(code_of([] { (void)thm_r4_condition(Field::build(5, 4), Elem(1), 1); }), ErrorCode::char_excluded);
    EXPECT_EQ(code_of([] { (void)thm_r4_condition(Field::build(3, 6), Elem(1), 1); }), ErrorCode::degree_mismatch);
    EXPECT_EQ(code_of([] { (void)thm_r4_condition(Field::build(11, 4), Elem(1), 1); }), ErrorCode::gcd_violation);
}

TEST(R4, CharacteristicSevenMatchesExhaustiveScan) {
    const Field f = Field::build(7, 4);
    const HaChecker ha(f, 4, 1);
    for (wide_t v = 1; v < f.size(); ++v)
        ASSERT_EQ(thm_r4_condition(f, Elem(v), 1).has_value(), ha.check(Elem(v))) << to_string(v);
}

TEST(R4, CharacteristicThirteenMatchesExhaustiveScan) {
    const Field f = Field::build(13, 4);
    const HaChecker ha(f, 4, 1);
    for (wide_t v = 1; v < f.size(); ++v)
        ASSERT_EQ(thm_r4_condition(f, Elem(v), 1).has_value(), ha.check(Elem(v))) << to_string(v);
}

TEST(P3Corollary, BetaGenerator) {
    const Field f = beta_field_p3();
    const Elem beta = p3_beta(f);
    EXPECT_EQ(beta, Elem(3));
    const Elem a = coro_p3_beta_generate(f, beta, 1, f.one(), f.zero(), 1);
    // 1 - beta^2 - beta^3
    EXPECT_EQ(a, f.sub(f.sub(f.one(), f.pow(beta, 2)), f.pow(beta, 3)));
    EXPECT_TRUE(is_cpp_exponent_pair(f, 41, a));
    EXPECT_EQ(coro_p3n4k_condition(f, a, 1), "coro2");

    const auto all = coro_p3_beta_all(f, beta, 1);
    EXPECT_EQ(all.size(), 28u);
    for (Elem x : all) EXPECT_TRUE(thm_r4_condition(f, x, 1).has_value());
    EXPECT_EQ(code_of([&] { (void)coro_p3_beta_generate(f, beta, 1, f.zero(), f.zero(), 1); }),
              ErrorCode::uv_both_zero);
}

TEST(P3Corollary, SameSetAsTheorem) {
    const Field f = Field::build(3, 4);
    const auto a = tagged(f, [&](Elem x) { return thm_r4_condition(f, x, 1).has_value(); });
    const auto b = tagged(f, [&](Elem x) { return coro_p3n4k_condition(f, x, 1).has_value(); });
    EXPECT_EQ(a, b);
}

TEST(P3Corollary, NoFirstConditionAtKTwo) {
    const Field f = Field::build(3, 8);
    for (wide_t v = 1; v < f.size(); ++v) EXPECT_NE(coro_p3n4k_condition(f, Elem(v), 2), "coro1");
}

TEST(P3Corollary, KThreeCount) {
    const Field f = Field::build(3, 12);
    const auto all = coro_p3_beta_all(f, p3_beta(f), 3);
    EXPECT_EQ(all.size(), 2860u);
}

TEST(P5, Counts) {
    const Field f = Field::build(5, 4);
    const auto t = tagged(f, [&](Elem a) { return thm_r4_p5_condition(f, a, 1).has_value(); });
    EXPECT_EQ(t.size(), 60u);
    for (Elem a : t) EXPECT_TRUE(is_cpp_exponent_pair(f, 157, a));
    // the other reading of the third condition never fires
    const auto alt = tagged(f, [&](Elem a) {
        auto tag = thm_r4_p5_condition(f, a, 1, P5Variant::lambda1_inverse);
        return tag && *tag == "cond3";
    });
    EXPECT_TRUE(alt.empty());
    const Elem w = f.element_of_order(16);  // w^8 = -1
    EXPECT_EQ(thm_r4_p5_condition(f, w, 1), "cond1");
}

TEST(P5, VsetCorollary) {
    const Field f = Field::build(5, 4);
    const auto v = coro_p5_vset(f, 1);
    EXPECT_EQ(v.size(), 12u);
    for (Elem a : v) {
        const bool cond = f.pow(a, 8) == f.from_int(-1) || f.pow(a, 4) == f.from_int(-1);
        EXPECT_TRUE(cond);
        EXPECT_TRUE(is_cpp_exponent_pair(f, 157, a));
    }
}

TEST(R6, Examples) {
    const Field f3 = Field::build(3, 6, std::vector<std::uint32_t>{2, 1, 0, 0, 0, 0, 1});
    const auto m3 = coro_r6_generate(f3, r6_beta(f3), 0, f3.one(), 1);
    EXPECT_TRUE(is_cpp_exponent_pair(f3, 365, m3.a));
    const Field f5 = Field::build(5, 6, std::vector<std::uint32_t>{2, 1, 0, 0, 0, 0, 1});
    const auto m5 = coro_r6_generate(f5, r6_beta(f5), 0, f5.from_int(2), 1);
    EXPECT_TRUE(is_cpp_exponent_pair(f5, 3907, m5.a));
    EXPECT_EQ(code_of([&] { (void)coro_r6_generate(f3, r6_beta(f3), 0, f3.zero(), 1); }), ErrorCode::u_zero);
    EXPECT_EQ(r6_families(3).size(), 12u);
    EXPECT_EQ(r6_families(5).size(), 18u);
}

TEST(R6, AllFamiliesAreCpp) {
    for (std::uint32_t p : {3u, 5u}) {
        const Field f = Field::build(p, 6, std::vector<std::uint32_t>{2, 1, 0, 0, 0, 0, 1});
        const Elem beta = r6_beta(f);
        const wide_t d = dr_exponent(p, 1, 6);
        for (std::size_t i = 0; i < r6_families(p).size(); ++i)
            for (wide_t u = 1; u < p; ++u) EXPECT_TRUE(is_cpp_exponent_pair(f, d, coro_r6_generate(f, beta, i, Elem(u), 1).a));
    }
}

TEST(RtK1, Values) {
    const auto a = thm_rt_k1(5, 1);
    EXPECT_EQ(a.d, wide_t{157});
    EXPECT_EQ(a.d, dr_exponent(5, 1, 4));
    const auto b = thm_rt_k1(5, 2);
    EXPECT_EQ(b.d, wide_t{313});
    EXPECT_EQ(b.coefficients.size(), 4u);
    for (Elem x : b.coefficients) EXPECT_TRUE(is_cpp_exponent_pair(b.field, b.d, x));
    const auto c = thm_rt_k1(7, 1);
    EXPECT_EQ(c.d, wide_t{19609});
    EXPECT_EQ(c.coefficients.size(), 6u);
    for (Elem x : c.coefficients) EXPECT_EQ(c.field.pow(x, 6), c.field.from_int(-1));
}

TEST(Conjectures, SecondSmallCases) {
    for (unsigned k = 1; k <= 3; ++k) EXPECT_TRUE(conj2_verify(3, k).pass()) << k;
    EXPECT_TRUE(conj2_verify(7, 1).pass());
    EXPECT_TRUE(conj2_verify(11, 1).pass());
}

TEST(Conjectures, FirstContainsCorollaryCoefficients) {
    const auto res = conj1_search(3, 4, 1);
    EXPECT_EQ(res.scanned, 80u);
    // the search runs under the default modulus; map the 28 generated
    // coefficients there through the matching beta
    const Field f = Field::build(3, 4);
    const auto gen = coro_p3_beta_all(f, p3_beta(f), 1);
    std::set<Elem> found;
    for (const auto& w : res.witnesses) found.insert(w.first);
    for (Elem a : gen) EXPECT_TRUE(found.count(a)) << to_string(a);
    EXPECT_FALSE(conj1_search(5, 6, 1).witnesses.empty());
    EXPECT_EQ(code_of([] { (void)conj1_search(3, 5, 1); }), ErrorCode::hypothesis_violation);  // r + 1 = 6
}

TEST(Conjectures, BudgetIsDeterministic) {
    const auto a = conj1_search(3, 10, 1, 500), b = conj1_search(3, 10, 1, 500);
    EXPECT_TRUE(a.sampled);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_FALSE(a.witnesses.empty());
}

TEST(Multinomial, Examples) {
    const Field f = Field::build(2, 6);
    const auto zero = multinomial_preset(f, 2, GPreset::zero);
    ASSERT_TRUE(zero.has_value());
    for (Elem a : multinomial_coefficients(f, 2)) EXPECT_TRUE(is_cpp(multinomial_map(f, zero->g, zero->v, a, 2)));
    EXPECT_EQ(multinomial_coefficients(f, 2).size(), 2u);

    const Field g = Field::build(3, 5);
    const auto z3 = multinomial_preset(g, 1, GPreset::zero);
    EXPECT_EQ(multinomial_coefficients(g, 1), std::vector<Elem>{g.one()});
    EXPECT_TRUE(is_cpp(multinomial_map(g, z3->g, z3->v, g.one(), 1)));

    const Field h = Field::build(3, 2);
    const auto zh = multinomial_preset(h, 1, GPreset::zero);
    EXPECT_EQ(code_of([&] { (void)multinomial_map(h, zh->g, zh->v, h.one(), 1); }), ErrorCode::gcd_violation);
    EXPECT_EQ(code_of([&] { (void)multinomial_map(g, z3->g, g.zero(), g.one(), 1); }), ErrorCode::v_zero);
    EXPECT_EQ(code_of([&] { (void)multinomial_map(g, z3->g, z3->v, g.from_int(-1), 1); }), ErrorCode::a_excluded);
}

TEST(Multinomial, PresetsAndTraceImage) {
    const Field f = Field::build(3, 10);
    for (GPreset pr : {GPreset::zero, GPreset::monomial, GPreset::dickson_quartic}) {
        const auto params = multinomial_preset(f, 2, pr);
        if (!params) continue;
        EXPECT_TRUE(multinomial_base_is_pp(f, params->g, params->v)) << preset_name(pr);
        for (Elem a : multinomial_coefficients(f, 2)) {
            const auto m = multinomial_map(f, params->g, params->v, a, 2);
            for (wide_t x = 0; x < f.size(); x += 97)
                ASSERT_EQ(f.trace(m(Elem(x)), 2), multinomial_trace_image(f, params->g, params->v, a, 2, Elem(x)));
        }
    }
    EXPECT_EQ(parse_preset("dickson_quartic"), GPreset::dickson_quartic);
    EXPECT_FALSE(parse_preset("nope").has_value());
}

}  // namespace
