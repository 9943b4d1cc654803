/*
   Copyright 2026 The infmod Authors

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

#include "fixtures.hpp"
#include "infmod/corpus.hpp"

using namespace infmod;
using fixtures::frac;
using fixtures::kS;
using fixtures::sp;

TEST(Scalar, RationalArithmeticIsExact) {
    Scalar a = Scalar::parse("3/4");
    Scalar b = Scalar::parse("-1/6");
    EXPECT_EQ(a + b, Scalar::parse("7/12"));
    EXPECT_EQ(a * b, Scalar::parse("-1/8"));
    EXPECT_EQ((a / b).to_string(), "-9/2");
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Scalar, ParseRejectsGarbage) {
    EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
    EXPECT_THROW(Scalar::parse("1.5"), std::invalid_argument);
}

TEST(Scalar, PrimeFieldReducesLiterals) {
    const Field f = Field::prime(7);
    Scalar a = Scalar::parse("3", f);
    EXPECT_EQ(a * Scalar(5), Scalar::residue(1, 7));
    EXPECT_EQ(Scalar::parse("1/3", f), Scalar::residue(5, 7));
    EXPECT_EQ(a.inverse(), Scalar::residue(5, 7));
    EXPECT_EQ(Scalar(-1).in(f).to_string(), "6");
    EXPECT_THROW(Scalar::parse("1/7", f), std::invalid_argument);
}

TEST(Scalar, FieldTags) {
    EXPECT_EQ(Field::rationals().tag(), "Q");
    EXPECT_EQ(Field::prime(101).tag(), "GF:101");
    EXPECT_EQ(Field::parse_tag("GF:101"), Field::prime(101));
    EXPECT_EQ(Field::parse_tag("Q"), Field::rationals());
    EXPECT_THROW(Field::prime(100), std::invalid_argument);
    EXPECT_THROW(Field::parse_tag("GF:x"), std::invalid_argument);
}

TEST(Scalar, MixedModuliThrow) {
    EXPECT_THROW(Scalar::residue(1, 5) + Scalar::residue(1, 7), std::domain_error);
    EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
}

TEST(Poly, DivmodAndGcd) {
    Poly a = kS * kS * kS + Poly(1);
    auto [q, r] = divmod(a, kS);
    EXPECT_EQ(q, kS * kS);
    EXPECT_EQ(r, Poly(1));
    Poly g = gcd(kS * kS - Poly(1), kS - Poly(1));
    EXPECT_EQ(g, kS - Poly(1));
    EXPECT_EQ(Poly().degree(), Poly::kMinusInfinity);
    EXPECT_EQ((kS * kS).order_at_zero(), 2);
}

TEST(RatFun, NormalizeExamples) {
    RatFun f = frac(kS * kS - Poly(1), kS - Poly(1));
    EXPECT_EQ(f.num(), kS + Poly(1));
    EXPECT_EQ(f.den(), Poly(1));

    RatFun z = frac(Poly(0), kS);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.den(), Poly(1));

    RatFun h = frac(Poly(2) * kS, Poly(4));
    EXPECT_EQ(h.num(), (Poly{Scalar(0), Scalar::parse("1/2")}));
    EXPECT_EQ(h.den(), Poly(1));

    EXPECT_THROW(frac(kS, Poly(0)), std::domain_error);
}

TEST(RatFun, DeltaExamples) {
    EXPECT_EQ(delta(sp(-1)), 1);
    EXPECT_EQ(delta(RatFun(kS)), -1);
    EXPECT_EQ(delta(frac(kS + Poly(1), kS * kS + Poly(1))), 1);
    EXPECT_EQ(delta(RatFun()), kInfinity);
}

TEST(RatFun, PiSplitExamples) {
    auto [p1, m1] = frac(kS * kS * kS + Poly(1), kS).pi_split();
    EXPECT_EQ(p1, kS * kS);
    EXPECT_EQ(m1, sp(-1));
    auto [p2, m2] = frac(kS + Poly(1), kS).pi_split();
    EXPECT_EQ(p2, Poly(1));
    EXPECT_EQ(m2, sp(-1));
    RatFun strict = frac(Poly(3), kS * kS + Poly(2));
    EXPECT_TRUE(strict.pi_plus().is_zero());
    EXPECT_EQ(strict.pi_minus(), strict);
}

TEST(RatFun, AtZeroExamples) {
    EXPECT_EQ(frac(kS * kS + Poly(2) * kS + Poly(3), kS).at_zero(), Scalar(2));
    EXPECT_EQ(frac(Poly(3), kS * kS + Poly(2)).at_zero(), Scalar(0));
    EXPECT_EQ(RatFun(5).at_zero(), Scalar(5));
}

TEST(RatFun, CausalityExamples) {
    EXPECT_EQ(causality_class(RatFun(kS)), Causality::improper);
    EXPECT_EQ(causality_class(frac(kS + Poly(1), kS + Poly(2))), Causality::unit);
    EXPECT_EQ(causality_class(sp(-1)), Causality::strictly_proper);
    EXPECT_EQ(causality_class(RatFun()), Causality::zero);
}

TEST(RatFun, AtInfinity) {
    EXPECT_EQ(frac(Poly(3) * kS + Poly(1), kS + Poly(2)).at_infinity(), Scalar(3));
    EXPECT_EQ(sp(-2).at_infinity(), Scalar(0));
    EXPECT_THROW(RatFun(kS).at_infinity(), std::domain_error);
}

class ScalarTowerProperties : public ::testing::TestWithParam<std::uint32_t> {
   protected:
    Field field() const { return GetParam() == 0 ? Field::rationals() : Field::prime(GetParam()); }
};

TEST_P(ScalarTowerProperties, SplitReassemblesAndValuationLaws) {
    corpus::Rng rng(1234 + GetParam());
    const Field f = field();
    for (int trial = 0; trial < 300; ++trial) {
        RatFun a = corpus::random_ratfun(rng, f, 3);
        RatFun b = corpus::random_ratfun(rng, f, 3);
        auto [plus, minus] = a.pi_split();
        EXPECT_EQ(RatFun(plus) + minus, a);
        EXPECT_TRUE(minus.is_zero() || minus.is_strictly_proper());
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ(delta(a * b), delta(a) + delta(b));
            if (!(a + b).is_zero()) EXPECT_GE(delta(a + b), std::min(delta(a), delta(b)));
        }
        Scalar c1 = corpus::random_scalar(rng, f);
        Scalar c2 = corpus::random_scalar(rng, f);
        EXPECT_EQ((RatFun(c1) * a + RatFun(c2) * b).at_zero(), c1 * a.at_zero() + c2 * b.at_zero());
        const bool unit = causality_class(a) == Causality::unit;
        const bool proper_inverse = !a.is_zero() && a.inverse().is_proper() && a.is_proper();
        EXPECT_EQ(unit, proper_inverse);
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RatFun(1));
        EXPECT_EQ(a.den().leading(), Scalar(1));
        EXPECT_EQ(gcd(a.num(), a.den()), Poly(1));
    }
}

TEST_P(ScalarTowerProperties, FieldAxiomsOnPolynomials) {
    corpus::Rng rng(99 + GetParam());
    const Field f = field();
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = corpus::random_poly(rng, f, 4);
        Poly b = corpus::random_poly(rng, f, 3);
        Poly c = corpus::random_poly(rng, f, 2);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, ScalarTowerProperties, ::testing::Values(0u, 101u),
                         [](const auto& info) { return info.param == 0 ? std::string("Q") : "GF" + std::to_string(info.param); });
