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

#include <algorithm>

#include "fixtures.hpp"
#include "infmod/corpus.hpp"
#include "oracle.hpp"

using namespace infmod;
using fixtures::kS;
using fixtures::rat;
using fixtures::sp;

namespace {

SigmaProfile profile(std::vector<int> alphas, std::vector<int> betas) { return {std::move(alphas), std::move(betas)}; }

}  // namespace

TEST(SmithAtInfinity, WorkedExample) {
    RatMatrix w = shift_by(rat(fixtures::worked_l()), -1);
    auto f = smith_at_infinity(w);
    EXPECT_EQ(f.profile, profile({2}, {0}));
    EXPECT_TRUE(verify_factorization(f, w));
}

TEST(SmithAtInfinity, ScaledIdentity) {
    RatMatrix w = RatMatrix::identity(2) * sp(-1);
    auto f = smith_at_infinity(w);
    EXPECT_EQ(f.Sigma, w);
    EXPECT_EQ(f.profile, profile({1, 1}, {}));
}

TEST(SmithAtInfinity, DiagonalIsReordered) {
    RatMatrix w = RatMatrix::diagonal({RatFun(kS), sp(-1)});
    auto f = smith_at_infinity(w);
    EXPECT_EQ(f.Sigma, RatMatrix::diagonal({sp(-1), RatFun(kS)}));
    EXPECT_EQ(f.profile, profile({1}, {1}));
    EXPECT_TRUE(verify_factorization(f, w));
}

TEST(SmithAtInfinity, RankDeficientRectangular) {
    RatMatrix w{{RatFun(kS), RatFun(1), RatFun(kS)}, {RatFun(kS) * RatFun(kS), RatFun(kS), RatFun(kS) * RatFun(kS)}};
    auto f = smith_at_infinity(w);
    EXPECT_EQ(f.profile.rank(), 1u);
    EXPECT_TRUE(verify_factorization(f, w));
    EXPECT_EQ(f.profile, minor_valuation_profile(w));
}

TEST(MinorValuation, Examples) {
    EXPECT_EQ(minor_valuation_profile(shift_by(rat(fixtures::worked_l()), -1)), profile({2}, {0}));
    EXPECT_EQ(minor_valuation_profile(RatMatrix::identity(2) * sp(-1)), profile({1, 1}, {}));
    EXPECT_EQ(minor_valuation_profile(RatMatrix::diagonal({RatFun(kS), RatFun(1)})), profile({}, {0, 1}));
}

TEST(InfiniteDivisors, Examples) {
    EXPECT_EQ(infinite_elementary_divisors(fixtures::worked_l()), (std::vector<int>{2}));
    EXPECT_EQ(infinite_elementary_divisors(PolyMatrix::identity(2)), (std::vector<int>{1, 1}));
    PolyMatrix upper{{kS, Poly(1)}, {Poly(0), kS}};
    EXPECT_TRUE(infinite_elementary_divisors(upper).empty());
    PolyMatrix singular{{kS, Poly(0)}, {kS, Poly(0)}};
    EXPECT_THROW(infinite_elementary_divisors(singular), SingularMatrixError);
    EXPECT_THROW(infinite_elementary_divisors(PolyMatrix(2, 3)), ShapeError);
}

TEST(DimUL, Examples) {
    EXPECT_EQ(dim_UL(fixtures::worked_l()), 2);
    EXPECT_EQ(dim_UL(fixtures::worked_l1()), 1);
    EXPECT_EQ(dim_UL(PolyMatrix{{kS, Poly(1)}, {Poly(0), kS}}), 0);
}

TEST(FiniteStructureAtZero, Examples) {
    EXPECT_EQ(finite_structure_at_zero(PolyMatrix::diagonal({kS, kS * kS * kS})), (std::vector<int>{3, 1}));
    EXPECT_TRUE(finite_structure_at_zero(PolyMatrix::identity(3)).empty());
    EXPECT_EQ(finite_structure_at_zero(PolyMatrix{{kS, Poly(1)}, {Poly(0), kS}}), (std::vector<int>{2}));
}

class InfinityProperties : public ::testing::TestWithParam<std::uint32_t> {
   protected:
    Field field() const { return GetParam() == 0 ? Field::rationals() : Field::prime(GetParam()); }
};

TEST_P(InfinityProperties, FactorizationAgreesWithMinorOracle) {
    corpus::Rng rng(2024 + GetParam());
    const Field f = field();
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        PolyMatrix l = corpus::random_nonsingular(rng, f, n, 3);
        RatMatrix w = shift_by(rat(l), -1);
        auto row = smith_at_infinity(w, PivotOrder::row_major);
        auto col = smith_at_infinity(w, PivotOrder::column_major);
        EXPECT_TRUE(verify_factorization(row, w));
        EXPECT_TRUE(verify_factorization(col, w));
        EXPECT_EQ(row.profile, col.profile);
        EXPECT_EQ(row.profile, oracle::minor_profile(w));
        EXPECT_EQ(row.profile, minor_valuation_profile(w));
        const bool proper_inverse = is_proper(shift_by(inverse(l), 1));
        EXPECT_EQ(dim_UL(l) == 0, proper_inverse);
    }
}

TEST_P(InfinityProperties, RectangularTransfers) {
    corpus::Rng rng(77 + GetParam());
    const Field f = field();
    for (int trial = 0; trial < 60; ++trial) {
        RatMatrix w = corpus::random_transfer(rng, f, 1 + trial % 3, 1 + (trial / 3) % 3, 2);
        auto fac = smith_at_infinity(w);
        EXPECT_TRUE(verify_factorization(fac, w));
        EXPECT_EQ(fac.profile, oracle::minor_profile(w));
        EXPECT_EQ(fac.P * fac.P_inv, RatMatrix::identity(w.rows()));
        EXPECT_EQ(fac.Q_inv * fac.Q, RatMatrix::identity(w.cols()));
        EXPECT_EQ(profile_at_infinity(w), fac.profile);
        EXPECT_EQ(profile_at_infinity(w, PivotOrder::column_major), fac.profile);
    }
}

TEST_P(InfinityProperties, PencilLaw) {
    corpus::Rng rng(5150 + GetParam());
    const Field f = field();
    for (int trial = 0; trial < 40; ++trial) {
        auto p = corpus::random_pencil(rng, f, 1 + static_cast<std::size_t>(trial % 4));
        auto alphas = infinite_elementary_divisors(p.l);
        EXPECT_EQ(alphas, finite_structure_at_zero(p.dual));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, InfinityProperties, ::testing::Values(0u, 101u),
                         [](const auto& info) { return info.param == 0 ? std::string("Q") : "GF" + std::to_string(info.param); });
