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

#include <numeric>

#include "fixtures.hpp"
#include "infmod/corpus.hpp"
#include "infmod/umodule.hpp"
#include "oracle.hpp"

using namespace infmod;
using fixtures::column;
using fixtures::kS;
using fixtures::rat;
using fixtures::sp;

namespace {

PolyMatrix poly_column(std::initializer_list<Poly> entries) {
    PolyMatrix c(entries.size(), 1);
    std::size_t i = 0;
    for (const auto& e : entries) c(i++, 0) = e;
    return c;
}

}  // namespace

TEST(Rho, Examples) {
    UModule m(fixtures::worked_l());
    EXPECT_EQ(rho(m, column({1, 0})).rep(), poly_column({1, 0}));
    EXPECT_TRUE(rho(m, column({0, sp(-1)})).is_zero());
    UModule id(PolyMatrix::identity(2));
    RatFun q = fixtures::frac(Poly(3) * kS + Poly(1), kS + Poly(2));
    EXPECT_EQ(rho(id, column({q, sp(-1)})).rep(), poly_column({3, 0}));
    EXPECT_THROW(rho(m, column({RatFun(kS), 0})), ImproperError);
    EXPECT_THROW(UModule(PolyMatrix{{kS, Poly(0)}, {kS, Poly(0)}}), SingularMatrixError);
}

TEST(RhoE, Examples) {
    UModule m(fixtures::worked_l());
    EXPECT_EQ(rho_e(m, column({RatFun(kS), 0})).rep(), poly_column({kS, 0}));
    EXPECT_EQ(rho_e(m, column({1, sp(-1)})), rho(m, column({1, sp(-1)})));
    RatMatrix kernel_vec = shift_by(rat(m.matrix()), -1) * column({sp(-1), 1});
    EXPECT_TRUE(rho_e(m, kernel_vec).is_zero());
}

TEST(KernelMember, Examples) {
    UModule m(fixtures::worked_l());
    EXPECT_TRUE(kernel_member(m, column({0, sp(-1)})));
    EXPECT_FALSE(kernel_member(m, column({1, 0})));
    EXPECT_TRUE(kernel_member(m, column({0, 0})));
}

TEST(Basis, WorkedExample) {
    UBasis b = compute_basis(fixtures::worked_l());
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b.elements()[0].rep(), poly_column({1, 0}));
    EXPECT_EQ(b.elements()[1].rep(), poly_column({0, 1}));
    EXPECT_EQ(b.preimages()[0], column({1, 0}));
    EXPECT_EQ(b.preimages()[1], column({0, 1}));
    EXPECT_EQ(b.shift(), (ScalarMatrix{{0, 0}, {-1, 0}}));
    EXPECT_EQ(gram_matrix(compute_basis(fixtures::worked_l().transpose()), b), (ScalarMatrix{{0, 1}, {1, 0}}));
}

TEST(Basis, IdentityAndTrivial) {
    UBasis id = compute_basis(PolyMatrix::identity(2));
    ASSERT_EQ(id.size(), 2u);
    EXPECT_EQ(id.preimages()[0], column({1, 0}));
    EXPECT_EQ(id.shift(), ScalarMatrix(2, 2));
    EXPECT_EQ(gram_matrix(id, id), ScalarMatrix::identity(2));

    UBasis empty = compute_basis(PolyMatrix{{kS, Poly(1)}, {Poly(0), kS}});
    EXPECT_EQ(empty.size(), 0u);
    EXPECT_EQ(empty.shift().rows(), 0u);
    EXPECT_EQ(gram_matrix(compute_basis(PolyMatrix{{kS, Poly(0)}, {Poly(1), kS}}), empty).rows(), 0u);
}

TEST(Basis, Coordinates) {
    UBasis b = compute_basis(fixtures::worked_l());
    EXPECT_EQ(b.coordinates(b.elements()[1]), fixtures::scalar_column({0, 1}));
    EXPECT_EQ(b.coordinates(b.zero()), fixtures::scalar_column({0, 0}));
    UElement u = Scalar(2) * b.elements()[0] - b.elements()[1];
    EXPECT_EQ(b.coordinates(u), fixtures::scalar_column({2, -1}));
    EXPECT_EQ(b.from_coordinates(fixtures::scalar_column({2, -1})), u);
    UElement outside(b.module(), poly_column({kS, 0}));
    EXPECT_THROW(b.coordinates(outside), VerificationError);
}

TEST(ScalarAction, Examples) {
    UBasis b = compute_basis(fixtures::worked_l());
    const UElement& u = b.elements()[0];
    EXPECT_EQ(scalar_action(b, RatFun(1), u), u);
    EXPECT_EQ(scalar_action(b, sp(-1), u).rep(), poly_column({0, -1}));
    EXPECT_TRUE(scalar_action(b, sp(-2), u).is_zero());
    EXPECT_THROW(scalar_action(b, RatFun(kS), u), ImproperError);
}

TEST(Pairing, Examples) {
    UModule m(fixtures::worked_l());
    EXPECT_EQ(pairing(m, column({1, 0}), column({1, 0})), Scalar(0));
    EXPECT_EQ(pairing(m, column({1, 0}), column({0, 1})), Scalar(1));
    EXPECT_EQ(pairing(m, column({1, 1}), column({0, sp(-1)})), Scalar(0));
    EXPECT_THROW(pairing(m, column({RatFun(kS), 0}), column({1, 0})), ImproperError);
}

TEST(Jordan, BlockSizes) {
    ScalarMatrix n{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
    EXPECT_EQ(jordan_block_sizes(n), (std::vector<int>{2, 1}));
    EXPECT_THROW(jordan_block_sizes(ScalarMatrix::identity(2)), PreconditionError);
}

class UModuleProperties : public ::testing::TestWithParam<std::uint32_t> {
   protected:
    Field field() const { return GetParam() == 0 ? Field::rationals() : Field::prime(GetParam()); }
};

TEST_P(UModuleProperties, StructureMatchesDivisors) {
    corpus::Rng rng(31 + GetParam());
    const Field f = field();
    for (int trial = 0; trial < 60; ++trial) {
        PolyMatrix l = corpus::random_nonsingular(rng, f, 1 + static_cast<std::size_t>(trial % 3), 3);
        UModule m(l);
        UBasis b = compute_basis(m);
        auto alphas = infinite_elementary_divisors(l);
        const int dim = std::accumulate(alphas.begin(), alphas.end(), 0);
        ASSERT_EQ(static_cast<int>(b.size()), dim);
        const int bound = m.truncation_bound().value_or(0);
        EXPECT_EQ(oracle::brute_dim_UL(l, bound + 3), b.size());
        EXPECT_EQ(jordan_block_sizes(b.shift()), alphas);
        for (std::size_t i = 0; i < l.rows(); ++i) {
            RatMatrix x(l.rows(), 1);
            x(i, 0) = sp(-(bound + 1));
            EXPECT_TRUE(rho(m, x).is_zero()) << "truncation bound too small";
        }
        if (dim > 0) {
            UBasis bt = compute_basis(m.transposed());
            EXPECT_EQ(rank(gram_matrix(bt, b)), b.size());
        }
    }
}

TEST_P(UModuleProperties, RepresentativeIndependenceAndModuleLaw) {
    corpus::Rng rng(313 + GetParam());
    const Field f = field();
    int checks = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        PolyMatrix l = corpus::random_nonsingular(rng, f, n, 3);
        UModule m(l);
        UBasis b = compute_basis(m);
        RatMatrix x = corpus::random_proper_matrix(rng, f, n, 1);
        RatMatrix k = shift_by(rat(l), -1) * corpus::random_proper_matrix(rng, f, n, 1);
        RatMatrix x2 = x + k;
        if (!is_proper(x2)) continue;
        ++checks;
        EXPECT_TRUE(kernel_member(m, k));
        EXPECT_EQ(rho(m, x), rho(m, x2));
        EXPECT_EQ(rho_e(m, to_rational(rho(m, x).rep())), rho(m, x));
        RatFun q1 = corpus::random_proper(rng, f);
        RatFun q2 = corpus::random_proper(rng, f);
        EXPECT_EQ(rho(m, x * q1), rho(m, x2 * q1));
        RatMatrix y = corpus::random_proper_matrix(rng, f, n, 1);
        EXPECT_EQ(pairing(m, y, x), pairing(m, y, x2));
        RatMatrix ky = shift_by(rat(l.transpose()), -1) * corpus::random_proper_matrix(rng, f, n, 1);
        if (is_proper(y + ky)) EXPECT_EQ(pairing(m, y + ky, x), pairing(m, y, x));

        UElement u = rho(m, x);
        EXPECT_EQ(scalar_action(b, q1 * q2, u), scalar_action(b, q1, scalar_action(b, q2, u)));
        EXPECT_EQ(scalar_action(b, q1 + q2, u), scalar_action(b, q1, u) + scalar_action(b, q2, u));
        EXPECT_EQ(scalar_action(b, q1, u), rho(m, x * q1));
    }
    EXPECT_GT(checks, 40);
}

INSTANTIATE_TEST_SUITE_P(Fields, UModuleProperties, ::testing::Values(0u, 101u),
                         [](const auto& info) { return info.param == 0 ? std::string("Q") : "GF" + std::to_string(info.param); });
