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
#include "infmod/hom.hpp"

using namespace infmod;
using fixtures::column;
using fixtures::kS;
using fixtures::rat;
using fixtures::sp;

namespace {

RatMatrix worked_theta() { return RatMatrix{{0, 0}, {1, 0}}; }
RatMatrix worked_theta1() { return RatMatrix{{0, 0}, {0, 1}}; }

Intertwiner worked_intertwiner() {
    return {UModule(fixtures::worked_l()), UModule(fixtures::worked_l1()), worked_theta(), worked_theta1()};
}

Intertwiner identity_intertwiner(const PolyMatrix& l) {
    return {UModule(l), UModule(l), RatMatrix::identity(l.rows()), RatMatrix::identity(l.rows())};
}

// Flattens matrices into columns of one scalar matrix.
ScalarMatrix flatten(const std::vector<ScalarMatrix>& ms, std::size_t rows, std::size_t cols) {
    ScalarMatrix out(rows * cols, ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) out(i * cols + j, k) = ms[k](i, j);
    return out;
}

}  // namespace

TEST(Intertwining, Examples) {
    const auto l = fixtures::worked_l();
    const auto l1 = fixtures::worked_l1();
    EXPECT_TRUE(check_intertwining(RatMatrix::identity(2), RatMatrix::identity(2), l, l));
    EXPECT_TRUE(check_intertwining(worked_theta(), worked_theta1(), l, l1));
    RatMatrix required = inverse(l1) * rat(l);
    EXPECT_FALSE(is_proper(required));
    EXPECT_FALSE(check_intertwining(RatMatrix::identity(2), required, l, l1));
    EXPECT_THROW(check_intertwining(RatMatrix(1, 2), worked_theta1(), l, l1), ShapeError);
    EXPECT_THROW(Intertwiner(UModule(l), UModule(l1), RatMatrix::identity(2), RatMatrix::identity(2)), PreconditionError);
    EXPECT_THROW(Intertwiner::from_theta(UModule(l), UModule(l1), RatMatrix::identity(2)), ImproperError);
}

TEST(AltCondition, Examples) {
    const auto l = fixtures::worked_l();
    const auto l1 = fixtures::worked_l1();
    EXPECT_TRUE(alt_condition_check(worked_theta(), worked_theta1(), l, l1));
    EXPECT_TRUE(alt_condition_check(RatMatrix::identity(2), RatMatrix::identity(2), l, l));
    // E strictly proper with pi_plus(E L^-1) != 0.
    RatMatrix e{{0, 0}, {sp(-1), 0}};
    EXPECT_FALSE(mat_pi_plus(e * inverse(l)).is_zero());
    EXPECT_FALSE(alt_condition_check(worked_theta(), worked_theta1() + e, l, l1));
}

TEST(ApplyHom, Examples) {
    auto iw = worked_intertwiner();
    UBasis b = compute_basis(iw.source());
    UBasis b1 = compute_basis(iw.target());
    PolyMatrix e2{{Poly(0)}, {Poly(1)}};
    EXPECT_EQ(apply_hom(iw, b.elements()[0]).rep(), e2);
    EXPECT_TRUE(apply_hom(iw, b.elements()[1]).is_zero());
    EXPECT_TRUE(apply_hom(iw, b.zero()).is_zero());
    auto id = identity_intertwiner(fixtures::worked_l());
    EXPECT_EQ(apply_hom(id, b.elements()[1]), b.elements()[1]);
    EXPECT_THROW(apply_hom(iw, b1.zero()), PreconditionError);
}

TEST(HomMatrix, Examples) {
    auto iw = worked_intertwiner();
    UBasis b = compute_basis(iw.source());
    UBasis b1 = compute_basis(iw.target());
    ASSERT_EQ(b1.size(), 1u);
    EXPECT_EQ(b1.elements()[0].rep(), (PolyMatrix{{Poly(0)}, {Poly(1)}}));
    EXPECT_EQ(hom_matrix(iw, b, b1), (ScalarMatrix{{1, 0}}));
    EXPECT_EQ(hom_matrix(identity_intertwiner(fixtures::worked_l()), b, b), ScalarMatrix::identity(2));
    Intertwiner zero(iw.source(), iw.target(), RatMatrix(2, 2), RatMatrix(2, 2));
    EXPECT_TRUE(hom_matrix(zero, b, b1).is_zero());
}

TEST(KernelInclusion, Examples) {
    const PolyMatrix i2 = PolyMatrix::identity(2);
    const auto l1 = fixtures::worked_l1();
    EXPECT_TRUE(kernel_inclusion_check(worked_theta(), fixtures::worked_l(), l1));
    EXPECT_TRUE(kernel_inclusion_check(RatMatrix::identity(2), i2, l1));
    EXPECT_FALSE(kernel_inclusion_check(RatMatrix::identity(2), l1, i2));
    UModule src(l1);
    EXPECT_TRUE(kernel_member(src, column({1, sp(-1)})));
    EXPECT_FALSE(kernel_member(UModule(i2), column({1, sp(-1)})));
}

TEST(Completion, Examples) {
    const PolyMatrix i2 = PolyMatrix::identity(2);
    const auto l1 = fixtures::worked_l1();
    auto zero = complete_intertwiner(RatMatrix(2, 2), i2, l1);
    EXPECT_TRUE(zero.psi.is_zero());
    EXPECT_TRUE(zero.theta1.is_zero());

    auto c = complete_intertwiner(RatMatrix::identity(2), i2, l1);
    EXPECT_TRUE(verify_completion(c, RatMatrix::identity(2), i2, l1));
    EXPECT_EQ((RatMatrix::identity(2) + rat(l1) * c.psi) * rat(i2), rat(l1) * c.theta1);

    auto v = complete_intertwiner(worked_theta(), fixtures::worked_l(), l1);
    EXPECT_TRUE(verify_completion(v, worked_theta(), fixtures::worked_l(), l1));

    EXPECT_THROW(complete_intertwiner(RatMatrix::identity(2), l1, i2), PreconditionError);
}

TEST(Dual, Examples) {
    auto iw = worked_intertwiner();
    auto d = dual_intertwiner(iw);
    EXPECT_EQ(d.theta(), (RatMatrix{{0, 0}, {0, 1}}));
    EXPECT_EQ(d.theta1(), (RatMatrix{{0, 1}, {0, 0}}));
    EXPECT_EQ(d.source().matrix(), fixtures::worked_l1());
    EXPECT_EQ(d.target().matrix(), fixtures::worked_l().transpose());
    auto dd = dual_intertwiner(d);
    EXPECT_EQ(dd.theta(), iw.theta());
    EXPECT_EQ(dd.theta1(), iw.theta1());
    auto id = dual_intertwiner(identity_intertwiner(fixtures::worked_l()));
    EXPECT_EQ(id.theta(), RatMatrix::identity(2));
}

TEST(LeftCoprime, Examples) {
    auto yes = left_coprime(RatMatrix::identity(2), RatMatrix::diagonal({RatFun(kS), sp(-3)}));
    ASSERT_TRUE(yes.verdict);
    EXPECT_EQ(*yes.C, RatMatrix::identity(2));
    EXPECT_TRUE(yes.D->is_zero());

    RatMatrix y = RatMatrix::diagonal({RatFun(kS), sp(-1)});
    auto cert = left_coprime(worked_theta(), y);
    ASSERT_TRUE(cert.verdict);
    EXPECT_EQ(worked_theta() * *cert.C + y * *cert.D, RatMatrix::identity(2));
    EXPECT_TRUE(is_proper(*cert.C) && is_proper(*cert.D));

    RatMatrix x = worked_theta1().transpose();
    auto no = left_coprime(x, shift_by(rat(fixtures::worked_l().transpose()), -1));
    EXPECT_FALSE(no.verdict);
    EXPECT_FALSE(no.reason.empty());

    auto deficient = left_coprime(RatMatrix(2, 1), RatMatrix(2, 2));
    EXPECT_FALSE(deficient.verdict);
    EXPECT_THROW(left_coprime(RatMatrix(2, 1), RatMatrix(3, 3)), ShapeError);
}

TEST(Classification, Examples) {
    auto id = identity_intertwiner(fixtures::worked_l());
    EXPECT_TRUE(is_surjective(id));
    EXPECT_TRUE(is_injective(id));
    auto iw = worked_intertwiner();
    EXPECT_TRUE(is_surjective(iw));
    EXPECT_FALSE(is_injective(iw));
    Intertwiner zero(iw.source(), iw.target(), RatMatrix(2, 2), RatMatrix(2, 2));
    EXPECT_FALSE(is_surjective(zero));
}

TEST(Existence, Examples) {
    const auto l = fixtures::worked_l();
    const auto l1 = fixtures::worked_l1();
    EXPECT_TRUE(exists_surjective(l, l));
    EXPECT_TRUE(exists_injective(l, l));
    EXPECT_TRUE(exists_surjective(l, l1));
    EXPECT_FALSE(exists_injective(l, l1));
    EXPECT_FALSE(exists_surjective(l1, l));
    EXPECT_TRUE(exists_injective(l1, l));
    EXPECT_TRUE(exists_surjective(std::vector<int>{3, 1}, std::vector<int>{2}));
    EXPECT_FALSE(exists_injective(std::vector<int>{2, 2}, std::vector<int>{3}));
}

TEST(HomSpaceOracle, Examples) {
    UBasis b = compute_basis(fixtures::worked_l());
    UBasis b1 = compute_basis(fixtures::worked_l1());
    auto space = hom_space_oracle(b, b1);
    ASSERT_EQ(space.size(), 1u);
    EXPECT_TRUE(space[0](0, 1).is_zero());
    EXPECT_FALSE(space[0](0, 0).is_zero());

    auto self = hom_space_oracle(b, b);
    auto flat = flatten(self, 2, 2);
    EXPECT_EQ(rank(hstack(flat, flatten({ScalarMatrix::identity(2)}, 2, 2))), rank(flat));

    UBasis trivial = compute_basis(PolyMatrix{{kS, Poly(1)}, {Poly(0), kS}});
    EXPECT_TRUE(hom_space_oracle(b, trivial).empty());
}

class HomProperties : public ::testing::TestWithParam<std::uint32_t> {
   protected:
    Field field() const { return GetParam() == 0 ? Field::rationals() : Field::prime(GetParam()); }
};

TEST_P(HomProperties, CorpusLaws) {
    corpus::Rng rng(4242 + GetParam());
    const Field f = field();
    const int trials = f.is_rational() ? 15 : 40;
    for (int trial = 0; trial < trials; ++trial) {
        auto sample = corpus::random_intertwiner(rng, f);
        SCOPED_TRACE(sample.family + " #" + std::to_string(trial));
        ASSERT_TRUE(check_intertwining(sample.theta, sample.theta1, sample.l, sample.l1));
        EXPECT_TRUE(alt_condition_check(sample.theta, sample.theta1, sample.l, sample.l1));
        EXPECT_TRUE(kernel_inclusion_check(sample.theta, sample.l, sample.l1));
        Intertwiner iw(UModule(sample.l), UModule(sample.l1), sample.theta, sample.theta1);
        UBasis b = compute_basis(iw.source());
        UBasis b1 = compute_basis(iw.target());
        ScalarMatrix h = hom_matrix(iw, b, b1);
        EXPECT_EQ(h * b.shift(), b1.shift() * h);

        auto d = dual_intertwiner(iw);
        UBasis bt = compute_basis(d.target());
        UBasis b1t = compute_basis(d.source());
        EXPECT_EQ(gram_matrix(b1t, b1) * h, hom_matrix(d, b1t, bt).transpose() * gram_matrix(bt, b));

        EXPECT_EQ(is_surjective(iw), rank(h) == b1.size());
        EXPECT_EQ(is_injective(iw), rank(h) == b.size());

        auto space = hom_space_oracle(b, b1);
        auto flat = flatten(space, b1.size(), b.size());
        EXPECT_EQ(rank(hstack(flat, flatten({h}, b1.size(), b.size()))), rank(flat));

        auto c = complete_intertwiner(sample.raw_theta, sample.l, sample.l1);
        EXPECT_TRUE(verify_completion(c, sample.raw_theta, sample.l, sample.l1));
        for (const auto& x : b.preimages())
            EXPECT_EQ(rho_e(iw.target(), sample.raw_theta * x), rho_e(iw.target(), c.theta_adjusted * x));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, HomProperties, ::testing::Values(0u, 101u),
                         [](const auto& info) { return info.param == 0 ? std::string("Q") : "GF" + std::to_string(info.param); });
