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

#include "infmod/hom.hpp"

#include "infmod/infinity.hpp"
#include "infmod/linalg.hpp"
#include "infmod/ratmat.hpp"

namespace infmod {

namespace {

void require_theta_shape(const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1, const char* what) {
    if (theta.rows() != l1.rows() || theta.cols() != l.rows())
        throw ShapeError(std::string(what) + " must be " + std::to_string(l1.rows()) + "x" + std::to_string(l.rows()) + ", got " +
                         theta.shape_string());
}

RatMatrix s_inv_times(const PolyMatrix& m) { return shift_by(to_rational(m), -1); }

}  // namespace

Intertwiner::Intertwiner(UModule source, UModule target, RatMatrix theta, RatMatrix theta1)
    : source_(std::move(source)), target_(std::move(target)), theta_(std::move(theta)), theta1_(std::move(theta1)) {
    require_theta_shape(theta_, source_.matrix(), target_.matrix(), "Theta");
    require_theta_shape(theta1_, source_.matrix(), target_.matrix(), "Theta1");
    if (!is_proper(theta_)) throw ImproperError("Theta is not proper");
    if (!is_proper(theta1_)) throw ImproperError("Theta1 is not proper");
    if (!(theta_ * to_rational(source_.matrix()) == to_rational(target_.matrix()) * theta1_))
        throw PreconditionError("Theta L != L1 Theta1");
}

Intertwiner Intertwiner::from_theta(UModule source, UModule target, RatMatrix theta) {
    require_theta_shape(theta, source.matrix(), target.matrix(), "Theta");
    RatMatrix theta1 = target.inverse() * theta * to_rational(source.matrix());
    if (!is_proper(theta1)) throw ImproperError("L1^-1 Theta L is not proper; Theta does not intertwine on its own");
    return {std::move(source), std::move(target), std::move(theta), std::move(theta1)};
}

bool check_intertwining(const RatMatrix& theta, const RatMatrix& theta1, const PolyMatrix& l, const PolyMatrix& l1) {
    require_nonsingular(l, "L");
    require_nonsingular(l1, "L1");
    require_theta_shape(theta, l, l1, "Theta");
    require_theta_shape(theta1, l, l1, "Theta1");
    return is_proper(theta) && is_proper(theta1) && theta * to_rational(l) == to_rational(l1) * theta1;
}

bool alt_condition_check(const RatMatrix& theta, const RatMatrix& theta1, const PolyMatrix& l, const PolyMatrix& l1) {
    require_nonsingular(l, "L");
    require_nonsingular(l1, "L1");
    require_theta_shape(theta, l, l1, "Theta");
    require_theta_shape(theta1, l, l1, "Theta1");
    return mat_pi_plus(inverse(l1) * theta) == mat_pi_plus(theta1 * inverse(l));
}

UElement apply_hom(const Intertwiner& iw, const UElement& u) {
    if (!(u.host() == iw.source())) throw PreconditionError("element is not in the source module of the homomorphism");
    return rho_e(iw.target(), iw.theta() * to_rational(u.rep()));
}

ScalarMatrix hom_matrix(const Intertwiner& iw, const UBasis& b, const UBasis& b1) {
    if (!(b.module() == iw.source()) || !(b1.module() == iw.target())) throw PreconditionError("bases do not match the homomorphism");
    ScalarMatrix m(b1.size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) m.set_block(0, j, b1.coordinates(apply_hom(iw, b.elements()[j])));
    return m;
}

namespace {

// With s^-1 L = P Sigma Q, Sigma = diag(A, B), the kernel of rho^L is
// P diag(A, I) K_inf^n. Returns G = L1^-1 Theta P diag(A, I) together with P.
struct KernelTest {
    RatMatrix g;
    RatMatrix p;
    std::size_t t;  // number of negative exponents
};

KernelTest kernel_test(const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1) {
    require_nonsingular(l, "L");
    require_nonsingular(l1, "L1");
    require_theta_shape(theta, l, l1, "Theta");
    if (!is_proper(theta)) throw ImproperError("Theta is not proper");
    auto f = smith_at_infinity(s_inv_times(l));
    const std::size_t n = l.rows();
    const std::size_t t = f.profile.alphas.size();
    RatMatrix a_i = RatMatrix::identity(n);
    for (std::size_t i = 0; i < t; ++i) a_i(i, i) = f.Sigma(i, i);
    return {inverse(l1) * theta * f.P * a_i, std::move(f.P), t};
}

}  // namespace

bool kernel_inclusion_check(const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1) {
    return is_strictly_proper(kernel_test(theta, l, l1).g);
}

// Write T = L1^-1 Theta P = [T_a, T_b] by the blocks of Sigma = diag(A, B). The
// kernel inclusion says G = [T_a A, T_b] is strictly proper. Then
//
//     L1^-1 Theta L = s [T_a A, T_b B] Q,
//
// whose first block is proper while s T_b B Q need not be. Psi = -[0, T_b] P^-1
// gives Psi L = -s [0, T_b B] Q, so Theta1 = L1^-1 Theta L + Psi L = s [T_a A, 0] Q
// is proper, Psi is strictly proper and L1 Psi = -Theta P diag(0, I) P^-1 is proper.
CompletionResult complete_intertwiner(const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1) {
    auto test = kernel_test(theta, l, l1);
    if (!is_strictly_proper(test.g))
        throw PreconditionError("kernel inclusion fails: Theta does not map Ker rho^L into Ker rho^L1");
    const std::size_t n = l.rows();
    RatMatrix tail = RatMatrix(n, n);  // diag(0, I)
    for (std::size_t i = test.t; i < n; ++i) tail(i, i) = RatFun(1);

    CompletionResult c;
    const RatMatrix lr = to_rational(l);
    const RatMatrix l1r = to_rational(l1);
    c.psi = -(test.g * tail * inverse(test.p));
    c.theta1 = inverse(l1) * theta * lr + c.psi * lr;
    c.theta_adjusted = theta + l1r * c.psi;
    if (!verify_completion(c, theta, l, l1)) throw VerificationError("completion failed its postconditions");
    return c;
}

bool verify_completion(const CompletionResult& c, const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1) {
    const RatMatrix l1r = to_rational(l1);
    return is_strictly_proper(c.psi) && is_proper(l1r * c.psi) && is_proper(c.theta1) && c.theta_adjusted == theta + l1r * c.psi &&
           c.theta_adjusted * to_rational(l) == l1r * c.theta1;
}

Intertwiner dual_intertwiner(const Intertwiner& iw) {
    return {iw.target().transposed(), iw.source().transposed(), iw.theta1().transpose(), iw.theta().transpose()};
}

// Over the valuation ring, [X Y] = P [Sigma 0] Q with P, Q bicausal. A proper
// Z = (C; D) with [X Y] Z = I exists iff Sigma is square of full row rank and
// Sigma^-1 is proper, i.e. every exponent is >= 0; then Z = Q^-1 [Sigma^-1; 0] P^-1.
CoprimeCertificate left_coprime(const RatMatrix& x, const RatMatrix& y) {
    if (x.rows() != y.rows() || !y.is_square())
        throw ShapeError("left_coprime needs X n1 x n and Y n1 x n1, got " + x.shape_string() + " and " + y.shape_string());
    const std::size_t n1 = x.rows();
    const std::size_t n = x.cols();
    CoprimeCertificate cert;
    // Bicausal X alone already gives the witness C = X^-1, D = 0.
    if (x.is_square() && is_bicausal(x)) {
        cert.verdict = true;
        cert.C = inverse(x);
        cert.D = RatMatrix(n1, n1);
        cert.reason = "X is bicausal";
        return cert;
    }
    auto f = smith_at_infinity(hstack(x, y));
    if (f.profile.rank() < n1) {
        cert.reason = "compound [X Y] has rank " + std::to_string(f.profile.rank()) + " < " + std::to_string(n1);
        return cert;
    }
    if (!f.profile.alphas.empty()) {
        cert.reason = "compound [X Y] has invariant factor s^-" + std::to_string(f.profile.alphas.front());
        return cert;
    }
    RatMatrix sigma_inv(n + n1, n1);
    for (std::size_t i = 0; i < n1; ++i) sigma_inv(i, i) = f.Sigma(i, i).inverse();
    RatMatrix z = f.Q_inv * sigma_inv * f.P_inv;
    cert.C = z.block(0, 0, n, n1);
    cert.D = z.block(n, 0, n1, n1);
    if (!is_proper(z) || !(x * *cert.C + y * *cert.D == RatMatrix::identity(n1)))
        throw VerificationError("coprimeness witness failed verification");
    cert.verdict = true;
    cert.reason = "all invariant exponents are nonnegative";
    return cert;
}

namespace {

// Verdict of left_coprime without building the witness.
bool left_coprime_verdict(const RatMatrix& x, const RatMatrix& y) {
    if (x.is_square() && is_bicausal(x)) return true;
    const auto p = profile_at_infinity(hstack(x, y));
    return p.rank() == x.rows() && p.alphas.empty();
}

}  // namespace

bool is_surjective(const Intertwiner& iw) { return left_coprime_verdict(iw.theta(), s_inv_times(iw.target().matrix())); }

bool is_injective(const Intertwiner& iw) {
    return left_coprime_verdict(iw.theta1().transpose(), s_inv_times(iw.source().matrix().transpose()));
}

bool exists_surjective(const std::vector<int>& alphas, const std::vector<int>& gammas) {
    if (alphas.size() < gammas.size()) return false;
    for (std::size_t i = 0; i < gammas.size(); ++i)
        if (alphas[i] < gammas[i]) return false;
    return true;
}

bool exists_injective(const std::vector<int>& alphas, const std::vector<int>& gammas) {
    if (alphas.size() > gammas.size()) return false;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        if (alphas[i] > gammas[i]) return false;
    return true;
}

bool exists_surjective(const PolyMatrix& l, const PolyMatrix& l1) {
    return exists_surjective(infinite_elementary_divisors(l), infinite_elementary_divisors(l1));
}

bool exists_injective(const PolyMatrix& l, const PolyMatrix& l1) {
    return exists_injective(infinite_elementary_divisors(l), infinite_elementary_divisors(l1));
}

std::vector<ScalarMatrix> hom_space_oracle(const UBasis& b, const UBasis& b1) {
    const ScalarMatrix& s = b.shift();
    const ScalarMatrix& s1 = b1.shift();
    const std::size_t d = b.size();
    const std::size_t d1 = b1.size();
    // Unknown M(i, j) sits at index i * d + j; one equation per entry of M S - S1 M.
    ScalarMatrix system(d1 * d, d1 * d);
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t c = 0; c < d; ++c) {
            const std::size_t eq = a * d + c;
            for (std::size_t k = 0; k < d; ++k) system(eq, a * d + k) += s(k, c);
            for (std::size_t k = 0; k < d1; ++k) system(eq, k * d + c) -= s1(a, k);
        }
    std::vector<ScalarMatrix> basis;
    for (const auto& v : nullspace(system)) {
        ScalarMatrix m(d1, d);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = v(i * d + j, 0);
        basis.push_back(std::move(m));
    }
    return basis;
}

}  // namespace infmod
