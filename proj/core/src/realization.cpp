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

#include "infmod/realization.hpp"

#include "infmod/infinity.hpp"
#include "infmod/linalg.hpp"
#include "infmod/ratmat.hpp"

namespace infmod {

std::vector<ScalarMatrix> polynomial_part_coeffs(const RatMatrix& g) {
    const PolyMatrix plus = mat_pi_plus(g);
    const int t = max_degree(plus).value_or(0);
    std::vector<ScalarMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(t) + 1);
    for (int nu = 0; nu <= t; ++nu) coeffs.push_back(plus.map([nu](const Poly& p) { return p.coeff(nu); }));
    return coeffs;
}

Rlz2 canonical_split(const RatMatrix& g) {
    const auto coeffs = polynomial_part_coeffs(g);
    const std::size_t m = g.rows();
    const std::size_t p = g.cols();
    // A strictly proper G has no polynomial part to realize: the split is empty.
    const std::size_t blocks = mat_pi_plus(g).is_zero() ? 0 : coeffs.size();  // t + 1
    const std::size_t n2 = blocks * p;

    Rlz2 r;
    r.W2 = mat_pi_minus(g);
    r.D2 = PolyMatrix(n2, n2);
    for (std::size_t i = 0; i < n2; ++i) r.D2(i, i) = Poly(-1);
    for (std::size_t b = 0; b + 1 < blocks; ++b)
        for (std::size_t k = 0; k < p; ++k) r.D2(b * p + k, (b + 1) * p + k) = Poly::s();
    r.Q2 = RatMatrix(n2, p);
    if (blocks > 0)
        for (std::size_t k = 0; k < p; ++k) r.Q2((blocks - 1) * p + k, k) = RatFun(1);
    r.P2 = RatMatrix(m, n2);
    for (std::size_t b = 0; b < blocks; ++b) r.P2.set_block(0, b * p, -to_rational(coeffs[blocks - 1 - b]));
    return r;
}

namespace {

void require_split_shapes(const Rlz2& r) {
    const std::size_t n2 = r.D2.rows();
    if (!r.D2.is_square()) throw ShapeError("D2 must be square, got " + r.D2.shape_string());
    if (r.P2.cols() != n2 || r.Q2.rows() != n2 || r.W2.rows() != r.P2.rows() || r.W2.cols() != r.Q2.cols())
        throw ShapeError("inconsistent realization shapes W2 " + r.W2.shape_string() + ", P2 " + r.P2.shape_string() + ", D2 " +
                         r.D2.shape_string() + ", Q2 " + r.Q2.shape_string());
}

RatMatrix reconstruct(const Rlz2& r) { return r.W2 + r.P2 * inverse(r.D2) * r.Q2; }

}  // namespace

bool verify_split(const Rlz2& r) {
    require_split_shapes(r);
    return is_strictly_proper(r.W2) && is_proper(r.P2) && is_proper(r.Q2) && !det(r.D2).is_zero();
}

bool verify_split(const Rlz2& r, const RatMatrix& g) { return verify_split(r) && reconstruct(r) == g; }

GssRealization realize_plus(const Rlz2& r) {
    require_split_shapes(r);
    if (!is_proper(r.Q2)) throw ImproperError("Q2 is not proper");
    if (!is_proper(r.P2)) throw ImproperError("P2 is not proper");
    if (!is_strictly_proper(r.W2)) throw ImproperError("W2 is not strictly proper");

    UModule host(r.D2);
    UBasis basis = compute_basis(host);
    const std::size_t d = basis.size();
    const std::size_t m = r.P2.rows();
    const std::size_t p = r.Q2.cols();

    ScalarMatrix b2(d, p);
    for (std::size_t j = 0; j < p; ++j) b2.set_block(0, j, basis.coordinates(rho(host, r.Q2.column(j))));

    // C2 on the class of x is -(P2 D2^-1 x)_0, evaluated on proper preimages.
    ScalarMatrix c2(m, d);
    const RatMatrix p2_d2inv = r.P2 * host.inverse();
    for (std::size_t j = 0; j < d; ++j) c2.set_block(0, j, -mat_at_zero(p2_d2inv * basis.preimages()[j]));

    ScalarMatrix n2 = basis.shift();
    return {std::move(basis), std::move(n2), std::move(b2), std::move(c2)};
}

bool verify_markov(const Rlz2& r, const GssRealization& g) {
    const auto coeffs = polynomial_part_coeffs(reconstruct(r));
    ScalarMatrix nu_power = ScalarMatrix::identity(g.N2.rows());
    for (const auto& g_nu : coeffs) {
        if (!(-(g.C2 * nu_power * g.B2) == g_nu)) return false;
        nu_power = nu_power * g.N2;
    }
    return nu_power.is_zero();
}

}  // namespace infmod
