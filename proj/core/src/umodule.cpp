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

#include "infmod/umodule.hpp"

#include <algorithm>

#include "infmod/infinity.hpp"
#include "infmod/linalg.hpp"
#include "infmod/ratmat.hpp"

namespace infmod {

namespace {

void require_column(const UModule& m, const RatMatrix& x, const char* what) {
    if (x.cols() != 1 || x.rows() != m.size())
        throw ShapeError(std::string(what) + " must be a " + std::to_string(m.size()) + "x1 column, got " + x.shape_string());
}

void require_proper(const RatMatrix& x, const char* what) {
    if (!is_proper(x)) throw ImproperError(std::string(what) + " must be proper");
}

}  // namespace

UModule::UModule(PolyMatrix l) {
    require_nonsingular(l);
    auto impl = std::make_shared<Impl>();
    impl->inverse = infmod::inverse(l);
    impl->bound = max_degree(mat_pi_plus(impl->inverse));
    impl->l = std::move(l);
    impl_ = std::move(impl);
}

UElement operator+(const UElement& a, const UElement& b) {
    if (!(a.host_ == b.host_)) throw PreconditionError("adding elements of different modules");
    return {a.host_, a.rep_ + b.rep_};
}

UElement rho_e(const UModule& m, const RatMatrix& w) {
    require_column(m, w, "w");
    return {m, m.matrix() * mat_pi_plus(m.inverse() * w)};
}

UElement rho(const UModule& m, const RatMatrix& x) {
    require_column(m, x, "x");
    require_proper(x, "x");
    return rho_e(m, x);
}

bool kernel_member(const UModule& m, const RatMatrix& x) { return rho(m, x).is_zero(); }

namespace {

ScalarMatrix column_of(std::vector<Scalar> v) {
    const std::size_t n = v.size();
    return ScalarMatrix(n, 1, std::move(v));
}

}  // namespace

std::vector<Scalar> UBasis::flatten(const PolyMatrix& rep) const {
    std::vector<Scalar> v(rep.rows() * width_);
    for (std::size_t i = 0; i < rep.rows(); ++i) {
        const Poly& p = rep(i, 0);
        if (!p.is_zero() && static_cast<std::size_t>(p.degree()) >= width_)
            throw VerificationError("representative outside the span of the basis");
        for (int k = 0; k <= p.degree(); ++k) v[i * width_ + static_cast<std::size_t>(k)] = p.coeff(k);
    }
    return v;
}

ScalarMatrix UBasis::coordinates(const UElement& u) const {
    if (!(u.host() == module_)) throw PreconditionError("element belongs to a different module");
    if (size() == 0) {
        if (!u.is_zero()) throw VerificationError("nonzero element of a zero module");
        return ScalarMatrix(0, 1);
    }
    auto v = flatten(u.rep());
    auto c = solve(flat_, column_of(std::move(v)));
    if (!c) throw VerificationError("representative outside the span of the basis");
    return *c;
}

UElement UBasis::from_coordinates(const ScalarMatrix& c) const {
    if (c.rows() != size() || c.cols() != 1) throw ShapeError("coordinate column has shape " + c.shape_string());
    UElement u = zero();
    for (std::size_t j = 0; j < size(); ++j)
        if (!c(j, 0).is_zero()) u = u + c(j, 0) * elements_[j];
    return u;
}

UElement UBasis::zero() const { return {module_, PolyMatrix(module_.size(), 1)}; }

// Truncation: write L^-1 = pi_plus(L^-1) + R with R strictly proper and
// deg pi_plus(L^-1) <= D. For k > D, L^-1 s^-k e_i is strictly proper, so
// rho(s^-k e_i) = 0. Every proper x expands as sum_{k <= D} s^-k c_k plus
// s^-(D+1) times a proper column, hence the listed vectors span Im rho.
UBasis compute_basis(const UModule& m) {
    UBasis b(m);
    const std::size_t n = m.size();
    const auto bound = m.truncation_bound();
    b.width_ = static_cast<std::size_t>(max_degree(m.matrix()).value_or(0) + bound.value_or(0) + 1);
    b.flat_ = ScalarMatrix(n * b.width_, 0);
    if (bound) {
        for (int k = 0; k <= *bound; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                RatMatrix x = RatMatrix::unit_column(n, i) * RatFun::s_power(-k);
                UElement u = rho(m, x);
                if (u.is_zero()) continue;
                auto v = b.flatten(u.rep());
                ScalarMatrix candidate = hstack(b.flat_, column_of(std::move(v)));
                if (rank(candidate) == b.elements_.size()) continue;
                b.flat_ = std::move(candidate);
                b.elements_.push_back(std::move(u));
                b.preimages_.push_back(std::move(x));
            }
    }
    const std::size_t d = b.size();
    b.shift_ = ScalarMatrix(d, d);
    const RatFun s_inv = RatFun::s_power(-1);
    for (std::size_t j = 0; j < d; ++j) b.shift_.set_block(0, j, b.coordinates(rho(m, b.preimages_[j] * s_inv)));
    return b;
}

UBasis compute_basis(const PolyMatrix& l) { return compute_basis(UModule(l)); }

UElement scalar_action(const UBasis& b, const RatFun& q, const UElement& u) {
    if (!q.is_proper()) throw ImproperError("module scalar " + q.to_string() + " is not proper");
    ScalarMatrix c = b.coordinates(u);
    UElement out = b.zero();
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!c(j, 0).is_zero()) out = out + c(j, 0) * rho(b.module(), b.preimages()[j] * q);
    return out;
}

Scalar pairing(const UModule& m, const RatMatrix& y, const RatMatrix& x) {
    require_column(m, y, "y");
    require_column(m, x, "x");
    require_proper(y, "y");
    require_proper(x, "x");
    return (y.transpose() * m.inverse() * x)(0, 0).at_zero();
}

ScalarMatrix gram_matrix(const UBasis& transposed, const UBasis& b) {
    if (!(transposed.module().matrix() == b.module().matrix().transpose()))
        throw PreconditionError("gram_matrix needs a basis of U^{L^T} and a basis of U^L");
    ScalarMatrix g(transposed.size(), b.size());
    for (std::size_t i = 0; i < transposed.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = pairing(b.module(), transposed.preimages()[i], b.preimages()[j]);
    return g;
}

std::vector<int> jordan_block_sizes(const ScalarMatrix& nilpotent) {
    if (!nilpotent.is_square()) throw ShapeError("jordan_block_sizes of non-square matrix");
    const std::size_t n = nilpotent.rows();
    // ranks[k] = rank N^k
    std::vector<std::size_t> ranks{n};
    ScalarMatrix p = ScalarMatrix::identity(n);
    while (ranks.back() > 0) {
        if (ranks.size() > n + 1) throw PreconditionError("matrix is not nilpotent");
        p = p * nilpotent;
        std::size_t r = rank(p);
        if (r == ranks.back()) throw PreconditionError("matrix is not nilpotent");
        ranks.push_back(r);
    }
    ranks.push_back(0);
    std::vector<int> sizes;
    // blocks of size exactly k: (r_{k-1} - r_k) - (r_k - r_{k+1})
    for (std::size_t k = ranks.size() - 2; k >= 1; --k) {
        auto at_least = ranks[k - 1] - ranks[k];
        auto at_least_next = ranks[k] - ranks[k + 1];
        sizes.insert(sizes.end(), at_least - at_least_next, static_cast<int>(k));
    }
    return sizes;
}

}  // namespace infmod
