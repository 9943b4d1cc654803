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

// The module U^L of a nonsingular polynomial matrix L, realized as the image of
//
//     rho(x) = L * pi_plus(L^-1 x),   x a proper rational column,
//
// with kernel the proper columns x for which s L^-1 x is proper. Elements are
// stored as their polynomial representative rho(x). The proper functions act
// by q . rho(x) = rho(q x); multiplication by s^-1 is the nilpotent shift.

#ifndef INFMOD_UMODULE_HPP
#define INFMOD_UMODULE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "infmod/matrix.hpp"

namespace infmod {

/// Shared, immutable host data for U^L: L and its inverse.
class UModule {
   public:
    /// Throws ShapeError / SingularMatrixError.
    explicit UModule(PolyMatrix l);

    const PolyMatrix& matrix() const noexcept { return impl_->l; }
    const RatMatrix& inverse() const noexcept { return impl_->inverse; }
    std::size_t size() const noexcept { return impl_->l.rows(); }
    /// Largest degree in pi_plus(L^-1); nullopt when L^-1 is strictly proper.
    std::optional<int> truncation_bound() const noexcept { return impl_->bound; }

    UModule transposed() const { return UModule(impl_->l.transpose()); }

    friend bool operator==(const UModule& a, const UModule& b) { return a.impl_ == b.impl_ || a.impl_->l == b.impl_->l; }

   private:
    struct Impl {
        PolyMatrix l;
        RatMatrix inverse;
        std::optional<int> bound;
    };
    std::shared_ptr<const Impl> impl_;
};

/// An element of U^L, identified with its representative rho(x).
class UElement {
   public:
    UElement(UModule host, PolyMatrix rep) : host_(std::move(host)), rep_(std::move(rep)) {}

    const UModule& host() const noexcept { return host_; }
    const PolyMatrix& rep() const noexcept { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    UElement operator-() const { return {host_, -rep_}; }
    friend UElement operator+(const UElement& a, const UElement& b);
    friend UElement operator-(const UElement& a, const UElement& b) { return a + (-b); }
    friend UElement operator*(const Scalar& c, const UElement& u) { return {u.host_, u.rep_ * Poly(c)}; }
    friend bool operator==(const UElement& a, const UElement& b) { return a.host_ == b.host_ && a.rep_ == b.rep_; }

   private:
    UModule host_;
    PolyMatrix rep_;
};

/// rho for a proper column x. Throws ImproperError / ShapeError.
UElement rho(const UModule& m, const RatMatrix& x);
/// L pi_plus(L^-1 w) for an arbitrary rational column w.
UElement rho_e(const UModule& m, const RatMatrix& w);
/// x lies in the kernel of rho, i.e. rho(x) = 0.
bool kernel_member(const UModule& m, const RatMatrix& x);

/// K-basis of U^L with proper preimages and the matrix of the shift.
class UBasis {
   public:
    const UModule& module() const noexcept { return module_; }
    std::optional<int> bound() const noexcept { return module_.truncation_bound(); }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<UElement>& elements() const noexcept { return elements_; }
    const std::vector<RatMatrix>& preimages() const noexcept { return preimages_; }
    /// Matrix of multiplication by s^-1; column j holds the coordinates of s^-1 . b_j.
    const ScalarMatrix& shift() const noexcept { return shift_; }

    /// Coordinates of u as a size() x 1 column. Throws PreconditionError on a
    /// host mismatch and VerificationError if u is outside the span.
    ScalarMatrix coordinates(const UElement& u) const;
    UElement from_coordinates(const ScalarMatrix& c) const;
    UElement zero() const;

   private:
    friend UBasis compute_basis(const UModule& m);
    explicit UBasis(UModule m) : module_(std::move(m)) {}

    std::vector<Scalar> flatten(const PolyMatrix& rep) const;

    UModule module_;
    std::vector<UElement> elements_;
    std::vector<RatMatrix> preimages_;
    ScalarMatrix shift_;
    std::size_t width_ = 0;  // coefficient slots per entry when flattening
    ScalarMatrix flat_;      // flattened reps as columns
};

/// Basis extracted from rho(s^-k e_i), k = 0..D then i = 0..n-1, keeping each
/// vector not in the span of the earlier ones.
UBasis compute_basis(const UModule& m);
UBasis compute_basis(const PolyMatrix& l);

/// q . u for proper q. Throws ImproperError.
UElement scalar_action(const UBasis& b, const RatFun& q, const UElement& u);
inline const ScalarMatrix& shift_matrix(const UBasis& b) { return b.shift(); }

/// <rho^{L^T} y, rho^L x> = (y^T L^-1 x)_0 for proper columns y, x.
Scalar pairing(const UModule& m, const RatMatrix& y, const RatMatrix& x);
/// Entry (i, j) = pairing of the i-th preimage of `transposed` with the j-th of `b`.
ScalarMatrix gram_matrix(const UBasis& transposed, const UBasis& b);

/// Jordan block sizes of a nilpotent matrix, descending. Throws PreconditionError if not nilpotent.
std::vector<int> jordan_block_sizes(const ScalarMatrix& nilpotent);

}  // namespace infmod

#endif  // INFMOD_UMODULE_HPP
