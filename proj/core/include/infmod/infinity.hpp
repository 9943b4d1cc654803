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

// Structure at infinity: Smith form over the proper rational functions.
//
// K_inf(s) is a discrete valuation ring with prime s^-1 and valuation delta, so
// every rational matrix W of rank r factors as
//
//     W = P * [Sigma 0; 0 0] * Q,   Sigma = diag(s^e_1, ..., s^e_r),
//
// with P, Q bicausal and e_1 <= ... <= e_r. The exponents are unique. The
// negative ones are written -alpha_j, the nonnegative ones beta_j.

#ifndef INFMOD_INFINITY_HPP
#define INFMOD_INFINITY_HPP

#include <cstddef>
#include <vector>

#include "infmod/matrix.hpp"

namespace infmod {

struct SigmaProfile {
    std::vector<int> alphas;  // alpha_1 >= ... >= alpha_t >= 1
    std::vector<int> betas;   // 0 <= beta_{t+1} <= ... <= beta_r

    std::size_t rank() const noexcept { return alphas.size() + betas.size(); }
    /// The s-exponents of Sigma in ascending order.
    std::vector<int> exponents() const;
    /// Builds the profile from s-exponents given in any order.
    static SigmaProfile from_exponents(std::vector<int> exponents);

    friend bool operator==(const SigmaProfile&, const SigmaProfile&) = default;
};

struct SigmaFactorization {
    RatMatrix P;      // bicausal, rows(W) x rows(W)
    RatMatrix Sigma;  // shape of W, diagonal block of powers of s in the top-left corner
    RatMatrix Q;      // bicausal, cols(W) x cols(W)
    RatMatrix P_inv;  // inverse of P, accumulated during elimination
    RatMatrix Q_inv;  // inverse of Q
    SigmaProfile profile;
};

/// Tie-breaking rule among entries of minimal valuation.
enum class PivotOrder {
    row_major,     // smallest row, then smallest column
    column_major,  // smallest column, then smallest row
};

SigmaFactorization smith_at_infinity(const RatMatrix& w, PivotOrder order = PivotOrder::row_major);

/// Same elimination without accumulating the transforms; returns the profile only.
SigmaProfile profile_at_infinity(const RatMatrix& w, PivotOrder order = PivotOrder::row_major);

/// P * Sigma * Q == w exactly, and P, Q bicausal.
bool verify_factorization(const SigmaFactorization& f, const RatMatrix& w);

/// Profile from minors: with v_k the least valuation of a k x k minor (v_0 = 0),
/// the k-th exponent is -(v_k - v_{k-1}). Independent of the elimination.
SigmaProfile minor_valuation_profile(const RatMatrix& w);

/// alphas of s^-1 L. Throws SingularMatrixError / ShapeError.
std::vector<int> infinite_elementary_divisors(const PolyMatrix& l);

/// dim_K U^L = sum of the infinite elementary divisor exponents.
int dim_UL(const PolyMatrix& l);

/// Exponents of the elementary divisors s^c of M belonging to the root 0,
/// sorted descending, from orders of vanishing of minors at s = 0.
std::vector<int> finite_structure_at_zero(const PolyMatrix& m);

/// Throws ShapeError / SingularMatrixError unless l is square with nonzero determinant.
void require_nonsingular(const PolyMatrix& l, const char* what = "L");

}  // namespace infmod

#endif  // INFMOD_INFINITY_HPP
