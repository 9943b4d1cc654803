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

// Realization of the polynomial part of a transfer matrix on U^{D2}:
//
//     pi_plus G = sum_nu G_nu s^nu = C2 (s N2 - I)^-1 B2,   G_nu = -C2 N2^nu B2.

#ifndef INFMOD_REALIZATION_HPP
#define INFMOD_REALIZATION_HPP

#include <vector>

#include "infmod/matrix.hpp"
#include "infmod/umodule.hpp"

namespace infmod {

/// G = W2 + P2 D2^-1 Q2 with W2 strictly proper, P2 and Q2 proper, D2 polynomial.
struct Rlz2 {
    RatMatrix W2;
    RatMatrix P2;
    PolyMatrix D2;
    RatMatrix Q2;
};

struct GssRealization {
    UBasis basis;  // basis of U^{D2}
    ScalarMatrix N2;
    ScalarMatrix B2;
    ScalarMatrix C2;
};

/// [G_0, ..., G_t] with t the largest entry degree of pi_plus G ([0] if G is strictly proper).
std::vector<ScalarMatrix> polynomial_part_coeffs(const RatMatrix& g);

/// D2 = s N - I with N the block upshift of size (t+1)p, Q2 = (0, ..., 0, I)^T,
/// P2 = -(G_t, ..., G_0), W2 = pi_minus G. Strictly proper G gives n2 = 0.
Rlz2 canonical_split(const RatMatrix& g);

/// Shapes and properness of the parts; with `g` also the reconstruction.
bool verify_split(const Rlz2& r);
bool verify_split(const Rlz2& r, const RatMatrix& g);

/// Builds (N2, B2, C2) on U^{D2}. Throws ShapeError, ImproperError, SingularMatrixError.
GssRealization realize_plus(const Rlz2& r);

/// G_nu == -C2 N2^nu B2 for nu = 0..t and N2^(t+1) == 0, with G = W2 + P2 D2^-1 Q2.
bool verify_markov(const Rlz2& r, const GssRealization& g);

}  // namespace infmod

#endif  // INFMOD_REALIZATION_HPP
