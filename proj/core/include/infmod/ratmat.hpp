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

#ifndef INFMOD_RATMAT_HPP
#define INFMOD_RATMAT_HPP

#include <optional>

#include "infmod/linalg.hpp"
#include "infmod/matrix.hpp"

namespace infmod {

RatMatrix to_rational(const PolyMatrix& m);
/// The polynomial matrix equal to m; throws PreconditionError if some entry is not a polynomial.
PolyMatrix to_polynomial(const RatMatrix& m);
ScalarMatrix to_scalar(const PolyMatrix& m);  // requires constant entries
PolyMatrix to_polynomial(const ScalarMatrix& m);
RatMatrix to_rational(const ScalarMatrix& m);

RatFun det(const RatMatrix& m);
RatFun det(const PolyMatrix& m);
/// Exact inverse over K(s). Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const PolyMatrix& m);

PolyMatrix mat_pi_plus(const RatMatrix& m);
RatMatrix mat_pi_minus(const RatMatrix& m);
ScalarMatrix mat_at_zero(const RatMatrix& m);
/// Entrywise value at infinity of a proper matrix.
ScalarMatrix mat_at_infinity(const RatMatrix& m);

/// Minimum valuation over all entries; kInfinity for the zero matrix.
Valuation min_delta(const RatMatrix& m);
bool is_proper(const RatMatrix& m);
bool is_strictly_proper(const RatMatrix& m);
/// Proper, square, with det a unit of the proper functions.
bool is_bicausal(const RatMatrix& m);

/// Largest entry degree, nullopt for the zero matrix.
std::optional<int> max_degree(const PolyMatrix& m);

/// s^k * m
RatMatrix shift_by(const RatMatrix& m, int k);

template <class T>
Matrix<T> in_field(const Matrix<T>& m, Field f) {
    return m.map([f](const T& x) { return x.in(f); });
}

}  // namespace infmod

#endif  // INFMOD_RATMAT_HPP
