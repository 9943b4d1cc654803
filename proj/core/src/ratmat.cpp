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

#include "infmod/ratmat.hpp"

#include <algorithm>

namespace infmod {

RatMatrix to_rational(const PolyMatrix& m) {
    return m.map([](const Poly& p) { return RatFun(p); });
}

RatMatrix to_rational(const ScalarMatrix& m) {
    return m.map([](const Scalar& c) { return RatFun(c); });
}

PolyMatrix to_polynomial(const RatMatrix& m) {
    return m.map([](const RatFun& f) {
        if (!f.is_polynomial()) throw PreconditionError("entry " + f.to_string() + " is not a polynomial");
        return f.num();
    });
}

PolyMatrix to_polynomial(const ScalarMatrix& m) {
    return m.map([](const Scalar& c) { return Poly(c); });
}

ScalarMatrix to_scalar(const PolyMatrix& m) {
    return m.map([](const Poly& p) {
        if (p.degree() > 0) throw PreconditionError("entry " + p.to_string() + " is not constant");
        return p.coeff(0);
    });
}

RatFun det(const RatMatrix& m) { return determinant(m); }
RatFun det(const PolyMatrix& m) { return determinant(to_rational(m)); }

RatMatrix inverse(const RatMatrix& m) { return infmod::inverse<RatFun>(m); }
RatMatrix inverse(const PolyMatrix& m) { return infmod::inverse<RatFun>(to_rational(m)); }

PolyMatrix mat_pi_plus(const RatMatrix& m) {
    return m.map([](const RatFun& f) { return f.pi_plus(); });
}

RatMatrix mat_pi_minus(const RatMatrix& m) {
    return m.map([](const RatFun& f) { return f.pi_minus(); });
}

ScalarMatrix mat_at_zero(const RatMatrix& m) {
    return m.map([](const RatFun& f) { return f.at_zero(); });
}

ScalarMatrix mat_at_infinity(const RatMatrix& m) {
    return m.map([](const RatFun& f) { return f.at_infinity(); });
}

Valuation min_delta(const RatMatrix& m) {
    Valuation v = kInfinity;
    for (const auto& f : m.data()) v = std::min(v, f.delta());
    return v;
}

bool is_proper(const RatMatrix& m) { return min_delta(m) >= 0; }
bool is_strictly_proper(const RatMatrix& m) { return min_delta(m) > 0; }

bool is_bicausal(const RatMatrix& m) {
    if (!m.is_square()) throw ShapeError("bicausality of non-square " + m.shape_string() + " matrix");
    return is_proper(m) && det(m).causality() == Causality::unit;
}

std::optional<int> max_degree(const PolyMatrix& m) {
    std::optional<int> d;
    for (const auto& p : m.data())
        if (!p.is_zero()) d = std::max(d.value_or(0), p.degree());
    return d;
}

RatMatrix shift_by(const RatMatrix& m, int k) { return m * RatFun::s_power(k); }

}  // namespace infmod
