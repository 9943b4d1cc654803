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

#ifndef INFMOD_TEST_FIXTURES_HPP
#define INFMOD_TEST_FIXTURES_HPP

#include <vector>

#include "infmod/infinity.hpp"
#include "infmod/ratmat.hpp"

namespace fixtures {

using namespace infmod;

inline const Poly kS = Poly::s();

inline RatFun sp(int k) { return RatFun::s_power(k); }
inline RatFun frac(Poly num, Poly den) { return RatFun::normalized(std::move(num), std::move(den)); }
inline RatMatrix rat(const PolyMatrix& m) { return to_rational(m); }

inline std::vector<Field> test_fields() { return {Field::rationals(), Field::prime(101)}; }

// [[0,1],[1,s]]
inline PolyMatrix worked_l() { return PolyMatrix{{Poly(0), Poly(1)}, {Poly(1), kS}}; }
// diag(s^2, 1)
inline PolyMatrix worked_l1() { return PolyMatrix{{kS * kS, Poly(0)}, {Poly(0), Poly(1)}}; }

inline RatMatrix column(std::initializer_list<RatFun> entries) {
    RatMatrix c(entries.size(), 1);
    std::size_t i = 0;
    for (const auto& e : entries) c(i++, 0) = e;
    return c;
}

inline ScalarMatrix scalar_column(std::initializer_list<Scalar> entries) {
    ScalarMatrix c(entries.size(), 1);
    std::size_t i = 0;
    for (const auto& e : entries) c(i++, 0) = e;
    return c;
}

}  // namespace fixtures

#endif  // INFMOD_TEST_FIXTURES_HPP
