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

#include "infmod/ratfun.hpp"

#include <ostream>
#include <stdexcept>

namespace infmod {

RatFun RatFun::normalized(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return {};
    if (den.degree() > 0) {
        Poly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
    }
    if (!den.leading().is_one()) {
        Scalar inv = den.leading().inverse();
        num *= inv;
        den *= inv;
    }
    return RatFun(std::move(num), std::move(den), 0);
}

RatFun RatFun::s_power(int k) {
    if (k >= 0) return Poly::monomial(k);
    return RatFun(Poly(1), Poly::monomial(-k), 0);
}

Causality RatFun::causality() const noexcept {
    if (is_zero()) return Causality::zero;
    Valuation d = delta();
    if (d < 0) return Causality::improper;
    return d == 0 ? Causality::unit : Causality::strictly_proper;
}

std::pair<Poly, RatFun> RatFun::pi_split() const {
    if (is_polynomial()) return {num_, RatFun()};
    auto [q, r] = divmod(num_, den_);
    // gcd(r, den) = gcd(num, den) = 1, so r/den is already canonical.
    return {std::move(q), RatFun(std::move(r), den_, 0)};
}

Poly RatFun::pi_plus() const {
    if (is_polynomial()) return num_;
    if (num_.degree() < den_.degree()) return {};
    return divmod(num_, den_).first;
}

RatFun RatFun::pi_minus() const { return pi_split().second; }

Scalar RatFun::at_zero() const { return pi_plus().coeff(0); }

Scalar RatFun::at_infinity() const {
    Valuation d = delta();
    if (d < 0) throw std::domain_error("value at infinity of an improper function");
    if (d > 0) return {};
    return num_.leading();  // den is monic
}

RatFun RatFun::in(Field field) const { return RatFun(num_.in(field), den_.in(field), 0); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return normalized(den_, num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

RatFun& RatFun::operator+=(const RatFun& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) return *this = normalized(num_ + rhs.num_, den_);
    return *this = normalized(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = RatFun();
    if (is_polynomial() && rhs.is_polynomial()) return *this = normalized(num_ * rhs.num_, Poly(den_.leading() * rhs.den_.leading()));
    return *this = normalized(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun& RatFun::operator/=(const RatFun& rhs) { return *this *= rhs.inverse(); }

std::string RatFun::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.to_string(); }

}  // namespace infmod
