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

#ifndef INFMOD_RATFUN_HPP
#define INFMOD_RATFUN_HPP

#include <iosfwd>
#include <limits>
#include <string>

#include "infmod/poly.hpp"

namespace infmod {

/// Valuation at infinity, deg(den) - deg(num). The zero function has
/// valuation kInfinity so that minimum scans skip zero entries.
using Valuation = int;
inline constexpr Valuation kInfinity = std::numeric_limits<int>::max();

enum class Causality { improper, unit, strictly_proper, zero };

/// Element of K(s) in canonical form: gcd(num, den) = 1, den monic, 0 = 0/1.
class RatFun {
   public:
    RatFun() : den_(1) {}
    RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFun(Scalar c) : RatFun(Poly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    RatFun(I c) : RatFun(Poly(c)) {}  // NOLINT(google-explicit-constructor)

    /// num/den in canonical form. Throws std::domain_error if den = 0.
    static RatFun normalized(Poly num, Poly den);
    /// s^k for any integer k.
    static RatFun s_power(int k);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    Valuation delta() const noexcept { return is_zero() ? kInfinity : den_.degree() - num_.degree(); }
    bool is_proper() const noexcept { return delta() >= 0; }
    bool is_strictly_proper() const noexcept { return delta() > 0; }
    Causality causality() const noexcept;

    /// Polynomial part; pi_plus() + pi_minus() == *this.
    Poly pi_plus() const;
    /// Strictly proper part.
    RatFun pi_minus() const;
    std::pair<Poly, RatFun> pi_split() const;
    /// Constant coefficient of the polynomial part.
    Scalar at_zero() const;
    /// Value at s = infinity of a proper function; throws std::domain_error if improper.
    Scalar at_infinity() const;

    RatFun in(Field field) const;
    RatFun inverse() const;  // throws std::domain_error on zero

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& rhs);
    RatFun& operator-=(const RatFun& rhs);
    RatFun& operator*=(const RatFun& rhs);
    RatFun& operator/=(const RatFun& rhs);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFun& f);

   private:
    RatFun(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

inline Valuation delta(const RatFun& f) noexcept { return f.delta(); }
inline Causality causality_class(const RatFun& f) noexcept { return f.causality(); }

}  // namespace infmod

#endif  // INFMOD_RATFUN_HPP
