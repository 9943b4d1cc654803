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

#ifndef INFMOD_POLY_HPP
#define INFMOD_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infmod/scalar.hpp"

namespace infmod {

/// Univariate polynomial over K in the indeterminate s, coefficients ascending.
/// Trailing zeros are never stored; the zero polynomial has no coefficients.
class Poly {
   public:
    /// degree() of the zero polynomial. Callers test is_zero() before doing
    /// arithmetic on degrees.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Poly() = default;
    Poly(Scalar c);  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    Poly(I c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<Scalar> coeffs);
    explicit Poly(std::vector<Scalar> coeffs);

    /// c * s^k
    static Poly monomial(int k, Scalar c = Scalar(1));
    static Poly s() { return monomial(1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return is_zero() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of s^k; zero beyond the degree.
    Scalar coeff(int k) const;
    const Scalar& leading() const { return coeffs_.back(); }
    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

    /// Order of vanishing at s = 0 (index of the lowest nonzero coefficient);
    /// kMinusInfinity is never returned, zero yields numeric_limits<int>::max().
    int order_at_zero() const noexcept;

    Scalar operator()(const Scalar& x) const;
    Poly in(Field field) const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Scalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    /// Euclidean division; throws std::domain_error on a zero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

   private:
    void trim();
    std::vector<Scalar> coeffs_;
};

}  // namespace infmod

#endif  // INFMOD_POLY_HPP
