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

#ifndef INFMOD_SCALAR_HPP
#define INFMOD_SCALAR_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace infmod {

/// Descriptor of the base field K: the rationals (modulus 0) or GF(p).
class Field {
   public:
    constexpr Field() noexcept = default;

    static constexpr Field rationals() noexcept { return Field(); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    constexpr bool is_rational() const noexcept { return modulus_ == 0; }
    constexpr std::uint32_t modulus() const noexcept { return modulus_; }

    /// "Q" or "GF:<p>".
    std::string tag() const;
    /// Inverse of tag(); throws std::invalid_argument.
    static Field parse_tag(std::string_view tag);

    friend constexpr bool operator==(Field, Field) noexcept = default;

   private:
    friend class Scalar;
    constexpr explicit Field(std::uint32_t p) noexcept : modulus_(p) {}
    std::uint32_t modulus_ = 0;
};

/// Exact element of K.
///
/// A scalar is either an exact rational or a residue modulo a prime. Rationals
/// act as literals: combining one with a residue maps it through Z_(p) -> GF(p)
/// first, so generic code may freely write `Scalar(0)` or `Scalar(-1)` whatever
/// the field. Combining residues of different moduli throws std::domain_error,
/// as does reducing a rational whose denominator is divisible by p.
class Scalar {
   public:
    Scalar() = default;
    template <std::integral I>
    Scalar(I v) : value_(mpq_class(static_cast<long>(v))) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

    static Scalar residue(std::int64_t value, std::uint32_t modulus);
    /// Parses "a" or "a/b" (optional sign) into `field`; throws std::invalid_argument.
    static Scalar parse(std::string_view text, Field field = Field::rationals());

    /// The same value mapped into `field` (identity when already there).
    Scalar in(Field field) const;
    Field field() const noexcept;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// Canonical decimal text: "a" or "a/b" for rationals, "r" with 0 <= r < p for residues.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& x);

   private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
    };

    explicit Scalar(Residue r) : value_(r) {}
    static Residue reduce(const mpq_class& q, std::uint32_t modulus);

    std::variant<mpq_class, Residue> value_;
};

}  // namespace infmod

#endif  // INFMOD_SCALAR_HPP
