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

#include "infmod/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace infmod {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1U) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return r;
}

std::uint32_t check_same(std::uint32_t p, std::uint32_t q) {
    if (p != q) throw std::domain_error("scalars from different prime fields GF(" + std::to_string(p) + ") and GF(" + std::to_string(q) + ")");
    return p;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= kMaxModulus || !is_prime(p)) throw std::invalid_argument("GF modulus must be a prime below 2^31, got " + std::to_string(p));
    return Field(p);
}

std::string Field::tag() const { return is_rational() ? std::string("Q") : "GF:" + std::to_string(modulus_); }

Field Field::parse_tag(std::string_view tag) {
    if (tag == "Q") return rationals();
    if (tag.starts_with("GF:")) {
        auto digits = tag.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || p >= kMaxModulus)
            throw std::invalid_argument("bad field tag '" + std::string(tag) + "'");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("bad field tag '" + std::string(tag) + "', expected Q or GF:<p>");
}

Scalar::Residue Scalar::reduce(const mpq_class& q, std::uint32_t modulus) {
    auto mod = [modulus](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), modulus);
        return static_cast<std::uint32_t>(r.get_ui());
    };
    std::uint32_t den = mod(q.get_den());
    if (den == 0) throw std::domain_error("rational " + q.get_str() + " has no image in GF(" + std::to_string(modulus) + ")");
    return {mul_mod(mod(q.get_num()), pow_mod(den, modulus - 2, modulus), modulus), modulus};
}

Scalar Scalar::residue(std::int64_t value, std::uint32_t modulus) {
    Field::prime(modulus);
    auto r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    return Scalar(Residue{static_cast<std::uint32_t>(r), modulus});
}

Scalar Scalar::parse(std::string_view text, Field field) {
    std::string s(text);
    auto valid = [](std::string_view part) {
        if (part.starts_with('-') || part.starts_with('+')) part.remove_prefix(1);
        if (part.empty()) return false;
        for (char c : part)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid(num) || !valid(den) || den.starts_with('-') || den.starts_with('+'))
        throw std::invalid_argument("malformed coefficient '" + s + "'");
    mpz_class n(std::string(num.starts_with('+') ? num.substr(1) : num));
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in coefficient '" + s + "'");
    try {
        return Scalar(mpq_class(n, d)).in(field);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

Scalar Scalar::in(Field field) const {
    if (field.is_rational()) {
        if (std::holds_alternative<Residue>(value_)) throw std::domain_error("cannot lift a GF residue to Q");
        return *this;
    }
    if (const auto* r = std::get_if<Residue>(&value_)) {
        check_same(r->modulus, field.modulus());
        return *this;
    }
    return Scalar(reduce(std::get<mpq_class>(value_), field.modulus()));
}

Field Scalar::field() const noexcept {
    if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
    return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (const auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
    mpq_class q = 1 / std::get<mpq_class>(value_);
    return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    auto* a = std::get_if<Residue>(&value_);
    auto* b = std::get_if<Residue>(&rhs.value_);
    if (!a && !b) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
        return *this;
    }
    std::uint32_t p = a && b ? check_same(a->modulus, b->modulus) : (a ? a->modulus : b->modulus);
    Residue x = a ? *a : reduce(std::get<mpq_class>(value_), p);
    Residue y = b ? *b : reduce(std::get<mpq_class>(rhs.value_), p);
    value_ = Residue{static_cast<std::uint32_t>((std::uint64_t{x.value} + y.value) % p), p};
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    auto* a = std::get_if<Residue>(&value_);
    auto* b = std::get_if<Residue>(&rhs.value_);
    if (!a && !b) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
        return *this;
    }
    std::uint32_t p = a && b ? check_same(a->modulus, b->modulus) : (a ? a->modulus : b->modulus);
    Residue x = a ? *a : reduce(std::get<mpq_class>(value_), p);
    Residue y = b ? *b : reduce(std::get<mpq_class>(rhs.value_), p);
    value_ = Residue{mul_mod(x.value, y.value, p), p};
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    const auto* a = std::get_if<Scalar::Residue>(&lhs.value_);
    const auto* b = std::get_if<Scalar::Residue>(&rhs.value_);
    if (!a && !b) return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
    std::uint32_t p = a && b ? check_same(a->modulus, b->modulus) : (a ? a->modulus : b->modulus);
    auto x = a ? *a : Scalar::reduce(std::get<mpq_class>(lhs.value_), p);
    auto y = b ? *b : Scalar::reduce(std::get<mpq_class>(rhs.value_), p);
    return x.value == y.value;
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace infmod
