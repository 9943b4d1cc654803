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

#include "infmod/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace infmod {

Poly::Poly(Scalar c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int k, Scalar c) {
    if (k < 0) throw std::invalid_argument("negative monomial exponent");
    if (c.is_zero()) return {};
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

int Poly::order_at_zero() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return std::numeric_limits<int>::max();
}

Scalar Poly::operator()(const Scalar& x) const {
    Scalar r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::in(Field field) const {
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.in(field));
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this * leading().inverse();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    return std::ranges::equal(a.coeffs_, b.coeffs_);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Scalar> rem(a.coeffs_);
    std::vector<Scalar> quot(rem.size() - b.coeffs_.size() + 1);
    const Scalar lead_inv = b.leading().inverse();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        Scalar q = rem[k + db] * lead_inv;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
        quot[k] = std::move(q);
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs.front() == '-';
        if (negative) cs.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        bool unit = cs == "1";
        if (i == 0 || !unit) out += cs.find('/') != std::string::npos && i > 0 ? "(" + cs + ")" : cs;
        if (i > 0) out += (i == 0 || !unit ? "*" : "") + std::string("s") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace infmod
