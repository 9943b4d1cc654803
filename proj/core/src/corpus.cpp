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

#include "infmod/corpus.hpp"

#include <algorithm>

#include "infmod/hom.hpp"
#include "infmod/infinity.hpp"
#include "infmod/linalg.hpp"
#include "infmod/ratmat.hpp"

namespace infmod::corpus {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Poly poly_of_degree(Rng& rng, Field f, int degree) {
    std::vector<Scalar> c;
    for (int k = 0; k < degree; ++k) c.push_back(random_scalar(rng, f));
    c.push_back(random_nonzero_scalar(rng, f));
    return Poly(std::move(c));
}

}  // namespace

Scalar random_scalar(Rng& rng, Field f, int lo, int hi) { return Scalar(uniform(rng, lo, hi)).in(f); }

Scalar random_nonzero_scalar(Rng& rng, Field f, int lo, int hi) {
    while (true) {
        Scalar c = random_scalar(rng, f, lo, hi);
        if (!c.is_zero()) return c;
    }
}

Poly random_poly(Rng& rng, Field f, int max_degree) { return poly_of_degree(rng, f, uniform(rng, 0, max_degree)); }

RatFun random_proper(Rng& rng, Field f, int min_delta, int max_den_degree, double zero_prob) {
    if (chance(rng, zero_prob)) return {};
    const int den_degree = min_delta + uniform(rng, 0, max_den_degree);
    Poly den = poly_of_degree(rng, f, den_degree);
    Poly num = poly_of_degree(rng, f, uniform(rng, 0, den_degree - min_delta));
    return RatFun::normalized(std::move(num), std::move(den));
}

RatMatrix random_proper_matrix(Rng& rng, Field f, std::size_t rows, std::size_t cols, int min_delta) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_proper(rng, f, min_delta, 1);
    return m;
}

RatFun random_ratfun(Rng& rng, Field f, int max_degree) {
    if (chance(rng, 0.15)) return {};
    return RatFun::normalized(random_poly(rng, f, max_degree), random_poly(rng, f, max_degree));
}

RatMatrix random_transfer(Rng& rng, Field f, std::size_t rows, std::size_t cols, int max_degree) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_ratfun(rng, f, max_degree);
    return m;
}

ScalarMatrix random_invertible(Rng& rng, Field f, std::size_t n) {
    while (true) {
        ScalarMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng, f, -2, 2);
        if (!determinant(m).is_zero()) return m;
    }
}

PolyMatrix shift_block(std::size_t k) {
    PolyMatrix j(k, k);
    for (std::size_t i = 0; i < k; ++i) j(i, i) = Poly(-1);
    for (std::size_t i = 0; i + 1 < k; ++i) j(i, i + 1) = Poly::s();
    return j;
}

PolyMatrix block_diagonal(const std::vector<PolyMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    PolyMatrix m(n, n);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        m.set_block(at, at, b);
        at += b.rows();
    }
    return m;
}

namespace {

int max_entry_degree(const PolyMatrix& m) { return max_degree(m).value_or(0); }

PolyMatrix sparse_random(Rng& rng, Field f, std::size_t n, int max_degree) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!chance(rng, 0.35)) m(i, j) = random_poly(rng, f, max_degree);
    return m;
}

// Product of a few elementary operations with multipliers c s^e, e <= 1.
PolyMatrix random_unimodular(Rng& rng, Field f, std::size_t n) {
    PolyMatrix u = PolyMatrix::identity(n);
    if (n < 2) return u;
    const int ops = uniform(rng, 1, 2);
    for (int k = 0; k < ops; ++k) {
        auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
        if (j >= i) ++j;
        PolyMatrix e = PolyMatrix::identity(n);
        e(i, j) = Poly::monomial(uniform(rng, 0, 1), random_nonzero_scalar(rng, f));
        u = u * e;
    }
    return u;
}

PolyMatrix unimodular_sandwich(Rng& rng, Field f, std::size_t n) {
    std::vector<Poly> d;
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(chance(rng, 0.6) ? Poly(random_nonzero_scalar(rng, f)) : Poly::monomial(uniform(rng, 1, 2), random_nonzero_scalar(rng, f)));
    return random_unimodular(rng, f, n) * PolyMatrix::diagonal(d) * random_unimodular(rng, f, n);
}

PolyMatrix conjugated_blocks(Rng& rng, Field f, std::size_t n) {
    std::vector<PolyMatrix> blocks;
    std::size_t left = n;
    while (left > 0) {
        auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(left)));
        if (chance(rng, 0.25)) {
            blocks.push_back(PolyMatrix{{Poly::monomial(uniform(rng, 1, 2))}});
            k = 1;
        } else {
            blocks.push_back(shift_block(k));
        }
        left -= k;
    }
    return to_polynomial(random_invertible(rng, f, n)) * block_diagonal(blocks) * to_polynomial(random_invertible(rng, f, n));
}

}  // namespace

PolyMatrix random_nonsingular(Rng& rng, Field f, std::size_t n, int max_degree) {
    while (true) {
        PolyMatrix m;
        switch (uniform(rng, 0, 3)) {
            case 0:
            case 1: m = sparse_random(rng, f, n, max_degree); break;
            case 2: m = unimodular_sandwich(rng, f, n); break;
            default: m = conjugated_blocks(rng, f, n); break;
        }
        if (max_entry_degree(m) > max_degree) continue;
        if (!det(m).is_zero()) return m;
    }
}

Pencil random_pencil(Rng& rng, Field f, std::size_t n) {
    while (true) {
        Pencil p{ScalarMatrix(n, n), ScalarMatrix(n, n), {}, {}};
        const std::size_t a1_rank = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p.a0(i, j) = chance(rng, 0.4) ? Scalar() : random_scalar(rng, f);
        // A1 = U V with inner dimension a1_rank keeps rank(A1) <= a1_rank.
        ScalarMatrix u(n, a1_rank), v(a1_rank, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < a1_rank; ++k) {
                u(i, k) = random_scalar(rng, f, -1, 1);
                v(k, i) = random_scalar(rng, f, -1, 1);
            }
        p.a1 = u * v;
        const PolyMatrix a0 = to_polynomial(p.a0);
        const PolyMatrix a1 = to_polynomial(p.a1);
        p.l = a0 - a1 * Poly::s();
        p.dual = a0 * Poly::s() - a1;
        if (!det(p.l).is_zero()) return p;
    }
}

namespace {

// Block diagonal of J_k blocks followed by optional [s^k] blocks, k >= 2. The
// latter add no dimension to U^L but give s^-1 L positive exponents, which
// is where kernel inclusion and intertwining part ways.
struct BlockShape {
    PolyMatrix l;
    ScalarMatrix shift;      // N of the J part
    std::size_t j_size = 0;  // rows of the J part
};

BlockShape random_block_shape(Rng& rng, std::size_t max_blocks, std::size_t max_block) {
    std::vector<PolyMatrix> blocks;
    const int count = uniform(rng, 1, static_cast<int>(max_blocks));
    std::size_t total = 0;
    for (int i = 0; i < count && total < 4; ++i) {
        const auto k = std::min<std::size_t>(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_block))), 4 - total);
        blocks.push_back(shift_block(k));
        total += k;
    }
    BlockShape b;
    const PolyMatrix j_part = block_diagonal(blocks);
    b.j_size = j_part.rows();
    b.shift = to_scalar(j_part.map([](const Poly& p) { return Poly(p.coeff(1)); }));
    if (chance(rng, 0.6)) blocks.push_back(PolyMatrix{{Poly::monomial(uniform(rng, 2, 3))}});
    b.l = block_diagonal(blocks);
    return b;
}

// Proper D = diag(s^-c_j) with c_j >= 1 at least the degree of column j of m,
// so m D is proper and D strictly proper.
RatMatrix column_damping(const PolyMatrix& m) {
    RatMatrix d(m.cols(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        int c = 1;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) c = std::max(c, m(i, j).degree());
        d(j, j) = RatFun::s_power(-c);
    }
    return d;
}

// Theta = P1 W P^-1 maps Ker rho^L = P diag(A, I) K^n into Ker rho^L1 =
// P1 diag(A1, I) K^n1 iff diag(A1^-1, I) W diag(A, I) is proper, with
// s^-1 L = P diag(A, B) Q and likewise for L1.
RatMatrix random_kernel_preserving(Rng& rng, Field f, const PolyMatrix& l, const PolyMatrix& l1) {
    const auto fl = smith_at_infinity(shift_by(to_rational(l), -1));
    const auto fl1 = smith_at_infinity(shift_by(to_rational(l1), -1));
    const auto& alphas = fl.profile.alphas;
    const auto& gammas = fl1.profile.alphas;
    RatMatrix w(l1.rows(), l.rows());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) {
            int need = 0;
            if (i < gammas.size()) need = gammas[i] - (j < alphas.size() ? alphas[j] : 0);
            if (!chance(rng, 0.3)) w(i, j) = RatFun::s_power(-std::max(need, 0) - uniform(rng, 0, 1)) * RatFun(random_nonzero_scalar(rng, f));
        }
    return fl1.P * w * inverse(fl.P);
}

}  // namespace

IntertwinerSample random_block_intertwiner(Rng& rng, Field f, std::size_t max_blocks, std::size_t max_block) {
    const BlockShape src = random_block_shape(rng, max_blocks, max_block);
    const BlockShape dst = random_block_shape(rng, max_blocks, max_block);

    // Constant X on the J parts with X N = N1 X, hence X Lb = L1b X there.
    const std::size_t d = src.j_size, d1 = dst.j_size;
    ScalarMatrix system(d1 * d, d1 * d);
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t k = 0; k < d; ++k) system(a * d + c, a * d + k) += src.shift(k, c);
            for (std::size_t k = 0; k < d1; ++k) system(a * d + c, k * d + c) -= dst.shift(a, k);
        }
    const std::size_t n = src.l.rows(), n1 = dst.l.rows();
    ScalarMatrix x(n1, n);
    for (const auto& v : nullspace(system)) {
        Scalar c = random_scalar(rng, f);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d; ++j) x(i, j) += c * v(i * d + j, 0);
    }

    const ScalarMatrix a = random_invertible(rng, f, n), b = random_invertible(rng, f, n);
    const ScalarMatrix a1 = random_invertible(rng, f, n1), b1 = random_invertible(rng, f, n1);
    IntertwinerSample out;
    out.family = "shift-block";
    out.l = to_polynomial(a) * in_field(src.l, f) * to_polynomial(b);
    out.l1 = to_polynomial(a1) * in_field(dst.l, f) * to_polynomial(b1);
    out.theta = to_rational(a1 * x * inverse(a));
    out.theta1 = to_rational(inverse(b1) * x * b);
    if (chance(rng, 0.7)) {
        // Theta + L1 E s^-k with k >= both degrees keeps both sides proper.
        const int k = std::max(max_degree(out.l).value_or(0), max_degree(out.l1).value_or(0));
        const RatFun damp = RatFun::s_power(-std::max(k, 1));
        RatMatrix e = random_proper_matrix(rng, f, n1, n);
        out.theta += to_rational(out.l1) * e * damp;
        out.theta1 += e * to_rational(out.l) * damp;
    }
    // L1 D E keeps the kernel inclusion; L1^-1 (L1 D E) L = D E L is usually improper.
    out.raw_theta = out.theta + to_rational(out.l1) * column_damping(out.l1) * random_proper_matrix(rng, f, n1, n);
    return out;
}

IntertwinerSample random_general_intertwiner(Rng& rng, Field f, std::size_t max_n) {
    IntertwinerSample out;
    out.family = "general";
    auto draw = [&](std::size_t size) {
        PolyMatrix l = random_nonsingular(rng, f, size, 2);
        if (chance(rng, 0.5)) {
            std::vector<Poly> d;
            for (std::size_t i = 0; i < size; ++i) d.push_back(Poly::monomial(uniform(rng, 0, 2)));
            l = l * PolyMatrix::diagonal(d);
        }
        return l;
    };
    out.l = draw(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_n))));
    out.l1 = draw(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_n))));
    out.raw_theta = random_kernel_preserving(rng, f, out.l, out.l1);
    auto c = complete_intertwiner(out.raw_theta, out.l, out.l1);
    out.theta = std::move(c.theta_adjusted);
    out.theta1 = std::move(c.theta1);
    return out;
}

IntertwinerSample random_intertwiner(Rng& rng, Field f) {
    return chance(rng, 0.5) ? random_block_intertwiner(rng, f) : random_general_intertwiner(rng, f);
}

std::vector<PolyMatrix> matrix_zoo(Field f) {
    const Poly s = Poly::s();
    const Poly s2 = Poly::monomial(2);
    std::vector<PolyMatrix> zoo{
        PolyMatrix{{Poly(1)}},
        PolyMatrix{{s}},
        PolyMatrix::identity(2),
        PolyMatrix{{Poly(), Poly(1)}, {Poly(1), s}},
        PolyMatrix{{s2, Poly()}, {Poly(), Poly(1)}},
        PolyMatrix{{s, Poly(1)}, {Poly(), s}},
        shift_block(3),
        block_diagonal({shift_block(2), PolyMatrix{{Poly(1)}}}),
        block_diagonal({shift_block(2), shift_block(2)}),
        PolyMatrix::identity(3),
        PolyMatrix{{Poly(1), s2, Poly()}, {Poly(), Poly(1), s}, {Poly(), Poly(), Poly(1)}},
        PolyMatrix{{Poly(1), -s, Poly()}, {Poly(), Poly(1), Poly()}, {Poly(), Poly(), s}},
    };
    for (auto& m : zoo) m = in_field(m, f);
    return zoo;
}

}  // namespace infmod::corpus
