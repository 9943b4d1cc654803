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

#include "infmod/infinity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

#include "infmod/ratmat.hpp"

namespace infmod {

std::vector<int> SigmaProfile::exponents() const {
    std::vector<int> e;
    e.reserve(rank());
    for (int a : alphas) e.push_back(-a);
    e.insert(e.end(), betas.begin(), betas.end());
    return e;
}

SigmaProfile SigmaProfile::from_exponents(std::vector<int> exponents) {
    std::ranges::sort(exponents);
    SigmaProfile p;
    for (int e : exponents) {
        if (e < 0)
            p.alphas.push_back(-e);
        else
            p.betas.push_back(e);
    }
    return p;
}

namespace {

struct Working {
    RatMatrix P, A, Q;  // invariant: P * A * Q == W
    RatMatrix P_inv, Q_inv;  // invariant: A == P_inv * W * Q_inv
    bool track = true;       // false: only A is updated

    // Each operation below acts on A and P_inv or Q_inv, and applies the inverse operation to P or Q.
    void swap_rows(std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        if (!track) return;
        P_inv.swap_rows(a, b);
        P.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        A.swap_cols(a, b);
        if (!track) return;
        Q_inv.swap_cols(a, b);
        Q.swap_rows(a, b);
    }
    // row k of A divided by the unit u
    void divide_row(std::size_t k, const RatFun& u) {
        const RatFun inv = u.inverse();
        for (std::size_t j = 0; j < A.cols(); ++j) A(k, j) *= inv;
        if (!track) return;
        for (std::size_t j = 0; j < P_inv.cols(); ++j) P_inv(k, j) *= inv;
        for (std::size_t i = 0; i < P.rows(); ++i) P(i, k) *= u;
    }
    // row i of A -= m * row k
    void subtract_row(std::size_t i, std::size_t k, const RatFun& m) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A(k, j).is_zero()) A(i, j) -= m * A(k, j);
        if (!track) return;
        for (std::size_t j = 0; j < P_inv.cols(); ++j)
            if (!P_inv(k, j).is_zero()) P_inv(i, j) -= m * P_inv(k, j);
        for (std::size_t r = 0; r < P.rows(); ++r)
            if (!P(r, i).is_zero()) P(r, k) += m * P(r, i);
    }
    // column j of A -= m * column k
    void subtract_col(std::size_t j, std::size_t k, const RatFun& m) {
        for (std::size_t i = 0; i < A.rows(); ++i)
            if (!A(i, k).is_zero()) A(i, j) -= m * A(i, k);
        if (!track) return;
        for (std::size_t i = 0; i < Q_inv.rows(); ++i)
            if (!Q_inv(i, k).is_zero()) Q_inv(i, j) -= m * Q_inv(i, k);
        for (std::size_t c = 0; c < Q.cols(); ++c)
            if (!Q(j, c).is_zero()) Q(k, c) += m * Q(j, c);
    }
};

std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const RatMatrix& a, std::size_t k, PivotOrder order) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Valuation best_v = kInfinity;
    auto consider = [&](std::size_t i, std::size_t j) {
        Valuation v = a(i, j).delta();
        if (v < best_v) {
            best_v = v;
            best = {i, j};
        }
    };
    if (order == PivotOrder::row_major) {
        for (std::size_t i = k; i < a.rows(); ++i)
            for (std::size_t j = k; j < a.cols(); ++j) consider(i, j);
    } else {
        for (std::size_t j = k; j < a.cols(); ++j)
            for (std::size_t i = k; i < a.rows(); ++i) consider(i, j);
    }
    return best;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Matrix<T> s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

// Applies `visit` to every k x k minor of m for k = 1, 2, ... and records the
// least `score` per order, stopping at the first order where all minors vanish.
// Returns the minima v_1, ..., v_rank.
template <class T, class Score>
std::vector<int> minimal_minor_scores(const Matrix<T>& m, Score score) {
    std::vector<int> v;
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= top; ++k) {
        int best = std::numeric_limits<int>::max();
        bool any = false;
        for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                RatFun d = determinant(submatrix(m, rows, cols).map([](const T& x) { return RatFun(x); }));
                if (d.is_zero()) return;
                any = true;
                best = std::min(best, score(d));
            });
        });
        if (!any) break;
        v.push_back(best);
    }
    return v;
}

// DVR elimination. At step k the entry of least valuation d in the trailing
// block A[k:, k:] is moved to (k, k) and its row divided by its unit part, so
// the pivot is exactly s^-d. Every other entry of the block has valuation >= d,
// so the multipliers entry * s^d used to clear row k and column k are proper,
// and the updated block entries keep valuation >= d. Each step shrinks the
// trailing block by one row and one column; the loop ends when the block is
// empty or identically zero. A final symmetric permutation sorts the diagonal
// by s-exponent. Returns the diagonal exponents.
std::vector<int> eliminate(Working& st, PivotOrder order) {
    const std::size_t m = st.A.rows();
    const std::size_t r = st.A.cols();
    std::vector<int> exps;

    for (std::size_t k = 0; k < std::min(m, r); ++k) {
        auto pivot = find_pivot(st.A, k, order);
        if (!pivot) break;
        st.swap_rows(k, pivot->first);
        st.swap_cols(k, pivot->second);

        const Valuation d = st.A(k, k).delta();
        const RatFun unit = st.A(k, k) * RatFun::s_power(d);
        if (!(unit == RatFun(1))) st.divide_row(k, unit);

        const RatFun lift = RatFun::s_power(d);  // 1 / pivot
        for (std::size_t i = k + 1; i < m; ++i)
            if (!st.A(i, k).is_zero()) st.subtract_row(i, k, st.A(i, k) * lift);
        for (std::size_t j = k + 1; j < r; ++j)
            if (!st.A(k, j).is_zero()) st.subtract_col(j, k, st.A(k, j) * lift);
        exps.push_back(-d);
    }

    // Selection sort on the diagonal, ascending exponent.
    for (std::size_t k = 0; k < exps.size(); ++k) {
        auto it = std::min_element(exps.begin() + static_cast<std::ptrdiff_t>(k), exps.end());
        auto j = static_cast<std::size_t>(it - exps.begin());
        if (j == k) continue;
        std::swap(exps[k], exps[j]);
        st.swap_rows(k, j);
        st.swap_cols(k, j);
    }
    return exps;
}

}  // namespace

SigmaFactorization smith_at_infinity(const RatMatrix& w, PivotOrder order) {
    const std::size_t m = w.rows();
    const std::size_t r = w.cols();
    Working st{RatMatrix::identity(m), w, RatMatrix::identity(r), RatMatrix::identity(m), RatMatrix::identity(r)};
    const std::vector<int> exps = eliminate(st, order);

    SigmaFactorization f;
    f.P = std::move(st.P);
    f.Sigma = std::move(st.A);
    f.Q = std::move(st.Q);
    f.P_inv = std::move(st.P_inv);
    f.Q_inv = std::move(st.Q_inv);
    f.profile = SigmaProfile::from_exponents(exps);
    return f;
}

SigmaProfile profile_at_infinity(const RatMatrix& w, PivotOrder order) {
    Working st{{}, w, {}, {}, {}, false};
    return SigmaProfile::from_exponents(eliminate(st, order));
}

bool verify_factorization(const SigmaFactorization& f, const RatMatrix& w) {
    if (f.P.rows() != w.rows() || f.Q.cols() != w.cols()) return false;
    if (!is_bicausal(f.P) || !is_bicausal(f.Q)) return false;
    auto e = f.profile.exponents();
    for (std::size_t i = 0; i < f.Sigma.rows(); ++i)
        for (std::size_t j = 0; j < f.Sigma.cols(); ++j) {
            RatFun expected = (i == j && i < e.size()) ? RatFun::s_power(e[i]) : RatFun();
            if (!(f.Sigma(i, j) == expected)) return false;
        }
    return f.P * f.Sigma * f.Q == w;
}

SigmaProfile minor_valuation_profile(const RatMatrix& w) {
    auto v = minimal_minor_scores(w, [](const RatFun& d) { return d.delta(); });
    std::vector<int> exps;
    int prev = 0;
    for (int vk : v) {
        exps.push_back(-(vk - prev));
        prev = vk;
    }
    return SigmaProfile::from_exponents(std::move(exps));
}

void require_nonsingular(const PolyMatrix& l, const char* what) {
    if (!l.is_square()) throw ShapeError(std::string(what) + " must be square, got " + l.shape_string());
    if (det(l).is_zero()) throw SingularMatrixError(std::string(what) + " is singular");
}

std::vector<int> infinite_elementary_divisors(const PolyMatrix& l) {
    require_nonsingular(l);
    return smith_at_infinity(shift_by(to_rational(l), -1)).profile.alphas;
}

int dim_UL(const PolyMatrix& l) {
    auto alphas = infinite_elementary_divisors(l);
    return std::accumulate(alphas.begin(), alphas.end(), 0);
}

std::vector<int> finite_structure_at_zero(const PolyMatrix& m) {
    require_nonsingular(m, "M");
    auto w = minimal_minor_scores(m, [](const RatFun& d) { return d.num().order_at_zero(); });
    std::vector<int> c;
    int prev = 0;
    for (int wk : w) {
        if (wk - prev > 0) c.push_back(wk - prev);
        prev = wk;
    }
    std::ranges::sort(c, std::greater<>());
    return c;
}

}  // namespace infmod
