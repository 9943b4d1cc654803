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

// Gaussian elimination over a field: T is Scalar (the field K) or RatFun (K(s)).

#ifndef INFMOD_LINALG_HPP
#define INFMOD_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "infmod/errors.hpp"
#include "infmod/matrix.hpp"

namespace infmod {

namespace detail {

// Pivot preference; smaller is better. Keeps degree growth down over K(s).
inline int pivot_cost(const Scalar&) { return 0; }
inline int pivot_cost(const RatFun& f) { return f.num().degree() + f.den().degree(); }

}  // namespace detail

template <class T>
struct Echelon {
    Matrix<T> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivot columns are taken left to right.
template <class T>
Echelon<T> rref(Matrix<T> m) {
    Echelon<T> e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::optional<std::size_t> best;
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m(i, c) == T()) continue;
            if (!best || detail::pivot_cost(m(i, c)) < detail::pivot_cost(m(*best, c))) best = i;
        }
        if (!best) continue;
        m.swap_rows(r, *best);
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T()) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).pivots.size();
}

template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw ShapeError("determinant of non-square " + m.shape_string() + " matrix");
    T det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::optional<std::size_t> best;
        for (std::size_t i = c; i < n; ++i) {
            if (m(i, c) == T()) continue;
            if (!best || detail::pivot_cost(m(i, c)) < detail::pivot_cost(m(*best, c))) best = i;
        }
        if (!best) return T();
        if (*best != c) {
            m.swap_rows(c, *best);
            det = -det;
        }
        det *= m(c, c);
        const T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == T()) continue;
            const T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Inverse by Gauss-Jordan on [M | I]. Throws SingularMatrixError.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw ShapeError("inverse of non-square " + m.shape_string() + " matrix");
    const std::size_t n = m.rows();
    auto e = rref(hstack(m, Matrix<T>::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw SingularMatrixError("matrix is singular");
    return e.reduced.block(0, n, n, n);
}

/// Some X with A X = B, or nullopt if the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch " + a.shape_string() + " vs " + b.shape_string());
    auto e = rref(hstack(a, b));
    Matrix<T> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t c = e.pivots[r];
        if (c >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

/// Basis of {x : A x = 0}, one column per free variable.
template <class T>
std::vector<Matrix<T>> nullspace(const Matrix<T>& a) {
    auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Matrix<T>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Matrix<T> v(a.cols(), 1);
        v(f, 0) = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned k) {
    Matrix<T> r = Matrix<T>::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) r = r * m;
    return r;
}

}  // namespace infmod

#endif  // INFMOD_LINALG_HPP
