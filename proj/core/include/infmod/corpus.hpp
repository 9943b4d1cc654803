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

// Seeded random instances for property tests and benchmarks. Every generator
// takes the random source from the caller, so a seed reproduces a corpus.

#ifndef INFMOD_CORPUS_HPP
#define INFMOD_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "infmod/matrix.hpp"

namespace infmod::corpus {

using Rng = std::mt19937_64;

Scalar random_scalar(Rng& rng, Field f, int lo = -3, int hi = 3);
Scalar random_nonzero_scalar(Rng& rng, Field f, int lo = -3, int hi = 3);
Poly random_poly(Rng& rng, Field f, int max_degree);

/// Proper function with valuation >= min_delta; zero with probability zero_prob.
RatFun random_proper(Rng& rng, Field f, int min_delta = 0, int max_den_degree = 2, double zero_prob = 0.25);
RatMatrix random_proper_matrix(Rng& rng, Field f, std::size_t rows, std::size_t cols, int min_delta = 0);
/// Rational function with numerator and denominator degrees <= max_degree.
RatFun random_ratfun(Rng& rng, Field f, int max_degree);
RatMatrix random_transfer(Rng& rng, Field f, std::size_t rows, std::size_t cols, int max_degree = 3);

/// Invertible constant matrix.
ScalarMatrix random_invertible(Rng& rng, Field f, std::size_t n);

/// J_k = s N_k - I with N_k the k x k upshift; U^{J_k} has the single divisor s^-k.
PolyMatrix shift_block(std::size_t k);
PolyMatrix block_diagonal(const std::vector<PolyMatrix>& blocks);

/// Nonsingular n x n polynomial matrix with entry degrees <= max_degree, drawn
/// from a mixture of sparse random, unimodular-sandwich, and conjugated
/// shift-block families.
PolyMatrix random_nonsingular(Rng& rng, Field f, std::size_t n, int max_degree = 3);

struct Pencil {
    ScalarMatrix a0, a1;
    PolyMatrix l;       // A0 - A1 s
    PolyMatrix dual;    // A0 s - A1
};
/// Nonsingular pencil; A1 is singular more often than not.
Pencil random_pencil(Rng& rng, Field f, std::size_t n);

struct IntertwinerSample {
    PolyMatrix l, l1;
    RatMatrix theta, theta1;
    RatMatrix raw_theta;  // satisfies the kernel inclusion, need not intertwine
    std::string family;
};

/// Shift-block family: L, L1 conjugated block diagonals of J_k blocks with a
/// shift-commuting constant map, plus a proper perturbation through L1.
IntertwinerSample random_block_intertwiner(Rng& rng, Field f, std::size_t max_blocks = 2, std::size_t max_block = 3);
/// General family: random L, L1 and a Theta built in the Smith coordinates to
/// satisfy the kernel inclusion, completed by complete_intertwiner.
IntertwinerSample random_general_intertwiner(Rng& rng, Field f, std::size_t max_n = 3);
IntertwinerSample random_intertwiner(Rng& rng, Field f);

/// Twelve fixed matrices with varied infinite structure.
std::vector<PolyMatrix> matrix_zoo(Field f);

}  // namespace infmod::corpus

#endif  // INFMOD_CORPUS_HPP
