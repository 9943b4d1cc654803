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

// Homomorphisms U^L -> U^L1 of modules over the proper rational functions.
//
// Every such map is induced by a pair of proper matrices (Theta, Theta1) with
// Theta L = L1 Theta1, acting on representatives by u -> L1 pi_plus(L1^-1 Theta u).

#ifndef INFMOD_HOM_HPP
#define INFMOD_HOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "infmod/matrix.hpp"
#include "infmod/umodule.hpp"

namespace infmod {

/// Proper Theta (n1 x n) and Theta1 (n1 x n) with Theta L = L1 Theta1.
class Intertwiner {
   public:
    /// Throws ShapeError, ImproperError, or PreconditionError when the relation fails.
    Intertwiner(UModule source, UModule target, RatMatrix theta, RatMatrix theta1);
    /// Takes Theta1 = L1^-1 Theta L; throws ImproperError when that is not proper.
    static Intertwiner from_theta(UModule source, UModule target, RatMatrix theta);

    const UModule& source() const noexcept { return source_; }
    const UModule& target() const noexcept { return target_; }
    const RatMatrix& theta() const noexcept { return theta_; }
    const RatMatrix& theta1() const noexcept { return theta1_; }

   private:
    UModule source_;
    UModule target_;
    RatMatrix theta_;
    RatMatrix theta1_;
};

/// Both matrices proper and Theta L == L1 Theta1.
bool check_intertwining(const RatMatrix& theta, const RatMatrix& theta1, const PolyMatrix& l, const PolyMatrix& l1);
/// pi_plus(L1^-1 Theta) == pi_plus(Theta1 L^-1).
bool alt_condition_check(const RatMatrix& theta, const RatMatrix& theta1, const PolyMatrix& l, const PolyMatrix& l1);

UElement apply_hom(const Intertwiner& iw, const UElement& u);
/// Column j holds the coordinates in b1 of the image of the j-th element of b.
ScalarMatrix hom_matrix(const Intertwiner& iw, const UBasis& b, const UBasis& b1);

/// Theta maps the kernel of rho^L into the kernel of rho^L1.
bool kernel_inclusion_check(const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1);

struct CompletionResult {
    RatMatrix psi;             // strictly proper, L1 psi proper
    RatMatrix theta1;          // proper
    RatMatrix theta_adjusted;  // Theta + L1 psi, with theta_adjusted L = L1 theta1
};

/// Repairs a Theta satisfying the kernel inclusion into an intertwining pair.
/// Throws PreconditionError when the inclusion fails.
CompletionResult complete_intertwiner(const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1);
bool verify_completion(const CompletionResult& c, const RatMatrix& theta, const PolyMatrix& l, const PolyMatrix& l1);

/// (Theta1^T, Theta^T) between L1^T and L^T: the dual map U^{L1^T} -> U^{L^T}.
Intertwiner dual_intertwiner(const Intertwiner& iw);

struct CoprimeCertificate {
    bool verdict = false;
    std::optional<RatMatrix> C;  // proper, with X C + Y D = I
    std::optional<RatMatrix> D;
    std::string reason;
};

/// Decides whether X C + Y D = I has a proper solution (C, D).
CoprimeCertificate left_coprime(const RatMatrix& x, const RatMatrix& y);

bool is_surjective(const Intertwiner& iw);
bool is_injective(const Intertwiner& iw);

/// Existence of a surjection / injection U^L -> U^L1 from the infinite
/// elementary divisor exponents alpha (of L) and gamma (of L1), both descending.
bool exists_surjective(const std::vector<int>& alphas, const std::vector<int>& gammas);
bool exists_injective(const std::vector<int>& alphas, const std::vector<int>& gammas);
bool exists_surjective(const PolyMatrix& l, const PolyMatrix& l1);
bool exists_injective(const PolyMatrix& l, const PolyMatrix& l1);

/// Basis of {M : M S = S1 M} with S, S1 the shift matrices of b and b1.
std::vector<ScalarMatrix> hom_space_oracle(const UBasis& b, const UBasis& b1);

}  // namespace infmod

#endif  // INFMOD_HOM_HPP
