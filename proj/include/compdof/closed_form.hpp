// compdof - degrees-of-freedom toolkit for interference channels with cooperating transmit/receive sets
// Copyright 2026 compdof contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPDOF_CLOSED_FORM_HPP
#define COMPDOF_CLOSED_FORM_HPP

#include <vector>

#include <Eigen/Dense>

#include "compdof/channel.hpp"
#include "compdof/smd.hpp"

namespace compdof
{

// The chain of propagation matrices for the Mt = K-1, Mr = 2 pattern. Beam k+1
// is obtained from beam k through B_k, and closing the loop constrains v_1 to
// be an eigenvector of the full product.
struct AlignmentChain
{
    std::vector<Eigen::MatrixXcd> B; // B[k-1] = H(T_{k+2},T_{k+1})^-1 H(T_{k+2},T_k), (K-1)x(K-1)
    Eigen::MatrixXcd product;        // B_K * B_{K-1} * ... * B_1
    int eigenvector_index = 0;       // set by closed_form_beams (1-based), 0 = not chosen yet
};

// Build all B_k and their ordered product. Throws numerical_error if some
// H(T_{k+2}, T_{k+1}) is singular (never the case for generic H).
AlignmentChain alignment_matrices(const Eigen::MatrixXcd &H);

// Closed-form aligned beams for Mt = K-1, Mr = 2:
//   1. build the chain and its product P = B_K...B_1;
//   2. take v_1 = unit-norm eigenvector `eig_index` of P (eigenvalues ordered
//      by descending magnitude, ties by ascending angle);
//   3. propagate v_{k+1} = B_k v_k for k = 1..K-1;
//   4. place V(T_k, k) = v_k, zeros elsewhere;
//   5. U = (HV)^-T.
// The result gives U^T H V = I; U concentrates on the two-band pattern
// (u_ik != 0 only for i in {k, k+1 mod K}) up to numerical leakage.
BeamPair closed_form_beams(const Eigen::MatrixXcd &H, int eig_index = 1);

// Alignment conditions on an effective matrix M (typically HV): for every k
// the interference columns seen by receive set R_k collapse to Mr-1 dimensions,
//   rank M(R_k, all columns but k) = Mr - 1,
// together with the equivalent row form
//   rank M(all rows but k-1, (k-1) down Mr) = Mr - 1.
// The two are equivalent by the nullity theorem (complementary submatrices of
// M and M^-1 have equal nullity); both are checked.
bool verify_alignment_conditions(const Eigen::MatrixXcd &M, const CooperationPattern &pattern,
                                 double rel_tol = 1e-10);

} // namespace compdof

#endif
