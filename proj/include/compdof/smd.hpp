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

#ifndef COMPDOF_SMD_HPP
#define COMPDOF_SMD_HPP

#include <Eigen/Dense>

#include "compdof/channel.hpp"

namespace compdof
{

// 0/1 structure mask; entry (i,k) = 1 marks a position the corresponding beam
// matrix may use.
using SMatrix = Eigen::MatrixXi;

// A transmit/receive beam factorization. Pairs produced by smd_solve respect
// the masks exactly (masked-out entries identically zero) and carry the
// normalization u_kk = 1; pairs produced by inversion-based constructions
// (closed-form alignment) satisfy the U mask up to numerical leakage instead.
struct BeamPair
{
    Eigen::MatrixXcd V;
    Eigen::MatrixXcd U;
    SMatrix Vbar;
    SMatrix Ubar;
};

struct SmdOptions
{
    int steps = 10;            // initial number of continuation steps
    double tol = 1e-10;        // final residual bound, relative to ||A||_inf
    double newton_tol = 1e-12; // per-step Gauss-Newton residual target (relative)
    int max_newton_iters = 50; // per continuation step
    int max_total_steps = 1 << 10; // adaptive halving floor: smallest step is 1/1024
};

// Structure masks induced by the spiral cooperation windows: column k of Vbar
// marks the transmit set k..k+Mt-1, column k of Ubar the receive set
// k..k+Mr-1 (both wrapping).
std::pair<SMatrix, SMatrix> comp_smatrices(int K, int Mt, int Mr);

// Sufficient condition for a generic matrix to admit the masked factorization
// A = V U^T: both diagonals all ones and Vbar + Ubar^T free of zeros. Note
// this is sufficiency only; false does not prove that no factorization exists.
bool smd_feasible(const SMatrix &Vbar, const SMatrix &Ubar);

// Rank of the Jacobian of t -> vec(V U^T) over the free entries (all masked V
// entries plus masked off-diagonal U entries; u_kk is pinned to 1), evaluated
// at V = U = I. Equals K^2 exactly when the masks are feasible, which is what
// makes the continuation start point regular.
int smd_jacobian_rank_at_identity(const SMatrix &Vbar, const SMatrix &Ubar);

// Factor A = V U^T under the masks by homotopy continuation along
// A(s) = (1-s)I + sA from the exact solution V=U=I at s=0, running damped
// minimum-norm Gauss-Newton at each step. Throws numerical_error if the path
// cannot be continued even after refining the step to 1/max_total_steps.
BeamPair smd_solve(const Eigen::MatrixXcd &A, const SMatrix &Vbar, const SMatrix &Ubar,
                   const SmdOptions &opts = {});

// Interference-free unit-gain beams for Mt + Mr >= K + 1: factors H^-1 under
// the cooperation masks so that U^T H V = I (within 1e-8).
BeamPair full_dof_beams(const Eigen::MatrixXcd &H, int Mt, int Mr, const SmdOptions &opts = {});

} // namespace compdof

#endif
