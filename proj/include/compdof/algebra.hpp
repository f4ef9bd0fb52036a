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

#ifndef COMPDOF_ALGEBRA_HPP
#define COMPDOF_ALGEBRA_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "compdof/channel.hpp"

namespace compdof
{

// Black-box multivariate rational map f: C^n -> C^m. The optional guard marks
// inputs where f is undefined (some required submatrix fails to invert);
// samplers skip such points.
struct RationalMap
{
    int n_inputs = 0;
    int n_outputs = 0;
    std::function<Eigen::VectorXcd(const Eigen::VectorXcd &)> eval;
    std::function<bool(const Eigen::VectorXcd &)> singular_guard; // empty = everywhere defined

    bool defined_at(const Eigen::VectorXcd &t) const { return !singular_guard || singular_guard(t); }
};

// Multi-index a in Z+^m; column a of a monomial matrix holds s^a = prod s_i^(a_i).
using ExponentVector = std::vector<int>;

constexpr double default_fd_step = 1e-6;
constexpr double default_rank_rel_tol = 1e-10;
constexpr int default_rank_trials = 3;

// Central-difference Jacobian (m x n): entry (i,j) = (f_i(t+d*e_j) - f_i(t-d*e_j)) / (2d)
// with d = step*max(1,|t_j|). Rational maps are holomorphic away from their
// singular locus, so a real step along each complex coordinate suffices.
Eigen::MatrixXcd numeric_jacobian(const RationalMap &f, const Eigen::VectorXcd &point,
                                  double step = default_fd_step);

// Number of singular values above rel_tol * sigma_max * max(rows, cols).
int numeric_rank(const Eigen::MatrixXcd &M, double rel_tol = default_rank_rel_tol);

// Max Jacobian rank over `trials` generic points (complex standard normal,
// seeded); a rank-deficient draw for a generically full-rank map is measure
// zero, so a handful of trials makes false negatives negligible.
int structural_rank(const RationalMap &f, int trials = default_rank_trials, std::uint64_t seed = 0);

// Jacobian criterion: f_1..f_m are algebraically independent over C iff the
// Jacobian has full row rank m at a generic point.
bool is_algebraically_independent(const RationalMap &f, int trials = default_rank_trials,
                                  std::uint64_t seed = 0);

// p x q matrix whose row r is (s(r)^{a_1}, ..., s(r)^{a_q}) with s(r) = f(t(r))
// at independently sampled generic points t(r).
Eigen::MatrixXcd monomial_matrix(const RationalMap &f, const std::vector<ExponentVector> &exponents,
                                 int p, std::uint64_t seed = 0);

// Square case p = q: full column rank iff no annihilating polynomial supported
// on `exponents` exists (generically). Columns are scaled to unit norm before
// the rank test; this preserves rank and tames the spread between low- and
// high-degree monomial columns.
bool monomial_matrix_full_rank(const RationalMap &f, const std::vector<ExponentVector> &exponents,
                               std::uint64_t seed = 0);

// Determinant of the (K+1)Mt x (K+1)Mt Jacobian submatrix (Mt = K-2) of the
// derived-coefficient rows g_0 = H(1,T_1)H(T_2,T_1)^-1, g_i = H(i,T_{i+1})H(T_{i+2},T_{i+1})^-1
// with respect to the variable blocks h_0 = (h_11..h_{Mt,Mt}), h_i = row i over
// columns T_{i+1}, evaluated at circulant_test_point(K). Assembled analytically
// from the differentials dg = dN * X^-1 - N X^-1 dX X^-1 so the check is not
// limited by finite-difference error; modulus 1 certifies generic full rank of
// the whole coefficient Jacobian.
std::complex<double> claim2_determinant(int K);

// The underlying square matrix (for inspection and cross-checks).
Eigen::MatrixXcd claim2_jacobian_submatrix(int K);

// 1-based positions of the variable blocks [h_0, h_1, ..., h_K] inside
// vec(H) in column-major order; lets callers carve the same submatrix out of a
// finite-difference Jacobian of the full K^2-variable map.
IndexSet claim2_variable_columns(int K);

} // namespace compdof

#endif
