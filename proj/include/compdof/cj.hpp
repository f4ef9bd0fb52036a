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

#ifndef COMPDOF_CJ_HPP
#define COMPDOF_CJ_HPP

#include <vector>

#include <Eigen/Dense>

#include "compdof/algebra.hpp"
#include "compdof/derived.hpp"
#include "compdof/rational.hpp"

namespace compdof
{

// Asymptotic-alignment basis: columns are the entrywise products
// (prod_i G_i^{a_i}) * 1 over all exponent vectors of total degree <= n.
struct CJBasis
{
    std::vector<Eigen::VectorXcd> generators; // diagonals of the N generator matrices
    int order = 0;
    std::vector<ExponentVector> exponents;
    Eigen::MatrixXcd basis; // L x C(N+n, n)
};

struct DecodabilityReport
{
    struct Entry
    {
        int rows = 0;
        int cols = 0;
        int rank = 0;
        bool pass = false;
    };
    std::vector<Entry> receivers;
    int L = 0;
    bool conditioning_warning = false; // L > 512: rank decisions get delicate
    bool pass = false;                 // all receivers decodable
};

// All exponent vectors a in Z+^N with total degree <= n, in graded
// lexicographic order (degree ascending; within a degree, lexicographically
// descending, so (1,0) precedes (0,1)). Length C(N+n, n).
std::vector<ExponentVector> enumerate_exponents(int N, int n);

// Order-n CJ matrix of the given diagonal generators (passed as diagonals).
// Column order follows enumerate_exponents; each column is built by ascending
// generator index with repeated entrywise multiplication.
Eigen::MatrixXcd cj_matrix(const std::vector<Eigen::VectorXcd> &generators, int n);

CJBasis make_cj_basis(const std::vector<Eigen::VectorXcd> &generators, int n);

// Parallel channels the KM2 scheme needs at alignment order n:
// Mt*C(KMt+n, n) + C(KMt+n+1, n+1) with Mt = K-2.
int required_parallel_channels_km2(int K, int n);

// Parallel channels the general scheme needs: C(N+n, n) + C(N+n+1, n+1) with
// N = (K-Mt+1)(K+Mt-2).
int required_parallel_channels_general(int K, int Mt, int n);

// Per-receiver decoding matrices for the KM2 scheme: the transmit basis V is
// the order-n CJ matrix of the K*Mt interference generators {G_{i,i+1}^{(m)}}
// (ordered i = 1..K major, m minor), INT the order-(n+1) CJ matrix, and
// M_k = [G_kk^{(1)}V ... G_kk^{(Mt)}V INT], square L x L.
std::vector<Eigen::MatrixXcd> build_mk_km2(const DerivedChannel &dc, int n);

// Per-receiver decoding matrices for the general scheme. Generator order:
// two-stream interference (j = 1..Mt-1 major, i = Mt..K, m = 1,2), then
// single-stream interference (j = Mt..K major, i = Mt..K, i != j).
// Receivers k < Mt get [G_kk^{(1)}V G_kk^{(2)}V]; receivers k >= Mt get
// [G_kk^{(1)}V INT].
std::vector<Eigen::MatrixXcd> build_mk_general(const DerivedChannel &dc, int n);

// Numeric full-column-rank verdict for each decoding matrix. Rows and columns
// are equilibrated (alternating unit-norm sweeps) before the SVD; rank is
// invariant under nonsingular diagonal scaling, and the equilibration removes
// the huge dynamic range between low- and high-degree product columns that
// would otherwise push full-rank instances below any fixed threshold.
DecodabilityReport verify_decodability(const std::vector<Eigen::MatrixXcd> &Mks,
                                       double rel_tol = 1e-9);

// Exact achievable DoF at alignment order n:
//   KM2:     K*Mt / (Mt + 1 + K*Mt/(n+1))      (Mt = K-2)
//   GENERAL: (K+Mt-1) / (2 + N/(n+1))
Rational achievable_dof(int K, int Mt, DerivedScheme scheme, int n);

// The n -> infinity limit: K*Mt/(Mt+1) resp. (K+Mt-1)/2.
Rational achievable_dof_limit(int K, int Mt, DerivedScheme scheme);

} // namespace compdof

#endif
