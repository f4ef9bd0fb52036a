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

#ifndef COMPDOF_DERIVED_HPP
#define COMPDOF_DERIVED_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "compdof/algebra.hpp"
#include "compdof/channel.hpp"

namespace compdof
{

enum class DerivedScheme
{
    KM2,    // transmit cooperation Mt = K-2, inverse-based transform
    GENERAL // any 2 <= Mt <= K-1, cofactor zero-forcing beams
};

enum class Triviality
{
    FREE,
    FORCED_ZERO,
    FORCED_ONE
};

// A transmit beam with explicit antenna support. Coefficients are the
// cofactors of the bordered matrix [H(nulls, support); a], so the gain this
// beam produces at any probe row i is det H(nulls + {i}, support) and the gain
// at every null row is exactly zero.
struct ZFBeam
{
    IndexSet support;
    Eigen::VectorXcd coefficients;
    bool degenerate = false; // all cofactors vanished (H degenerate on the window)
};

// The cellular-uplink-like channel obtained after transmit-side zero forcing:
// cell j radiates streams m = 1..streams(j) and receiver i hears stream (j,m)
// through g_{ij}^{(m)}(l). Coefficients whose value is pinned by the
// construction carry a FORCED_* mask entry.
struct DerivedChannel
{
    DerivedScheme scheme = DerivedScheme::KM2;
    int K = 0;
    int Mt = 0;
    int L = 0;

    int streams(int j) const; // 1-based cell index

    // g_{ij}^{(m)}(l); all indices 1-based.
    std::complex<double> g(int i, int j, int m, int l) const;

    // Diagonal of the L x L generator matrix G_{ij}^{(m)}.
    Eigen::VectorXcd coefficient_vector(int i, int j, int m) const;

    Triviality mask(int i, int j, int m) const;

    // storage: coeffs[m-1][l-1](i-1, j-1); masks[m-1](i-1, j-1)
    std::vector<std::vector<Eigen::MatrixXcd>> coeffs;
    std::vector<Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>> masks;
};

// Mt = K-2 transform: cell k precodes with V_k = H(T_{k+1}, T_k)^-1, which
// pins the gains into receivers T_{k+1} to exact units (stream m surfaces at
// receiver k+m with gain 1) and leaves exactly two free rows per cell: the
// signal row g_{kk}^{(m)} and the single interference row g_{k-1,k}^{(m)}.
DerivedChannel zf_transform_km2(const ChannelRealization &h);

// Cofactor beam: |support| = |nulls| + 1; the beam lies in the null space of
// H(nulls, support) by the Laplace cofactor identity.
ZFBeam zf_beam_from_nulls(const Eigen::MatrixXcd &H, const IndexSet &support, const IndexSet &nulls);

// General transform for 2 <= Mt <= K-1: cells j >= Mt send one stream on T_j
// nulling receivers 1..Mt-1; cells j < Mt send two streams on the first/last
// Mt-1 antennas of T_j, each nulling {1..Mt-1} minus {j}. Receivers below Mt
// end up interference-free.
DerivedChannel zf_transform_general(const ChannelRealization &h, int Mt);

// True iff every FORCED coefficient matches its forced value within tol on
// every parallel channel.
bool verify_triviality(const DerivedChannel &dc, double tol = 1e-10);

// The (K+1)(K-2) coefficient functions of the KM2 construction (signal block
// g_11 and all interference blocks g_{i,i+1}) as a map of the K^2 channel
// variables (vec(H), column-major). Their algebraic independence is what makes
// the asymptotic alignment on the derived channel carry back to the original.
RationalMap km2_coefficient_map(int K);

// Number of interference generators of the general construction:
// (K-Mt+1)(K+Mt-2).
int general_generator_count(int K, int Mt);

// The general-scheme independence family for one receiver: its signal
// coefficients (two for receiver < Mt, one otherwise) together with all
// interference coefficients, as a map of vec(H). Output ordering: signal
// coefficients first, then two-stream interference (j = 1..Mt-1, i = Mt..K,
// m = 1,2), then single-stream interference (j = Mt..K, i = Mt..K, i != j).
RationalMap general_claim_map(int K, int Mt, int receiver);

} // namespace compdof

#endif
