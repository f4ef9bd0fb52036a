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

#ifndef COMPDOF_CHANNEL_HPP
#define COMPDOF_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace compdof
{

// Ordered, duplicate-free list of 1-based user indices. All public interfaces
// use 1-based indices; conversion to Eigen's 0-based indexing happens at the
// lowest level only.
using IndexSet = std::vector<int>;

// Soft limits; callers asking for more get std::invalid_argument / resource_error.
constexpr int max_users = 16;
constexpr int max_parallel = 4096;

// Spiral window of m user indices starting at k and moving up (wrapping into
// 1..K): up_set(2,3,4) = {2,3,4}, up_set(3,3,4) = {3,4,1}.
IndexSet up_set(int k, int m, int K);

// Spiral window of m user indices starting at k and moving down:
// down_set(2,3,4) = {2,1,4}.
IndexSet down_set(int k, int m, int K);

// Complement of `s` in {1..K}, ascending.
IndexSet complement(const IndexSet &s, int K);

// K users; message k is jointly encoded by transmitters k..k+Mt-1 and jointly
// decoded by receivers k..k+Mr-1 (both windows wrap).
struct CooperationPattern
{
    int K = 0;
    int Mt = 1;
    int Mr = 1;
    int L = 1; // number of parallel channel uses carried alongside

    CooperationPattern() = default;
    CooperationPattern(int K, int Mt, int Mr, int L = 1);

    IndexSet transmit_set(int k) const; // k -> up_set(k, Mt, K)
    IndexSet receive_set(int k) const;  // k -> up_set(k, Mr, K)
};

// One i.i.d. CN(0,1) channel draw: slice(l) is the K x K matrix of
// coefficients h_ij for parallel channel l (1-based l).
struct ChannelRealization
{
    int K = 0;
    int L = 0;
    std::uint64_t seed = 0;
    std::vector<Eigen::MatrixXcd> slices;

    const Eigen::MatrixXcd &slice(int l) const; // 1-based
};

// Draw a K-user channel with L parallel uses from the pinned generator.
// Fill order is: for each l, for each row i, for each column j.
ChannelRealization sample_channel(int K, int L, std::uint64_t seed);

// Submatrix H(rows, cols) preserving the given index order (1-based indices).
Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd &H, const IndexSet &rows, const IndexSet &cols);

// The 0/1 circulant with ones exactly at (i,i) and (i,i-1 mod K); used as the
// distinguished evaluation point for the Jacobian determinant check.
// K = 4 gives rows [1 0 0 1; 1 1 0 0; 0 1 1 0; 0 0 1 1].
Eigen::MatrixXcd circulant_test_point(int K);

} // namespace compdof

#endif
