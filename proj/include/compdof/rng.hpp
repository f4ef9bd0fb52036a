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

#ifndef COMPDOF_RNG_HPP
#define COMPDOF_RNG_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace compdof
{

// All randomness in the library flows through this one pinned generator so
// that every sampled object is reproducible from a 64-bit seed. The integer
// stream is PCG32 (pcg_xsh_rr_64_32, Melissa O'Neill's reference constants);
// normal variates use the classic Box-Muller transform. std::normal_distribution
// is deliberately avoided: its algorithm is implementation-defined and would
// break cross-toolchain reproducibility.
class Pcg32
{
  public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0xda3e39cb94b95bdbULL);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform double strictly inside (0,1); never returns 0, so log() is safe.
    double next_open01();

    // Standard real normal N(0,1) via Box-Muller (one pair per two calls).
    double next_normal();

    // Standard circularly-symmetric complex normal CN(0,1): (n1 + i*n2)/sqrt(2)
    // with n1, n2 the two outputs of one Box-Muller pair.
    std::complex<double> next_complex_normal();

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// SplitMix64 mixing step; used to derive independent sub-seeds (e.g. one seed
// per Monte-Carlo trial) from a master seed without stream overlap.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic per-index sub-seed: derive_seed(s, i) != derive_seed(s, j) for
// practical purposes, and the mapping is documented and stable.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Convenience samplers (entries drawn row-major: for each row, each column).
Eigen::VectorXcd sample_complex_normal_vector(Eigen::Index n, std::uint64_t seed);
Eigen::MatrixXcd sample_complex_normal_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);

} // namespace compdof

#endif
