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

#include "compdof/rng.hpp"

#include <cmath>

namespace compdof
{

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream)
{
    state_ = 0u;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
}

std::uint32_t Pcg32::next_u32()
{
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t Pcg32::next_u64()
{
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    return (hi << 32u) | lo;
}

double Pcg32::next_open01()
{
    // 53 significant bits, offset by half an ulp: result lies in (0,1).
    std::uint64_t u = next_u64() >> 11u;
    return (static_cast<double>(u) + 0.5) * 0x1.0p-53;
}

double Pcg32::next_normal()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_;
    }
    double u1 = next_open01();
    double u2 = next_open01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::complex<double> Pcg32::next_complex_normal()
{
    // One Box-Muller pair per sample keeps the draw order independent of any
    // buffered spare from next_normal().
    double u1 = next_open01();
    double u2 = next_open01();
    double r = std::sqrt(-std::log(u1)); // sqrt(-2 ln u)/sqrt(2)
    double theta = 2.0 * M_PI * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30u)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27u)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31u);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(splitmix64(seed) + 0x9E3779B97F4A7C15ULL * (index + 1u));
}

Eigen::VectorXcd sample_complex_normal_vector(Eigen::Index n, std::uint64_t seed)
{
    Pcg32 rng(seed);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v[i] = rng.next_complex_normal();
    return v;
}

Eigen::MatrixXcd sample_complex_normal_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed)
{
    Pcg32 rng(seed);
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = rng.next_complex_normal();
    return m;
}

} // namespace compdof
