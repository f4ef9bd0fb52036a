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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "compdof/algebra.hpp"
#include "compdof/channel.hpp"
#include "compdof/closed_form.hpp"

using namespace compdof;

namespace
{

int wrap1(int v, int K) { return (v - 1) % K + 1; }

} // namespace

TEST_CASE("chain matrices satisfy their defining linear systems")
{
    const int K = 5;
    const auto H = sample_channel(K, 1, 13).slice(1);
    const auto chain = alignment_matrices(H);
    REQUIRE((int)chain.B.size() == K);
    for (int k = 1; k <= K; ++k)
    {
        const auto &Bk = chain.B[(size_t)k - 1];
        REQUIRE(Bk.rows() == K - 1);
        REQUIRE(Bk.cols() == K - 1);
        const auto lhs = submatrix(H, up_set(wrap1(k + 2, K), K - 1, K), up_set(wrap1(k + 1, K), K - 1, K));
        const auto rhs = submatrix(H, up_set(wrap1(k + 2, K), K - 1, K), up_set(k, K - 1, K));
        CHECK((lhs * Bk - rhs).cwiseAbs().maxCoeff() < 1e-10);
    }
    // product = B_K ... B_1 in that order
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(K - 1, K - 1);
    for (int k = 1; k <= K; ++k)
        P = chain.B[(size_t)k - 1] * P;
    CHECK((P - chain.product).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("the seed beam is an eigenvector and the chain propagates it")
{
    const int K = 4;
    const auto H = sample_channel(K, 1, 21).slice(1);
    const auto chain = alignment_matrices(H);
    const auto b = closed_form_beams(H, 1);

    // Extract v_k as the nonzero pattern of column k restricted to T_k.
    std::vector<Eigen::VectorXcd> v((size_t)K);
    for (int k = 1; k <= K; ++k)
    {
        const auto T = up_set(k, K - 1, K);
        v[(size_t)k - 1].resize(K - 1);
        for (int m = 0; m < K - 1; ++m)
            v[(size_t)k - 1][m] = b.V(T[(size_t)m] - 1, k - 1);
    }
    // v_1 is a unit-norm eigenvector of the product.
    const Eigen::VectorXcd Pv = chain.product * v[0];
    const std::complex<double> lambda = v[0].dot(Pv); // unit norm => Rayleigh quotient
    CHECK(std::abs(v[0].norm() - 1.0) < 1e-12);
    CHECK((Pv - lambda * v[0]).cwiseAbs().maxCoeff() < 1e-9);
    // v_{k+1} = B_k v_k
    for (int k = 1; k < K; ++k)
        CHECK((chain.B[(size_t)k - 1] * v[(size_t)k - 1] - v[(size_t)k]).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("beams invert the effective channel and respect supports")
{
    for (int K = 3; K <= 7; ++K)
        for (std::uint64_t seed = 0; seed < 4; ++seed)
        {
            const auto H = sample_channel(K, 1, seed).slice(1);
            const auto b = closed_form_beams(H);
            const double res =
                (b.U.transpose() * H * b.V - Eigen::MatrixXcd::Identity(K, K)).cwiseAbs().maxCoeff();
            CHECK(res < 1e-8);

            // Transmit supports are exact zeros; receive filters leak only numerically.
            double v_mask = 0.0, u_leak = 0.0;
            for (int i = 0; i < K; ++i)
                for (int k = 0; k < K; ++k)
                {
                    if (!b.Vbar(i, k))
                        v_mask = std::max(v_mask, std::abs(b.V(i, k)));
                    if (!b.Ubar(i, k))
                        u_leak = std::max(u_leak, std::abs(b.U(i, k)));
                }
            CHECK(v_mask == 0.0);
            CHECK(u_leak < 1e-8);
        }
}

TEST_CASE("each receiver sees all interference in a single direction")
{
    for (int K = 3; K <= 6; ++K)
    {
        const auto H = sample_channel(K, 1, 2 * (std::uint64_t)K).slice(1);
        const auto b = closed_form_beams(H);
        const CooperationPattern pattern(K, K - 1, 2);
        const Eigen::MatrixXcd M = H * b.V;
        CHECK(verify_alignment_conditions(M, pattern));

        // Column form directly: interference columns collapse at each receive window.
        for (int k = 1; k <= K; ++k)
        {
            IndexSet others;
            for (int j = 1; j <= K; ++j)
                if (j != k)
                    others.push_back(j);
            const auto sub = submatrix(M, pattern.receive_set(k), others);
            CHECK(numeric_rank(sub) == 1); // Mr - 1

            // Row form on the inverse image: same statement through the nullity theorem.
            IndexSet rows;
            const int km1 = wrap1(k - 1 + K, K);
            for (int i = 1; i <= K; ++i)
                if (i != km1)
                    rows.push_back(i);
            const auto sub2 = submatrix(M, rows, down_set(km1, 2, K));
            CHECK(numeric_rank(sub2) == 1);
        }

        // Negative control: unaligned beams fail the check.
        const Eigen::MatrixXcd R = sample_channel(K, 1, 999).slice(1);
        CHECK_FALSE(verify_alignment_conditions(H * R, pattern));
    }
}

TEST_CASE("eigenvector choices are validated and all of them align")
{
    const int K = 4;
    const auto H = sample_channel(K, 1, 77).slice(1);
    for (int idx = 1; idx <= K - 1; ++idx)
    {
        const auto b = closed_form_beams(H, idx);
        const double res =
            (b.U.transpose() * H * b.V - Eigen::MatrixXcd::Identity(K, K)).cwiseAbs().maxCoeff();
        CHECK(res < 1e-8);
    }
    CHECK_THROWS_AS((void)closed_form_beams(H, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)closed_form_beams(H, K), std::invalid_argument);
    CHECK_THROWS_AS((void)closed_form_beams(Eigen::MatrixXcd::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("beam construction is deterministic")
{
    const auto H = sample_channel(5, 1, 3).slice(1);
    const auto a = closed_form_beams(H, 2);
    const auto b = closed_form_beams(H, 2);
    CHECK(a.V == b.V);
    CHECK(a.U == b.U);
}
