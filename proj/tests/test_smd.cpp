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

#include "compdof/channel.hpp"
#include "compdof/smd.hpp"

using namespace compdof;

namespace
{

bool masks_respected(const BeamPair &b)
{
    for (Eigen::Index i = 0; i < b.V.rows(); ++i)
        for (Eigen::Index j = 0; j < b.V.cols(); ++j)
        {
            if (!b.Vbar((int)i, (int)j) && b.V(i, j) != std::complex<double>(0, 0))
                return false;
            if (!b.Ubar((int)i, (int)j) && b.U(i, j) != std::complex<double>(0, 0))
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("support masks mirror the spiral windows")
{
    const auto [Vbar, Ubar] = comp_smatrices(5, 3, 2);
    REQUIRE(Vbar.rows() == 5);
    REQUIRE(Ubar.rows() == 5);
    for (int k = 1; k <= 5; ++k)
    {
        const auto T = up_set(k, 3, 5);
        const auto R = up_set(k, 2, 5);
        for (int i = 1; i <= 5; ++i)
        {
            const bool in_t = std::find(T.begin(), T.end(), i) != T.end();
            const bool in_r = std::find(R.begin(), R.end(), i) != R.end();
            CHECK(Vbar(i - 1, k - 1) == (in_t ? 1 : 0));
            CHECK(Ubar(i - 1, k - 1) == (in_r ? 1 : 0));
        }
        CHECK(Vbar(k - 1, k - 1) == 1); // own antenna always available
        CHECK(Ubar(k - 1, k - 1) == 1);
    }
}

TEST_CASE("decomposability matches the cooperation threshold everywhere")
{
    for (int K = 2; K <= 12; ++K)
        for (int Mt = 1; Mt <= K; ++Mt)
            for (int Mr = 1; Mr <= K; ++Mr)
            {
                const auto [Vbar, Ubar] = comp_smatrices(K, Mt, Mr);
                CHECK(smd_feasible(Vbar, Ubar) == (Mt + Mr >= K + 1));
            }
}

TEST_CASE("the linearization at the identity has full rank K^2 on feasible patterns")
{
    for (int K = 2; K <= 6; ++K)
        for (int Mt = 1; Mt <= K; ++Mt)
        {
            const int Mr = K + 1 - Mt;
            if (Mr < 1 || Mr > K)
                continue;
            const auto [Vbar, Ubar] = comp_smatrices(K, Mt, Mr);
            CHECK(smd_jacobian_rank_at_identity(Vbar, Ubar) == K * K);
        }
}

TEST_CASE("full transmit window reduces to an exact copy")
{
    // Mt = K, Mr = 1: U is forced to the identity, so V must equal A.
    const int K = 4;
    const auto A = sample_channel(K, 1, 3).slice(1);
    const auto [Vbar, Ubar] = comp_smatrices(K, K, 1);
    const auto b = smd_solve(A, Vbar, Ubar);
    CHECK((b.U - Eigen::MatrixXcd::Identity(K, K)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((b.V - A).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(masks_respected(b));
}

TEST_CASE("diagonal transmit window matches the closed-form scaling solution")
{
    // Mt = 1, Mr = K: V is diagonal, so v_kk = a_kk and u_jk = a_kj / a_kk.
    const int K = 4;
    const auto A = sample_channel(K, 1, 5).slice(1);
    const auto [Vbar, Ubar] = comp_smatrices(K, 1, K);
    const auto b = smd_solve(A, Vbar, Ubar);
    for (int k = 0; k < K; ++k)
    {
        CHECK(std::abs(b.V(k, k) - A(k, k)) < 1e-9);
        for (int j = 0; j < K; ++j)
            CHECK(std::abs(b.U(j, k) - A(k, j) / A(k, k)) < 1e-9);
    }
    CHECK(masks_respected(b));
}

TEST_CASE("continuation solves generic feasible decompositions")
{
    for (int K = 3; K <= 6; ++K)
        for (std::uint64_t seed = 0; seed < 3; ++seed)
        {
            const int Mt = (K + 2) / 2;
            const int Mr = K + 1 - Mt;
            const auto A = sample_channel(K, 1, seed).slice(1);
            const auto [Vbar, Ubar] = comp_smatrices(K, Mt, Mr);
            const auto b = smd_solve(A, Vbar, Ubar);
            const double res = (b.V * b.U.transpose() - A).cwiseAbs().maxCoeff();
            CHECK(res < 1e-8 * A.cwiseAbs().maxCoeff());
            CHECK(masks_respected(b));
            bool unit_diag = true;
            for (int k = 0; k < K; ++k)
                unit_diag = unit_diag && b.U(k, k) == std::complex<double>(1, 0);
            CHECK(unit_diag);
        }
}

TEST_CASE("the solver is deterministic")
{
    const auto A = sample_channel(5, 1, 11).slice(1);
    const auto [Vbar, Ubar] = comp_smatrices(5, 3, 3);
    const auto b1 = smd_solve(A, Vbar, Ubar);
    const auto b2 = smd_solve(A, Vbar, Ubar);
    CHECK(b1.V == b2.V);
    CHECK(b1.U == b2.U);
}

TEST_CASE("infeasible masks are rejected up front")
{
    const auto A = sample_channel(3, 1, 2).slice(1);
    const auto [Vbar, Ubar] = comp_smatrices(3, 1, 1);
    REQUIRE_FALSE(smd_feasible(Vbar, Ubar));
    CHECK_THROWS_AS((void)smd_solve(A, Vbar, Ubar), std::invalid_argument);
}

TEST_CASE("interference-free beams exist exactly above the threshold")
{
    for (int K = 3; K <= 5; ++K)
        for (int Mt = 1; Mt <= K; ++Mt)
            for (int Mr = 1; Mr <= K; ++Mr)
            {
                const auto H = sample_channel(K, 1, 7).slice(1);
                if (Mt + Mr < K + 1)
                {
                    CHECK_THROWS_AS((void)full_dof_beams(H, Mt, Mr), std::invalid_argument);
                    continue;
                }
                const auto b = full_dof_beams(H, Mt, Mr);
                const double res =
                    (b.U.transpose() * H * b.V - Eigen::MatrixXcd::Identity(K, K)).cwiseAbs().maxCoeff();
                CHECK(res < 1e-8);
                CHECK(masks_respected(b));
            }
}

TEST_CASE("options guard rails")
{
    const auto A = sample_channel(3, 1, 2).slice(1);
    const auto [Vbar, Ubar] = comp_smatrices(3, 2, 2);
    SmdOptions opts;
    opts.steps = 0;
    CHECK_THROWS_AS((void)smd_solve(A, Vbar, Ubar, opts), std::invalid_argument);
    CHECK_THROWS_AS((void)comp_smatrices(3, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)smd_solve(Eigen::MatrixXcd::Zero(2, 3), Vbar, Ubar),
                    std::invalid_argument);
}
