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
#include <complex>

#include "compdof/channel.hpp"
#include "compdof/derived.hpp"

using namespace compdof;

namespace
{

int wrap1(int v, int K) { return (v - 1 + K) % K + 1; }

ChannelRealization scaled_pair(int K, std::uint64_t seed, double lambda)
{
    ChannelRealization ch = sample_channel(K, 1, seed);
    ChannelRealization two;
    two.K = K;
    two.L = 2;
    two.seed = seed;
    two.slices.push_back(ch.slice(1));
    two.slices.push_back(lambda * ch.slice(1));
    return two;
}

} // namespace

TEST_CASE("inversion-based transform pins one coefficient per window position")
{
    for (int K = 4; K <= 6; ++K)
    {
        const auto ch = sample_channel(K, 3, (std::uint64_t)K);
        const auto dc = zf_transform_km2(ch);
        const int Mt = K - 2;
        CHECK(dc.K == K);
        CHECK(dc.Mt == Mt);
        CHECK(dc.L == 3);
        CHECK(verify_triviality(dc));

        for (int k = 1; k <= K; ++k)
        {
            CHECK(dc.streams(k) == Mt);
            for (int m = 1; m <= Mt; ++m)
            {
                int ones = 0, zeros = 0, free = 0;
                for (int i = 1; i <= K; ++i)
                {
                    switch (dc.mask(i, k, m))
                    {
                    case Triviality::FORCED_ONE:
                        ++ones;
                        CHECK(i == wrap1(k + m, K));
                        break;
                    case Triviality::FORCED_ZERO:
                        ++zeros;
                        break;
                    case Triviality::FREE:
                        ++free;
                        CHECK((i == k || i == wrap1(k - 1, K)));
                        break;
                    }
                }
                CHECK(ones == 1);
                CHECK(zeros == K - 3);
                CHECK(free == 2);
            }
        }

        // Free coefficients are generically nonvanishing.
        for (int k = 1; k <= K; ++k)
            for (int m = 1; m <= Mt; ++m)
            {
                CHECK(std::abs(dc.g(k, k, m, 1)) > 1e-12);
                CHECK(std::abs(dc.g(wrap1(k - 1, K), k, m, 2)) > 1e-12);
            }
    }
}

TEST_CASE("inversion-based coefficients ignore a channel-wide scale")
{
    const int K = 5;
    const auto dc = zf_transform_km2(scaled_pair(K, 42, 2.0));
    for (int k = 1; k <= K; ++k)
        for (int m = 1; m <= K - 2; ++m)
        {
            CHECK(std::abs(dc.g(k, k, m, 1) - dc.g(k, k, m, 2)) < 1e-9);
            const int i = wrap1(k - 1, K);
            CHECK(std::abs(dc.g(i, k, m, 1) - dc.g(i, k, m, 2)) < 1e-9);
        }
}

TEST_CASE("cofactor beams null exactly the requested rows")
{
    const auto H = sample_channel(6, 1, 8).slice(1);
    const IndexSet support{2, 3, 5};
    const IndexSet nulls{1, 4};
    const auto beam = zf_beam_from_nulls(H, support, nulls);
    REQUIRE_FALSE(beam.degenerate);
    CHECK(beam.support == support);

    for (int i : nulls)
        CHECK(std::abs((submatrix(H, {i}, support) * beam.coefficients)(0, 0)) < 1e-12);

    // Probe gain has cofactor magnitude: |H(i, support) c| = |det H(nulls + i, support)|.
    for (int i : {2, 6})
    {
        const auto gain = (submatrix(H, {i}, support) * beam.coefficients)(0, 0);
        IndexSet rows = nulls;
        rows.push_back(i);
        const auto det = submatrix(H, rows, support).determinant();
        CHECK(std::abs(std::abs(gain) - std::abs(det)) < 1e-10);
    }

    CHECK_THROWS_AS((void)zf_beam_from_nulls(H, IndexSet{1, 2}, IndexSet{3, 4}),
                    std::invalid_argument); // support must exceed nulls by exactly one
    CHECK_THROWS_AS((void)zf_beam_from_nulls(H, IndexSet{}, IndexSet{}), std::invalid_argument);

    // A singleton support with no nulls is the trivial unit beam.
    const auto unit = zf_beam_from_nulls(H, IndexSet{3}, IndexSet{});
    CHECK(unit.coefficients.size() == 1);
    CHECK(unit.coefficients[0] == std::complex<double>(1, 0));
}

TEST_CASE("cofactor transform frees the first receivers from interference")
{
    for (int K = 4; K <= 6; ++K)
        for (int Mt = 2; Mt <= K - 1; ++Mt)
        {
            const auto ch = sample_channel(K, 2, (std::uint64_t)(10 * K + Mt));
            const auto dc = zf_transform_general(ch, Mt);
            CHECK(dc.L == 2);
            CHECK(verify_triviality(dc));

            int total = 0;
            for (int j = 1; j <= K; ++j)
            {
                CHECK(dc.streams(j) == (j < Mt ? 2 : 1));
                total += dc.streams(j);
            }
            CHECK(total == K + Mt - 1);

            for (int i = 1; i <= K; ++i)
                for (int j = 1; j <= K; ++j)
                    for (int m = 1; m <= dc.streams(j); ++m)
                    {
                        const bool forced = i < Mt && i != j;
                        CHECK(dc.mask(i, j, m) ==
                              (forced ? Triviality::FORCED_ZERO : Triviality::FREE));
                        if (forced)
                            CHECK(std::abs(dc.g(i, j, m, 1)) < 1e-10);
                        else
                            CHECK(std::abs(dc.g(i, j, m, 1)) > 1e-12);
                    }
        }
}

TEST_CASE("cofactor coefficients scale with window-sized channel degrees")
{
    const int K = 5, Mt = 3;
    const double lambda = 2.0;
    const auto dc = zf_transform_general(scaled_pair(K, 17, lambda), Mt);
    for (int j = 1; j <= K; ++j)
        for (int m = 1; m <= dc.streams(j); ++m)
            for (int i = 1; i <= K; ++i)
            {
                if (dc.mask(i, j, m) == Triviality::FORCED_ZERO)
                    continue;
                const double degree = j < Mt ? Mt - 1 : Mt;
                const auto ratio = dc.g(i, j, m, 2) / dc.g(i, j, m, 1);
                CHECK(std::abs(ratio - std::pow(lambda, degree)) < 1e-8);
            }
}

TEST_CASE("coefficient vectors stack slices in order")
{
    const auto ch = sample_channel(4, 5, 33);
    const auto dc = zf_transform_km2(ch);
    const auto v = dc.coefficient_vector(1, 1, 2);
    REQUIRE(v.size() == 5);
    for (int l = 1; l <= 5; ++l)
        CHECK(v[l - 1] == dc.g(1, 1, 2, l));
}

TEST_CASE("argument validation across the derived-channel API")
{
    const auto ch = sample_channel(5, 1, 3);
    CHECK_THROWS_AS((void)zf_transform_km2(sample_channel(3, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS((void)zf_transform_general(ch, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)zf_transform_general(ch, 5), std::invalid_argument);

    const auto dc = zf_transform_general(ch, 3);
    CHECK_THROWS_AS((void)dc.g(0, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)dc.g(1, 1, 1, 2), std::invalid_argument);  // only one slice
    CHECK_THROWS_AS((void)dc.g(1, 4, 2, 1), std::invalid_argument);  // cell 4 has one stream
    CHECK_THROWS_AS((void)dc.mask(1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)dc.coefficient_vector(6, 1, 1), std::invalid_argument);
}

TEST_CASE("generator counts follow the quadratic profile")
{
    CHECK(general_generator_count(4, 2) == 12);
    CHECK(general_generator_count(5, 3) == 18);
    CHECK(general_generator_count(6, 2) == 30);
    for (int K = 3; K <= 8; ++K)
        for (int Mt = 2; Mt <= K - 1; ++Mt)
            CHECK(general_generator_count(K, Mt) == (K - Mt + 1) * (K + Mt - 2));
}

TEST_CASE("claim maps replay the derived coefficients")
{
    const int K = 4, Mt = 2;
    const auto ch = sample_channel(K, 1, 55);
    const auto dc = zf_transform_general(ch, Mt);
    const Eigen::MatrixXcd &H = ch.slice(1);
    const Eigen::VectorXcd t = Eigen::Map<const Eigen::VectorXcd>(H.data(), K * K);

    for (int receiver : {1, 2, 4})
    {
        const auto f = general_claim_map(K, Mt, receiver);
        const int n_signal = receiver < Mt ? 2 : 1;
        CHECK(f.n_outputs == n_signal + general_generator_count(K, Mt));
        const Eigen::VectorXcd out = f.eval(t);

        Eigen::Index at = 0;
        for (int m = 1; m <= n_signal; ++m)
            CHECK(std::abs(out[at++] - dc.g(receiver, receiver, m, 1)) < 1e-10);
        for (int j = 1; j < Mt; ++j)
            for (int i = Mt; i <= K; ++i)
                for (int m = 1; m <= 2; ++m)
                    CHECK(std::abs(out[at++] - dc.g(i, j, m, 1)) < 1e-10);
        for (int j = Mt; j <= K; ++j)
            for (int i = Mt; i <= K; ++i)
                if (i != j)
                    CHECK(std::abs(out[at++] - dc.g(i, j, 1, 1)) < 1e-10);
        CHECK(at == f.n_outputs);
    }
    CHECK_THROWS_AS((void)general_claim_map(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)general_claim_map(4, 2, 5), std::invalid_argument);
}
