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

#include "compdof/cj.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "compdof/channel.hpp"
#include "compdof/errors.hpp"

namespace compdof
{

static long long binomial_checked(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("binomial_checked: arguments out of range");
    if (k > n - k)
        k = n - k;
    __int128 c = 1;
    for (int i = 1; i <= k; ++i)
    {
        c = c * (n - k + i) / i; // exact: product of i consecutive integers is divisible by i!
        if (c > (__int128)1000000000000000LL)
            throw resource_error("binomial_checked: value exceeds supported range");
    }
    return (long long)c;
}

std::vector<ExponentVector> enumerate_exponents(int N, int n)
{
    if (N < 1)
        throw std::invalid_argument("enumerate_exponents: N must be positive");
    if (n < 0)
        throw std::invalid_argument("enumerate_exponents: n must be non-negative");

    long long count = binomial_checked(N + n, n);
    if (count > 1000000LL)
        throw resource_error("enumerate_exponents: " + std::to_string(count) +
                             " exponent vectors exceed the 1e6 limit");

    std::vector<ExponentVector> out;
    out.reserve((size_t)count);
    ExponentVector a((size_t)N, 0);

    // Within a degree, lexicographically descending: leading entry counts down.
    auto fill = [&](auto &&self, int pos, int remaining) -> void {
        if (pos == N - 1)
        {
            a[(size_t)pos] = remaining;
            out.push_back(a);
            return;
        }
        for (int v = remaining; v >= 0; --v)
        {
            a[(size_t)pos] = v;
            self(self, pos + 1, remaining - v);
        }
        a[(size_t)pos] = 0;
    };

    for (int d = 0; d <= n; ++d)
        fill(fill, 0, d);
    return out;
}

Eigen::MatrixXcd cj_matrix(const std::vector<Eigen::VectorXcd> &generators, int n)
{
    if (generators.empty())
        throw std::invalid_argument("cj_matrix: generator list is empty");
    const int N = (int)generators.size();
    const Eigen::Index L = generators[0].size();
    if (L < 1)
        throw std::invalid_argument("cj_matrix: generators must be non-empty vectors");
    for (const auto &g : generators)
        if (g.size() != L)
            throw std::invalid_argument("cj_matrix: generators must share one length");

    auto exps = enumerate_exponents(N, n);
    Eigen::MatrixXcd M(L, (Eigen::Index)exps.size());
    for (size_t c = 0; c < exps.size(); ++c)
    {
        Eigen::VectorXcd col = Eigen::VectorXcd::Ones(L);
        for (int i = 0; i < N; ++i)
            for (int r = 0; r < exps[c][(size_t)i]; ++r)
                col = col.cwiseProduct(generators[(size_t)i]);
        M.col((Eigen::Index)c) = col;
    }
    return M;
}

CJBasis make_cj_basis(const std::vector<Eigen::VectorXcd> &generators, int n)
{
    CJBasis b;
    b.generators = generators;
    b.order = n;
    b.exponents = enumerate_exponents((int)generators.size(), n);
    b.basis = cj_matrix(generators, n);
    return b;
}

int required_parallel_channels_km2(int K, int n)
{
    if (K < 4)
        throw std::invalid_argument("required_parallel_channels_km2: K must be at least 4");
    if (n < 0)
        throw std::invalid_argument("required_parallel_channels_km2: n must be non-negative");
    const int Mt = K - 2;
    const int N = K * Mt;
    long long L = (long long)Mt * binomial_checked(N + n, n) + binomial_checked(N + n + 1, n + 1);
    if (L > (long long)max_parallel)
        throw resource_error("required_parallel_channels_km2: L = " + std::to_string(L) +
                             " exceeds the cap of " + std::to_string(max_parallel));
    return (int)L;
}

int required_parallel_channels_general(int K, int Mt, int n)
{
    if (K < 3 || Mt < 2 || Mt > K - 1)
        throw std::invalid_argument("required_parallel_channels_general: need 2 <= Mt <= K-1, K >= 3");
    if (n < 0)
        throw std::invalid_argument("required_parallel_channels_general: n must be non-negative");
    const int N = general_generator_count(K, Mt);
    long long L = binomial_checked(N + n, n) + binomial_checked(N + n + 1, n + 1);
    if (L > (long long)max_parallel)
        throw resource_error("required_parallel_channels_general: L = " + std::to_string(L) +
                             " exceeds the cap of " + std::to_string(max_parallel));
    return (int)L;
}

std::vector<Eigen::MatrixXcd> build_mk_km2(const DerivedChannel &dc, int n)
{
    if (dc.scheme != DerivedScheme::KM2)
        throw std::invalid_argument("build_mk_km2: derived channel does not use the KM2 scheme");
    const int K = dc.K;
    const int Mt = dc.Mt;
    const int required = required_parallel_channels_km2(K, n);
    if (dc.L != required)
        throw std::invalid_argument("build_mk_km2: derived channel has L = " + std::to_string(dc.L) +
                                    " parallel channels, order " + std::to_string(n) + " needs L = " +
                                    std::to_string(required));

    std::vector<Eigen::VectorXcd> gens;
    gens.reserve((size_t)(K * Mt));
    for (int i = 1; i <= K; ++i)
    {
        const int j = (i % K) + 1; // interference at receiver i comes from cell i+1
        for (int m = 1; m <= Mt; ++m)
            gens.push_back(dc.coefficient_vector(i, j, m));
    }

    const Eigen::MatrixXcd V = cj_matrix(gens, n);
    const Eigen::MatrixXcd INT = cj_matrix(gens, n + 1);
    const Eigen::Index nv = V.cols();

    std::vector<Eigen::MatrixXcd> out;
    out.reserve((size_t)K);
    for (int k = 1; k <= K; ++k)
    {
        Eigen::MatrixXcd Mk(dc.L, (Eigen::Index)Mt * nv + INT.cols());
        for (int m = 1; m <= Mt; ++m)
        {
            const Eigen::VectorXcd g = dc.coefficient_vector(k, k, m);
            Mk.middleCols((Eigen::Index)(m - 1) * nv, nv) = g.asDiagonal() * V;
        }
        Mk.rightCols(INT.cols()) = INT;
        out.push_back(std::move(Mk));
    }
    return out;
}

std::vector<Eigen::MatrixXcd> build_mk_general(const DerivedChannel &dc, int n)
{
    if (dc.scheme != DerivedScheme::GENERAL)
        throw std::invalid_argument("build_mk_general: derived channel does not use the general scheme");
    const int K = dc.K;
    const int Mt = dc.Mt;
    const int required = required_parallel_channels_general(K, Mt, n);
    if (dc.L != required)
        throw std::invalid_argument("build_mk_general: derived channel has L = " + std::to_string(dc.L) +
                                    " parallel channels, order " + std::to_string(n) + " needs L = " +
                                    std::to_string(required));

    std::vector<Eigen::VectorXcd> gens;
    gens.reserve((size_t)general_generator_count(K, Mt));
    for (int j = 1; j <= Mt - 1; ++j)
        for (int i = Mt; i <= K; ++i)
            for (int m = 1; m <= 2; ++m)
                gens.push_back(dc.coefficient_vector(i, j, m));
    for (int j = Mt; j <= K; ++j)
        for (int i = Mt; i <= K; ++i)
            if (i != j)
                gens.push_back(dc.coefficient_vector(i, j, 1));

    const Eigen::MatrixXcd V = cj_matrix(gens, n);
    const Eigen::MatrixXcd INT = cj_matrix(gens, n + 1);
    const Eigen::Index nv = V.cols();

    std::vector<Eigen::MatrixXcd> out;
    out.reserve((size_t)K);
    for (int k = 1; k <= K; ++k)
    {
        if (k < Mt)
        {
            Eigen::MatrixXcd Mk(dc.L, 2 * nv);
            Mk.leftCols(nv) = dc.coefficient_vector(k, k, 1).asDiagonal() * V;
            Mk.rightCols(nv) = dc.coefficient_vector(k, k, 2).asDiagonal() * V;
            out.push_back(std::move(Mk));
        }
        else
        {
            Eigen::MatrixXcd Mk(dc.L, nv + INT.cols());
            Mk.leftCols(nv) = dc.coefficient_vector(k, k, 1).asDiagonal() * V;
            Mk.rightCols(INT.cols()) = INT;
            out.push_back(std::move(Mk));
        }
    }
    return out;
}

DecodabilityReport verify_decodability(const std::vector<Eigen::MatrixXcd> &Mks, double rel_tol)
{
    if (Mks.empty())
        throw std::invalid_argument("verify_decodability: no matrices given");

    DecodabilityReport rep;
    rep.L = (int)Mks[0].rows();
    rep.conditioning_warning = rep.L > 512;
    rep.pass = true;
    for (const auto &M : Mks)
    {
        Eigen::MatrixXcd A = M;
        // Three alternating row/column unit-norm sweeps; exact dependencies
        // stay at the rounding floor while generic matrices equilibrate to a
        // comfortable margin above the rank threshold.
        for (int sweep = 0; sweep < 3; ++sweep)
        {
            for (Eigen::Index r = 0; r < A.rows(); ++r)
            {
                const double s = A.row(r).norm();
                if (s > 0.0)
                    A.row(r) /= s;
            }
            for (Eigen::Index c = 0; c < A.cols(); ++c)
            {
                const double s = A.col(c).norm();
                if (s > 0.0)
                    A.col(c) /= s;
            }
        }
        DecodabilityReport::Entry e;
        e.rows = (int)M.rows();
        e.cols = (int)M.cols();
        e.rank = numeric_rank(A, rel_tol);
        e.pass = e.rank == e.cols;
        rep.pass = rep.pass && e.pass;
        rep.receivers.push_back(e);
    }
    return rep;
}

Rational achievable_dof(int K, int Mt, DerivedScheme scheme, int n)
{
    if (n < 0)
        throw std::invalid_argument("achievable_dof: n must be non-negative");
    if (scheme == DerivedScheme::KM2)
    {
        if (K < 4 || Mt != K - 2)
            throw std::invalid_argument("achievable_dof: KM2 scheme needs Mt = K-2, K >= 4");
        return Rational((long long)K * Mt * (n + 1), (long long)(Mt + 1) * (n + 1) + (long long)K * Mt);
    }
    if (K < 3 || Mt < 2 || Mt > K - 1)
        throw std::invalid_argument("achievable_dof: general scheme needs 2 <= Mt <= K-1, K >= 3");
    const int N = general_generator_count(K, Mt);
    return Rational((long long)(K + Mt - 1) * (n + 1), 2LL * (n + 1) + N);
}

Rational achievable_dof_limit(int K, int Mt, DerivedScheme scheme)
{
    if (scheme == DerivedScheme::KM2)
    {
        if (K < 4 || Mt != K - 2)
            throw std::invalid_argument("achievable_dof_limit: KM2 scheme needs Mt = K-2, K >= 4");
        return Rational((long long)K * Mt, Mt + 1);
    }
    if (K < 3 || Mt < 2 || Mt > K - 1)
        throw std::invalid_argument("achievable_dof_limit: general scheme needs 2 <= Mt <= K-1, K >= 3");
    return Rational(K + Mt - 1, 2);
}

} // namespace compdof
