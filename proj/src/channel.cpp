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

#include "compdof/channel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "compdof/rng.hpp"

namespace compdof
{

static int wrap_1k(int v, int K)
{
    int r = (v - 1) % K;
    if (r < 0)
        r += K;
    return r + 1;
}

static void check_window_args(const char *fn, int k, int m, int K)
{
    if (K < 1 || K > max_users)
        throw std::invalid_argument(std::string(fn) + ": K must be in 1.." + std::to_string(max_users) +
                                    ", got " + std::to_string(K));
    if (k < 1 || k > K)
        throw std::invalid_argument(std::string(fn) + ": start index " + std::to_string(k) +
                                    " outside 1.." + std::to_string(K));
    if (m < 1 || m > K)
        throw std::invalid_argument(std::string(fn) + ": window size " + std::to_string(m) +
                                    " outside 1.." + std::to_string(K));
}

IndexSet up_set(int k, int m, int K)
{
    check_window_args("up_set", k, m, K);
    IndexSet s(m);
    for (int t = 0; t < m; ++t)
        s[t] = wrap_1k(k + t, K);
    return s;
}

IndexSet down_set(int k, int m, int K)
{
    check_window_args("down_set", k, m, K);
    IndexSet s(m);
    for (int t = 0; t < m; ++t)
        s[t] = wrap_1k(k - t, K);
    return s;
}

IndexSet complement(const IndexSet &s, int K)
{
    std::vector<bool> in(static_cast<size_t>(K) + 1, false);
    for (int v : s)
    {
        if (v < 1 || v > K)
            throw std::invalid_argument("complement: index " + std::to_string(v) + " outside 1.." + std::to_string(K));
        in[static_cast<size_t>(v)] = true;
    }
    IndexSet out;
    out.reserve(static_cast<size_t>(K) - s.size());
    for (int v = 1; v <= K; ++v)
        if (!in[static_cast<size_t>(v)])
            out.push_back(v);
    return out;
}

CooperationPattern::CooperationPattern(int K, int Mt, int Mr, int L) : K(K), Mt(Mt), Mr(Mr), L(L)
{
    if (K < 1 || K > max_users)
        throw std::invalid_argument("CooperationPattern: K must be in 1.." + std::to_string(max_users));
    if (Mt < 1 || Mt > K)
        throw std::invalid_argument("CooperationPattern: Mt must be in 1..K");
    if (Mr < 1 || Mr > K)
        throw std::invalid_argument("CooperationPattern: Mr must be in 1..K");
    if (L < 1 || L > max_parallel)
        throw std::invalid_argument("CooperationPattern: L must be in 1.." + std::to_string(max_parallel));
}

IndexSet CooperationPattern::transmit_set(int k) const { return up_set(k, Mt, K); }

IndexSet CooperationPattern::receive_set(int k) const { return up_set(k, Mr, K); }

const Eigen::MatrixXcd &ChannelRealization::slice(int l) const
{
    if (l < 1 || l > L)
        throw std::invalid_argument("ChannelRealization::slice: l outside 1..L");
    return slices[static_cast<size_t>(l - 1)];
}

ChannelRealization sample_channel(int K, int L, std::uint64_t seed)
{
    if (K < 1 || K > max_users)
        throw std::invalid_argument("sample_channel: K must be in 1.." + std::to_string(max_users));
    if (L < 1 || L > max_parallel)
        throw std::invalid_argument("sample_channel: L must be in 1.." + std::to_string(max_parallel));

    ChannelRealization h;
    h.K = K;
    h.L = L;
    h.seed = seed;
    h.slices.reserve(static_cast<size_t>(L));
    Pcg32 rng(seed);
    for (int l = 0; l < L; ++l)
    {
        Eigen::MatrixXcd m(K, K);
        for (int i = 0; i < K; ++i)
            for (int j = 0; j < K; ++j)
                m(i, j) = rng.next_complex_normal();
        h.slices.push_back(std::move(m));
    }
    return h;
}

Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd &H, const IndexSet &rows, const IndexSet &cols)
{
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
    {
        if (rows[r] < 1 || rows[r] > H.rows())
            throw std::invalid_argument("submatrix: row index " + std::to_string(rows[r]) + " out of range");
        for (size_t c = 0; c < cols.size(); ++c)
        {
            if (cols[c] < 1 || cols[c] > H.cols())
                throw std::invalid_argument("submatrix: column index " + std::to_string(cols[c]) + " out of range");
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = H(rows[r] - 1, cols[c] - 1);
        }
    }
    return out;
}

Eigen::MatrixXcd circulant_test_point(int K)
{
    if (K < 3)
        throw std::invalid_argument("circulant_test_point: K must be at least 3");
    if (K > max_users)
        throw std::invalid_argument("circulant_test_point: K must be at most " + std::to_string(max_users));
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(K, K);
    for (int i = 1; i <= K; ++i)
    {
        a(i - 1, i - 1) = 1.0;
        int j = wrap_1k(i - 1, K);
        a(i - 1, j - 1) = 1.0;
    }
    return a;
}

} // namespace compdof
