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

#include "compdof/derived.hpp"

#include <algorithm>
#include <stdexcept>

#include "compdof/errors.hpp"

namespace compdof
{

static int wrap_1k(int v, int K)
{
    int r = (v - 1) % K;
    if (r < 0)
        r += K;
    return r + 1;
}

int DerivedChannel::streams(int j) const
{
    if (j < 1 || j > K)
        throw std::invalid_argument("DerivedChannel::streams: cell index outside 1..K");
    if (scheme == DerivedScheme::KM2)
        return Mt;
    return j < Mt ? 2 : 1;
}

std::complex<double> DerivedChannel::g(int i, int j, int m, int l) const
{
    if (i < 1 || i > K)
        throw std::invalid_argument("DerivedChannel::g: receiver index outside 1..K");
    if (m < 1 || m > streams(j))
        throw std::invalid_argument("DerivedChannel::g: stream index outside 1..streams(j)");
    if (l < 1 || l > L)
        throw std::invalid_argument("DerivedChannel::g: parallel index outside 1..L");
    return coeffs[static_cast<size_t>(m - 1)][static_cast<size_t>(l - 1)](i - 1, j - 1);
}

Eigen::VectorXcd DerivedChannel::coefficient_vector(int i, int j, int m) const
{
    Eigen::VectorXcd v(L);
    for (int l = 1; l <= L; ++l)
        v[l - 1] = g(i, j, m, l);
    return v;
}

Triviality DerivedChannel::mask(int i, int j, int m) const
{
    if (i < 1 || i > K)
        throw std::invalid_argument("DerivedChannel::mask: receiver index outside 1..K");
    if (m < 1 || m > streams(j))
        throw std::invalid_argument("DerivedChannel::mask: stream index outside 1..streams(j)");
    return static_cast<Triviality>(masks[static_cast<size_t>(m - 1)](i - 1, j - 1));
}

DerivedChannel zf_transform_km2(const ChannelRealization &h)
{
    int K = h.K;
    if (K < 4)
        throw std::invalid_argument("zf_transform_km2: requires K >= 4");
    int Mt = K - 2;

    DerivedChannel dc;
    dc.scheme = DerivedScheme::KM2;
    dc.K = K;
    dc.Mt = Mt;
    dc.L = h.L;
    dc.coeffs.assign(static_cast<size_t>(Mt),
                     std::vector<Eigen::MatrixXcd>(static_cast<size_t>(h.L), Eigen::MatrixXcd::Zero(K, K)));
    dc.masks.assign(static_cast<size_t>(Mt), Eigen::MatrixXi::Zero(K, K));

    // Triviality mask: receivers inside T_{k+1} are pinned (stream m surfaces
    // at k+m with unit gain); the two remaining rows k and k-1 stay free.
    for (int k = 1; k <= K; ++k)
        for (int m = 1; m <= Mt; ++m)
        {
            Eigen::MatrixXi &mk = dc.masks[static_cast<size_t>(m - 1)];
            for (int i : up_set(wrap_1k(k + 1, K), Mt, K))
                mk(i - 1, k - 1) = static_cast<int>(i == wrap_1k(k + m, K) ? Triviality::FORCED_ONE
                                                                           : Triviality::FORCED_ZERO);
        }

    for (int l = 1; l <= h.L; ++l)
    {
        const Eigen::MatrixXcd &H = h.slice(l);
        for (int k = 1; k <= K; ++k)
        {
            IndexSet Tk = up_set(k, Mt, K);
            IndexSet Tk1 = up_set(wrap_1k(k + 1, K), Mt, K);
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(submatrix(H, Tk1, Tk));
            if (!lu.isInvertible())
                throw numerical_error("zf_transform_km2: H(T_" + std::to_string(wrap_1k(k + 1, K)) + ",T_" +
                                      std::to_string(k) + ") singular on parallel channel " + std::to_string(l));
            Eigen::MatrixXcd Vk = lu.inverse();
            for (int i = 1; i <= K; ++i)
            {
                Eigen::RowVectorXcd row = submatrix(H, {i}, Tk).row(0) * Vk;
                for (int m = 1; m <= Mt; ++m)
                    dc.coeffs[static_cast<size_t>(m - 1)][static_cast<size_t>(l - 1)](i - 1, k - 1) = row[m - 1];
            }
        }
    }
    return dc;
}

ZFBeam zf_beam_from_nulls(const Eigen::MatrixXcd &H, const IndexSet &support, const IndexSet &nulls)
{
    if (support.size() != nulls.size() + 1)
        throw std::invalid_argument("zf_beam_from_nulls: need |support| = |nulls| + 1");
    int n = static_cast<int>(support.size());
    Eigen::MatrixXcd M0 = submatrix(H, nulls, support); // (n-1) x n

    ZFBeam beam;
    beam.support = support;
    beam.coefficients.resize(n);
    for (int j = 1; j <= n; ++j)
    {
        Eigen::MatrixXcd minor(n - 1, n - 1);
        for (int c = 0, dst = 0; c < n; ++c)
        {
            if (c == j - 1)
                continue;
            minor.col(dst++) = M0.col(c);
        }
        std::complex<double> det = (n == 1) ? std::complex<double>(1.0)
                                            : Eigen::PartialPivLU<Eigen::MatrixXcd>(minor).determinant();
        beam.coefficients[j - 1] = ((n + j) % 2 == 0 ? 1.0 : -1.0) * det;
    }
    beam.degenerate = beam.coefficients.lpNorm<Eigen::Infinity>() == 0.0;
    return beam;
}

namespace
{

// All beams of the general construction for one channel slice.
// cell_beams[j-1][m-1]; cells j >= Mt have a single beam.
static std::vector<std::vector<ZFBeam>> general_beams(const Eigen::MatrixXcd &H, int K, int Mt)
{
    IndexSet protected_rx = up_set(1, Mt - 1, K); // receivers 1..Mt-1
    std::vector<std::vector<ZFBeam>> beams(static_cast<size_t>(K));
    for (int j = 1; j <= K; ++j)
    {
        if (j >= Mt)
        {
            beams[static_cast<size_t>(j - 1)].push_back(zf_beam_from_nulls(H, up_set(j, Mt, K), protected_rx));
        }
        else
        {
            IndexSet nulls = complement({j}, K);
            nulls.erase(std::remove_if(nulls.begin(), nulls.end(), [Mt](int v) { return v >= Mt; }),
                        nulls.end()); // {1..Mt-1} minus {j}
            beams[static_cast<size_t>(j - 1)].push_back(zf_beam_from_nulls(H, up_set(j, Mt - 1, K), nulls));
            beams[static_cast<size_t>(j - 1)].push_back(
                zf_beam_from_nulls(H, up_set(wrap_1k(j + 1, K), Mt - 1, K), nulls));
        }
    }
    return beams;
}

static std::complex<double> beam_gain(const Eigen::MatrixXcd &H, int receiver, const ZFBeam &beam)
{
    return (submatrix(H, {receiver}, beam.support).row(0) * beam.coefficients).value();
}

} // namespace

DerivedChannel zf_transform_general(const ChannelRealization &h, int Mt)
{
    int K = h.K;
    if (Mt < 2 || Mt > K - 1)
        throw std::invalid_argument("zf_transform_general: requires 2 <= Mt <= K-1");

    DerivedChannel dc;
    dc.scheme = DerivedScheme::GENERAL;
    dc.K = K;
    dc.Mt = Mt;
    dc.L = h.L;
    dc.coeffs.assign(2, std::vector<Eigen::MatrixXcd>(static_cast<size_t>(h.L), Eigen::MatrixXcd::Zero(K, K)));
    dc.masks.assign(2, Eigen::MatrixXi::Zero(K, K));

    for (int j = 1; j <= K; ++j)
        for (int m = 1; m <= dc.streams(j); ++m)
        {
            Eigen::MatrixXi &mk = dc.masks[static_cast<size_t>(m - 1)];
            for (int i = 1; i < Mt; ++i)
                if (i != j)
                    mk(i - 1, j - 1) = static_cast<int>(Triviality::FORCED_ZERO);
        }

    for (int l = 1; l <= h.L; ++l)
    {
        const Eigen::MatrixXcd &H = h.slice(l);
        auto beams = general_beams(H, K, Mt);
        for (int j = 1; j <= K; ++j)
            for (int m = 1; m <= dc.streams(j); ++m)
            {
                const ZFBeam &b = beams[static_cast<size_t>(j - 1)][static_cast<size_t>(m - 1)];
                for (int i = 1; i <= K; ++i)
                    dc.coeffs[static_cast<size_t>(m - 1)][static_cast<size_t>(l - 1)](i - 1, j - 1) =
                        beam_gain(H, i, b);
            }
    }
    return dc;
}

bool verify_triviality(const DerivedChannel &dc, double tol)
{
    for (int j = 1; j <= dc.K; ++j)
        for (int m = 1; m <= dc.streams(j); ++m)
            for (int i = 1; i <= dc.K; ++i)
            {
                Triviality t = dc.mask(i, j, m);
                if (t == Triviality::FREE)
                    continue;
                std::complex<double> want = (t == Triviality::FORCED_ONE) ? 1.0 : 0.0;
                for (int l = 1; l <= dc.L; ++l)
                    if (std::abs(dc.g(i, j, m, l) - want) > tol)
                        return false;
            }
    return true;
}

namespace
{

static Eigen::MatrixXcd unvec(const Eigen::VectorXcd &t, int K)
{
    return Eigen::Map<const Eigen::MatrixXcd>(t.data(), K, K);
}

} // namespace

RationalMap km2_coefficient_map(int K)
{
    if (K < 4)
        throw std::invalid_argument("km2_coefficient_map: requires K >= 4");
    int Mt = K - 2;

    // Row blocks: (row, cols, xrows) with g-block = H(row, cols) H(xrows, cols)^-1.
    struct Block
    {
        int row;
        IndexSet cols, xrows;
    };
    std::vector<Block> blocks;
    blocks.push_back({1, up_set(1, Mt, K), up_set(2, Mt, K)});
    for (int i = 1; i <= K; ++i)
        blocks.push_back({i, up_set(wrap_1k(i + 1, K), Mt, K), up_set(wrap_1k(i + 2, K), Mt, K)});

    RationalMap f;
    f.n_inputs = K * K;
    f.n_outputs = static_cast<int>(blocks.size()) * Mt;
    f.singular_guard = [K, blocks](const Eigen::VectorXcd &t) {
        Eigen::MatrixXcd H = unvec(t, K);
        for (const Block &b : blocks)
            if (!Eigen::FullPivLU<Eigen::MatrixXcd>(submatrix(H, b.xrows, b.cols)).isInvertible())
                return false;
        return true;
    };
    f.eval = [K, Mt, blocks](const Eigen::VectorXcd &t) {
        Eigen::MatrixXcd H = unvec(t, K);
        Eigen::VectorXcd out(static_cast<Eigen::Index>(blocks.size()) * Mt);
        Eigen::Index at = 0;
        for (const Block &b : blocks)
        {
            Eigen::PartialPivLU<Eigen::MatrixXcd> lu(submatrix(H, b.xrows, b.cols));
            Eigen::RowVectorXcd g = submatrix(H, {b.row}, b.cols).row(0) * lu.inverse();
            for (int m = 0; m < Mt; ++m)
                out[at++] = g[m];
        }
        return out;
    };
    return f;
}

int general_generator_count(int K, int Mt)
{
    if (Mt < 2 || Mt > K - 1)
        throw std::invalid_argument("general_generator_count: requires 2 <= Mt <= K-1");
    return (K - Mt + 1) * (K + Mt - 2);
}

RationalMap general_claim_map(int K, int Mt, int receiver)
{
    if (Mt < 2 || Mt > K - 1)
        throw std::invalid_argument("general_claim_map: requires 2 <= Mt <= K-1");
    if (receiver < 1 || receiver > K)
        throw std::invalid_argument("general_claim_map: receiver outside 1..K");

    int n_signal = receiver < Mt ? 2 : 1;
    RationalMap f;
    f.n_inputs = K * K;
    f.n_outputs = n_signal + general_generator_count(K, Mt);
    f.eval = [K, Mt, receiver, n_signal](const Eigen::VectorXcd &t) {
        Eigen::MatrixXcd H = unvec(t, K);
        auto beams = general_beams(H, K, Mt);
        auto gain = [&](int i, int j, int m) {
            return beam_gain(H, i, beams[static_cast<size_t>(j - 1)][static_cast<size_t>(m - 1)]);
        };
        Eigen::VectorXcd out(n_signal + general_generator_count(K, Mt));
        Eigen::Index at = 0;
        for (int m = 1; m <= n_signal; ++m)
            out[at++] = gain(receiver, receiver, m);
        for (int j = 1; j < Mt; ++j)
            for (int i = Mt; i <= K; ++i)
                for (int m = 1; m <= 2; ++m)
                    out[at++] = gain(i, j, m);
        for (int j = Mt; j <= K; ++j)
            for (int i = Mt; i <= K; ++i)
                if (i != j)
                    out[at++] = gain(i, j, 1);
        return out;
    };
    return f;
}

} // namespace compdof
