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

#include "compdof/closed_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "compdof/algebra.hpp"
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

AlignmentChain alignment_matrices(const Eigen::MatrixXcd &H)
{
    if (H.rows() != H.cols())
        throw std::invalid_argument("alignment_matrices: H must be square");
    int K = static_cast<int>(H.rows());
    if (K < 3)
        throw std::invalid_argument("alignment_matrices: K must be >= 3");

    int Mt = K - 1;
    AlignmentChain chain;
    chain.B.reserve(static_cast<size_t>(K));
    chain.product = Eigen::MatrixXcd::Identity(Mt, Mt);
    for (int k = 1; k <= K; ++k)
    {
        IndexSet Tk = up_set(k, Mt, K);
        IndexSet Tk1 = up_set(wrap_1k(k + 1, K), Mt, K);
        IndexSet Tk2 = up_set(wrap_1k(k + 2, K), Mt, K);
        Eigen::MatrixXcd X = submatrix(H, Tk2, Tk1);
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(X);
        if (!lu.isInvertible())
            throw numerical_error("alignment_matrices: H(T_" + std::to_string(wrap_1k(k + 2, K)) + ",T_" +
                                  std::to_string(wrap_1k(k + 1, K)) + ") is singular");
        chain.B.push_back(lu.solve(submatrix(H, Tk2, Tk)));
    }
    for (int k = 1; k <= K; ++k)
        chain.product = chain.B[static_cast<size_t>(k - 1)] * chain.product;
    return chain;
}

BeamPair closed_form_beams(const Eigen::MatrixXcd &H, int eig_index)
{
    int K = static_cast<int>(H.rows());
    AlignmentChain chain = alignment_matrices(H);
    int Mt = K - 1;
    if (eig_index < 1 || eig_index > Mt)
        throw std::invalid_argument("closed_form_beams: eig_index outside 1..K-1");

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(chain.product);
    if (es.info() != Eigen::Success)
        throw numerical_error("closed_form_beams: eigen decomposition failed");

    // Deterministic ordering: descending magnitude, ties broken by angle.
    std::vector<int> order(static_cast<size_t>(Mt));
    std::iota(order.begin(), order.end(), 0);
    const auto &ev = es.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&ev](int a, int b) {
        double ma = std::abs(ev[a]), mb = std::abs(ev[b]);
        if (ma != mb)
            return ma > mb;
        return std::arg(ev[a]) < std::arg(ev[b]);
    });
    chain.eigenvector_index = eig_index;

    std::vector<Eigen::VectorXcd> v(static_cast<size_t>(K));
    v[0] = es.eigenvectors().col(order[static_cast<size_t>(eig_index - 1)]);
    v[0] /= v[0].norm();
    for (int k = 1; k < K; ++k)
        v[static_cast<size_t>(k)] = chain.B[static_cast<size_t>(k - 1)] * v[static_cast<size_t>(k - 1)];

    Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(K, K);
    for (int k = 1; k <= K; ++k)
    {
        IndexSet Tk = up_set(k, Mt, K);
        for (size_t t = 0; t < Tk.size(); ++t)
            V(Tk[t] - 1, k - 1) = v[static_cast<size_t>(k - 1)][static_cast<Eigen::Index>(t)];
    }

    Eigen::MatrixXcd M = H * V;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    if (!lu.isInvertible())
        throw numerical_error("closed_form_beams: HV is singular");
    Eigen::MatrixXcd U = lu.inverse().transpose();

    BeamPair pair;
    pair.V = std::move(V);
    pair.U = std::move(U);
    auto masks = comp_smatrices(K, Mt, 2);
    pair.Vbar = std::move(masks.first);
    pair.Ubar = std::move(masks.second);
    return pair;
}

bool verify_alignment_conditions(const Eigen::MatrixXcd &M, const CooperationPattern &pattern,
                                 double rel_tol)
{
    if (M.rows() != M.cols() || M.rows() != pattern.K)
        throw std::invalid_argument("verify_alignment_conditions: M must be K x K");
    int K = pattern.K;
    int Mr = pattern.Mr;

    IndexSet all(static_cast<size_t>(K));
    std::iota(all.begin(), all.end(), 1);

    for (int k = 1; k <= K; ++k)
    {
        // Column form: interference columns seen by receive set R_k.
        IndexSet cols = complement({k}, K);
        if (numeric_rank(submatrix(M, pattern.receive_set(k), cols), rel_tol) != Mr - 1)
            return false;

        // Row form at j = k-1 (wrapped): complementary to the column form by
        // the nullity theorem.
        int j = wrap_1k(k - 1, K);
        IndexSet rows = complement({j}, K);
        if (numeric_rank(submatrix(M, rows, down_set(j, Mr, K)), rel_tol) != Mr - 1)
            return false;
    }
    return true;
}

} // namespace compdof
