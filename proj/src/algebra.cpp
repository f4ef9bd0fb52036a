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

#include "compdof/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "compdof/errors.hpp"
#include "compdof/rng.hpp"

namespace compdof
{

static constexpr int max_resample_attempts = 64;

static void check_map(const RationalMap &f)
{
    if (f.n_inputs < 1 || f.n_outputs < 1 || !f.eval)
        throw std::invalid_argument("RationalMap: needs n_inputs >= 1, n_outputs >= 1 and an eval function");
}

static Eigen::VectorXcd eval_checked(const RationalMap &f, const Eigen::VectorXcd &t)
{
    Eigen::VectorXcd y = f.eval(t);
    if (y.size() != f.n_outputs)
        throw std::invalid_argument("RationalMap: eval returned wrong output dimension");
    return y;
}

Eigen::MatrixXcd numeric_jacobian(const RationalMap &f, const Eigen::VectorXcd &point, double step)
{
    check_map(f);
    if (point.size() != f.n_inputs)
        throw std::invalid_argument("numeric_jacobian: point dimension mismatch");
    if (!(step > 0.0))
        throw std::invalid_argument("numeric_jacobian: step must be positive");
    if (!f.defined_at(point))
        throw numerical_error("numeric_jacobian: map is singular at the evaluation point");

    Eigen::MatrixXcd J(f.n_outputs, f.n_inputs);
    Eigen::VectorXcd probe = point;
    for (int j = 0; j < f.n_inputs; ++j)
    {
        double delta = step * std::max(1.0, std::abs(point[j]));
        probe[j] = point[j] + delta;
        if (!f.defined_at(probe))
            throw numerical_error("numeric_jacobian: map is singular at a probe point");
        Eigen::VectorXcd fp = eval_checked(f, probe);
        probe[j] = point[j] - delta;
        if (!f.defined_at(probe))
            throw numerical_error("numeric_jacobian: map is singular at a probe point");
        Eigen::VectorXcd fm = eval_checked(f, probe);
        probe[j] = point[j];
        J.col(j) = (fp - fm) / (2.0 * delta);
    }
    return J;
}

int numeric_rank(const Eigen::MatrixXcd &M, double rel_tol)
{
    if (!M.allFinite())
        throw std::invalid_argument("numeric_rank: matrix has non-finite entries");
    if (M.size() == 0)
        return 0;
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("numeric_rank: rel_tol must be positive");

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0)
        return 0;
    double thresh = rel_tol * sv[0] * static_cast<double>(std::max(M.rows(), M.cols()));
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > thresh)
            ++r;
    return r;
}

// Draw a generic point for `f`, skipping the singular locus.
static Eigen::VectorXcd generic_point(const RationalMap &f, Pcg32 &rng)
{
    Eigen::VectorXcd t(f.n_inputs);
    for (int attempt = 0; attempt < max_resample_attempts; ++attempt)
    {
        for (int i = 0; i < f.n_inputs; ++i)
            t[i] = rng.next_complex_normal();
        if (f.defined_at(t))
            return t;
    }
    throw numerical_error("generic sampling: singular_guard rejected every attempt");
}

int structural_rank(const RationalMap &f, int trials, std::uint64_t seed)
{
    check_map(f);
    if (trials < 1)
        throw std::invalid_argument("structural_rank: trials must be >= 1");

    int best = 0;
    for (int trial = 0; trial < trials; ++trial)
    {
        Pcg32 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        Eigen::VectorXcd t = generic_point(f, rng);
        best = std::max(best, numeric_rank(numeric_jacobian(f, t)));
    }
    return best;
}

bool is_algebraically_independent(const RationalMap &f, int trials, std::uint64_t seed)
{
    check_map(f);
    if (f.n_outputs > f.n_inputs)
        return false; // more functions than variables can never be independent
    return structural_rank(f, trials, seed) == f.n_outputs;
}

Eigen::MatrixXcd monomial_matrix(const RationalMap &f, const std::vector<ExponentVector> &exponents,
                                 int p, std::uint64_t seed)
{
    check_map(f);
    int q = static_cast<int>(exponents.size());
    if (q < 1)
        throw std::invalid_argument("monomial_matrix: need at least one exponent vector");
    if (p < q)
        throw std::invalid_argument("monomial_matrix: p must be >= q");
    for (const ExponentVector &a : exponents)
    {
        if (static_cast<int>(a.size()) != f.n_outputs)
            throw std::invalid_argument("monomial_matrix: exponent vector length must equal n_outputs");
        for (int e : a)
            if (e < 0)
                throw std::invalid_argument("monomial_matrix: exponents must be non-negative");
    }

    Eigen::MatrixXcd M(p, q);
    for (int r = 0; r < p; ++r)
    {
        Pcg32 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        Eigen::VectorXcd s = eval_checked(f, generic_point(f, rng));
        for (int c = 0; c < q; ++c)
        {
            std::complex<double> v = 1.0;
            const ExponentVector &a = exponents[static_cast<size_t>(c)];
            for (int i = 0; i < f.n_outputs; ++i)
                for (int e = 0; e < a[static_cast<size_t>(i)]; ++e)
                    v *= s[i];
            M(r, c) = v;
        }
    }
    return M;
}

bool monomial_matrix_full_rank(const RationalMap &f, const std::vector<ExponentVector> &exponents,
                               std::uint64_t seed)
{
    int q = static_cast<int>(exponents.size());
    Eigen::MatrixXcd M = monomial_matrix(f, exponents, q, seed);
    for (int c = 0; c < q; ++c)
    {
        double n = M.col(c).norm();
        if (n > 0.0)
            M.col(c) /= n;
    }
    return numeric_rank(M) == q;
}

// ---------------------------------------------------------------------------
// Jacobian determinant certificate for the Mt = K-2 derived coefficients
// ---------------------------------------------------------------------------

namespace
{

// One coefficient row g = N * X^-1 where N = H(row, cols), X = H(xrows, cols).
struct CoeffRow
{
    int row;       // the single receiver row of N
    IndexSet cols; // shared column set
    IndexSet xrows;
};

static std::vector<CoeffRow> claim2_rows(int K)
{
    std::vector<CoeffRow> rows;
    int Mt = K - 2;
    rows.push_back({1, up_set(1, Mt, K), up_set(2, Mt, K)});
    for (int i = 1; i <= K; ++i)
    {
        int ip1 = (i % K) + 1;
        int ip2 = (ip1 % K) + 1;
        rows.push_back({i, up_set(ip1, Mt, K), up_set(ip2, Mt, K)});
    }
    return rows;
}

// Variables, in Jacobian column order: the h_0 diagonal block then h_1..h_K.
static std::vector<std::pair<int, int>> claim2_variables(int K)
{
    std::vector<std::pair<int, int>> vars;
    int Mt = K - 2;
    for (int m = 1; m <= Mt; ++m)
        vars.emplace_back(m, m);
    for (int i = 1; i <= K; ++i)
        for (int q : up_set((i % K) + 1, Mt, K))
            vars.emplace_back(i, q);
    return vars;
}

static int position_in(const IndexSet &s, int v)
{
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == v)
            return static_cast<int>(i);
    return -1;
}

} // namespace

Eigen::MatrixXcd claim2_jacobian_submatrix(int K)
{
    if (K < 4)
        throw std::invalid_argument("claim2_jacobian_submatrix: K must be >= 4");
    if (K > max_users)
        throw std::invalid_argument("claim2_jacobian_submatrix: K must be <= " + std::to_string(max_users));

    int Mt = K - 2;
    Eigen::MatrixXcd A = circulant_test_point(K);
    auto rows = claim2_rows(K);
    auto vars = claim2_variables(K);
    int dim = (K + 1) * Mt;
    if (static_cast<int>(vars.size()) != dim)
        throw numerical_error("claim2: variable bookkeeping mismatch");

    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(dim, dim);
    for (int b = 0; b <= K; ++b)
    {
        const CoeffRow &cr = rows[static_cast<size_t>(b)];
        Eigen::MatrixXcd X = submatrix(A, cr.xrows, cr.cols);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(X);
        // det B = 1 at the circulant point; a singular X here would mean the
        // evaluation point itself is broken.
        if (std::abs(lu.determinant()) < 1e-12)
            throw numerical_error("claim2: submatrix singular at the circulant evaluation point");
        Eigen::MatrixXcd Y = lu.solve(Eigen::MatrixXcd::Identity(Mt, Mt));
        Eigen::RowVectorXcd N = submatrix(A, {cr.row}, cr.cols).row(0);
        Eigen::RowVectorXcd w = N * Y;

        // d(N X^-1)/dh_pq = [p = row] * Y.row(pos(q)) - [p in xrows] * w(pos(p)) * Y.row(pos(q))
        for (int c = 0; c < dim; ++c)
        {
            auto [p, q] = vars[static_cast<size_t>(c)];
            int cq = position_in(cr.cols, q);
            if (cq < 0)
                continue;
            std::complex<double> factor = 0.0;
            if (p == cr.row)
                factor += 1.0;
            int xp = position_in(cr.xrows, p);
            if (xp >= 0)
                factor -= w[xp];
            if (factor != 0.0)
                J.block(b * Mt, c, Mt, 1) += factor * Y.row(cq).transpose();
        }
    }
    return J;
}

std::complex<double> claim2_determinant(int K)
{
    Eigen::MatrixXcd J = claim2_jacobian_submatrix(K);
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(J).determinant();
}

IndexSet claim2_variable_columns(int K)
{
    if (K < 4)
        throw std::invalid_argument("claim2_variable_columns: K must be >= 4");
    IndexSet cols;
    for (auto [p, q] : claim2_variables(K))
        cols.push_back((q - 1) * K + p); // vec(H) column-major, 1-based
    return cols;
}

} // namespace compdof
