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

#include "compdof/smd.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

#include "compdof/algebra.hpp"
#include "compdof/errors.hpp"

namespace compdof
{

static void check_masks(const SMatrix &Vbar, const SMatrix &Ubar)
{
    if (Vbar.rows() != Vbar.cols() || Ubar.rows() != Ubar.cols() || Vbar.rows() != Ubar.rows())
        throw std::invalid_argument("smd: masks must be square and of equal size");
    for (Eigen::Index i = 0; i < Vbar.rows(); ++i)
        for (Eigen::Index j = 0; j < Vbar.cols(); ++j)
            if ((Vbar(i, j) != 0 && Vbar(i, j) != 1) || (Ubar(i, j) != 0 && Ubar(i, j) != 1))
                throw std::invalid_argument("smd: mask entries must be 0 or 1");
}

std::pair<SMatrix, SMatrix> comp_smatrices(int K, int Mt, int Mr)
{
    CooperationPattern pattern(K, Mt, Mr);
    SMatrix Vbar = SMatrix::Zero(K, K);
    SMatrix Ubar = SMatrix::Zero(K, K);
    for (int k = 1; k <= K; ++k)
    {
        for (int i : pattern.transmit_set(k))
            Vbar(i - 1, k - 1) = 1;
        for (int i : pattern.receive_set(k))
            Ubar(i - 1, k - 1) = 1;
    }
    return {Vbar, Ubar};
}

bool smd_feasible(const SMatrix &Vbar, const SMatrix &Ubar)
{
    check_masks(Vbar, Ubar);
    Eigen::Index K = Vbar.rows();
    for (Eigen::Index k = 0; k < K; ++k)
        if (Vbar(k, k) != 1 || Ubar(k, k) != 1)
            return false;
    for (Eigen::Index i = 0; i < K; ++i)
        for (Eigen::Index j = 0; j < K; ++j)
            if (Vbar(i, j) + Ubar(j, i) == 0)
                return false;
    return true;
}

namespace
{

// Free-variable layout for the masked factorization: every unmasked V entry,
// plus every unmasked off-diagonal U entry (u_kk is pinned to 1).
struct SmdSlots
{
    int K = 0;
    std::vector<std::pair<int, int>> v_slots; // 0-based (i,j)
    std::vector<std::pair<int, int>> u_slots;

    int count() const { return static_cast<int>(v_slots.size() + u_slots.size()); }

    void unpack(const Eigen::VectorXcd &x, Eigen::MatrixXcd &V, Eigen::MatrixXcd &U) const
    {
        V = Eigen::MatrixXcd::Zero(K, K);
        U = Eigen::MatrixXcd::Zero(K, K);
        for (int k = 0; k < K; ++k)
            U(k, k) = 1.0;
        int idx = 0;
        for (auto [i, j] : v_slots)
            V(i, j) = x[idx++];
        for (auto [i, j] : u_slots)
            U(i, j) = x[idx++];
    }

    Eigen::VectorXcd identity_point() const
    {
        Eigen::VectorXcd x = Eigen::VectorXcd::Zero(count());
        int idx = 0;
        for (auto [i, j] : v_slots)
            x[idx++] = (i == j) ? 1.0 : 0.0;
        return x; // u off-diagonals start at zero
    }
};

static SmdSlots make_slots(const SMatrix &Vbar, const SMatrix &Ubar)
{
    SmdSlots s;
    s.K = static_cast<int>(Vbar.rows());
    for (int i = 0; i < s.K; ++i)
        for (int j = 0; j < s.K; ++j)
            if (Vbar(i, j) == 1)
                s.v_slots.emplace_back(i, j);
    for (int i = 0; i < s.K; ++i)
        for (int j = 0; j < s.K; ++j)
            if (i != j && Ubar(i, j) == 1)
                s.u_slots.emplace_back(i, j);
    return s;
}

// Residual vec(V U^T - A), column-major.
static Eigen::VectorXcd smd_residual(const SmdSlots &slots, const Eigen::VectorXcd &x,
                                     const Eigen::MatrixXcd &A)
{
    Eigen::MatrixXcd V, U;
    slots.unpack(x, V, U);
    Eigen::MatrixXcd R = V * U.transpose() - A;
    return Eigen::Map<Eigen::VectorXcd>(R.data(), R.size());
}

// Analytic Jacobian of vec(V U^T) w.r.t. the free variables:
//   d(VU^T)_pq / dv_ij = [p=i] u_qj,   d(VU^T)_pq / du_ij = [q=i] v_pj.
static Eigen::MatrixXcd smd_jacobian(const SmdSlots &slots, const Eigen::VectorXcd &x)
{
    int K = slots.K;
    Eigen::MatrixXcd V, U;
    slots.unpack(x, V, U);
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(K * K, slots.count());
    int col = 0;
    for (auto [i, j] : slots.v_slots)
    {
        for (int q = 0; q < K; ++q)
            J(q * K + i, col) = U(q, j);
        ++col;
    }
    for (auto [i, j] : slots.u_slots)
    {
        for (int p = 0; p < K; ++p)
            J(i * K + p, col) = V(p, j);
        ++col;
    }
    return J;
}

// Damped Gauss-Newton with minimum-norm steps. Returns the best point found
// and its infinity-norm residual.
static std::pair<Eigen::VectorXcd, double> gauss_newton(const SmdSlots &slots, Eigen::VectorXcd x,
                                                        const Eigen::MatrixXcd &A, double target,
                                                        int max_iters)
{
    Eigen::VectorXcd F = smd_residual(slots, x, A);
    double best = F.lpNorm<Eigen::Infinity>();
    Eigen::VectorXcd x_best = x;
    for (int iter = 0; iter < max_iters && best > target; ++iter)
    {
        Eigen::MatrixXcd J = smd_jacobian(slots, x);
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(J);
        Eigen::VectorXcd step = cod.solve(-F);

        double f0 = F.squaredNorm();
        double alpha = 1.0;
        bool improved = false;
        for (int h = 0; h < 30; ++h, alpha *= 0.5)
        {
            Eigen::VectorXcd x_try = x + alpha * step;
            Eigen::VectorXcd F_try = smd_residual(slots, x_try, A);
            if (F_try.squaredNorm() < f0)
            {
                x = std::move(x_try);
                F = std::move(F_try);
                improved = true;
                break;
            }
        }
        if (!improved)
            break;
        double r = F.lpNorm<Eigen::Infinity>();
        if (r < best)
        {
            best = r;
            x_best = x;
        }
    }
    return {std::move(x_best), best};
}

// One continuation run along A(s) = (1-s)*gamma*I + s*A from the scaled
// identity factorization. A real segment from I can pass arbitrarily close to
// the discriminant of the masked factorization (where the Jacobian drops
// rank and the corrector stalls); a unit-modulus complex gamma bends the path
// into the complex plane, which misses that hypersurface for generic targets.
// Returns false if the adaptive step underflows.
static bool track_path(const SmdSlots &slots, const Eigen::MatrixXcd &A,
                       std::complex<double> gamma, const SmdOptions &opts, Eigen::VectorXcd &x_out)
{
    int K = slots.K;
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(K, K);
    Eigen::MatrixXcd dA = A - gamma * I; // constant path velocity
    Eigen::VectorXcd dA_vec = Eigen::Map<Eigen::VectorXcd>(dA.data(), dA.size());

    double scale = std::max(1.0, A.lpNorm<Eigen::Infinity>());
    double ds0 = 1.0 / opts.steps;
    double ds_min = 1.0 / opts.max_total_steps;

    Eigen::VectorXcd x = gamma * slots.identity_point(); // V = gamma*I, U = I
    double s = 0.0;
    double ds = ds0;
    int guard = 0;
    while (s < 1.0)
    {
        double s_next = std::min(1.0, s + ds);
        Eigen::MatrixXcd As = (1.0 - s_next) * gamma * I + s_next * A;
        // Euler predictor along the path tangent J dx/ds = vec(dA/ds), then
        // Gauss-Newton correction at the new arclength.
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(smd_jacobian(slots, x));
        Eigen::VectorXcd x_pred = x + (s_next - s) * cod.solve(dA_vec);
        // Tighter target on the last step so the factorization is polished to
        // the rounding floor rather than left at the path-following tolerance.
        double target = (s_next >= 1.0 ? 1e-3 * opts.newton_tol : opts.newton_tol) * scale;
        auto [x_new, r] = gauss_newton(slots, x_pred, As, target, opts.max_newton_iters);
        if (r <= opts.newton_tol * scale)
        {
            x = std::move(x_new);
            s = s_next;
            ds = std::min(ds * 2.0, ds0);
        }
        else
        {
            ds *= 0.5;
            if (ds < ds_min)
                return false;
        }
        if (++guard > 4 * opts.max_total_steps)
            return false;
    }
    x_out = std::move(x);
    return true;
}

// Fixed phase ladder for the start-system scaling. Any single generic phase
// succeeds for almost every target; the retries cover near-misses while
// keeping the solver fully deterministic.
constexpr double start_phases[] = {0.937187, 2.417113, 4.042271, 5.650941};

} // namespace

int smd_jacobian_rank_at_identity(const SMatrix &Vbar, const SMatrix &Ubar)
{
    if (!smd_feasible(Vbar, Ubar))
        throw std::invalid_argument("smd_jacobian_rank_at_identity: masks are not feasible");
    SmdSlots slots = make_slots(Vbar, Ubar);

    RationalMap f;
    f.n_inputs = slots.count();
    f.n_outputs = slots.K * slots.K;
    f.eval = [slots](const Eigen::VectorXcd &x) {
        Eigen::MatrixXcd V, U;
        slots.unpack(x, V, U);
        Eigen::MatrixXcd P = V * U.transpose();
        return Eigen::VectorXcd(Eigen::Map<Eigen::VectorXcd>(P.data(), P.size()));
    };
    // Central differences are exact (up to rounding) for this bilinear map.
    return numeric_rank(numeric_jacobian(f, slots.identity_point()));
}

BeamPair smd_solve(const Eigen::MatrixXcd &A, const SMatrix &Vbar, const SMatrix &Ubar,
                   const SmdOptions &opts)
{
    if (!smd_feasible(Vbar, Ubar))
        throw std::invalid_argument("smd_solve: masks fail the sufficient feasibility condition "
                                    "(a factorization may still exist; this solver requires the condition)");
    if (A.rows() != Vbar.rows() || A.cols() != Vbar.cols())
        throw std::invalid_argument("smd_solve: A must match the mask size");
    if (!A.allFinite())
        throw std::invalid_argument("smd_solve: A has non-finite entries");
    if (opts.steps < 1)
        throw std::invalid_argument("smd_solve: opts.steps must be >= 1");

    SmdSlots slots = make_slots(Vbar, Ubar);

    Eigen::VectorXcd x;
    bool tracked = false;
    for (double phase : start_phases)
    {
        if (track_path(slots, A, std::polar(1.0, phase), opts, x))
        {
            tracked = true;
            break;
        }
    }
    if (!tracked)
        throw numerical_error("smd_solve: continuation failed for every start phase "
                              "(target appears to lie on the exceptional variety)");

    BeamPair pair;
    pair.Vbar = Vbar;
    pair.Ubar = Ubar;
    slots.unpack(x, pair.V, pair.U);
    double res = (pair.V * pair.U.transpose() - A).lpNorm<Eigen::Infinity>();
    if (!(res <= opts.tol * A.lpNorm<Eigen::Infinity>()))
        throw numerical_error("smd_solve: converged point misses the residual bound (residual " +
                              std::to_string(res) + ")");
    return pair;
}

BeamPair full_dof_beams(const Eigen::MatrixXcd &H, int Mt, int Mr, const SmdOptions &opts)
{
    if (H.rows() != H.cols() || H.rows() < 1)
        throw std::invalid_argument("full_dof_beams: H must be square");
    int K = static_cast<int>(H.rows());
    CooperationPattern pattern(K, Mt, Mr); // validates ranges
    if (Mt + Mr < K + 1)
        throw std::invalid_argument("full_dof_beams: requires Mt + Mr >= K + 1");

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(H);
    if (!lu.isInvertible())
        throw numerical_error("full_dof_beams: channel matrix is singular");
    Eigen::MatrixXcd A = lu.inverse();

    auto [Vbar, Ubar] = comp_smatrices(K, Mt, Mr);
    BeamPair pair = smd_solve(A, Vbar, Ubar, opts);

    double res = (pair.U.transpose() * H * pair.V - Eigen::MatrixXcd::Identity(K, K)).lpNorm<Eigen::Infinity>();
    if (!(res <= 1e-8))
        throw numerical_error("full_dof_beams: effective channel misses identity by " + std::to_string(res));
    return pair;
}

} // namespace compdof
