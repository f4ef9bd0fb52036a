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

#ifndef COMPDOF_SIM_HPP
#define COMPDOF_SIM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "compdof/smd.hpp"

namespace compdof
{

enum class Scheme
{
    ZF_BROADCAST,  // (Mt, Mr) = (K, 1): V = H^-1, single-antenna receivers
    CLOSED_FORM,   // (Mt, Mr) = (K-1, 2): chained-eigenvector alignment
    FULL_DOF_SMD   // (Mt, Mr) with Mt + Mr >= K + 1: homotopy beams
};

std::string scheme_name(Scheme s);               // "zf", "cf", "smd"
Scheme scheme_from_name(const std::string &name); // inverse; unknown -> argument error

struct LinkBudget
{
    int K = 3;
    std::vector<double> snr_db;     // strictly increasing grid
    int trials = 100;
    std::uint64_t seed = 0;
    std::vector<Scheme> schemes;
    bool best_eigenvector = false;  // CLOSED_FORM: max over eigenvector choices per trial and SNR
    int eigenvector_index = 1;      // CLOSED_FORM fixed policy, 1-based
    int smd_mt = 0;                 // 0 = auto: smallest balanced pair with Mt + Mr = K + 1
    int smd_mr = 0;
};

struct SweepCurve
{
    Scheme scheme = Scheme::ZF_BROADCAST;
    int Mt = 0;
    int Mr = 0;
    std::vector<double> mean_rate; // bits/symbol, one per grid point
    std::vector<double> stddev;    // sample standard deviation
};

struct SweepResult
{
    int K = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool best_eigenvector = false;
    int failed_trials = 0; // resampled realizations (any scheme's beams failed)
    std::vector<double> snr_db;
    std::vector<SweepCurve> curves;
};

// Zero-forcing beams for the broadcast-like pattern (Mt, Mr) = (K, 1):
// V = H^-1 (columns shared by all transmitters), U = I.
BeamPair zf_broadcast_beams(const Eigen::MatrixXcd &H);

// Sum of per-message rates log2(1 + SINR_k). Unit-power symbols; V is scaled
// by the one global factor that makes the most loaded transmit antenna's
// average power equal P = 10^(snr_db/10) against unit noise. SINR counts the
// receive-filter noise gain |u_k|^2 and every off-diagonal of U^T H V as
// interference.
double sum_rate(const Eigen::MatrixXcd &H, const BeamPair &beams, double snr_db);

// Monte-Carlo sweep. Trial t draws the channel from a seed derived from
// (budget.seed, t); all schemes share each realization. A realization any
// scheme fails on is counted, discarded for all schemes, and redrawn; more
// than 10% failures aborts. Per-point aggregation sums trial rates in sorted
// order so results do not depend on evaluation order.
SweepResult sweep(const LinkBudget &budget);

// Least-squares slope of mean sum-rate vs SNR over grid points inside
// [lo_db, hi_db], in bits per 10 dB, divided by log2(10): the DoF estimate.
double estimate_dof_slope(const SweepResult &result, Scheme scheme, double lo_db, double hi_db);

// Serialization: 12 significant digits, deterministic bytes.
// CSV columns: scheme,snr_db,mean_sum_rate,stddev,trials.
std::string to_csv(const SweepResult &result);
std::string to_json(const SweepResult &result);
SweepResult sweep_result_from_json(const std::string &text);
void export_sweep(const SweepResult &result, const std::string &format, const std::string &path);

} // namespace compdof

#endif
