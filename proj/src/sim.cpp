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

#include "compdof/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "compdof/channel.hpp"
#include "compdof/closed_form.hpp"
#include "compdof/errors.hpp"
#include "compdof/rng.hpp"

namespace compdof
{

std::string scheme_name(Scheme s)
{
    switch (s)
    {
    case Scheme::ZF_BROADCAST:
        return "zf";
    case Scheme::CLOSED_FORM:
        return "cf";
    case Scheme::FULL_DOF_SMD:
        return "smd";
    }
    throw std::invalid_argument("scheme_name: unknown scheme");
}

Scheme scheme_from_name(const std::string &name)
{
    if (name == "zf")
        return Scheme::ZF_BROADCAST;
    if (name == "cf")
        return Scheme::CLOSED_FORM;
    if (name == "smd")
        return Scheme::FULL_DOF_SMD;
    throw std::invalid_argument("scheme_from_name: unknown scheme '" + name + "'");
}

BeamPair zf_broadcast_beams(const Eigen::MatrixXcd &H)
{
    if (H.rows() != H.cols() || H.rows() < 1)
        throw std::invalid_argument("zf_broadcast_beams: H must be square and non-empty");
    const int K = (int)H.rows();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(H);
    if (!lu.isInvertible())
        throw numerical_error("zf_broadcast_beams: channel matrix is numerically singular");
    BeamPair b;
    b.V = lu.inverse();
    b.U = Eigen::MatrixXcd::Identity(K, K);
    auto masks = comp_smatrices(K, K, 1);
    b.Vbar = masks.first;
    b.Ubar = masks.second;
    return b;
}

double sum_rate(const Eigen::MatrixXcd &H, const BeamPair &beams, double snr_db)
{
    const Eigen::Index K = H.rows();
    if (H.cols() != K || beams.V.rows() != K || beams.V.cols() != K || beams.U.rows() != K ||
        beams.U.cols() != K)
        throw std::invalid_argument("sum_rate: H, V, U must all be K x K");

    const double P = std::pow(10.0, snr_db / 10.0);

    // Worst-loaded transmit antenna meets P: antenna i radiates sum_k |v_ik|^2.
    double worst = 0.0;
    for (Eigen::Index i = 0; i < K; ++i)
        worst = std::max(worst, beams.V.row(i).squaredNorm());
    if (!(worst > 0.0))
        throw numerical_error("sum_rate: beamforming matrix is zero");
    const double c2 = P / worst;

    const Eigen::MatrixXcd E = beams.U.transpose() * H * beams.V;
    double rate = 0.0;
    for (Eigen::Index k = 0; k < K; ++k)
    {
        const double signal = c2 * std::norm(E(k, k));
        double interference = 0.0;
        for (Eigen::Index j = 0; j < K; ++j)
            if (j != k)
                interference += std::norm(E(k, j));
        const double noise = beams.U.col(k).squaredNorm();
        const double sinr = signal / (noise + c2 * interference);
        if (!std::isfinite(sinr))
            throw numerical_error("sum_rate: non-finite SINR");
        rate += std::log2(1.0 + sinr);
    }
    return rate;
}

static void validate_budget(const LinkBudget &b)
{
    if (b.K < 1 || b.K > max_users)
        throw std::invalid_argument("sweep: K out of range");
    if (b.trials < 1)
        throw std::invalid_argument("sweep: trials must be at least 1");
    if (b.snr_db.empty())
        throw std::invalid_argument("sweep: SNR grid is empty");
    for (size_t i = 1; i < b.snr_db.size(); ++i)
        if (!(b.snr_db[i] > b.snr_db[i - 1]))
            throw std::invalid_argument("sweep: SNR grid must be strictly increasing");
    if (b.schemes.empty())
        throw std::invalid_argument("sweep: no schemes selected");
    for (Scheme s : b.schemes)
        if (std::count(b.schemes.begin(), b.schemes.end(), s) != 1)
            throw std::invalid_argument("sweep: duplicate scheme");
}

SweepResult sweep(const LinkBudget &budget)
{
    validate_budget(budget);
    const int K = budget.K;
    const int G = (int)budget.snr_db.size();
    const int S = (int)budget.schemes.size();

    int smd_mt = budget.smd_mt;
    int smd_mr = budget.smd_mr;
    if (smd_mt == 0 && smd_mr == 0)
    {
        smd_mt = (K + 2) / 2; // smallest balanced full-cooperation split
        smd_mr = K + 1 - smd_mt;
    }

    SweepResult res;
    res.K = K;
    res.trials = budget.trials;
    res.seed = budget.seed;
    res.best_eigenvector = budget.best_eigenvector;
    res.snr_db = budget.snr_db;
    for (Scheme s : budget.schemes)
    {
        SweepCurve c;
        c.scheme = s;
        switch (s)
        {
        case Scheme::ZF_BROADCAST:
            c.Mt = K;
            c.Mr = 1;
            break;
        case Scheme::CLOSED_FORM:
            if (K < 3)
                throw std::invalid_argument("sweep: closed-form scheme needs K >= 3");
            c.Mt = K - 1;
            c.Mr = 2;
            break;
        case Scheme::FULL_DOF_SMD:
            if (smd_mt < 1 || smd_mr < 1 || smd_mt + smd_mr < K + 1)
                throw std::invalid_argument("sweep: SMD scheme needs Mt + Mr >= K + 1");
            c.Mt = smd_mt;
            c.Mr = smd_mr;
            break;
        }
        res.curves.push_back(std::move(c));
    }

    // rates[s][g][t]
    std::vector<std::vector<std::vector<double>>> rates(
        (size_t)S, std::vector<std::vector<double>>((size_t)G));

    const int cf_fixed = budget.eigenvector_index;
    if (cf_fixed < 1 || cf_fixed > std::max(1, K - 1))
        throw std::invalid_argument("sweep: eigenvector index out of range");

    int accepted = 0;
    std::uint64_t attempt = 0;
    while (accepted < budget.trials)
    {
        if ((long long)res.failed_trials * 10 > (long long)budget.trials)
            throw numerical_error("sweep: more than 10% of trials failed beam computation");

        const ChannelRealization ch = sample_channel(K, 1, derive_seed(budget.seed, attempt));
        ++attempt;
        const Eigen::MatrixXcd &H = ch.slice(1);

        std::vector<std::vector<double>> trial((size_t)S, std::vector<double>((size_t)G));
        bool ok = true;
        try
        {
            for (int s = 0; s < S && ok; ++s)
            {
                switch (budget.schemes[(size_t)s])
                {
                case Scheme::ZF_BROADCAST:
                {
                    const BeamPair b = zf_broadcast_beams(H);
                    for (int g = 0; g < G; ++g)
                        trial[(size_t)s][(size_t)g] = sum_rate(H, b, budget.snr_db[(size_t)g]);
                    break;
                }
                case Scheme::CLOSED_FORM:
                {
                    std::vector<BeamPair> cands;
                    if (budget.best_eigenvector)
                        for (int idx = 1; idx <= K - 1; ++idx)
                            cands.push_back(closed_form_beams(H, idx));
                    else
                        cands.push_back(closed_form_beams(H, cf_fixed));
                    for (int g = 0; g < G; ++g)
                    {
                        double best = -1.0;
                        for (const BeamPair &b : cands)
                            best = std::max(best, sum_rate(H, b, budget.snr_db[(size_t)g]));
                        trial[(size_t)s][(size_t)g] = best;
                    }
                    break;
                }
                case Scheme::FULL_DOF_SMD:
                {
                    const BeamPair b = full_dof_beams(H, smd_mt, smd_mr);
                    for (int g = 0; g < G; ++g)
                        trial[(size_t)s][(size_t)g] = sum_rate(H, b, budget.snr_db[(size_t)g]);
                    break;
                }
                }
            }
        }
        catch (const numerical_error &)
        {
            ok = false;
        }
        if (!ok)
        {
            ++res.failed_trials; // realization dropped for every scheme
            continue;
        }
        for (int s = 0; s < S; ++s)
            for (int g = 0; g < G; ++g)
                rates[(size_t)s][(size_t)g].push_back(trial[(size_t)s][(size_t)g]);
        ++accepted;
    }

    for (int s = 0; s < S; ++s)
    {
        res.curves[(size_t)s].mean_rate.resize((size_t)G);
        res.curves[(size_t)s].stddev.resize((size_t)G);
        for (int g = 0; g < G; ++g)
        {
            std::vector<double> v = rates[(size_t)s][(size_t)g];
            std::sort(v.begin(), v.end()); // order-independent aggregation
            double sum = 0.0;
            for (double x : v)
                sum += x;
            const double mean = sum / (double)v.size();
            double ss = 0.0;
            for (double x : v)
                ss += (x - mean) * (x - mean);
            const double sd = v.size() > 1 ? std::sqrt(ss / (double)(v.size() - 1)) : 0.0;
            if (!std::isfinite(mean) || !std::isfinite(sd))
                throw numerical_error("sweep: non-finite aggregate rate");
            res.curves[(size_t)s].mean_rate[(size_t)g] = mean;
            res.curves[(size_t)s].stddev[(size_t)g] = sd;
        }
    }
    return res;
}

double estimate_dof_slope(const SweepResult &result, Scheme scheme, double lo_db, double hi_db)
{
    const SweepCurve *curve = nullptr;
    for (const auto &c : result.curves)
        if (c.scheme == scheme)
            curve = &c;
    if (curve == nullptr)
        throw std::invalid_argument("estimate_dof_slope: scheme not present in result");

    std::vector<double> xs, ys;
    for (size_t g = 0; g < result.snr_db.size(); ++g)
        if (result.snr_db[g] >= lo_db && result.snr_db[g] <= hi_db)
        {
            xs.push_back(result.snr_db[g]);
            ys.push_back(curve->mean_rate[g]);
        }
    if (xs.size() < 2)
        throw std::invalid_argument("estimate_dof_slope: window must contain at least 2 grid points");

    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < xs.size(); ++i)
    {
        mx += xs[i];
        my += ys[i];
    }
    mx /= (double)xs.size();
    my /= (double)ys.size();
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < xs.size(); ++i)
    {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double bits_per_10db = 10.0 * sxy / sxx;
    return bits_per_10db / std::log2(10.0);
}

static std::string fmt12(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const SweepResult &result)
{
    std::string out = "scheme,snr_db,mean_sum_rate,stddev,trials\n";
    for (const auto &c : result.curves)
        for (size_t g = 0; g < result.snr_db.size(); ++g)
            out += scheme_name(c.scheme) + "," + fmt12(result.snr_db[g]) + "," +
                   fmt12(c.mean_rate[g]) + "," + fmt12(c.stddev[g]) + "," +
                   std::to_string(result.trials) + "\n";
    return out;
}

static std::string json_array(const std::vector<double> &v)
{
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            out += ", ";
        out += fmt12(v[i]);
    }
    return out + "]";
}

std::string to_json(const SweepResult &result)
{
    std::string out = "{\n  \"metadata\": {\n";
    out += "    \"k\": " + std::to_string(result.K) + ",\n";
    out += "    \"trials\": " + std::to_string(result.trials) + ",\n";
    out += "    \"seed\": " + std::to_string(result.seed) + ",\n";
    out += std::string("    \"best_eigenvector\": ") + (result.best_eigenvector ? "true" : "false") +
           ",\n";
    out += "    \"failed_trials\": " + std::to_string(result.failed_trials) + "\n  },\n";
    out += "  \"snr_db\": " + json_array(result.snr_db) + ",\n";
    out += "  \"curves\": [\n";
    for (size_t i = 0; i < result.curves.size(); ++i)
    {
        const auto &c = result.curves[i];
        out += "    {\n";
        out += "      \"scheme\": \"" + scheme_name(c.scheme) + "\",\n";
        out += "      \"mt\": " + std::to_string(c.Mt) + ",\n";
        out += "      \"mr\": " + std::to_string(c.Mr) + ",\n";
        out += "      \"mean_sum_rate\": " + json_array(c.mean_rate) + ",\n";
        out += "      \"stddev\": " + json_array(c.stddev) + "\n";
        out += i + 1 < result.curves.size() ? "    },\n" : "    }\n";
    }
    out += "  ]\n}\n";
    return out;
}

SweepResult sweep_result_from_json(const std::string &text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::invalid_argument(std::string("sweep_result_from_json: ") + e.what());
    }
    SweepResult r;
    const auto &m = j.at("metadata");
    r.K = m.at("k").get<int>();
    r.trials = m.at("trials").get<int>();
    r.seed = m.at("seed").get<std::uint64_t>();
    r.best_eigenvector = m.at("best_eigenvector").get<bool>();
    r.failed_trials = m.at("failed_trials").get<int>();
    r.snr_db = j.at("snr_db").get<std::vector<double>>();
    for (const auto &cj : j.at("curves"))
    {
        SweepCurve c;
        c.scheme = scheme_from_name(cj.at("scheme").get<std::string>());
        c.Mt = cj.at("mt").get<int>();
        c.Mr = cj.at("mr").get<int>();
        c.mean_rate = cj.at("mean_sum_rate").get<std::vector<double>>();
        c.stddev = cj.at("stddev").get<std::vector<double>>();
        if (c.mean_rate.size() != r.snr_db.size() || c.stddev.size() != r.snr_db.size())
            throw std::invalid_argument("sweep_result_from_json: curve length mismatch");
        r.curves.push_back(std::move(c));
    }
    return r;
}

void export_sweep(const SweepResult &result, const std::string &format, const std::string &path)
{
    std::string payload;
    if (format == "csv")
        payload = to_csv(result);
    else if (format == "json")
        payload = to_json(result);
    else
        throw std::invalid_argument("export_sweep: format must be 'csv' or 'json'");

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw resource_error("export_sweep: cannot open '" + path + "' for writing");
    out << payload;
    out.flush();
    if (!out)
        throw resource_error("export_sweep: write to '" + path + "' failed");
}

} // namespace compdof
