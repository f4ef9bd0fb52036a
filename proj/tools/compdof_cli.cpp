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

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compdof/algebra.hpp"
#include "compdof/bounds.hpp"
#include "compdof/channel.hpp"
#include "compdof/cj.hpp"
#include "compdof/closed_form.hpp"
#include "compdof/derived.hpp"
#include "compdof/errors.hpp"
#include "compdof/rational.hpp"
#include "compdof/sim.hpp"
#include "compdof/smd.hpp"

using compdof::Rational;
using ojson = nlohmann::ordered_json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_verification = 2;
constexpr int exit_numerical = 3;
constexpr int exit_usage = 64;

struct GlobalFlags
{
    std::uint64_t seed = 0;
    bool json = false;
    double tol = 0.0;
    bool tol_set = false;

    double resolve_tol(double fallback) const { return tol_set ? tol : fallback; }
};

void emit(const ojson &out, bool json_mode, const std::vector<std::string> &text)
{
    if (json_mode)
    {
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto &line : text)
        std::cout << line << "\n";
}

ojson index_set_json(const compdof::IndexSet &s)
{
    ojson a = ojson::array();
    for (int v : s)
        a.push_back(v);
    return a;
}

std::vector<double> parse_grid(const std::string &text)
{
    std::vector<double> grid;
    if (text.find(':') != std::string::npos)
    {
        double lo = 0, step = 0, hi = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        if (!(in >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':' || step <= 0)
            throw std::invalid_argument("simulate: SNR grid must be 'lo:step:hi' or a comma list");
        for (double v = lo; v <= hi + 1e-9; v += step)
            grid.push_back(v);
        return grid;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        grid.push_back(std::stod(tok));
    return grid;
}

// ---------------------------------------------------------------- bounds ---

int run_bounds(const GlobalFlags &g, int K, int Mt, int Mr, int max_set_size, bool list_constraints)
{
    compdof::CooperationPattern pattern(K, Mt, Mr);
    if (max_set_size == 0)
        max_set_size = K;

    const Rational outer = compdof::sum_dof_outer_bound(K, Mt, Mr);
    const auto known = compdof::known_dof(K, Mt, Mr);
    const bool full = compdof::full_dof_condition(K, Mt, Mr);
    std::optional<Rational> miso;
    if (Mt >= 1 && Mt < K)
        miso = compdof::miso_reference_dof(K, Mt);

    ojson out;
    out["config"] = {{"command", "bounds"}, {"k", K},     {"mt", Mt},
                     {"mr", Mr},            {"seed", g.seed}, {"json", g.json},
                     {"max_set_size", max_set_size},          {"constraints", list_constraints}};
    out["outer_bound"] = outer.to_string();
    out["known_dof"] = known ? ojson(known->to_string()) : ojson(nullptr);
    out["full_dof"] = full;
    out["miso_reference"] = miso ? ojson(miso->to_string()) : ojson(nullptr);

    std::vector<std::string> text;
    text.push_back("outer bound on sum DoF: " + outer.to_string());
    text.push_back("known sum DoF: " + (known ? known->to_string() : std::string("open")));
    text.push_back(std::string("full DoF (sum = K) achievable: ") + (full ? "yes" : "no"));
    if (miso)
        text.push_back("single-antenna-receiver reference DoF: " + miso->to_string());

    if (list_constraints)
    {
        auto cons = compdof::region_constraints(pattern, max_set_size);
        ojson arr = ojson::array();
        for (const auto &c : cons)
        {
            arr.push_back({{"users", index_set_json(c.users)},
                           {"bound", c.bound},
                           {"set_a", index_set_json(c.set_a)},
                           {"set_b", index_set_json(c.set_b)}});
            std::string line = "sum d_k over {";
            for (size_t i = 0; i < c.users.size(); ++i)
                line += (i ? "," : "") + std::to_string(c.users[i]);
            line += "} <= " + std::to_string(c.bound);
            text.push_back(line);
        }
        out["region_constraints"] = arr;
    }
    emit(out, g.json, text);
    return exit_ok;
}

// ------------------------------------------------------------- smd-solve ---

int run_smd_solve(const GlobalFlags &g, int K, int Mt, int Mr, int steps)
{
    const double tol = g.resolve_tol(1e-8);
    compdof::CooperationPattern pattern(K, Mt, Mr);
    auto masks = compdof::comp_smatrices(K, Mt, Mr);
    if (!compdof::smd_feasible(masks.first, masks.second))
        throw std::invalid_argument("smd-solve: pattern (" + std::to_string(K) + "," + std::to_string(Mt) +
                                    "," + std::to_string(Mr) +
                                    ") admits no structured decomposition (needs Mt + Mr >= K + 1)");

    const auto ch = compdof::sample_channel(K, 1, g.seed);
    const Eigen::MatrixXcd &A = ch.slice(1);
    compdof::SmdOptions opts;
    if (steps > 0)
        opts.steps = steps;
    const compdof::BeamPair b = compdof::smd_solve(A, masks.first, masks.second, opts);

    const double residual = (b.V * b.U.transpose() - A).cwiseAbs().maxCoeff();
    double masked = 0.0;
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
        {
            if (!masks.first(i, j))
                masked = std::max(masked, std::abs(b.V(i, j)));
            if (!masks.second(i, j))
                masked = std::max(masked, std::abs(b.U(i, j)));
        }
    const bool pass = residual <= tol && masked == 0.0;

    ojson out;
    out["config"] = {{"command", "smd-solve"}, {"k", K},     {"mt", Mt},          {"mr", Mr},
                     {"seed", g.seed},         {"json", g.json}, {"steps", opts.steps}, {"tol", tol}};
    out["feasible"] = true;
    out["residual"] = residual;
    out["masked_entry_max"] = masked;
    out["pass"] = pass;

    emit(out, g.json,
         {"structured decomposition found", "residual |V U^T - A|_inf = " + std::to_string(residual),
          std::string("verification: ") + (pass ? "pass" : "fail")});
    return pass ? exit_ok : exit_verification;
}

// -------------------------------------------------------------- full-dof ---

int run_full_dof(const GlobalFlags &g, int K, int Mt, int Mr)
{
    const double tol = g.resolve_tol(1e-8);
    const auto ch = compdof::sample_channel(K, 1, g.seed);
    const Eigen::MatrixXcd &H = ch.slice(1);
    const compdof::BeamPair b = compdof::full_dof_beams(H, Mt, Mr);

    const Eigen::MatrixXcd E = b.U.transpose() * H * b.V;
    const double residual =
        (E - Eigen::MatrixXcd::Identity(K, K)).cwiseAbs().maxCoeff();
    double masked = 0.0;
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
        {
            if (!b.Vbar(i, j))
                masked = std::max(masked, std::abs(b.V(i, j)));
            if (!b.Ubar(i, j))
                masked = std::max(masked, std::abs(b.U(i, j)));
        }
    const bool pass = residual <= tol && masked == 0.0;

    ojson out;
    out["config"] = {{"command", "full-dof"}, {"k", K},     {"mt", Mt},
                     {"mr", Mr},              {"seed", g.seed}, {"json", g.json},
                     {"tol", tol}};
    out["achieved_sum_dof"] = K;
    out["residual"] = residual;
    out["masked_entry_max"] = masked;
    out["pass"] = pass;

    emit(out, g.json,
         {"each user decodes one interference-free stream (sum DoF " + std::to_string(K) + ")",
          "residual |U^T H V - I|_inf = " + std::to_string(residual),
          std::string("verification: ") + (pass ? "pass" : "fail")});
    return pass ? exit_ok : exit_verification;
}

// ----------------------------------------------------- align-closed-form ---

int run_align_closed_form(const GlobalFlags &g, int K, int eig)
{
    const double tol = g.resolve_tol(1e-8);
    const auto ch = compdof::sample_channel(K, 1, g.seed);
    const Eigen::MatrixXcd &H = ch.slice(1);
    const compdof::BeamPair b = compdof::closed_form_beams(H, eig);
    const compdof::CooperationPattern pattern(K, K - 1, 2);

    const Eigen::MatrixXcd E = b.U.transpose() * H * b.V;
    const double residual =
        (E - Eigen::MatrixXcd::Identity(K, K)).cwiseAbs().maxCoeff();
    double u_leak = 0.0, v_masked = 0.0;
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
        {
            if (!b.Ubar(i, j))
                u_leak = std::max(u_leak, std::abs(b.U(i, j)));
            if (!b.Vbar(i, j))
                v_masked = std::max(v_masked, std::abs(b.V(i, j)));
        }
    const bool aligned = compdof::verify_alignment_conditions(H * b.V, pattern);
    const bool pass = residual <= tol && u_leak <= tol && v_masked == 0.0 && aligned;

    ojson out;
    out["config"] = {{"command", "align-closed-form"}, {"k", K},     {"eig", eig},
                     {"seed", g.seed},                 {"json", g.json}, {"tol", tol}};
    out["residual"] = residual;
    out["receive_filter_leakage"] = u_leak;
    out["masked_beam_max"] = v_masked;
    out["alignment_conditions"] = aligned;
    out["pass"] = pass;

    emit(out, g.json,
         {"chained-eigenvector beams for (Mt, Mr) = (K-1, 2)",
          "residual |U^T H V - I|_inf = " + std::to_string(residual),
          "receive filter leakage outside its two-entry band = " + std::to_string(u_leak),
          std::string("interference alignment conditions: ") + (aligned ? "hold" : "violated"),
          std::string("verification: ") + (pass ? "pass" : "fail")});
    return pass ? exit_ok : exit_verification;
}

// ---------------------------------------------------------------- derive ---

compdof::DerivedChannel make_derived(const std::string &scheme, int K, int &Mt, int n,
                                     std::uint64_t seed, int &L)
{
    if (scheme == "km2")
    {
        if (Mt != 0 && Mt != K - 2)
            throw std::invalid_argument("the km2 scheme fixes Mt = K - 2");
        Mt = K - 2;
        L = compdof::required_parallel_channels_km2(K, n);
        return compdof::zf_transform_km2(compdof::sample_channel(K, L, seed));
    }
    if (scheme == "general")
    {
        if (Mt == 0)
            throw std::invalid_argument("the general scheme requires --mt");
        L = compdof::required_parallel_channels_general(K, Mt, n);
        return compdof::zf_transform_general(compdof::sample_channel(K, L, seed), Mt);
    }
    throw std::invalid_argument("scheme must be 'km2' or 'general'");
}

int run_derive(const GlobalFlags &g, const std::string &scheme, int K, int Mt, int n)
{
    const double tol = g.resolve_tol(1e-10);
    int L = 0;
    const compdof::DerivedChannel dc = make_derived(scheme, K, Mt, n, g.seed, L);
    const bool trivial_ok = compdof::verify_triviality(dc, tol);
    const int generators = scheme == "km2" ? K * Mt : compdof::general_generator_count(K, Mt);

    ojson streams = ojson::array();
    int total_streams = 0;
    for (int j = 1; j <= K; ++j)
    {
        streams.push_back(dc.streams(j));
        total_streams += dc.streams(j);
    }

    ojson out;
    out["config"] = {{"command", "derive"}, {"scheme", scheme}, {"k", K},     {"mt", Mt},
                     {"n", n},              {"seed", g.seed},   {"json", g.json}, {"tol", tol}};
    out["parallel_channels"] = L;
    out["generators"] = generators;
    out["streams_per_cell"] = streams;
    out["total_streams"] = total_streams;
    out["forced_entries_ok"] = trivial_ok;

    emit(out, g.json,
         {"derived channel over " + std::to_string(L) + " parallel channels, " +
              std::to_string(generators) + " interference generators",
          std::string("forced unit/zero coefficients: ") + (trivial_ok ? "verified" : "violated")});
    return trivial_ok ? exit_ok : exit_verification;
}

// ------------------------------------------------------------- cj-verify ---

int run_cj_verify(const GlobalFlags &g, const std::string &scheme, int K, int Mt, int n)
{
    const double tol = g.resolve_tol(1e-9);
    int L = 0;
    const compdof::DerivedChannel dc = make_derived(scheme, K, Mt, n, g.seed, L);
    const auto Mks = scheme == "km2" ? compdof::build_mk_km2(dc, n) : compdof::build_mk_general(dc, n);
    const auto rep = compdof::verify_decodability(Mks, tol);
    const auto ds = scheme == "km2" ? compdof::DerivedScheme::KM2 : compdof::DerivedScheme::GENERAL;
    const Rational dof = compdof::achievable_dof(K, Mt, ds, n);
    const Rational limit = compdof::achievable_dof_limit(K, Mt, ds);

    ojson receivers = ojson::array();
    for (const auto &e : rep.receivers)
        receivers.push_back(
            {{"rows", e.rows}, {"cols", e.cols}, {"rank", e.rank}, {"pass", e.pass}});

    ojson out;
    out["config"] = {{"command", "cj-verify"}, {"scheme", scheme}, {"k", K},     {"mt", Mt},
                     {"n", n},                 {"seed", g.seed},   {"json", g.json}, {"tol", tol}};
    out["parallel_channels"] = rep.L;
    out["achievable_dof"] = dof.to_string();
    out["achievable_dof_limit"] = limit.to_string();
    out["receivers"] = receivers;
    out["conditioning_warning"] = rep.conditioning_warning;
    out["pass"] = rep.pass;

    std::vector<std::string> text;
    text.push_back("alignment order " + std::to_string(n) + " over " + std::to_string(rep.L) +
                   " parallel channels");
    text.push_back("achievable sum DoF " + dof.to_string() + " (limit " + limit.to_string() + ")");
    for (size_t k = 0; k < rep.receivers.size(); ++k)
        text.push_back("receiver " + std::to_string(k + 1) + ": rank " +
                       std::to_string(rep.receivers[k].rank) + " / " +
                       std::to_string(rep.receivers[k].cols) +
                       (rep.receivers[k].pass ? " (decodable)" : " (NOT decodable)"));
    if (rep.conditioning_warning)
        text.push_back("warning: large system, rank decisions may be fragile");
    text.push_back(std::string("verification: ") + (rep.pass ? "pass" : "fail"));

    emit(out, g.json, text);
    return rep.pass ? exit_ok : exit_verification;
}

// ---------------------------------------------------------- independence ---

int run_independence(const GlobalFlags &g, const std::string &scheme, int K, int Mt, int receiver)
{
    ojson checks = ojson::array();
    std::vector<std::string> text;
    bool pass = true;

    if (scheme == "km2")
    {
        if (Mt != 0 && Mt != K - 2)
            throw std::invalid_argument("the km2 scheme fixes Mt = K - 2");
        Mt = K - 2;
        const Eigen::MatrixXcd J = compdof::claim2_jacobian_submatrix(K);
        const int rank = compdof::numeric_rank(J);
        const int expected = (K + 1) * Mt;
        const bool ok = rank == expected;
        pass = ok;
        checks.push_back({{"functions", expected}, {"rank", rank}, {"independent", ok}});
        text.push_back("selected coefficient functions: " + std::to_string(expected) +
                       ", Jacobian rank " + std::to_string(rank) +
                       (ok ? " (independent)" : " (DEPENDENT)"));
    }
    else if (scheme == "general")
    {
        if (Mt == 0)
            throw std::invalid_argument("the general scheme requires --mt");
        std::vector<int> rxs;
        if (receiver > 0)
            rxs.push_back(receiver);
        else
        {
            if (Mt >= 2)
                rxs.push_back(1); // interference-free representative
            rxs.push_back(Mt);    // interference-limited representative
        }
        for (int r : rxs)
        {
            const compdof::RationalMap f = compdof::general_claim_map(K, Mt, r);
            const int rank = compdof::structural_rank(f, compdof::default_rank_trials, g.seed);
            const bool ok = rank == f.n_outputs;
            pass = pass && ok;
            checks.push_back(
                {{"receiver", r}, {"functions", f.n_outputs}, {"rank", rank}, {"independent", ok}});
            text.push_back("receiver " + std::to_string(r) + ": " + std::to_string(f.n_outputs) +
                           " functions, Jacobian rank " + std::to_string(rank) +
                           (ok ? " (independent)" : " (DEPENDENT)"));
        }
    }
    else
        throw std::invalid_argument("scheme must be 'km2' or 'general'");

    ojson out;
    out["config"] = {{"command", "independence"}, {"scheme", scheme}, {"k", K},
                     {"mt", Mt},                  {"receiver", receiver}, {"seed", g.seed},
                     {"json", g.json}};
    out["checks"] = checks;
    out["pass"] = pass;

    text.push_back(std::string("verification: ") + (pass ? "pass" : "fail"));
    emit(out, g.json, text);
    return pass ? exit_ok : exit_verification;
}

// ---------------------------------------------------------------- claim2 ---

int run_claim2(const GlobalFlags &g, int K)
{
    const double tol = g.resolve_tol(1e-6);
    const std::complex<double> det = compdof::claim2_determinant(K);
    const double dev = std::abs(std::abs(det) - 1.0);
    const bool pass = dev <= tol;

    ojson out;
    out["config"] = {{"command", "claim2"}, {"k", K}, {"seed", g.seed}, {"json", g.json}, {"tol", tol}};
    out["determinant_re"] = det.real();
    out["determinant_im"] = det.imag();
    out["determinant_abs"] = std::abs(det);
    out["deviation"] = dev;
    out["pass"] = pass;

    emit(out, g.json,
         {"Jacobian determinant at the canonical test point: |det| = " + std::to_string(std::abs(det)),
          "deviation from 1: " + std::to_string(dev),
          std::string("verification: ") + (pass ? "pass" : "fail")});
    return pass ? exit_ok : exit_verification;
}

// -------------------------------------------------------------- simulate ---

int run_simulate(const GlobalFlags &g, int K, const std::string &schemes, const std::string &snr,
                 int trials, bool best_eig, int eig, int smd_mt, int smd_mr,
                 const std::string &out_path, std::string format)
{
    compdof::LinkBudget budget;
    budget.K = K;
    budget.snr_db = parse_grid(snr);
    budget.trials = trials;
    budget.seed = g.seed;
    budget.best_eigenvector = best_eig;
    budget.eigenvector_index = eig;
    budget.smd_mt = smd_mt;
    budget.smd_mr = smd_mr;
    {
        std::istringstream in(schemes);
        std::string tok;
        while (std::getline(in, tok, ','))
            budget.schemes.push_back(compdof::scheme_from_name(tok));
        if (budget.schemes.empty())
            throw std::invalid_argument("simulate: --schemes must list at least one of zf,cf,smd");
    }

    const compdof::SweepResult res = compdof::sweep(budget);

    if (!out_path.empty())
    {
        if (format.empty())
        {
            if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv")
                format = "csv";
            else if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json")
                format = "json";
            else
                throw std::invalid_argument("simulate: cannot infer --format from '" + out_path + "'");
        }
        compdof::export_sweep(res, format, out_path);
    }

    ojson curves = ojson::array();
    std::vector<std::string> text;
    for (const auto &c : res.curves)
    {
        curves.push_back({{"scheme", compdof::scheme_name(c.scheme)},
                          {"mt", c.Mt},
                          {"mr", c.Mr},
                          {"mean_sum_rate", c.mean_rate},
                          {"stddev", c.stddev}});
        for (size_t gi = 0; gi < res.snr_db.size(); ++gi)
        {
            char line[160];
            std::snprintf(line, sizeof line, "%-4s %6.1f dB  mean %10.4f  sd %8.4f",
                          compdof::scheme_name(c.scheme).c_str(), res.snr_db[gi], c.mean_rate[gi],
                          c.stddev[gi]);
            text.push_back(line);
        }
    }

    ojson out;
    out["config"] = {{"command", "simulate"},
                     {"k", K},
                     {"schemes", schemes},
                     {"snr", snr},
                     {"trials", trials},
                     {"seed", g.seed},
                     {"json", g.json},
                     {"best_eig", best_eig},
                     {"eig", eig},
                     {"smd_mt", smd_mt},
                     {"smd_mr", smd_mr},
                     {"out", out_path},
                     {"format", format}};
    out["snr_db"] = res.snr_db;
    out["curves"] = curves;
    out["failed_trials"] = res.failed_trials;

    if (res.failed_trials > 0)
        text.push_back("resampled realizations after beam failures: " +
                       std::to_string(res.failed_trials));
    emit(out, g.json, text);
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"compdof: degrees-of-freedom toolkit for interference channels with "
                 "cooperating transmit/receive sets"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--seed", g.seed, "random seed (default 0)");
    app.add_flag("--json", g.json, "machine-readable JSON on stdout");
    auto *tol_opt = app.add_option("--tol", g.tol, "verification tolerance (per-command default)");

    auto *bounds = app.add_subcommand("bounds", "outer bound and known sum DoF for a pattern");
    int b_k = 0, b_mt = 0, b_mr = 0, b_max = 0;
    bool b_cons = false;
    bounds->add_option("--k", b_k, "number of users")->required();
    bounds->add_option("--mt", b_mt, "transmit cooperation window")->required();
    bounds->add_option("--mr", b_mr, "receive cooperation window")->required();
    bounds->add_option("--max-set-size", b_max, "largest window size enumerated (default K)");
    bounds->add_flag("--constraints", b_cons, "list the deduplicated region constraints");

    auto *smd = app.add_subcommand("smd-solve", "structured matrix decomposition by continuation");
    int s_k = 0, s_mt = 0, s_mr = 0, s_steps = 0;
    smd->add_option("--k", s_k, "number of users")->required();
    smd->add_option("--mt", s_mt, "transmit cooperation window")->required();
    smd->add_option("--mr", s_mr, "receive cooperation window")->required();
    smd->add_option("--steps", s_steps, "initial continuation steps (default 10)");

    auto *fd = app.add_subcommand("full-dof", "interference-free beams when Mt + Mr >= K + 1");
    int f_k = 0, f_mt = 0, f_mr = 0;
    fd->add_option("--k", f_k, "number of users")->required();
    fd->add_option("--mt", f_mt, "transmit cooperation window")->required();
    fd->add_option("--mr", f_mr, "receive cooperation window")->required();

    auto *acf = app.add_subcommand("align-closed-form",
                                   "closed-form alignment for (Mt, Mr) = (K-1, 2)");
    int a_k = 0, a_eig = 1;
    acf->add_option("--k", a_k, "number of users")->required();
    acf->add_option("--eig", a_eig, "eigenvector choice, 1-based (default 1)");

    auto *der = app.add_subcommand("derive", "zero-forcing derived channel and its trivial entries");
    std::string d_scheme;
    int d_k = 0, d_mt = 0, d_n = 1;
    der->add_option("--k", d_k, "number of users")->required();
    der->add_option("--scheme", d_scheme, "km2 | general")->required();
    der->add_option("--mt", d_mt, "transmit window (general scheme)");
    der->add_option("--n", d_n, "alignment order fixing the channel count (default 1)");

    auto *cjv = app.add_subcommand("cj-verify", "asymptotic-alignment decodability check");
    std::string c_scheme;
    int c_k = 0, c_mt = 0, c_n = 1;
    cjv->add_option("--k", c_k, "number of users")->required();
    cjv->add_option("--scheme", c_scheme, "km2 | general")->required();
    cjv->add_option("--mt", c_mt, "transmit window (general scheme)");
    cjv->add_option("--n", c_n, "alignment order (default 1)");

    auto *ind = app.add_subcommand("independence", "algebraic independence of derived coefficients");
    std::string i_scheme;
    int i_k = 0, i_mt = 0, i_rx = 0;
    ind->add_option("--k", i_k, "number of users")->required();
    ind->add_option("--scheme", i_scheme, "km2 | general")->required();
    ind->add_option("--mt", i_mt, "transmit window (general scheme)");
    ind->add_option("--receiver", i_rx, "single receiver to check (default: representatives)");

    auto *c2 = app.add_subcommand("claim2", "unimodular Jacobian determinant at the test point");
    int q_k = 0;
    c2->add_option("--k", q_k, "number of users")->required();

    auto *sim = app.add_subcommand("simulate", "Monte-Carlo sum-rate sweep");
    int m_k = 3, m_trials = 100, m_eig = 1, m_smd_mt = 0, m_smd_mr = 0;
    std::string m_schemes = "zf,cf", m_snr = "0:5:60", m_out, m_format;
    bool m_best = false;
    sim->add_option("--k", m_k, "number of users (default 3)");
    sim->add_option("--schemes", m_schemes, "comma list of zf,cf,smd (default zf,cf)");
    sim->add_option("--snr", m_snr, "grid 'lo:step:hi' or comma list, dB (default 0:5:60)");
    sim->add_option("--trials", m_trials, "Monte-Carlo trials (default 100)");
    sim->add_flag("--best-eig", m_best, "pick the best eigenvector per realization");
    sim->add_option("--eig", m_eig, "fixed eigenvector index, 1-based (default 1)");
    sim->add_option("--smd-mt", m_smd_mt, "transmit window for the smd scheme");
    sim->add_option("--smd-mr", m_smd_mr, "receive window for the smd scheme");
    sim->add_option("--out", m_out, "write curves to this file");
    sim->add_option("--format", m_format, "csv | json (default: from --out extension)");

    try
    {
        app.parse(argc, argv);
        g.tol_set = tol_opt->count() > 0;

        if (*bounds)
            return run_bounds(g, b_k, b_mt, b_mr, b_max, b_cons);
        if (*smd)
            return run_smd_solve(g, s_k, s_mt, s_mr, s_steps);
        if (*fd)
            return run_full_dof(g, f_k, f_mt, f_mr);
        if (*acf)
            return run_align_closed_form(g, a_k, a_eig);
        if (*der)
            return run_derive(g, d_scheme, d_k, d_mt, d_n);
        if (*cjv)
            return run_cj_verify(g, c_scheme, c_k, c_mt, c_n);
        if (*ind)
            return run_independence(g, i_scheme, i_k, i_mt, i_rx);
        if (*c2)
            return run_claim2(g, q_k);
        if (*sim)
            return run_simulate(g, m_k, m_schemes, m_snr, m_trials, m_best, m_eig, m_smd_mt,
                                m_smd_mr, m_out, m_format);
        std::cerr << "error: no subcommand selected\n";
        return exit_usage;
    }
    catch (const CLI::CallForHelp &e)
    {
        std::cout << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const compdof::resource_error &e)
    {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const compdof::verification_error &e)
    {
        std::cerr << "verification failure: " << e.what() << "\n";
        return exit_verification;
    }
    catch (const compdof::numerical_error &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
}
