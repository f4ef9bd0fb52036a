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

// End-to-end tests: drive the installed binary through a shell, check exit
// codes, and validate every --json output against its schema. Invoked as
//   test_cli <path-to-compdof-binary> <schemas-dir> [doctest args...]

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace
{

std::string g_binary;
std::string g_schemas;

struct RunResult
{
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string &args)
{
    const std::string cmd = "'" + g_binary + "' " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// --- minimal JSON-schema checker (type / enum / required / properties / items) ---

bool type_matches(const nlohmann::json &v, const std::string &t)
{
    if (t == "object")
        return v.is_object();
    if (t == "array")
        return v.is_array();
    if (t == "string")
        return v.is_string();
    if (t == "boolean")
        return v.is_boolean();
    if (t == "null")
        return v.is_null();
    if (t == "integer")
        return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number")
        return v.is_number();
    return false;
}

void validate(const nlohmann::json &inst, const nlohmann::json &schema, const std::string &path,
              std::vector<std::string> &errors)
{
    if (schema.contains("type"))
    {
        const auto &t = schema.at("type");
        bool ok = false;
        if (t.is_string())
            ok = type_matches(inst, t.get<std::string>());
        else
            for (const auto &alt : t)
                ok = ok || type_matches(inst, alt.get<std::string>());
        if (!ok)
            errors.push_back(path + ": type mismatch");
    }
    if (schema.contains("enum"))
    {
        bool ok = false;
        for (const auto &e : schema.at("enum"))
            ok = ok || e == inst;
        if (!ok)
            errors.push_back(path + ": value not allowed by enum");
    }
    if (inst.is_object())
    {
        if (schema.contains("required"))
            for (const auto &r : schema.at("required"))
                if (!inst.contains(r.get<std::string>()))
                    errors.push_back(path + ": missing required member '" + r.get<std::string>() + "'");
        if (schema.contains("properties"))
            for (auto it = schema.at("properties").begin(); it != schema.at("properties").end(); ++it)
                if (inst.contains(it.key()))
                    validate(inst.at(it.key()), it.value(), path + "/" + it.key(), errors);
    }
    if (inst.is_array() && schema.contains("items"))
        for (size_t i = 0; i < inst.size(); ++i)
            validate(inst[(nlohmann::json::size_type)i], schema.at("items"),
                     path + "[" + std::to_string(i) + "]", errors);
}

nlohmann::json check_against_schema(const std::string &output, const std::string &schema_file)
{
    const auto schema_path = std::filesystem::path(g_schemas) / schema_file;
    std::ifstream in(schema_path);
    REQUIRE_MESSAGE(in.good(), "cannot open schema " << schema_path.string());
    nlohmann::json schema = nlohmann::json::parse(in);
    nlohmann::json inst = nlohmann::json::parse(output);
    std::vector<std::string> errors;
    validate(inst, schema, "$", errors);
    std::string joined;
    for (const auto &e : errors)
        joined += e + "; ";
    CHECK_MESSAGE(errors.empty(), joined);
    return inst;
}

} // namespace

TEST_CASE("bounds reproduces the documented reference point")
{
    const auto r = run_cli("bounds --k 4 --mt 2 --mr 1 --json");
    REQUIRE(r.code == 0);
    const auto j = check_against_schema(r.out, "bounds.json");
    CHECK(j.at("outer_bound").get<std::string>() == "8/3");
    CHECK(j.at("known_dof").get<std::string>() == "8/3");
    CHECK(j.at("full_dof").get<bool>() == false);
    CHECK(j.at("miso_reference").get<std::string>() == "8/3");
    CHECK(j.at("config").at("k").get<int>() == 4);
}

TEST_CASE("bounds enumerates constraints on request")
{
    const auto r = run_cli("bounds --k 3 --mt 1 --mr 1 --constraints --json");
    REQUIRE(r.code == 0);
    const auto j = check_against_schema(r.out, "bounds.json");
    REQUIRE(j.contains("region_constraints"));
    CHECK(j.at("region_constraints").size() > 0);

    const auto open = run_cli("bounds --k 6 --mt 2 --mr 1 --json");
    REQUIRE(open.code == 0);
    CHECK(nlohmann::json::parse(open.out).at("known_dof").is_null());
}

TEST_CASE("structured decomposition and full-DoF flows succeed end to end")
{
    const auto smd = run_cli("smd-solve --k 4 --mt 3 --mr 2 --json");
    REQUIRE(smd.code == 0);
    const auto js = check_against_schema(smd.out, "smd-solve.json");
    CHECK(js.at("pass").get<bool>());
    CHECK(js.at("residual").get<double>() < 1e-8);
    CHECK(js.at("masked_entry_max").get<double>() == 0.0);

    const auto fd = run_cli("full-dof --k 4 --mt 3 --mr 2 --json");
    REQUIRE(fd.code == 0);
    const auto jf = check_against_schema(fd.out, "full-dof.json");
    CHECK(jf.at("achieved_sum_dof").get<int>() == 4);
    CHECK(jf.at("pass").get<bool>());
}

TEST_CASE("closed-form alignment flow succeeds and validates")
{
    const auto r = run_cli("align-closed-form --k 4 --json");
    REQUIRE(r.code == 0);
    const auto j = check_against_schema(r.out, "align-closed-form.json");
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("alignment_conditions").get<bool>());
    CHECK(j.at("residual").get<double>() < 1e-8);
}

TEST_CASE("derived-channel and asymptotic-alignment flows validate")
{
    const auto d1 = run_cli("derive --k 4 --scheme km2 --n 1 --json");
    REQUIRE(d1.code == 0);
    const auto jd = check_against_schema(d1.out, "derive.json");
    CHECK(jd.at("parallel_channels").get<int>() == 63);
    CHECK(jd.at("forced_entries_ok").get<bool>());
    CHECK(jd.at("total_streams").get<int>() == 8); // every cell radiates Mt = K - 2 streams

    const auto d2 = run_cli("derive --k 5 --scheme general --mt 3 --n 0 --json");
    REQUIRE(d2.code == 0);
    const auto jg = check_against_schema(d2.out, "derive.json");
    CHECK(jg.at("total_streams").get<int>() == 7); // K + Mt - 1 streams

    const auto cj = run_cli("cj-verify --k 4 --scheme km2 --n 1 --json");
    REQUIRE(cj.code == 0);
    const auto jc = check_against_schema(cj.out, "cj-verify.json");
    CHECK(jc.at("pass").get<bool>());
    CHECK(jc.at("achievable_dof").get<std::string>() == "8/7");
    CHECK(jc.at("achievable_dof_limit").get<std::string>() == "8/3");
    CHECK(jc.at("receivers").size() == 4);

    const auto cg = run_cli("cj-verify --k 4 --scheme general --mt 2 --n 1 --json");
    REQUIRE(cg.code == 0);
    const auto jcg = check_against_schema(cg.out, "cj-verify.json");
    CHECK(jcg.at("pass").get<bool>());
    CHECK(jcg.at("achievable_dof_limit").get<std::string>() == "5/2");
}

TEST_CASE("independence checks validate for both schemes")
{
    const auto km2 = run_cli("independence --k 4 --scheme km2 --json");
    REQUIRE(km2.code == 0);
    const auto j1 = check_against_schema(km2.out, "independence.json");
    CHECK(j1.at("pass").get<bool>());
    REQUIRE(j1.at("checks").size() == 1);
    CHECK(j1.at("checks")[0].at("rank").get<int>() == 10); // (K+1) * Mt

    const auto gen = run_cli("independence --k 4 --scheme general --mt 2 --json");
    REQUIRE(gen.code == 0);
    const auto j2 = check_against_schema(gen.out, "independence.json");
    CHECK(j2.at("pass").get<bool>());
    REQUIRE(j2.at("checks").size() == 2); // representatives of both receiver kinds
    CHECK(j2.at("checks")[0].at("receiver").get<int>() == 1);
}

TEST_CASE("the determinant check passes at its default tolerance")
{
    const auto r = run_cli("claim2 --k 4 --json");
    REQUIRE(r.code == 0);
    const auto j = check_against_schema(r.out, "claim2.json");
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("deviation").get<double>() <= 1e-6);

    CHECK(run_cli("claim2 --k 5").code == 0);
    CHECK(run_cli("claim2 --k 3").code == 64); // scheme starts at K = 4
}

TEST_CASE("simulate validates, exports, and parses its own config")
{
    const auto r = run_cli("simulate --k 3 --trials 5 --snr 0:15:30 --json --seed 2");
    REQUIRE(r.code == 0);
    const auto j = check_against_schema(r.out, "simulate.json");
    CHECK(j.at("snr_db").size() == 3);
    CHECK(j.at("curves").size() == 2); // default schemes zf,cf
    CHECK(j.at("failed_trials").get<int>() == 0);
    CHECK(j.at("config").at("trials").get<int>() == 5);

    const auto tmp = std::filesystem::temp_directory_path() / "compdof_cli_sweep.csv";
    const auto w = run_cli("simulate --k 3 --trials 4 --snr 0,20 --out '" + tmp.string() + "'");
    REQUIRE(w.code == 0);
    std::ifstream in(tmp);
    std::string header;
    std::getline(in, header);
    CHECK(header == "scheme,snr_db,mean_sum_rate,stddev,trials");
    in.close();
    std::filesystem::remove(tmp);

    CHECK(run_cli("simulate --k 3 --trials 2 --snr 0,20 --out /tmp/sweep.dat").code == 64);
    CHECK(run_cli("simulate --k 3 --trials 2 --snr 10:0:20").code == 64);
    CHECK(run_cli("simulate --k 3 --trials 2 --snr 0,20 --schemes zf,xx").code == 64);
}

TEST_CASE("exit codes distinguish usage, verification, and success")
{
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("full-dof --k 4 --mt 2 --mr 2").code == 64);   // window too small
    CHECK(run_cli("smd-solve --k 5 --mt 2 --mr 2").code == 64);  // infeasible pattern
    CHECK(run_cli("bounds --k 4 --mt 2").code == 64);            // missing required option
    CHECK(run_cli("bounds --k 4 --mt 2 --mr 1 --bogus 3").code == 64);
    CHECK(run_cli("frobnicate").code == 64);
    CHECK(run_cli("").code == 64);                               // a subcommand is required
    CHECK(run_cli("align-closed-form --k 4 --eig 9").code == 64);
    CHECK(run_cli("cj-verify --k 5 --scheme km2 --n 3").code == 64); // over the channel cap
    CHECK(run_cli("derive --k 4 --scheme km2 --mt 3").code == 64);   // km2 pins Mt = K-2
    CHECK(run_cli("derive --k 4 --scheme general").code == 64);      // general needs --mt
    CHECK(run_cli("bounds --k 13 --mt 2 --mr 1 --constraints").code == 64); // enumeration cap

    // An impossible tolerance turns a healthy run into a verification failure.
    CHECK(run_cli("full-dof --k 4 --mt 3 --mr 2 --tol 1e-30").code == 2);
}

TEST_CASE("repeated runs are byte-identical")
{
    const std::vector<std::string> cmds = {
        "bounds --k 5 --mt 3 --mr 1 --constraints --json",
        "smd-solve --k 4 --mt 3 --mr 2 --json",
        "align-closed-form --k 5 --eig 2 --json",
        "cj-verify --k 4 --scheme km2 --n 1 --json",
        "simulate --k 3 --trials 5 --snr 0:10:30 --json --seed 1",
    };
    for (const auto &c : cmds)
    {
        const auto a = run_cli(c);
        const auto b = run_cli(c);
        REQUIRE(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }

    const auto s1 = run_cli("smd-solve --k 4 --mt 3 --mr 2 --json --seed 1");
    const auto s2 = run_cli("smd-solve --k 4 --mt 3 --mr 2 --json --seed 2");
    CHECK(s1.out != s2.out);
}

int main(int argc, char **argv)
{
    if (argc < 3)
    {
        std::fprintf(stderr, "usage: %s <compdof-binary> <schemas-dir> [doctest args...]\n", argv[0]);
        return 1;
    }
    g_binary = argv[1];
    g_schemas = argv[2];

    std::vector<char *> rest;
    rest.push_back(argv[0]);
    for (int i = 3; i < argc; ++i)
        rest.push_back(argv[i]);

    doctest::Context ctx;
    ctx.applyCommandLine((int)rest.size(), rest.data());
    return ctx.run();
}
