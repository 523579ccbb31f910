#include <doctest.h>

#include <rcl/driver.hpp>
#include <rcl/rational.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace rcl;
using nlohmann::json;

namespace {

struct TempFile
{
    std::string path;
    TempFile(const std::string & name, const std::string & content)
        : path("/tmp/rcl_test_" + name)
    {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

json masked(const ReportEnvelope & env)
{
    json doc = json::parse(envelope_to_json(env));
    doc["timing_ms"] = 0;
    return doc;
}

int run_binary(const std::string & args, std::string * output = nullptr)
{
    std::string cmd = std::string(RCL_BINARY_PATH) + " " + args + " 2>/dev/null";
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    int status = pclose(pipe);
    if (output)
        *output = out;
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("density envelope golden")
{
    TempFile k3("k3.hg", "2 3\n1 2\n2 3\n1 3\n");
    auto env = run({"density", {{"graph", k3.path}}});
    CHECK(env.verdict == RunVerdict::Ok);
    json expect = {
        {"schema_version", 1},
        {"tool", "rcl"},
        {"version", "0.1.0"},
        {"command", "density"},
        {"config", {{"graph", k3.path}}},
        {"timing_ms", 0},
        {"verdict", "OK"},
        {"result",
         {{"k", 2}, {"n", 3}, {"edges", 3}, {"d_k", "2"}, {"m_k", "2"}, {"witness", {1, 2, 3}}}},
    };
    CHECK(masked(env) == expect);
}

TEST_CASE("rado subcommands through the driver")
{
    TempFile schur("schur.mat", "1 3\n1 1 -1\n");
    auto ma = run({"rado.mA", {{"matrix", schur.path}}});
    CHECK(ma.verdict == RunVerdict::Ok);
    CHECK(json::parse(ma.result_json)["m_A"] == "2");

    auto classify = run({"rado.classify", {{"matrix", schur.path}}});
    auto body = json::parse(classify.result_json);
    CHECK(body["satisfies_star"] == true);
    CHECK(body["partition_regular"] == true);
    CHECK(body["irredundant"] == "true");
    CHECK(body["matrix_facts_all_hold"] == true);

    auto mu = run({"rado.mu", {{"matrix", schur.path}, {"n", "10"}, {"r", "2"}, {"mode", "strong"}}});
    CHECK(json::parse(mu.result_json)["mu"] == 8);

    auto schur_f = run({"rado.schur", {{"f", "2"}}});
    CHECK(json::parse(schur_f.result_json)["f"] == 4);
}

TEST_CASE("errors are wrapped, never thrown out of run()")
{
    auto env = run({"density", {{"graph", "/nonexistent/file.hg"}}});
    CHECK(env.verdict == RunVerdict::Error);
    CHECK(env.error_message.find("cannot open") != std::string::npos);
    CHECK(exit_code_for(env) == 1);

    TempFile bad("bad.hg", "2 3\n1 1\n");
    auto parse_err = run({"density", {{"graph", bad.path}}});
    CHECK(parse_err.verdict == RunVerdict::Error);
    CHECK(parse_err.error_message.find("repeated vertex") != std::string::npos);

    auto unknown = run({"no.such.command", {}});
    CHECK(unknown.verdict == RunVerdict::Error);
}

TEST_CASE("seed is mandatory for randomised subcommands")
{
    TempFile schur("schur2.mat", "1 3\n1 1 -1\n");
    auto env = run({"mc",
                    {{"model", "np_set"}, {"n", "20"}, {"p", "1/2"}, {"rado", schur.path}, {"trials", "5"}}});
    CHECK(env.verdict == RunVerdict::Error);
    CHECK(env.error_message.find("--seed") != std::string::npos);
}

TEST_CASE("seeded runs repeat byte for byte, independent of workers")
{
    TempFile schur("schur3.mat", "1 3\n1 1 -1\n");
    RunConfig cfg{"mc",
                  {{"model", "np_set"}, {"n", "30"}, {"p", "1/2"}, {"rado", schur.path},
                   {"r", "2"}, {"mode", "strong"}, {"trials", "24"}, {"seed", "7"}}};
    auto a = run(cfg);
    auto b = run(cfg);
    CHECK(a.result_json == b.result_json);
    auto workers = cfg;
    workers.options["workers"] = "3";
    auto c = run(workers);
    CHECK(a.result_json == c.result_json);
    CHECK(a.verdict == RunVerdict::Ok);
}

TEST_CASE("containers build and verify through the driver")
{
    TempFile schur("schur4.mat", "1 3\n1 1 -1\n");
    RunConfig build{"containers.build",
                    {{"matrix", schur.path}, {"n", "9"}, {"r", "2"}, {"ceiling", "1/2"}, {"budget", "9"}}};
    auto env = run(build);
    CHECK(env.verdict == RunVerdict::Ok);
    auto fam = json::parse(env.result_json)["family"];
    CHECK(fam["certified"] == true);
    CHECK(fam["r"] == 2);

    RunConfig verify{"containers.verify",
                     {{"mode", "rado"}, {"matrix", schur.path}, {"n", "9"}, {"r", "2"},
                      {"delta", "1/2"}, {"budget", "9"}}};
    auto venv = run(verify);
    CHECK(venv.verdict == RunVerdict::Ok);
    CHECK(json::parse(venv.result_json)["all_hold"] == true);
}

TEST_CASE("report envelopes round trip through JSON")
{
    TempFile k3("k3rt.hg", "2 3\n1 2\n2 3\n1 3\n");
    auto env = run({"density", {{"graph", k3.path}}});
    auto back = envelope_from_json(envelope_to_json(env));
    CHECK(back.verdict == env.verdict);
    CHECK(back.command == env.command);
    CHECK(back.config_echo == env.config_echo);
    CHECK(back.has_result == env.has_result);
    CHECK(json::parse(back.result_json) == json::parse(env.result_json));
}

TEST_CASE("UNKNOWN with results exits zero")
{
    TempFile k3("k3u.hg", "2 3\n1 2\n2 3\n1 3\n");
    auto env = run({"ramsey.check",
                    {{"n", "6"}, {"patterns", k3.path + "," + k3.path}, {"budget", "2"}}});
    CHECK(env.verdict == RunVerdict::Unknown);
    CHECK(env.has_result);
    CHECK(json::parse(env.result_json)["is_ramsey"] == "unknown");
    CHECK(exit_code_for(env) == 0);
}

TEST_CASE("rational option strings accept p/q, decimals and integers")
{
    CHECK(rat_from_string("1/2") == frac(1, 2));
    CHECK(rat_from_string("0.5") == frac(1, 2));
    CHECK(rat_from_string("0.25") == frac(1, 4));
    CHECK(rat_from_string("-0.2") == frac(-1, 5));
    CHECK(rat_from_string("3") == Rat(3));
    CHECK(rat_to_string(frac(6, 4)) == "3/2");
}

TEST_CASE("uncertified container families exit with code two")
{
    TempFile schur("schur7.mat", "1 3\n1 1 -1\n");
    RunConfig build{"containers.build",
                    {{"matrix", schur.path}, {"n", "12"}, {"ceiling", "1/100"}, {"budget", "1"}}};
    auto env = run(build);
    CHECK(env.verdict == RunVerdict::Uncertified);
    CHECK(exit_code_for(env) == 2);
}

TEST_CASE("config files sit under explicit options")
{
    TempFile cfgfile("run.cfg", "n = 6\ntrials = 3\n# comment\n");
    auto parsed = parse_config_file(cfgfile.path);
    CHECK(parsed.at("n") == "6");
    CHECK(parsed.at("trials") == "3");
}

TEST_CASE("binary: exit codes and output shapes")
{
    TempFile k3("k3b.hg", "2 3\n1 2\n2 3\n1 3\n");
    std::string out;

    CHECK(run_binary("density --graph " + k3.path, &out) == 0);
    CHECK(json::parse(out)["verdict"] == "OK");

    // unknown flags are hard errors
    CHECK(run_binary("density --graph " + k3.path + " --bogus 3", &out) != 0);

    // missing seed surfaces as an ERROR envelope with exit 1
    TempFile schur("schur5.mat", "1 3\n1 1 -1\n");
    int code = run_binary("mc --model np_set --n 10 --p 1/2 --rado " + schur.path + " --trials 2", &out);
    CHECK(code == 1);
    CHECK(json::parse(out)["verdict"] == "ERROR");

    // csv rendering for harness runs
    code = run_binary("mc --model np_set --n 10 --p 1/2 --rado " + schur.path +
                          " --trials 2 --seed 5 --format csv",
                      &out);
    CHECK(code == 0);
    CHECK(out.find("trial,sample_size,verdict") != std::string::npos);

    // text rendering
    code = run_binary("rado mA --matrix " + schur.path + " --format text", &out);
    CHECK(code == 0);
    CHECK(out.find("rado.mA: OK") != std::string::npos);
}

TEST_CASE("binary: config file merge, flags win")
{
    TempFile schur("schur6.mat", "1 3\n1 1 -1\n");
    TempFile cfg("mc.cfg", "trials=4\nn=12\n");
    std::string out;
    int code = run_binary("mc --model np_set --p 1/2 --rado " + schur.path + " --seed 9 --config " +
                              cfg.path + " --n 16",
                          &out);
    CHECK(code == 0);
    auto doc = json::parse(out);
    CHECK(doc["config"]["n"] == "16");      // flag beats config
    CHECK(doc["config"]["trials"] == "4");  // config fills the gap
}
