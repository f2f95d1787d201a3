#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string output; // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(KZCBH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        r.output.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("verify witt exits 0 and reports every check as passing")
{
    RunResult r = run_cli("verify witt");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("kind") == "verification-report");
    CHECK(doc.at("status") == "pass");
    CHECK(doc.at("totals").at("failed") == 0);
    CHECK(doc.at("command") == "verify witt");
    for (const auto& check : doc.at("checks"))
        CHECK(check.at("status") == "pass");
}

TEST_CASE("reports are byte-identical across runs")
{
    std::string a = run_cli("verify witt --seed 7").output;
    std::string b = run_cli("verify witt --seed 7").output;
    CHECK(a == b);
}

TEST_CASE("--out writes exactly the bytes that would go to stdout")
{
    std::string path = "cli_out_test.json";
    std::remove(path.c_str());
    RunResult to_file = run_cli("cbh --word 0,1 --out " + path);
    CHECK(to_file.code == 0);
    CHECK(to_file.output.empty());
    RunResult to_stdout = run_cli("cbh --word 0,1");
    CHECK(slurp(path) == to_stdout.output);
    std::remove(path.c_str());
}

TEST_CASE("phi expand at degree 0 is the bare unit")
{
    RunResult r = run_cli("phi expand --degree 0");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("kind") == "series-symbolic");
    REQUIRE(doc.at("terms").size() == 1);
    CHECK(doc.at("terms")[0].at("word").empty());
}

TEST_CASE("cbh of a two letter word lands on the lyndon coordinate 1/2")
{
    RunResult r = run_cli("cbh --word 0,1");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("kind") == "lie-element");
    bool found = false;
    for (const auto& term : doc.at("terms")) {
        if (term.at("word") == nlohmann::json::array({0, 1})) {
            CHECK(term.at("num") == "1");
            CHECK(term.at("den") == "2");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("mzv agrees across methods and exits 0")
{
    RunResult r = run_cli("mzv --word 1,0");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("kind") == "mzv-comparison");
    CHECK(doc.at("status") == "pass");
    double quad = doc.at("quadrature").at("value");
    double ser = doc.at("series").at("value");
    CHECK(quad == doctest::Approx(-1.6449340668482264).epsilon(1e-12));
    CHECK(std::abs(quad - ser) < 1e-8);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run_cli("mzv --word 0,1").code == 2);        // not an admissible sequence
    CHECK(run_cli("verify no-such-suite").code == 2);  // unknown suite name
    CHECK(run_cli("--bogus-flag").code == 2);          // unknown option
    CHECK(run_cli("phi").code == 2);                   // missing expand/log
    CHECK(run_cli("verify witt --degree 99").code == 2);
    CHECK(run_cli("verify witt --eps 0.9").code == 2);
}

TEST_CASE("help exits 0 and names every subcommand")
{
    RunResult r = run_cli("--help");
    CHECK(r.code == 0);
    for (const char* name : {"phi", "cbh", "mzv", "holonomy", "verify"})
        CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("holonomy compare handles each path case")
{
    for (const char* which : {"constant", "piecewise", "polynomial"}) {
        RunResult r = run_cli(std::string("holonomy compare --case ") + which);
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.output);
        CHECK(doc.at("status") == "pass");
    }
}

TEST_CASE("pretty output is a table rather than a document")
{
    RunResult r = run_cli("verify witt --pretty");
    CHECK(r.code == 0);
    CHECK(r.output.find("\"kind\"") == std::string::npos);
    CHECK(r.output.find("witt-two-letter") != std::string::npos);
    CHECK(r.output.find("pass") != std::string::npos);
}
