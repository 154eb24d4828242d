#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "acgroups/cli.hpp"

using acgroups::Json;
using acgroups::runCli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = runCli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("act applies a move sequence") {
    CliRun r = run({"act", "--transform", "AC1(1,2)", "--tuple", "(x1, x2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "(x1 x2, x2)\n");

    CliRun conj = run({"act", "--transform", "AC4(1,1)", "--tuple", "(x1, x2)"});
    CHECK(conj.out == "(y1 x1 y1^-1, x2)\n");
}

TEST_CASE("fox prints derivatives") {
    CliRun r = run({"fox", "--wrt", "x1", "--word", "x1^-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "-x1^-1\n");

    CliRun j = run({"--output", "json", "fox", "--wrt", "x2", "--word", "x1 x2 x1^-1"});
    CHECK(j.code == 0);
    Json parsed = Json::parse(j.out);
    CHECK(parsed.at("schema") == "acgroups/fox/1");
    CHECK(parsed.at("display") == "x1");
}

TEST_CASE("jacobian emits a matrix") {
    CliRun r = run({"--output", "json", "jacobian", "--transform", "AC1(1,2)"});
    CHECK(r.code == 0);
    Json parsed = Json::parse(r.out);
    CHECK(parsed.at("matrix").at("ring") == "groupring(2,0)");
    CHECK(parsed.at("matrix").at("rows").size() == 2);
    // round-trips through the matrix serializer
    CHECK_NOTHROW(acgroups::groupRingMatrixFromJson(parsed.at("matrix")));
}

TEST_CASE("nu prints the canonical projective representative") {
    CliRun r = run({"nu", "--transform", "AC2(1,2)", "--kappa", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "[ 1 | 1 ]\n[ 0 | 1 ]\n");

    CliRun j = run({"--output", "json", "nu", "--transform", "AC4(2,1); AC1(1,2); AC4(2,1)^-1"});
    Json parsed = Json::parse(j.out);
    CHECK(parsed.at("matrix").at("ring") == "laurent-t");
    CHECK_NOTHROW(acgroups::laurentMatrixFromJson(parsed.at("matrix")));
}

TEST_CASE("witness prints the separating tuple") {
    CliRun r = run({"witness", "--m", "1", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(x2^2 x1 x2^2, x1^2 x2 x1^2)\n");
}

TEST_CASE("verify-relations exit codes and reports") {
    CliRun ok = run({"verify-relations", "--family", "q1", "--k-max", "10"});
    CHECK(ok.code == 0);

    CliRun j = run({"--output", "json", "verify-relations", "--family", "commutator", "--k-max",
                    "4", "--m", "3", "--kappa", "3"});
    CHECK(j.code == 0);
    Json parsed = Json::parse(j.out);
    CHECK(parsed.at("schema") == "acgroups/verify-relations/1");
    CHECK(parsed.at("reports").size() == 4);
    for (const Json& rep : parsed.at("reports")) {
        CHECK(rep.at("holds") == true);
        CHECK(rep.at("actionIdentity") == true);
        CHECK(rep.at("nuIdentity") == true);
    }

    CliRun q2 = run({"verify-relations", "--family", "q2", "--k-max", "12"});
    CHECK(q2.code == 0);
}

TEST_CASE("search statuses map to exit codes") {
    CliRun found = run({"search", "--pair", "x1 x2 ; x2", "--max-len", "8", "--max-nodes", "1000"});
    CHECK(found.code == 0);

    CliRun budget = run({"--output", "json", "search", "--pair", "x1^3 x2^-4 ; x1 x2 x1 x2^-1 x1^-1 x2^-1",
                         "--max-len", "16", "--max-nodes", "10"});
    CHECK(budget.code == 3);
    CHECK(Json::parse(budget.out).at("status") == "budget-hit");

    CliRun exhausted = run({"search", "--pair", "x1^2 ; x1^2", "--max-len", "4", "--max-nodes",
                            "100000"});
    CHECK(exhausted.code == 1);
}

TEST_CASE("search reads corpus files") {
    std::string path = "cli_test_corpus.tmp";
    {
        std::ofstream f(path);
        f << "# test corpus\n";
        f << "trivial: x1 x2 ; x2\n";
    }
    CliRun r = run({"search", "--corpus", path, "--name", "trivial", "--max-len", "8",
                    "--max-nodes", "1000"});
    CHECK(r.code == 0);
    CHECK(run({"search", "--corpus", path, "--name", "missing"}).code == 2);
    CHECK(run({"search", "--corpus", "does_not_exist.tmp", "--name", "x"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("classify runs at a small cap") {
    CliRun r = run({"--output", "json", "classify", "--max-len", "3", "--search-len", "8",
                    "--max-nodes", "50000"});
    CHECK(r.code == 0);
    Json parsed = Json::parse(r.out);
    CHECK(parsed.at("schema") == "acgroups/classify/1");
    CHECK(parsed.at("unresolved") == 0);
    CHECK(parsed.at("determinantExcluded").get<long long>() > 0);
}

TEST_CASE("ak prints the pair") {
    CliRun r = run({"ak", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1^3 x2^-4 ; x1 x2 x1 x2^-1 x1^-1 x2^-1\n");

    CliRun j = run({"--output", "json", "ak", "--n", "2"});
    Json parsed = Json::parse(j.out);
    CHECK(parsed.at("totalLength") == 11);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"fox", "--wrt", "x1"}).code == 2);                       // missing --word
    CHECK(run({"fox", "--wrt", "x1", "--word", "zz"}).code == 2);       // word syntax
    CHECK(run({"act", "--transform", "AC1(1,5)", "--tuple", "(x1, x2)"}).code == 2);
    CHECK(run({"verify-relations", "--family", "q3", "--k-max", "2"}).code == 2);
    CHECK(run({"ak", "--n", "1"}).code == 2);
    CHECK(run({"search", "--pair", "x1 x2"}).code == 2);                // missing ';'
    CHECK(run({"fox", "--wrt", "x1", "--word", "x1", "--bogus"}).code == 2);
    CHECK(!run({"fox", "--wrt", "x1"}).err.empty());
}

TEST_CASE("help exits cleanly") {
    CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("acgroups") != std::string::npos);
}

TEST_CASE("seed flag is accepted") {
    CHECK(run({"--seed", "7", "ak", "--n", "2"}).code == 0);
}

TEST_CASE("global flags may follow the subcommand") {
    CliRun r = run({"ak", "--n", "3", "--output", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("n") == 3);
}
