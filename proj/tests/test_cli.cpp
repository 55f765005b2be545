#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sgideal/serialize.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = "/tmp/sgideal_cli_" + std::to_string(::getpid()) + "_" +
                             std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const std::string cmd =
        std::string(SGIDEAL_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;

    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the classification in text form") {
    auto r = run_cli("analyze 3,7,8");
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "semigroup: 3,7,8"));
    CHECK(has(r.out, "multiplicity: 3"));
    CHECK(has(r.out, "embedding dimension: 3"));
    CHECK(has(r.out, "frobenius: 5"));
    CHECK(has(r.out, "genus: 4"));
    CHECK(has(r.out, "gorenstein: false (witness 1)"));
    CHECK(has(r.out, "almost gorenstein: false (witness 4)"));
    CHECK(has(r.out, "minimal multiplicity: true"));
    CHECK(has(r.out, "arf: true"));
    CHECK(has(r.out, "K = 0 1 3 4 | ≥6"));
    CHECK(has(r.out, "C = | ≥6"));
    CHECK(has(r.out, "B ideal = 0 | ≥3"));
    CHECK(has(r.out, "B = 3,4,5"));
}

TEST_CASE("analyze emits well-formed json") {
    auto r = run_cli("analyze 3,7,8 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = sgideal::Json::parse(r.out);
    CHECK(j["semigroup"]["generators"] == sgideal::Json({3, 7, 8}));
    CHECK(j["semigroup"]["frobenius"] == 5);
    CHECK(j["gorenstein"] == false);
    CHECK(j["minimalMultiplicity"] == true);
    CHECK(j["arf"] == true);
    CHECK(j["witnesses"]["gorenstein"] == 1);
    CHECK(j["witnesses"]["minimalMultiplicity"].is_null());
    CHECK(j["B"] == "3,4,5");
    auto k = sgideal::ideal_from_json(
        j["K"], std::make_shared<const sgideal::NumericalSemigroup>(
                    sgideal::semigroup_from_json(j["semigroup"])));
    CHECK(k.to_string() == "0 1 3 4 | ≥6");
}

TEST_CASE("ideal operations through the command line") {
    auto closure = run_cli("ideal 5,7,9 --ideal 7,9,10 --op reflexive-closure");
    CHECK(closure.exit_code == 0);
    CHECK(closure.out == "7 9 10 12 | ≥14\n");

    auto pred = run_cli("ideal 5,7,9 --ideal 7,9,10 --op is-reflexive");
    CHECK(pred.exit_code == 0);
    CHECK(pred.out == "true\n");

    auto pred2 = run_cli("ideal 7,10,13 --ideal 7,13 --op is-reflexive");
    CHECK(pred2.exit_code == 0);
    CHECK(pred2.out == "false\n");

    auto summed = run_cli("ideal 3,7,8 --ideal 0,4 --ideal 2 --op sum --format json");
    REQUIRE(summed.exit_code == 0);
    auto j = sgideal::Json::parse(summed.out);
    CHECK(j["min"] == 2);

    auto cert = run_cli("ideal 3,7,8 --ideal 6,10,11 --op normalize-reflexive");
    CHECK(cert.exit_code == 0);
    CHECK(has(cert.out, "z: -3"));
    CHECK(has(cert.out, "w: 0"));
    CHECK(has(cert.out, "result: 3 | ≥6"));
}

TEST_CASE("ideal failure modes") {
    auto unknown = run_cli("ideal 3,7,8 --ideal 0 --op frobenius");
    CHECK(unknown.exit_code == 2);
    CHECK(has(unknown.err, "unknown operation"));
    CHECK(has(unknown.err, "valid names:"));
    CHECK(has(unknown.err, "reflexive-closure"));

    auto missing = run_cli("ideal 3,7,8 --ideal 0 --op sum");
    CHECK(missing.exit_code == 2);
    CHECK(has(missing.err, "needs 2"));

    auto not_integral = run_cli("ideal 3,7,8 --ideal=-1,0 --op integral-closure");
    CHECK(not_integral.exit_code == 2);
    CHECK(has(not_integral.err, "error: not an integral ideal"));

    auto bad_sg = run_cli("analyze 4,6");
    CHECK(bad_sg.exit_code == 2);
    CHECK(has(bad_sg.err, "not cofinite"));
}

TEST_CASE("census output round-trips through the serializer") {
    auto r = run_cli("census 3,7,8 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = sgideal::Json::parse(r.out);
    auto census = sgideal::census_from_json(j);
    CHECK(sgideal::to_json(census).dump(2) + "\n" == r.out);
    CHECK(census.ideals.size() == 3);

    auto text = run_cli("census 3,7,8");
    CHECK(text.exit_code == 0);
    CHECK(has(text.out, "ideals: 3"));
    CHECK(has(text.out, "[reflexive integrally-closed stable b-ideal]"));
}

TEST_CASE("census sweeps stream one line per semigroup") {
    auto r = run_cli("census --genus-max 3 --format json");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        auto j = sgideal::Json::parse(line);
        CHECK(j["censusSize"].get<std::int64_t>() >= 1);
        CHECK(j["counts"]["principal"] == 1);
        ++n;
    }
    CHECK(n == 8);  // 1 + 1 + 2 + 4 semigroups of genus <= 3

    auto conflict = run_cli("census 3,7,8 --genus-max 3");
    CHECK(conflict.exit_code == 2);
    auto neither = run_cli("census");
    CHECK(neither.exit_code == 2);
}

TEST_CASE("verify reports every check and honors --theorem") {
    auto r = run_cli("verify --genus-max 2");
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "T1 PASS"));
    CHECK(has(r.out, "T16 PASS"));
    CHECK(has(r.out, "16/16 checks passed"));

    auto one = run_cli("verify --genus-max 2 --theorem T4");
    CHECK(one.exit_code == 0);
    CHECK(has(one.out, "T4 PASS"));
    CHECK(has(one.out, "1/1 checks passed"));

    auto bogus = run_cli("verify --genus-max 2 --theorem T0");
    CHECK(bogus.exit_code == 2);
    CHECK(has(bogus.err, "unknown theorem id"));
}

TEST_CASE("verify output is byte-stable for a fixed seed") {
    const std::string args = "verify --genus-max 3 --seed 12345 --translates 4 --format json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto reports = sgideal::Json::parse(a.out);
    CHECK(reports.size() == 16);
    CHECK(reports[0]["theoremId"] == "T1");
    CHECK(reports[0]["passed"] == true);
    CHECK(reports[0]["counterexample"].is_null());
}

TEST_CASE("top-level usage errors") {
    auto none = run_cli("");
    CHECK(none.exit_code == 2);
    auto badsub = run_cli("frobnicate");
    CHECK(badsub.exit_code == 2);
    auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(has(help.out, "analyze"));
    CHECK(has(help.out, "verify"));
}
