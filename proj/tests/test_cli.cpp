#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef MSET_CLI_BIN
#error "MSET_CLI_BIN must point at the built binary"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_shell(const std::string& command) {
    std::array<char, 4096> buffer{};
    std::string out;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
        out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), out};
}

CliResult run_cli(const std::string& args) { return run_shell(std::string(MSET_CLI_BIN) + " " + args); }

std::string bin() { return MSET_CLI_BIN; }

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("gen | profile pipeline reproduces the simplex squared distances") {
    auto result = run_shell(bin() + " gen regular-simplex --n 3 | " + bin() + " profile --rho r2");
    CHECK(result.exit_code == 0);
    CHECK(count_lines(result.out) == 6);
    std::istringstream lines(result.out);
    std::string line;
    while (std::getline(lines, line)) {
        CHECK(line.substr(0, line.find(' ')) == "2.66666666666667");
    }
}

TEST_CASE("compare of a file against itself is EQUAL") {
    auto gen = run_cli("gen regular-polygon --m 4 --out /tmp/mset_cli_square.pts");
    REQUIRE(gen.exit_code == 0);
    auto result = run_cli("compare /tmp/mset_cli_square.pts /tmp/mset_cli_square.pts --rho phi");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "EQUAL\n");
}

TEST_CASE("root51 endpoints and error handling") {
    auto near_left = run_cli("root51 --s 2.8188");
    CHECK(near_left.exit_code == 0);
    CHECK(near_left.out == "-1\n");

    auto right = run_cli("root51 --s 4");
    CHECK(right.out == "-0.5\n");

    CHECK(run_cli("root51 --s 9").exit_code == 1);
    CHECK(run_cli("root51").exit_code == 2);          // missing required flag
    CHECK(run_cli("root51 --s 3 --bogus").exit_code == 2);
    CHECK(run_cli("definitely-not-a-command").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("root51 --help").exit_code == 0);
}

TEST_CASE("json output round-trips byte-identically") {
    for (const std::string& args :
         {std::string("two-distance /tmp/mset_cli_lambda.pts --json"),
          std::string("root51 --s 3.25 --json"),
          std::string("minimize --n 2 --m 3 --t 1 --restarts 2 --seed 5 --json"),
          std::string("design-check /tmp/mset_cli_lambda.pts --tau 2 --json")}) {
        if (args.find("lambda") != std::string::npos) {
            REQUIRE(run_cli("gen lambda --n 7 --out /tmp/mset_cli_lambda.pts").exit_code == 0);
        }
        auto result = run_cli(args);
        REQUIRE(result.exit_code == 0);
        auto parsed = nlohmann::json::parse(result.out);
        CHECK(parsed.dump(2) + "\n" == result.out);
    }
}

TEST_CASE("seeded subcommands are reproducible") {
    const std::string minimize_args = "minimize --n 3 --m 4 --t 1 --restarts 3 --seed 9";
    auto a = run_cli(minimize_args);
    auto b = run_cli(minimize_args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    REQUIRE(run_cli("gen regular-polygon --m 4 --out /tmp/mset_cli_square.pts").exit_code == 0);
    const std::string falsify_args =
        "falsify /tmp/mset_cli_square.pts --rho phi --trials 20 --seed 3";
    auto c = run_cli(falsify_args);
    auto d = run_cli(falsify_args);
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("generated output is loadable by every consuming subcommand") {
    const char* generators[] = {
        "gen regular-polygon --m 5",  "gen regular-simplex --n 3", "gen cross-polytope --n 3",
        "gen tbp",                    "gen 24-cell",               "gen lambda --n 7",
        "gen isoceles-triangle --alpha 2.0", "gen quadrilateral --alpha 2.0",
        "gen delta-tetra --a 0.3 --theta 1.2", "gen simplex-product --dims 1,2"};
    const char* consumers[] = {"profile --rho phi", "moments --kmax 3",  "two-distance",
                               "decompose",         "design-check --tau 1", "energy --t 1",
                               "falsify --trials 1 --seed 1 --rho r2"};
    for (const char* g : generators) {
        REQUIRE(run_cli(std::string(g) + " --out /tmp/mset_cli_gen.pts").exit_code == 0);
        for (const char* c : consumers) {
            CAPTURE(g);
            CAPTURE(c);
            CHECK(run_cli(std::string(c) + " /tmp/mset_cli_gen.pts").exit_code == 0);
        }
    }
}

TEST_CASE("minimize output is itself a loadable point set") {
    auto result = run_shell(bin() + " minimize --n 2 --m 4 --t 0 --restarts 2 --seed 1 | " +
                            bin() + " profile --rho phi");
    CHECK(result.exit_code == 0);
    CHECK(count_lines(result.out) == 6);
}

TEST_CASE("sequence-level subcommands") {
    auto ext = run_cli("extremal-seq --T 1,3,4");
    CHECK(ext.out == "1\n1.5\n1.5\n");

    auto lb = run_cli("lower-bound --T 1,3,4 --t 1");
    CHECK(lb.out == "2.33333333333333\n");

    auto sbound = run_cli("simplex-bound --m 4 --t 1");
    CHECK(sbound.out == "3.67423461417477\n");

    CHECK(run_cli("extremal-seq --T 3,1").exit_code == 1);  // decreasing bounds
    CHECK(run_cli("extremal-seq --T nonsense").exit_code == 1);
}

TEST_CASE("harmonic subcommands") {
    auto expand = run_cli("gegenbauer --n 4 --f 0,-0.25,-0.25,1,1");
    CHECK(expand.exit_code == 0);
    CHECK(expand.out.substr(0, 8) == "0 0.0625");

    auto eval = run_cli("gegenbauer --n 3 --k 1 --t 0.25");
    CHECK(eval.out == "0.25\n");

    // leading negative coefficients pass through the flag parser
    auto negative = run_cli("gegenbauer --n 3 --f -0.25,0,1");
    CHECK(negative.exit_code == 0);
    CHECK(negative.out == "0 0.0833333333333333\n1 0\n2 0.666666666666667\n");

    auto bound = run_cli("delsarte --f 0,1,1 --n 3 --T -1,0");
    CHECK(bound.out == "6\n");

    REQUIRE(run_cli("gen 24-cell --out /tmp/mset_cli_cell.pts").exit_code == 0);
    auto tau5 = run_cli("design-check /tmp/mset_cli_cell.pts --tau 5");
    CHECK(tau5.out.substr(0, 11) == "passed true");
    auto tau6 = run_cli("design-check /tmp/mset_cli_cell.pts --tau 6");
    CHECK(tau6.exit_code == 0);  // a failed certificate is still a completed check
    CHECK(tau6.out.substr(0, 12) == "passed false");

    auto fcheck = run_cli("design-check /tmp/mset_cli_cell.pts --f 0,-0.25,-0.25,1,1");
    CHECK(fcheck.out.substr(0, 11) == "passed true");
}

TEST_CASE("classification subcommand") {
    CHECK(run_cli("classify-triangles --s 2").out == "case 1\n");
    auto high = run_cli("classify-triangles --s 5");
    CHECK(high.out.substr(0, 6) == "case 3");
    auto mid = run_cli("classify-triangles --s 3 --json");
    auto parsed = nlohmann::json::parse(mid.out);
    CHECK(parsed["case"] == 2);
    CHECK(parsed["alpha_min"].get<double>() > 2.0);
}

TEST_CASE("missing files and malformed data exit with the domain-error code") {
    CHECK(run_cli("profile /tmp/mset_cli_does_not_exist.pts").exit_code == 1);
    std::ofstream bad("/tmp/mset_cli_bad.pts");
    bad << "2 2\n1 0\n";
    bad.close();
    CHECK(run_cli("profile /tmp/mset_cli_bad.pts").exit_code == 1);
}
