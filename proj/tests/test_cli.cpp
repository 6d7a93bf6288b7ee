// End-to-end checks against the built binary; the harness passes its path in
// CLIFFKIT_BIN.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CLIFFKIT_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("clifford mul: generator squares to the metric") {
    const RunResult r = run_cli("clifford mul --n 2 --diag 1,1 --a e1 --b e1");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == "cliffkit/1");
    REQUIRE(j.at("terms").size() == 1);
    CHECK(j.at("terms")[0].at("blades").empty());
    CHECK(j.at("terms")[0].at("c").get<double>() == 1.0);
}

TEST_CASE("legendre point matches the worked example") {
    const RunResult r = run_cli("legendre point --f power --p 3 --y 2");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("x_star")[0].get<double>() == doctest::Approx(4.0));
    CHECK(j.at("z_star").get<double>() == doctest::Approx(-16.0 / 3.0));
}

TEST_CASE("kernel eval") {
    const RunResult r = run_cli("kernel eval --name sobolev --a 0 --b 1 --s 0.3 --t 0.7");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out).at("value").get<double>() == doctest::Approx(0.3));
}

TEST_CASE("legendre grid emits the CSV layout") {
    const RunResult r = run_cli("legendre grid --f power --p 2 --ymin -1 --ymax 1 --count 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("y1,xstar1,zstar\n", 0) == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 6);
}

TEST_CASE("tensor shells CSV follows the shell rule") {
    const RunResult r = run_cli("tensor shells --lmax 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "1,1\n1,2\n2,2\n2,1\n");
}

TEST_CASE("fock value and gamma blocks") {
    const RunResult r =
        run_cli("fock --pairing sobolev --points 0.2,0.5,0.8 --order 3 --symmetry wedge");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("gram").size() == 3);
    CHECK(j.at("gram")[0][0][0].get<double>() == doctest::Approx(0.2));

    const RunResult g =
        run_cli("fock gamma --pairing sobolev --points 0.2,0.5,0.8 --mmax 2 --symmetry vee");
    REQUIRE(g.exit_code == 0);
    const auto gj = nlohmann::json::parse(g.out);
    REQUIRE(gj.at("blocks").size() == 3);
    CHECK(gj.at("blocks")[0].at("value")[0].get<double>() == 1.0);
    CHECK(gj.at("blocks")[1].at("value")[0].get<double>() == doctest::Approx(0.2));
}

TEST_CASE("quadratic signature") {
    const RunResult r = run_cli("quadratic signature --coeffs \"[[1,0,0],[0,1,0],[0,0,-1]]\"");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n_plus") == 2);
    CHECK(j.at("n_minus") == 1);
    CHECK(j.at("n_zero") == 0);
}

TEST_CASE("determinism: identical flags, identical bytes") {
    const std::string cmd = "kernel verify --name sobolev --t 0.42 --test sin --quad-n 128";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    const std::string led = "ledger --seed 7";
    CHECK(run_cli(led).out == run_cli(led).out);
}

TEST_CASE("ledger reaches verdicts") {
    const RunResult r = run_cli("ledger");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("entries").size() == 4);
    for (const auto& entry : j.at("entries")) {
        CHECK(entry.at("verdict").get<std::string>() != "inconclusive");
        CHECK(entry.contains("paper_value"));
        CHECK(entry.contains("oracle_value"));
    }
}

TEST_CASE("exit codes: usage 2, numerical failure 1 with an error object") {
    CHECK(run_cli("legendre point --no-such-flag 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);

    // Degenerate curvature point of the double well.
    const RunResult r = run_cli("legendre hesspair --f double_well --y 0.57735026918962576");
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("error").contains("type"));
    CHECK(j.at("error").contains("message"));
}

TEST_CASE("clifford wedge and grade projection") {
    const RunResult w = run_cli("clifford wedge --diag 1,1 --a \"e1 + e2\" --b e2");
    REQUIRE(w.exit_code == 0);
    const auto wj = nlohmann::json::parse(w.out);
    REQUIRE(wj.at("terms").size() == 1);
    CHECK(wj.at("terms")[0].at("blades") == nlohmann::json::array({1, 2}));
    CHECK(wj.at("terms")[0].at("c").get<double>() == 1.0);

    const RunResult g = run_cli("clifford grade --diag 1,1 --a \"1 + e1 + e1e2\" --k 1");
    REQUIRE(g.exit_code == 0);
    const auto gj = nlohmann::json::parse(g.out);
    REQUIRE(gj.at("terms").size() == 1);
    CHECK(gj.at("terms")[0].at("blades") == nlohmann::json::array({1}));
}

TEST_CASE("legendre tangent and tensor bound") {
    const RunResult t = run_cli("legendre tangent --f power --p 2 --y 1");
    REQUIRE(t.exit_code == 0);
    const auto tj = nlohmann::json::parse(t.out);
    CHECK(tj.at("normal")[0].get<double>() == doctest::Approx(1.0));
    CHECK(tj.at("normal")[1].get<double>() == doctest::Approx(-1.0));
    CHECK(tj.at("offset").get<double>() == doctest::Approx(-0.5));

    const RunResult b = run_cli("tensor bound --alpha 0.5,0.25 --beta 0.5,0.25 --n 2");
    REQUIRE(b.exit_code == 0);
    CHECK(nlohmann::json::parse(b.out).at("bound").get<double>() == 0.0);
}

TEST_CASE("kernel grid emits a square table") {
    const RunResult r = run_cli("kernel eval --name sobolev --a 0 --b 1 --grid 4");
    REQUIRE(r.exit_code == 0);
    int lines = 0, commas = 0;
    for (char ch : r.out) {
        if (ch == '\n') ++lines;
        if (ch == ',') ++commas;
    }
    CHECK(lines == 4);
    CHECK(commas == 12);
}

TEST_CASE("JSON output round-trips through the documented schemas") {
    const RunResult r = run_cli("clifford mul --n 2 --diag 1,-1 --a \"e1 + 2e2\" --b \"e1e2\"");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n") == 2);
    CHECK(j.at("diag").size() == 2);
    for (const auto& term : j.at("terms")) {
        CHECK(term.contains("blades"));
        CHECK(term.at("c").is_number());
    }
}

TEST_SUITE_END();
