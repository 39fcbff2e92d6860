// Integration tests driving the built CLI binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ORBIQC_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("cli: sectors json") {
    RunResult r = run_cli("sectors --weights 1,1,2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "orbiqc/1");
    CHECK(j["command"] == "sectors");
    REQUIRE(j["F"].size() == 2);
    CHECK(j["F"][0]["f"] == "0");
    CHECK(j["F"][0]["dim"] == 2);
    CHECK(j["F"][0]["age"] == "0");
    CHECK(j["F"][1]["f"] == "1/2");
    CHECK(j["F"][1]["dim"] == 0);
    CHECK(j["F"][1]["age"] == "1");
}

TEST_CASE("cli: sectors rejects bad weights") {
    RunResult r = run_cli("sectors --weights 0,1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("weights must be positive") != std::string::npos);
}

TEST_CASE("cli: single sector for the projective line") {
    RunResult r = run_cli("sectors --weights 1,1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["F"].size() == 1);
    CHECK(j["F"][0]["f"] == "0");
    CHECK(j["F"][0]["dim"] == 1);
}

TEST_CASE("cli: ring json and relations") {
    RunResult r = run_cli("ring --weights 1,1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["p_matrix"][0][1] == "Q");
    CHECK(j["p_matrix"][1][0] == "1");
    CHECK(j["presentation"]["top"]["power"] == 2);
    CHECK(j["presentation"]["top"]["coeff"] == "Q");

    RunResult r2 = run_cli("ring --weights 1,1,2");
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["p_matrix"][0][3] == "1/2*Q^(1/2)");
    CHECK(j2["p_matrix"][3][2] == "1/2*Q^(1/2)");
    CHECK(j2["presentation"]["top"]["coeff"] == "1/4*Q");
}

TEST_CASE("cli: ring latex display") {
    RunResult r = run_cli("ring --weights 1,1 --format latex");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\\begin{pmatrix}") != std::string::npos);
    CHECK(r.out.find("Q") != std::string::npos);
}

TEST_CASE("cli: jfun with picard-fuchs verification") {
    RunResult r = run_cli("jfun --weights 1,1,2 --degree-max 1 --verify-pf --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("pf: PASS") != std::string::npos);
    CHECK(r.out.find("Q^(1/2)") != std::string::npos);

    RunResult rj = run_cli("jfun --weights 1,1,2 --degree-max 1 --verify-pf");
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["pf"]["pass"] == true);
    CHECK(j["series"]["terms"].size() == 3);  // degrees 0, 1/2, 1
}

TEST_CASE("cli: ifun mirror report") {
    RunResult r = run_cli("ifun --weights 1,1,1,1,1 --degrees 5 --degree-max 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["k_X"] == 0);
    CHECK(j["mirror"]["case"] == "k=0");
    CHECK(j["mirror"]["F"] == "1 + 120*Q + 113400*Q^(2)");
    CHECK(j["mirror"]["shape_ok"] == true);
}

TEST_CASE("cli: classify the fourfold example") {
    RunResult r = run_cli("classify --weights 1,1,1,1,1,2 --degrees 7");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["k_X"] == 0);
    CHECK(j["verdict_cor12"] == true);
    CHECK(j["terminal"] == true);
    CHECK(j["k_f"]["1/2"] == "-2");
}

TEST_CASE("cli: classify reid-tai") {
    RunResult r = run_cli("classify --reid-tai 2:1,1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["reid_tai"]["terminal"] == false);
    CHECK(j["reid_tai"]["well_formed"] == true);

    RunResult r2 = run_cli("classify --reid-tai 2:1,1,1");
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["reid_tai"]["terminal"] == true);
}

TEST_CASE("cli: classify usage error") {
    RunResult r = run_cli("classify --weights 1,1,2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: determinism of reports") {
    RunResult a = run_cli("ring --weights 1,2,3");
    RunResult b = run_cli("ring --weights 1,2,3");
    CHECK(a.out == b.out);
    RunResult c = run_cli("jfun --weights 1,2 --degree-max 2");
    RunResult d = run_cli("jfun --weights 1,2 --degree-max 2");
    CHECK(c.out == d.out);
}

TEST_CASE("cli: verify on the tiny corpus") {
    RunResult r = run_cli("verify --corpus tiny --degree-max 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("all invariants PASS") != std::string::npos);
}

TEST_CASE("cli: unknown corpus is a usage error") {
    RunResult r = run_cli("verify --corpus bogus");
    CHECK(r.exit_code == 2);
}
