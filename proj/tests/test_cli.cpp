// Smoke tests for the installed CLI binary: exit codes and JSON shape.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, bool raw = false) {
    std::string cmd = raw ? args + " 2>/dev/null"
                          : std::string(DLQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("pieces subcommand") {
    RunResult r = run("pieces --group B3 --I 1 --w 3,2,1,2 --J 1,2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    int case1 = 0, case2 = 0;
    for (const auto& p : j) {
        if (p["status"] == "case1") ++case1;
        if (p["status"] == "case2") ++case2;
    }
    CHECK(case1 == 1);
    CHECK(case2 == 1);

    // byte-identical across runs
    CHECK(run("pieces --group B3 --I 1 --w 3,2,1,2 --J 1,2").out == r.out);
}

TEST_CASE("cohom-bn subcommand") {
    RunResult r = run("cohom-bn --n 2 --coeff St");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["table"][0]["character"] == "[-;1,1]");
    CHECK(run("cohom-bn --n 1").exit_code == 2);
}

TEST_CASE("invalid input exits 2") {
    CHECK(run("pieces --group B3 --I 9 --w 3,2,1,2 --J 1,2").exit_code == 2);
    CHECK(run("pieces --group Q9 --w 1").exit_code == 2);
    // precondition failures are also named validation errors
    CHECK(run("pieces --group B2 --I 1 --w 1 --J \"\"").exit_code == 2);
}

TEST_CASE("spec files, flag precedence, rank cap") {
    {
        std::FILE* f = std::fopen("cli_spec_test.json", "w");
        REQUIRE(f != nullptr);
        std::fputs(R"({"group":"B3","I":[1],"w":[3,2,1,2],"J":[1,2]})", f);
        std::fclose(f);
    }
    RunResult fromSpec = run("pieces --spec cli_spec_test.json");
    REQUIRE(fromSpec.exit_code == 0);
    RunResult fromFlags = run("pieces --group B3 --I 1 --w 3,2,1,2 --J 1,2");
    CHECK(fromSpec.out == fromFlags.out);

    // flags win over the spec file
    RunResult overridden = run("pieces --spec cli_spec_test.json --J 1");
    REQUIRE(overridden.exit_code == 0);
    CHECK(overridden.out != fromSpec.out);
    std::remove("cli_spec_test.json");

    CHECK(run("pieces --group B9 --w 1").exit_code == 2);  // default cap is 8

    // an explicit twist permutation matches the twisted label
    RunResult twisted = run("pieces --group A3 --twist 3,2,1 --w 2 --J 2");
    REQUIRE(twisted.exit_code == 0);
    CHECK(twisted.out == run("pieces --group 2A3 --w 2 --J 2").out);
    CHECK(run("pieces --group A3 --twist 2,1,3 --w 2 --J 2").exit_code == 2);  // breaks cartan
    RunResult capped = run("DLQ_MAX_RANK=3 " + std::string(DLQ_CLI_PATH) +
                               " pieces --group B4 --I 1 --w 4,3,2,1,2 --J 1,2,3",
                           true);
    CHECK(capped.exit_code == 2);
}

TEST_CASE("explicit cartan matrix in a spec file") {
    {
        std::FILE* f = std::fopen("cli_cartan_test.json", "w");
        REQUIRE(f != nullptr);
        std::fputs(R"({"cartan":[[2,-1],[-1,2]],"w":[1,2],"J":[1]})", f);
        std::fclose(f);
    }
    RunResult explicitMatrix = run("pieces --spec cli_cartan_test.json");
    std::remove("cli_cartan_test.json");
    REQUIRE(explicitMatrix.exit_code == 0);
    CHECK(explicitMatrix.out == run("pieces --group A2 --w 1,2 --J 1").out);
}

TEST_CASE("chain subcommand") {
    {
        std::FILE* f = std::fopen("cli_chain_test.json", "w");
        REQUIRE(f != nullptr);
        std::fputs(
            R"({"group":"B3","chain":{"terms":[{"I":[1],"w":[3,2,1,2],"gamma":3}],)"
            R"("x":[[3,2,1,2,3]]}})",
            f);
        std::fclose(f);
    }
    RunResult r = run("chain --spec cli_chain_test.json --J 1,2");
    std::remove("cli_chain_test.json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["summary"]["d"] == 1);
}

TEST_CASE("deodhar and coxeter subcommands") {
    RunResult r = run("deodhar --group A1 --w 1 --x 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["mass_polynomial"] == nlohmann::json::array({0, 1}));

    RunResult c = run("coxeter --group A3 --w 1,2,3 --J 1,2");
    REQUIRE(c.exit_code == 0);
    auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["gm_exponent"] == 1);
}
