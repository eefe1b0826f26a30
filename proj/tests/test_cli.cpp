#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef MEIXNER_CLI_PATH
#error "MEIXNER_CLI_PATH must point at the built CLI"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = (env.empty() ? "" : env + " ") + std::string(MEIXNER_CLI_PATH) + " " +
                      args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("poly emits exact descending coefficients") {
    auto r = run_cli("poly -n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x^2,x^1,x^0\n1,-4,2\n");

    auto r0 = run_cli("poly -n 0");
    CHECK(r0.exit_code == 0);
    CHECK(r0.output == "x^0\n1\n");

    // x = s_1 + l with l = 1 for laguerre(1,1,1)
    auto rs = run_cli("poly -n 1 --basis sheffer");
    CHECK(rs.exit_code == 0);
    CHECK(rs.output == "s_1,s_0\n1,1\n");

    auto rj = run_cli("--format json poly -n 2");
    CHECK(rj.exit_code == 0);
    auto doc = nlohmann::json::parse(rj.output);
    CHECK(doc["coefficients_descending"] == nlohmann::json({"1", "-4", "2"}));
}

TEST_CASE("poly validates the degree bound") {
    auto r = run_cli("poly -n 65");
    CHECK(r.exit_code == 2);
}

TEST_CASE("normal-order output and errors") {
    auto r = run_cli("normal-order \"V*U\" --a 1 --b 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "U^1V^1:1\nV^1:1\n");

    auto r2 = run_cli("normal-order \"U^2\"");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "U^2:1\n");

    // symbolic scalars are not in the grammar
    auto r3 = run_cli("normal-order \"(U*V)^2\" --a a --b b");
    CHECK(r3.exit_code == 2);

    // parse errors carry the byte offset
    auto r4 = run_cli("normal-order \"U^-1\"");
    CHECK(r4.exit_code == 2);
    CHECK(r4.output.find("offset 2") != std::string::npos);
}

TEST_CASE("moments table") {
    auto r = run_cli("moments --n-max 3");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,exact,numeric_re,numeric_im,rel_err,status");
    std::getline(lines, line);
    CHECK(line.substr(0, 4) == "0,1,");
    std::getline(lines, line);
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line.substr(0, 4) == "3,6,");
    CHECK(line.find("ok") != std::string::npos);
}

TEST_CASE("eval basic values and domain errors") {
    auto r = run_cli("eval --what coherent --x 1 --z 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1,0\n");

    // kernel at eta=0, sigma=1: K(1,1) = e
    auto rk = run_cli("eval --what kernel --z 1 --w 1 --eta 0 --sigma 1");
    CHECK(rk.exit_code == 0);
    CHECK(rk.output.substr(0, 10) == "2.71828182");

    auto rd = run_cli("eval --what transform-curlyS --coeffs 1 --z -10");
    CHECK(rd.exit_code == 2);
    CHECK(rd.output.find("Re(alpha z) > -sigma/2 violated") != std::string::npos);
}

TEST_CASE("eval grid is plot-ready") {
    auto r = run_cli("eval --what density --grid --x-min 0.5 --x-max 1.5 --x-steps 2");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "x,z_re,z_im,value_re,value_im");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("params file round-trip") {
    const char* path = "cli_test_params.json";
    {
        std::ofstream f(path);
        f << R"({"class":"meixner1","alpha":["2","0"],"beta":["1","0"],"sigma":"2",)"
          << R"("quad":{"rel_tol":1e-10,"abs_tol":1e-14,"max_nodes":500000}})";
    }
    auto r = run_cli(std::string("--params ") + path + " poly -n 1");
    CHECK(r.exit_code == 0);
    // s_1 = x - 1 for meixner1(2,1,2)
    CHECK(r.output == "x^1,x^0\n1,-1\n");
    std::remove(path);

    auto bad = run_cli("--params does_not_exist.json poly -n 1");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("params file from the environment") {
    const char* path = "cli_env_params.json";
    {
        std::ofstream f(path);
        f << R"({"class":"meixner1","alpha":["2","0"],"beta":["1","0"],"sigma":"2"})";
    }
    auto r = run_cli(std::string("poly -n 1"), "MEIXNER_PARAMS=" + std::string(path));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x^1,x^0\n1,-1\n");
    std::remove(path);
}

TEST_CASE("verify exact suite passes and is deterministic") {
    auto r1 = run_cli("verify --suite exact --json cli_report1.json");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("FAIL") == std::string::npos);
    auto r2 = run_cli("verify --suite exact --json cli_report2.json");
    CHECK(r2.exit_code == 0);
    CHECK(r1.output == r2.output);

    std::ifstream f1("cli_report1.json"), f2("cli_report2.json");
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());

    // report JSON re-parses, rows pass, and the seed is recorded
    auto doc = nlohmann::json::parse(s1.str());
    CHECK(doc["seed"] == 12345);
    CHECK(doc["failed"] == 0);
    for (const auto& row : doc["rows"]) {
        CHECK(row["pass"] == true);
        CHECK(row.contains("id"));
        CHECK(row.contains("expected"));
        CHECK(row.contains("actual"));
    }
    std::remove("cli_report1.json");
    std::remove("cli_report2.json");
}

TEST_CASE("verify detects seeded corruption and names the identity") {
    auto r = run_cli("verify --suite exact --corrupt-stirling 5,2");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL") != std::string::npos);
    CHECK(r.output.find("stirling") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("poly").exit_code == 2);
    CHECK(run_cli("eval --what nonsense --z 0").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
}
