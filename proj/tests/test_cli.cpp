// CLI contract tests; argv[1] is the path to the built binary.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

int run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " > cli_test_stdout.txt 2> cli_test_stderr.txt";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

const char* kTinyGrid =
    "\"generator.weight_cap=1;generator.n_values=1;generator.theta_values=1;"
    "generator.laguerre_d=3;generator.jacobi_ab=2:2;generator.ratio_weight_cap=1;"
    "generator.ratio_n_values=1;generator.ratio_theta_values=1;"
    "generator.action_weight_cap=1;generator.action_max_n=1\"";

} // namespace

TEST_CASE("verify exits 0 on a passing suite and writes a report") {
    int code = run(std::string("verify generator --seed 3 --workers 2 --grid ") + kTinyGrid +
                   " --out cli_report.json");
    CHECK(code == 0);
    std::ifstream in("cli_report.json");
    REQUIRE(in.good());
    nlohmann::json parsed;
    in >> parsed;
    CHECK(parsed["summary"]["failed"] == 0);
    CHECK(parsed["summary"]["seed"] == 3);
    std::remove("cli_report.json");
}

TEST_CASE("control mode exits 2") {
    int code = run(std::string("verify generator --seed 3 --control --grid ") + kTinyGrid);
    CHECK(code == 2);
}

TEST_CASE("configuration errors exit 3 without a report") {
    {
        std::ofstream out("cli_bad_config.ini");
        out << "[generator]\nthis line has no equals sign\n";
    }
    std::remove("cli_should_not_exist.json");
    int code = run("verify generator --config cli_bad_config.ini --out cli_should_not_exist.json");
    CHECK(code == 3);
    std::ifstream missing("cli_should_not_exist.json");
    CHECK(!missing.good());
    std::remove("cli_bad_config.ini");

    CHECK(run("verify generator --config cli_nonexistent.ini") == 3);
    CHECK(run("verify bogus-suite") == 3);
}

TEST_CASE("config file drives the run") {
    {
        std::ofstream out("cli_config.ini");
        out << "[run]\nseed = 11\n"
            << "[generator]\nweight_cap = 1\nn_values = 1\ntheta_values = 1\n"
            << "laguerre_d = 3\njacobi_ab = 2:2\nratio_weight_cap = 1\nratio_n_values = 1\n"
            << "ratio_theta_values = 1\naction_weight_cap = 1\naction_max_n = 1\n";
    }
    int code = run("verify generator --config cli_config.ini --out cli_report2.json");
    CHECK(code == 0);
    std::ifstream in("cli_report2.json");
    REQUIRE(in.good());
    nlohmann::json parsed;
    in >> parsed;
    CHECK(parsed["summary"]["seed"] == 11);
    std::remove("cli_config.ini");
    std::remove("cli_report2.json");
}

TEST_CASE("describe") {
    CHECK(run("describe kernel.eigenrelation") == 0);
    CHECK(run("describe step2.norm.definitely.not.real") == 3);
}

TEST_CASE("simulate dumps CSV endpoints") {
    int code = run("simulate --family jacobi --x0 0.3,0.7 --theta 1 --a 2 --b 2 --t 0.05 "
                   "--dt 0.01 --paths 10 --seed 5 --out cli_sim.csv");
    CHECK(code == 0);
    std::ifstream in("cli_sim.csv");
    REQUIRE(in.good());
    std::string header1, header2;
    std::getline(in, header1);
    std::getline(in, header2);
    CHECK(header1.find("family=jacobi") != std::string::npos);
    CHECK(header2 == "x1,x2");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 10);
    std::remove("cli_sim.csv");
}

TEST_CASE("sample-kernel dumps interlaced rows") {
    int code = run("sample-kernel --x 0.0,1.0,2.0 --theta 1 --samples 8 --burnin 10 --thin 2 "
                   "--seed 5 --out cli_kernel.csv");
    CHECK(code == 0);
    std::ifstream in("cli_kernel.csv");
    REQUIRE(in.good());
    std::string header1, header2;
    std::getline(in, header1);
    std::getline(in, header2);
    CHECK(header1.find("n=2") != std::string::npos);
    CHECK(header1.find("theta=") != std::string::npos);
    CHECK(header1.find("seed=") != std::string::npos);
    CHECK(header2 == "x1,x2,x3,y1,y2");
    std::remove("cli_kernel.csv");
}

TEST_CASE("sample-ensemble dumps ordered rows") {
    int code = run("sample-ensemble --n 2 --a 2 --b 2 --beta 2 --samples 6 --seed 5 "
                   "--out cli_ensemble.csv");
    CHECK(code == 0);
    std::ifstream in("cli_ensemble.csv");
    REQUIRE(in.good());
    std::string header1, header2;
    std::getline(in, header1);
    std::getline(in, header2);
    CHECK(header1.find("beta=2") != std::string::npos);
    CHECK(header2 == "x1,x2");
    std::remove("cli_ensemble.csv");
}

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[argc - 1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv);
    return context.run();
}
