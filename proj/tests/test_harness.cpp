#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "itw/errors.hpp"
#include "itw/harness.hpp"

using namespace itw;

namespace {

RunConfig tiny_generator_config() {
    RunConfig config;
    config.suite = Suite::generator;
    config.seed = 7;
    config.generator.weight_cap = 2;
    config.generator.n_values = {1, 2};
    config.generator.theta_values = {1.0};
    config.generator.laguerre_d = {3.0};
    config.generator.jacobi_ab = {{2.0, 2.0}};
    config.generator.ratio_weight_cap = 2;
    config.generator.ratio_n_values = {2};
    config.generator.ratio_theta_values = {1.0};
    config.generator.action_weight_cap = 2;
    config.generator.action_max_n = 2;
    return config;
}

RunConfig tiny_all_config() {
    RunConfig config = tiny_generator_config();
    config.suite = Suite::all;
    config.semigroup.t_values = {0.5};
    config.kernel.weight_cap = 1;
    config.kernel.n_values = {1};
    config.kernel.theta_values = {1.0};
    config.kernel.mc_samples = 2000;
    config.kernel.mc_n = 3;
    config.sde.paths = 400;
    config.sde.norm_n_values = {1};
    config.sde.norm_t_values = {0.5};
    config.sde.norm_beta_d = {{1.0, 2.0}};
    config.ensemble.mc_samples = 2000;
    config.ensemble.stationarity_paths = 100;
    config.ensemble.stationarity_t_values = {0.1};
    return config;
}

} // namespace

TEST_CASE("suite names round-trip") {
    for (auto s : {Suite::generator, Suite::semigroup, Suite::kernel, Suite::sde, Suite::ensemble,
                   Suite::all})
        CHECK(suite_from_string(suite_to_string(s)) == s);
    CHECK_THROWS_AS(suite_from_string("bogus"), ConfigError);
}

TEST_CASE("config file parsing") {
    const char* path = "test_config_tmp.ini";
    {
        std::ofstream out(path);
        out << "# comment\n"
            << "[run]\n"
            << "seed = 99\n"
            << "workers = 2\n"
            << "[generator]\n"
            << "weight_cap = 3\n"
            << "theta_values = 0.5, 1\n"
            << "jacobi_ab = 2:2, 2.5:1.5\n"
            << "[sde]\n"
            << "paths = 500\n";
    }
    RunConfig config = parse_config_file(path);
    CHECK(config.seed == 99);
    CHECK(config.workers == 2);
    CHECK(config.generator.weight_cap == 3);
    REQUIRE(config.generator.theta_values.size() == 2);
    CHECK(config.generator.theta_values[1] == 1.0);
    REQUIRE(config.generator.jacobi_ab.size() == 2);
    CHECK(config.generator.jacobi_ab[1].first == 2.5);
    CHECK(config.sde.paths == 500);
    std::remove(path);

    {
        std::ofstream out(path);
        out << "[generator]\nnot a key value line\n";
    }
    CHECK_THROWS_AS(parse_config_file(path), ConfigError);
    {
        std::ofstream out(path);
        out << "[nosuchsection]\nkey = 1\n";
    }
    CHECK_THROWS_AS(parse_config_file(path), ConfigError);
    {
        std::ofstream out(path);
        out << "[generator]\nweight_cap = notanumber\n";
    }
    CHECK_THROWS_AS(parse_config_file(path), ConfigError);
    std::remove(path);
    CHECK_THROWS_AS(parse_config_file("definitely_missing.ini"), ConfigError);
}

TEST_CASE("overrides") {
    RunConfig config;
    apply_override(config, "generator.weight_cap=4");
    CHECK(config.generator.weight_cap == 4);
    apply_override(config, "kernel.theta_values=0.5,2");
    REQUIRE(config.kernel.theta_values.size() == 2);
    apply_override(config, "run.seed=13");
    CHECK(config.seed == 13);
    CHECK_THROWS_AS(apply_override(config, "nodot"), ConfigError);
    CHECK_THROWS_AS(apply_override(config, "generator.unknown=1"), ConfigError);
}

TEST_CASE("deterministic reports across worker counts") {
    // covers all suites, including the stochastic ones: per-path/per-item
    // streams are split from the master seed, so scheduling cannot leak in
    RunConfig config = tiny_all_config();
    config.workers = 1;
    Report first = run_suites(config);
    config.workers = 3;
    Report second = run_suites(config);
    auto ja = report_to_json(first);
    auto jb = report_to_json(second);
    for (auto& rec : ja["records"]) rec["wall_ms"] = 0.0;
    for (auto& rec : jb["records"]) rec["wall_ms"] = 0.0;
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("exit codes") {
    Report ok;
    ok.records.push_back(ReportRecord{});
    ok.records[0].pass = true;
    CHECK(exit_code_for(ok) == 0);
    Report failed = ok;
    failed.records[0].pass = false;
    CHECK(exit_code_for(failed) == 2);
    Report numerical = failed;
    numerical.records[0].error = "NaN";
    CHECK(exit_code_for(numerical) == 4);
}

TEST_CASE("every record id is describable") {
    // all suites with minimal budgets so every check id is emitted once
    RunConfig config = tiny_all_config();
    Report report = run_suites(config);
    std::set<std::string> seen;
    for (const auto& r : report.records) {
        auto text = describe_check(r.check_id);
        REQUIRE(text.has_value());
        CHECK(!text->empty());
        seen.insert(r.check_id);
    }
    CHECK(seen.size() >= 20);
    CHECK(!describe_check("no.such.check").has_value());
    CHECK(known_check_ids().size() >= seen.size());
}

TEST_CASE("report schema") {
    RunConfig config = tiny_generator_config();
    Report report = run_suites(config);
    auto j = report_to_json(report);
    REQUIRE(j.contains("records"));
    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["total"] == report.records.size());
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["version"] == std::string(kVersion));
    for (const auto& rec : j["records"]) {
        // pass flag consistent with |observed - target| vs tolerance
        double obs = rec["observed"], target = rec["target"], tol = rec["tolerance"];
        bool pass = rec["pass"];
        CHECK(pass == (std::fabs(obs - target) <= tol));
    }

    const char* path = "test_report_tmp.json";
    write_report(report, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json parsed;
    in >> parsed;
    CHECK(parsed["summary"]["total"] == report.records.size());
    std::remove(path);
}

TEST_CASE("control mode flips the generator suite") {
    RunConfig config = tiny_generator_config();
    config.control = true;
    Report report = run_suites(config);
    CHECK(report.records.size() > 0);
    CHECK(report.failures() == static_cast<int>(report.records.size()));
    CHECK(exit_code_for(report) == 2);
}
