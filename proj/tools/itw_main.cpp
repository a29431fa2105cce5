#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "itw/diffusion.hpp"
#include "itw/dixon_anderson.hpp"
#include "itw/ensemble.hpp"
#include "itw/harness.hpp"

namespace {

std::vector<double> parse_point(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

void write_csv_header(std::ostream& os, const std::string& meta, int nx, int ny) {
    os << "# " << meta << "\n";
    for (int i = 1; i <= nx; ++i) os << (i > 1 ? "," : "") << "x" << i;
    for (int i = 1; i <= ny; ++i) os << ",y" << i;
    os << "\n";
}

int run_verify(const std::string& suite_name, const std::string& config_path, uint64_t seed,
               bool seed_given, const std::string& out, int paths, bool control,
               const std::vector<std::string>& overrides, int workers) {
    itw::RunConfig config;
    if (!config_path.empty()) config = itw::parse_config_file(config_path);
    config.suite = itw::suite_from_string(suite_name);
    if (seed_given) config.seed = seed;
    if (!out.empty()) config.out_path = out;
    if (paths > 0) {
        config.sde.paths = paths;
        config.kernel.mc_samples = paths;
        config.ensemble.mc_samples = paths;
    }
    if (control) config.control = true;
    if (workers > 0) config.workers = workers;
    for (const auto& o : overrides) itw::apply_override(config, o);

    itw::Report report = itw::run_suites(config);
    if (!config.out_path.empty()) itw::write_report(report, config.out_path);

    int failed = report.failures();
    std::printf("suite=%s checks=%zu passed=%zu failed=%d%s\n", report.suite.c_str(),
                report.records.size(), report.records.size() - static_cast<size_t>(failed),
                failed, config.control ? " (control mode)" : "");
    for (const auto& r : report.records) {
        if (!r.pass) {
            std::printf("  FAIL %s observed=%.6g target=%.6g tol=%.3g %s\n", r.check_id.c_str(),
                        r.observed, r.target, r.tolerance,
                        r.error.empty() ? "" : r.error.c_str());
        }
    }
    return itw::exit_code_for(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of beta-Laguerre / beta-Jacobi semigroup intertwining "
                 "through the Dixon-Anderson kernel"};
    app.require_subcommand(1);

    // verify
    std::string suite_name = "all", config_path, out_path;
    uint64_t seed = 1;
    int paths = 0, workers = 0;
    bool control = false;
    std::vector<std::string> overrides;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name,
                       "generator | semigroup | kernel | sde | ensemble | all");
    auto* seed_opt = verify->add_option("--seed", seed, "master seed");
    verify->add_option("--config", config_path, "key = value config file");
    verify->add_option("--out", out_path, "JSON report path");
    verify->add_option("--paths", paths, "Monte Carlo budget override");
    verify->add_option("--grid", overrides, "section.key=value overrides")->delimiter(';');
    verify->add_option("--workers", workers, "worker threads (also ITW_WORKERS)");
    verify->add_flag("--control", control, "run falsification controls (checks must fail)");

    // simulate
    std::string family_name = "laguerre", x0_csv = "0.5,1.5", sim_out;
    double sim_theta = 1.0, sim_d = 3.0, sim_a = 2.0, sim_b = 2.0, sim_t = 1.0, sim_dt = 0.01;
    int sim_paths = 1000;
    uint64_t sim_seed = 1;
    auto* simulate_cmd = app.add_subcommand("simulate", "integrate the SDE, dump endpoints CSV");
    simulate_cmd->add_option("--family", family_name, "laguerre | jacobi");
    simulate_cmd->add_option("--x0", x0_csv, "start point, comma separated, ordered");
    simulate_cmd->add_option("--theta", sim_theta, "theta = beta/2");
    simulate_cmd->add_option("--d", sim_d, "Laguerre dimension parameter");
    simulate_cmd->add_option("--a", sim_a, "Jacobi a");
    simulate_cmd->add_option("--b", sim_b, "Jacobi b");
    simulate_cmd->add_option("--t", sim_t, "time horizon");
    simulate_cmd->add_option("--dt", sim_dt, "base step");
    simulate_cmd->add_option("--paths", sim_paths, "path count");
    simulate_cmd->add_option("--seed", sim_seed, "seed");
    simulate_cmd->add_option("--out", sim_out, "CSV output path (default stdout)");

    // sample-kernel
    std::string kx_csv = "0.2,0.9,1.7", kernel_out;
    double ktheta = 1.0;
    int ksamples = 1000, kburnin = 50, kthin = 5;
    uint64_t kseed = 1;
    auto* kernel_cmd =
        app.add_subcommand("sample-kernel", "Gibbs samples of the Dixon-Anderson density");
    kernel_cmd->add_option("--x", kx_csv, "upper-level point, comma separated");
    kernel_cmd->add_option("--theta", ktheta, "theta = beta/2");
    kernel_cmd->add_option("--samples", ksamples, "sample count");
    kernel_cmd->add_option("--burnin", kburnin, "burn-in sweeps");
    kernel_cmd->add_option("--thin", kthin, "sweeps between samples");
    kernel_cmd->add_option("--seed", kseed, "seed");
    kernel_cmd->add_option("--out", kernel_out, "CSV output path (default stdout)");

    // sample-ensemble
    int en = 2, esamples = 1000;
    double ea = 2.0, eb = 2.0, ebeta = 2.0;
    uint64_t eseed = 1;
    std::string ensemble_out;
    auto* ensemble_cmd =
        app.add_subcommand("sample-ensemble", "MCMC samples of the beta-Jacobi ensemble");
    ensemble_cmd->add_option("--n", en, "particle count");
    ensemble_cmd->add_option("--a", ea, "a");
    ensemble_cmd->add_option("--b", eb, "b");
    ensemble_cmd->add_option("--beta", ebeta, "beta");
    ensemble_cmd->add_option("--samples", esamples, "sample count");
    ensemble_cmd->add_option("--seed", eseed, "seed");
    ensemble_cmd->add_option("--out", ensemble_out, "CSV output path (default stdout)");

    // describe
    std::string check_id;
    auto* describe_cmd = app.add_subcommand("describe", "explain a check id");
    describe_cmd->add_option("check", check_id, "check id, e.g. kernel.eigenrelation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (verify->parsed()) {
            return run_verify(suite_name, config_path, seed, seed_opt->count() > 0, out_path,
                              paths, control, overrides, workers);
        }
        if (simulate_cmd->parsed()) {
            itw::Family family = family_name == "jacobi" ? itw::Family::jacobi
                                                         : itw::Family::laguerre;
            std::vector<double> x0 = parse_point(x0_csv);
            itw::ModelParams params;
            params.n = static_cast<int>(x0.size());
            params.theta = sim_theta;
            params.d = sim_d;
            params.a = sim_a;
            params.b = sim_b;
            itw::SimConfig cfg;
            cfg.dt = sim_dt;
            cfg.paths = sim_paths;
            cfg.seed = sim_seed;
            auto endpoints = itw::simulate(family, x0, params, sim_t, cfg);
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!sim_out.empty()) {
                file.open(sim_out);
                os = &file;
            }
            *os << "# family=" << family_name << " n=" << params.n << " theta=" << sim_theta
                << " t=" << sim_t << " dt=" << sim_dt << " seed=" << sim_seed << "\n";
            for (int i = 1; i <= params.n; ++i) *os << (i > 1 ? "," : "") << "x" << i;
            *os << "\n";
            for (const auto& e : endpoints) {
                for (size_t i = 0; i < e.size(); ++i) *os << (i ? "," : "") << e[i];
                *os << "\n";
            }
            return 0;
        }
        if (kernel_cmd->parsed()) {
            std::vector<double> x = parse_point(kx_csv);
            itw::DaGibbsChain chain(x, ktheta,
                                    itw::Rng(itw::splitmix64(kseed ^ 0xd1f0beefULL)));
            for (int s = 0; s < kburnin; ++s) chain.sweep();
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!kernel_out.empty()) {
                file.open(kernel_out);
                os = &file;
            }
            write_csv_header(*os,
                             "n=" + std::to_string(chain.level()) +
                                 " theta=" + std::to_string(ktheta) +
                                 " seed=" + std::to_string(kseed),
                             static_cast<int>(x.size()), chain.level());
            for (int s = 0; s < ksamples; ++s) {
                for (int k = 0; k < kthin; ++k) chain.sweep();
                for (size_t i = 0; i < x.size(); ++i) *os << (i ? "," : "") << x[i];
                for (double v : chain.state()) *os << "," << v;
                *os << "\n";
            }
            return 0;
        }
        if (ensemble_cmd->parsed()) {
            itw::EnsembleSpec spec{en, ea, eb, ebeta};
            itw::McmcOptions opts;
            opts.seed = eseed;
            auto result = itw::ensemble_mcmc(spec, esamples, opts);
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!ensemble_out.empty()) {
                file.open(ensemble_out);
                os = &file;
            }
            *os << "# n=" << en << " a=" << ea << " b=" << eb << " beta=" << ebeta
                << " seed=" << eseed << " acceptance=" << result.acceptance_rate << "\n";
            for (int i = 1; i <= en; ++i) *os << (i > 1 ? "," : "") << "x" << i;
            *os << "\n";
            for (const auto& s : result.samples) {
                for (size_t i = 0; i < s.size(); ++i) *os << (i ? "," : "") << s[i];
                *os << "\n";
            }
            if (!result.acceptance_in_range)
                std::cerr << "warning: acceptance rate " << result.acceptance_rate
                          << " outside [0.1, 0.6]\n";
            return 0;
        }
        if (describe_cmd->parsed()) {
            auto text = itw::describe_check(check_id);
            if (!text) {
                std::cerr << "unknown check id: " << check_id << "\nknown ids:\n";
                for (const auto& id : itw::known_check_ids()) std::cerr << "  " << id << "\n";
                return 3;
            }
            std::cout << check_id << "\n" << *text << "\n";
            return 0;
        }
    } catch (const itw::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    } catch (const itw::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const itw::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 3;
}
