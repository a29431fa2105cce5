#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itw/report.hpp"

namespace itw {

enum class Suite { generator, semigroup, kernel, sde, ensemble, all };

Suite suite_from_string(const std::string& name);
std::string suite_to_string(Suite suite);

struct GeneratorSuiteConfig {
    int weight_cap = 5;
    std::vector<int> n_values{1, 2, 3};
    std::vector<double> theta_values{0.5, 0.75, 1.0, 1.5, 2.0};
    std::vector<double> laguerre_d{2.0, 3.0, 5.5};
    std::vector<std::pair<double, double>> jacobi_ab{{1, 1}, {2, 2}, {2.5, 1.5}};
    // Gamma-ratio identity sweep
    int ratio_weight_cap = 6;
    std::vector<int> ratio_n_values{1, 2, 3, 4, 5};
    std::vector<double> ratio_theta_values{0.5, 0.75, 1.0, 2.0};
    // operator action sweep
    int action_weight_cap = 4;
    int action_max_n = 4;
};

struct SemigroupSuiteConfig {
    std::vector<double> t_values{0.1, 1.0, 5.0};
};

struct KernelSuiteConfig {
    int weight_cap = 4;
    std::vector<int> n_values{1, 2, 3};
    std::vector<double> theta_values{0.5, 1.0, 2.0};
    int mc_samples = 100000;
    double mc_theta = 1.5;
    int mc_n = 4;
};

struct SdeSuiteConfig {
    int paths = 10000;
    double norm_dt = 0.00125;
    std::vector<double> norm_t_values{0.5, 1.0};
    std::vector<std::pair<double, double>> norm_beta_d{{1.0, 2.0}, {1.5, 3.5}};
    std::vector<int> norm_n_values{1, 2, 3};
    double oracle_dt = 0.01;
    double oracle_t = 0.5;
};

struct EnsembleSuiteConfig {
    int mc_samples = 100000;
    int stationarity_paths = 4000;
    double stationarity_dt = 0.005;
    std::vector<double> stationarity_t_values{0.1, 1.0, 5.0};
};

struct RunConfig {
    Suite suite = Suite::all;
    uint64_t seed = 1;
    std::string out_path;
    bool control = false;
    int workers = 0; // 0: ITW_WORKERS env or hardware
    GeneratorSuiteConfig generator;
    SemigroupSuiteConfig semigroup;
    KernelSuiteConfig kernel;
    SdeSuiteConfig sde;
    EnsembleSuiteConfig ensemble;
};

/// Parse the key = value section format; unknown sections or keys are
/// configuration errors.
RunConfig parse_config_file(const std::string& path);

/// Apply one "section.key=value" override (the --grid flag).
void apply_override(RunConfig& config, const std::string& assignment);

/// Run the selected suites; records are deterministic for a fixed config and
/// seed regardless of worker count.
Report run_suites(const RunConfig& config);

/// Exit-code contract: 0 all pass, 2 check failure, 3 configuration error,
/// 4 numerical failure.
int exit_code_for(const Report& report);

/// Human-readable description of a check id: the identity it verifies and the
/// tolerance policy. Unknown ids return std::nullopt.
std::optional<std::string> describe_check(const std::string& check_id);

/// All known check ids.
std::vector<std::string> known_check_ids();

} // namespace itw
