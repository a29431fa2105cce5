#include "itw/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "itw/diffusion.hpp"
#include "itw/dixon_anderson.hpp"
#include "itw/ensemble.hpp"
#include "itw/jack.hpp"
#include "itw/operator_matrix.hpp"
#include "itw/stats.hpp"
#include "itw/tolerances.hpp"

namespace itw {

Suite suite_from_string(const std::string& name) {
    if (name == "generator") return Suite::generator;
    if (name == "semigroup") return Suite::semigroup;
    if (name == "kernel") return Suite::kernel;
    if (name == "sde") return Suite::sde;
    if (name == "ensemble") return Suite::ensemble;
    if (name == "all") return Suite::all;
    throw ConfigError("unknown suite: " + name);
}

std::string suite_to_string(Suite suite) {
    switch (suite) {
    case Suite::generator: return "generator";
    case Suite::semigroup: return "semigroup";
    case Suite::kernel: return "kernel";
    case Suite::sde: return "sde";
    case Suite::ensemble: return "ensemble";
    case Suite::all: return "all";
    }
    return "?";
}

namespace {

struct CheckItem {
    std::string suite;
    std::string check_id;
    nlohmann::json inputs;
    std::function<void(ReportRecord&)> run;
};

void set_absolute(ReportRecord& r, double observed, double target, double tol) {
    r.observed = observed;
    r.target = target;
    r.tolerance = tol;
    r.tolerance_kind = "absolute";
    r.pass = std::fabs(observed - target) <= tol;
}

void set_three_se(ReportRecord& r, double observed, double target, double se) {
    r.observed = observed;
    r.target = target;
    r.tolerance = kSigma * se;
    r.tolerance_kind = "3se";
    r.pass = std::fabs(observed - target) <= kSigma * se;
}

nlohmann::json params_json(const ModelParams& p, Family family) {
    nlohmann::json j{{"n", p.n}, {"theta", p.theta}};
    if (family == Family::laguerre) {
        j["d"] = p.d;
        j["family"] = "laguerre";
    } else {
        j["a"] = p.a;
        j["b"] = p.b;
        j["family"] = "jacobi";
    }
    return j;
}

// canonical strictly ordered evaluation points for the kernel checks
std::vector<double> kernel_point(int n) {
    switch (n) {
    case 1: return {0.2, 1.1};
    case 2: return {0.2, 0.9, 1.7};
    case 3: return {0.15, 0.7, 1.4, 2.2};
    default: {
        std::vector<double> x;
        for (int i = 0; i <= n; ++i) x.push_back(0.1 + 0.55 * i);
        return x;
    }
    }
}

// ---------------------------------------------------------------------------
// generator suite
// ---------------------------------------------------------------------------

void build_generator_items(const RunConfig& config, std::vector<CheckItem>& items) {
    const auto& gc = config.generator;
    const double shift = config.control ? 0.1 : 0.0;

    // intertwining at generator level over the full grid; the zero partition
    // spans only constants and cannot see the control shift
    for (int weight = config.control ? 1 : 0; weight <= gc.weight_cap; ++weight) {
        for (const auto& top : partitions_of_weight(weight, 8)) {
            for (int n : gc.n_values) {
                if (top.length() > n) continue;
                for (double theta : gc.theta_values) {
                    for (double d : gc.laguerre_d) {
                        ModelParams mp;
                        mp.n = n;
                        mp.theta = theta;
                        mp.d = d;
                        nlohmann::json inputs = params_json(mp, Family::laguerre);
                        inputs["top"] = top.to_string();
                        items.push_back({"generator", "generator.intertwine", inputs,
                                         [top, mp, shift](ReportRecord& r) {
                                             double resid = check_generator_intertwining(
                                                 top, mp, Family::laguerre, shift);
                                             set_absolute(r, resid, 0.0, kGeneratorTol);
                                         }});
                    }
                    for (auto [a, b] : gc.jacobi_ab) {
                        ModelParams mp;
                        mp.n = n;
                        mp.theta = theta;
                        mp.a = a;
                        mp.b = b;
                        nlohmann::json inputs = params_json(mp, Family::jacobi);
                        inputs["top"] = top.to_string();
                        items.push_back({"generator", "generator.intertwine", inputs,
                                         [top, mp, shift](ReportRecord& r) {
                                             double resid = check_generator_intertwining(
                                                 top, mp, Family::jacobi, shift);
                                             set_absolute(r, resid, 0.0, kGeneratorTol);
                                         }});
                    }
                }
            }
        }
    }
    if (config.control) return; // controls cover the headline identity only

    // Gamma-ratio identities and the eval shift, one item per (lambda, n, theta)
    for (int weight = 1; weight <= gc.ratio_weight_cap; ++weight) {
        for (const auto& lambda : partitions_of_weight(weight, 8)) {
            for (int n : gc.ratio_n_values) {
                if (lambda.length() > n) continue;
                for (double theta : gc.ratio_theta_values) {
                    nlohmann::json inputs{
                        {"lambda", lambda.to_string()}, {"n", n}, {"theta", theta}};
                    items.push_back({"generator", "generator.gamma_ratio", inputs,
                                     [lambda, n, theta](ReportRecord& r) {
                                         double worst = 0;
                                         for (int i = 1; i <= lambda.length(); ++i) {
                                             auto low = lambda.decremented(i);
                                             if (!low) continue;
                                             double li = lambda.part(i);
                                             // three displayed factors and their product
                                             double r1 = jack_norm_at_ones(lambda, n, theta) /
                                                         jack_norm_at_ones(*low, n, theta);
                                             double e1 =
                                                 std::exp(std::lgamma((n + 1 - i) * theta + li) -
                                                          std::lgamma((n + 1 - i) * theta + li -
                                                                      1)) /
                                                 theta;
                                             double r2 = jack_norm_at_ones(*low, n + 1, theta) /
                                                         jack_norm_at_ones(lambda, n + 1, theta);
                                             double e2 =
                                                 theta *
                                                 std::exp(std::lgamma((n + 2 - i) * theta + li -
                                                                      1) -
                                                          std::lgamma((n + 2 - i) * theta + li));
                                             double r3 = kernel_eigenvalue(*low, n, theta) /
                                                         kernel_eigenvalue(lambda, n, theta);
                                             double e3 = std::exp(
                                                 std::lgamma((n + 1 - i) * theta + li - 1) +
                                                 std::lgamma((n + 2 - i) * theta + li) -
                                                 std::lgamma((n + 1 - i) * theta + li) -
                                                 std::lgamma((n + 2 - i) * theta + li - 1));
                                             worst = std::max(
                                                 {worst, std::fabs(r1 / e1 - 1.0),
                                                  std::fabs(r2 / e2 - 1.0),
                                                  std::fabs(r3 / e3 - 1.0),
                                                  std::fabs(r1 * r2 * r3 - 1.0)});
                                         }
                                         set_absolute(r, worst, 0.0, kGammaRatioTol);
                                     }});
                    items.push_back(
                        {"generator", "generator.eval_shift", inputs,
                         [lambda, n, theta](ReportRecord& r) {
                             double lhs = eval_eigenvalue(lambda, n + 1, theta) -
                                          eval_eigenvalue(lambda, n, theta);
                             double rhs =
                                 2.0 * theta * static_cast<double>(lambda.weight());
                             // exactness in rational mode for the same identity
                             Rational rt(std::llround(theta * 4), 4);
                             Rational rl = eval_eigenvalue(lambda, n + 1, rt) -
                                           eval_eigenvalue(lambda, n, rt);
                             Rational rr = Rational(2) * rt * Rational(lambda.weight());
                             double exact_defect = (rl == rr) ? 0.0 : 1.0;
                             set_absolute(r, std::max(std::fabs(lhs - rhs), exact_defect), 0.0,
                                          kEvalShiftTol);
                         }});
                }
            }
        }
    }

    // closed-form operator actions and the eigenoperator, against the
    // symbolic engine
    for (int weight = 1; weight <= gc.action_weight_cap; ++weight) {
        for (const auto& lambda : partitions_of_weight(weight, gc.action_max_n)) {
            for (int n = std::max(1, lambda.length()); n <= gc.action_max_n; ++n) {
                for (double theta : {0.5, 1.0, 1.5, 2.0}) {
                    nlohmann::json inputs{
                        {"lambda", lambda.to_string()}, {"n", n}, {"theta", theta}};
                    auto expansion_rhs = [lambda, n, theta](bool weighted) {
                        const JackTable& table = shared_jack_table(theta);
                        SymmetricPoly<double> rhs(n);
                        const auto& bins = table.binomials(lambda);
                        double norm = table.norm_at_ones(lambda, n);
                        for (int i = 1; i <= lambda.length(); ++i) {
                            auto low = lambda.decremented(i);
                            if (!low || bins[static_cast<size_t>(i - 1)] == 0.0) continue;
                            double w = weighted ? lambda.part(i) - 1 + (n - i) * theta : 1.0;
                            SymmetricPoly<double> jl = table.expansion(*low, n);
                            jl *= bins[static_cast<size_t>(i - 1)] * w * norm /
                                  table.norm_at_ones(*low, n);
                            rhs += jl;
                        }
                        return rhs;
                    };
                    items.push_back({"generator", "operator.action_b1", inputs,
                                     [lambda, n, theta, expansion_rhs](ReportRecord& r) {
                                         const JackTable& table = shared_jack_table(theta);
                                         auto lhs = apply_operator(JackOperator::B1,
                                                                   table.expansion(lambda, n),
                                                                   theta);
                                         auto rhs = expansion_rhs(false);
                                         lhs -= rhs;
                                         set_absolute(r, to_double(lhs.max_abs_coeff()), 0.0,
                                                      kActionTol);
                                     }});
                    items.push_back({"generator", "operator.action_b2", inputs,
                                     [lambda, n, theta, expansion_rhs](ReportRecord& r) {
                                         const JackTable& table = shared_jack_table(theta);
                                         auto lhs = apply_operator(JackOperator::B2,
                                                                   table.expansion(lambda, n),
                                                                   theta);
                                         auto rhs = expansion_rhs(true);
                                         lhs -= rhs;
                                         set_absolute(r, to_double(lhs.max_abs_coeff()), 0.0,
                                                      kActionTol);
                                     }});
                    items.push_back({"generator", "operator.action_b3", inputs,
                                     [lambda, n, theta](ReportRecord& r) {
                                         const JackTable& table = shared_jack_table(theta);
                                         auto jl = table.expansion(lambda, n);
                                         auto lhs = apply_operator(JackOperator::B3, jl, theta);
                                         auto rhs = jl;
                                         rhs *= static_cast<double>(lambda.weight());
                                         lhs -= rhs;
                                         set_absolute(r, to_double(lhs.max_abs_coeff()), 0.0,
                                                      kActionTol);
                                     }});
                    items.push_back({"generator", "operator.action_d", inputs,
                                     [lambda, n, theta](ReportRecord& r) {
                                         const JackTable& table = shared_jack_table(theta);
                                         auto jl = table.expansion(lambda, n);
                                         auto lhs = apply_operator(JackOperator::D, jl, theta);
                                         auto rhs = jl;
                                         rhs *= eval_eigenvalue(lambda, n, theta);
                                         lhs -= rhs;
                                         set_absolute(r, to_double(lhs.max_abs_coeff()), 0.0,
                                                      kActionTol);
                                     }});
                }
            }
        }
    }

    // Dyson commutator remark
    const int dyson_weight = std::min(4, gc.action_weight_cap);
    for (double theta : {0.5, 1.0, 2.0}) {
        for (int n = 2; n <= std::min(4, gc.action_max_n); ++n) {
            nlohmann::json inputs{{"n", n}, {"theta", theta}};
            items.push_back(
                {"generator", "operator.dyson_commutator", inputs,
                 [n, theta, dyson_weight](ReportRecord& r) {
                     const JackTable& table = shared_jack_table(theta);
                     std::vector<SymmetricPoly<double>> polys;
                     SymmetricPoly<double> one(n);
                     one.add_term(Partition{}, 1.0);
                     polys.push_back(one);
                     for (const auto& lam : partitions_up_to_weight(dyson_weight, n))
                         if (!lam.empty()) polys.push_back(table.expansion(lam, n));
                     set_absolute(r, check_dyson_commutator(n, theta, polys), 0.0, kDysonTol);
                 }});
        }
    }
}

// ---------------------------------------------------------------------------
// semigroup suite
// ---------------------------------------------------------------------------

void build_semigroup_items(const RunConfig& config, std::vector<CheckItem>& items) {
    const auto& gc = config.generator;
    const auto& sc = config.semigroup;
    const double shift = config.control ? 0.1 : 0.0;
    for (int weight = config.control ? 1 : 0; weight <= gc.weight_cap; ++weight) {
        for (const auto& top : partitions_of_weight(weight, 8)) {
            for (int n : gc.n_values) {
                if (top.length() > n) continue;
                for (double theta : gc.theta_values) {
                    for (double t : sc.t_values) {
                        for (double d : gc.laguerre_d) {
                            ModelParams mp;
                            mp.n = n;
                            mp.theta = theta;
                            mp.d = d;
                            mp.t = t;
                            nlohmann::json inputs = params_json(mp, Family::laguerre);
                            inputs["top"] = top.to_string();
                            inputs["t"] = t;
                            items.push_back({"semigroup", "semigroup.intertwine", inputs,
                                             [top, mp, t, shift](ReportRecord& r) {
                                                 double resid = check_semigroup_intertwining(
                                                     top, mp, Family::laguerre, t, shift);
                                                 set_absolute(r, resid, 0.0, kSemigroupTol);
                                             }});
                        }
                        for (auto [a, b] : gc.jacobi_ab) {
                            ModelParams mp;
                            mp.n = n;
                            mp.theta = theta;
                            mp.a = a;
                            mp.b = b;
                            mp.t = t;
                            nlohmann::json inputs = params_json(mp, Family::jacobi);
                            inputs["top"] = top.to_string();
                            inputs["t"] = t;
                            items.push_back({"semigroup", "semigroup.intertwine", inputs,
                                             [top, mp, t, shift](ReportRecord& r) {
                                                 double resid = check_semigroup_intertwining(
                                                     top, mp, Family::jacobi, t, shift);
                                                 set_absolute(r, resid, 0.0, kSemigroupTol);
                                             }});
                        }
                    }
                }
            }
        }
    }
    if (config.control) return;

    // semigroup law e^{(s+t)M} = e^{sM} e^{tM} on representative generators
    for (int variant = 0; variant < 2; ++variant) {
        nlohmann::json inputs{{"variant", variant == 0 ? "laguerre" : "jacobi"}};
        uint64_t seed = config.seed;
        items.push_back(
            {"semigroup", "semigroup.law", inputs, [variant, seed](ReportRecord& r) {
                 const JackTable& table = shared_jack_table(variant == 0 ? 1.0 : 0.5);
                 ModelParams mp;
                 mp.n = 2;
                 mp.theta = table.theta();
                 mp.d = 3.0;
                 mp.a = 2.0;
                 mp.b = 2.0;
                 GeneratorMatrix gen = variant == 0
                                           ? laguerre_generator_matrix(Partition{2}, mp, table)
                                           : jacobi_generator_matrix(Partition{2, 1}, mp, table);
                 Rng rng(splitmix64(seed ^ 0xabcd1234u) + static_cast<uint64_t>(variant));
                 double worst = 0;
                 for (int rep = 0; rep < 4; ++rep) {
                     double s = rng.uniform(), t = rng.uniform();
                     Eigen::MatrixXd lhs = semigroup_matrix(gen, s + t).entries;
                     Eigen::MatrixXd rhs =
                         semigroup_matrix(gen, s).entries * semigroup_matrix(gen, t).entries;
                     double scale = std::max(1.0, lhs.cwiseAbs().maxCoeff());
                     worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / scale);
                 }
                 set_absolute(r, worst, 0.0, kSemigroupLawTol);
             }});
    }
}

// ---------------------------------------------------------------------------
// kernel suite
// ---------------------------------------------------------------------------

void build_kernel_items(const RunConfig& config, std::vector<CheckItem>& items) {
    const auto& kc = config.kernel;
    const double theta_shift = config.control ? 0.05 : 0.0;

    for (int n : kc.n_values) {
        std::vector<double> x = kernel_point(n);
        for (double theta : kc.theta_values) {
            if (!config.control) {
                nlohmann::json sinputs{{"n", n}, {"theta", theta}};
                items.push_back({"kernel", "kernel.stochasticity", sinputs,
                                 [x, theta](ReportRecord& r) {
                                     auto quad = da_integrate(
                                         x, [](const std::vector<double>&) { return 1.0; },
                                         theta, 1e-8);
                                     set_absolute(r, quad.value, 1.0, kKernelQuadTol);
                                 }});
            }
            // columns with all parts equal to one have theta-free kernel
            // eigenvalues (the Gamma ratios telescope), so the control shift
            // cannot reach them; skip those alongside the zero partition
            for (int weight = config.control ? 2 : 0; weight <= kc.weight_cap; ++weight) {
                for (const auto& lambda : partitions_of_weight(weight, n)) {
                    if (config.control && lambda.part(1) < 2) continue;
                    nlohmann::json inputs{
                        {"lambda", lambda.to_string()}, {"n", n}, {"theta", theta}};
                    items.push_back(
                        {"kernel", "kernel.eigenrelation", inputs,
                         [lambda, x, theta, theta_shift](ReportRecord& r) {
                             auto res = check_kernel_eigenrelation(
                                 lambda, x, theta, KernelCheckMode::quadrature, 1e-8);
                             if (theta_shift != 0.0) {
                                 // control: compare against the eigenvalue at a
                                 // shifted theta
                                 int n_low = static_cast<int>(x.size()) - 1;
                                 double bad = kernel_eigenvalue(lambda, n_low,
                                                                theta + theta_shift) *
                                              res.rhs /
                                              std::max(kernel_eigenvalue(lambda, n_low, theta),
                                                       1e-300);
                                 double denom = std::max(std::fabs(bad), 1e-300);
                                 r.observed = std::fabs(res.lhs - bad) / denom;
                                 r.target = 0.0;
                                 r.tolerance = kKernelQuadTol;
                                 r.tolerance_kind = "absolute";
                                 r.pass = r.observed <= r.tolerance;
                                 return;
                             }
                             set_absolute(r, res.rel_error, 0.0, kKernelQuadTol);
                         }});
                }
            }
        }
    }
    if (config.control) return;

    // Monte Carlo route at a level the tensor quadrature cannot reach
    {
        nlohmann::json inputs{{"lambda", "(1)"},
                              {"n", kc.mc_n},
                              {"theta", kc.mc_theta},
                              {"samples", kc.mc_samples}};
        uint64_t seed = config.seed;
        int samples = kc.mc_samples;
        int n = kc.mc_n;
        double theta = kc.mc_theta;
        items.push_back({"kernel", "kernel.eigenrelation_mc", inputs,
                         [n, theta, samples, seed](ReportRecord& r) {
                             auto res = check_kernel_eigenrelation(
                                 Partition{1}, kernel_point(n), theta, KernelCheckMode::mc, 1e-8,
                                 samples, {}, splitmix64(seed ^ 0x4b1d5a6cULL));
                             set_three_se(r, res.lhs, res.rhs, res.se);
                         }});
    }
}

// ---------------------------------------------------------------------------
// sde suite
// ---------------------------------------------------------------------------

std::vector<double> norm_start(int n) {
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(0.5 + 1.0 * i);
    return x;
}

void build_sde_items(const RunConfig& config, std::vector<CheckItem>& items) {
    const auto& sc = config.sde;
    const double d_shift = config.control ? 0.5 : 0.0;

    if (!config.control) {
        nlohmann::json inputs{{"n_max", 6}};
        uint64_t seed = config.seed;
        items.push_back({"sde", "sde.interaction_identity", inputs, [seed](ReportRecord& r) {
                             Rng rng(splitmix64(seed ^ 0x77aa11ULL));
                             double worst = 0;
                             for (int n = 2; n <= 6; ++n) {
                                 for (int rep = 0; rep < 20; ++rep) {
                                     std::vector<double> x(static_cast<size_t>(n));
                                     for (double& v : x) v = rng.uniform(0.0, 5.0);
                                     std::sort(x.begin(), x.end());
                                     bool distinct = true;
                                     for (size_t i = 1; i < x.size(); ++i)
                                         distinct = distinct && x[i] - x[i - 1] > 1e-6;
                                     if (!distinct) continue;
                                     worst = std::max(
                                         worst, std::fabs(interaction_sum(x) -
                                                          static_cast<double>(n) * (n - 1)));
                                 }
                             }
                             set_absolute(r, worst, 0.0, kInteractionTol);
                         }});
    }

    // norm process (Step-2 dimension formula)
    for (int n : sc.norm_n_values) {
        for (auto [beta, d] : sc.norm_beta_d) {
            for (double t : sc.norm_t_values) {
                ModelParams mp;
                mp.n = n;
                mp.theta = 0.5 * beta;
                mp.d = d;
                nlohmann::json inputs = params_json(mp, Family::laguerre);
                inputs["t"] = t;
                inputs["paths"] = sc.paths;
                SimConfig cfg;
                cfg.dt = sc.norm_dt;
                cfg.paths = sc.paths;
                cfg.seed = splitmix64(config.seed ^ (static_cast<uint64_t>(n) << 32) ^
                                      static_cast<uint64_t>(std::llround(1000 * (beta + d + t))));
                items.push_back({"sde", "sde.norm_process", inputs,
                                 [mp, t, cfg, d_shift](ReportRecord& r) {
                                     auto rep = check_norm_process(mp, norm_start(mp.n), t, cfg);
                                     double beta = 2.0 * mp.theta;
                                     double shifted_target =
                                         rep.target + beta * 0.5 * d_shift * mp.n * t;
                                     set_three_se(r, rep.empirical_mean, shifted_target, rep.se);
                                 }});
            }
        }
    }
    if (config.control) return;

    // moment oracle at a fine step (main 3-sigma gate)
    struct OracleCase {
        Family family;
        ModelParams mp;
        std::vector<double> x0;
        double dt;
    };
    std::vector<OracleCase> cases;
    {
        ModelParams lag;
        lag.n = 2;
        lag.theta = 1.0;
        lag.d = 3.0;
        cases.push_back({Family::laguerre, lag, {0.5, 1.5}, sc.oracle_dt});
        ModelParams jac;
        jac.n = 2;
        jac.theta = 1.0;
        jac.a = 2.0;
        jac.b = 2.0;
        // the Jacobi mean relaxes at rate beta(a+b); resolve it well
        cases.push_back({Family::jacobi, jac, {0.3, 0.7}, sc.oracle_dt / 8});
    }
    for (const auto& oc : cases) {
        for (int weight : {1, 2}) {
            Partition lambda = weight == 1 ? Partition{1} : Partition{2};
            nlohmann::json inputs = params_json(oc.mp, oc.family);
            inputs["lambda"] = lambda.to_string();
            inputs["t"] = sc.oracle_t;
            inputs["dt"] = oc.dt;
            inputs["paths"] = sc.paths;
            uint64_t seed = splitmix64(config.seed ^ (weight * 0x9e37ULL) ^
                                       (oc.family == Family::laguerre ? 0x1111ULL : 0x2222ULL));
            double t = sc.oracle_t;
            int paths = sc.paths;
            items.push_back(
                {"sde", "sde.moment_oracle", inputs, [oc, lambda, t, paths, seed](ReportRecord& r) {
                     SimConfig cfg;
                     cfg.dt = oc.dt;
                     cfg.paths = paths;
                     cfg.seed = seed;
                     auto ends = simulate(oc.family, oc.x0, oc.mp, t, cfg);
                     const JackTable& table = shared_jack_table(oc.mp.theta);
                     const auto& poly = table.expansion(lambda, oc.mp.n);
                     std::vector<double> vals;
                     vals.reserve(ends.size());
                     for (const auto& e : ends) vals.push_back(sym_eval(poly, e));
                     auto ms = mean_se(vals);
                     double oracle = exact_moment(oc.x0, lambda, oc.mp, oc.family, t);
                     set_three_se(r, ms.mean, oracle, ms.se);
                 }});
        }
    }

    // step-bias decay, coupled fixed-step runs (Jacobi) and adaptive pairs
    // (Laguerre); the fine-level bias must drop below the coarse one or below
    // statistical resolution
    {
        nlohmann::json inputs{{"family", "jacobi"}, {"dt", 0.02}, {"lambda", "(2)"}};
        uint64_t seed = splitmix64(config.seed ^ 0xb1a5ULL);
        int paths = sc.paths;
        items.push_back({"sde", "sde.bias_decay", inputs, [paths, seed](ReportRecord& r) {
                             ModelParams mp;
                             mp.n = 2;
                             mp.theta = 1.0;
                             mp.a = 2.0;
                             mp.b = 2.0;
                             std::vector<double> x0{0.3, 0.7};
                             double t = 0.5;
                             SimConfig cfg;
                             cfg.dt = 0.02;
                             cfg.paths = paths;
                             cfg.seed = seed;
                             auto pair = simulate_coupled(Family::jacobi, x0, mp, t, cfg);
                             const JackTable& table = shared_jack_table(1.0);
                             const auto& poly = table.expansion(Partition{2}, 2);
                             double oracle =
                                 exact_moment(x0, Partition{2}, mp, Family::jacobi, t);
                             std::vector<double> vc, vf, vd;
                             for (size_t p = 0; p < pair.coarse.size(); ++p) {
                                 double c = sym_eval(poly, pair.coarse[p]);
                                 double f = sym_eval(poly, pair.fine[p]);
                                 vc.push_back(c);
                                 vf.push_back(f);
                                 vd.push_back(c - f);
                             }
                             auto mc = mean_se(vc);
                             auto mf = mean_se(vf);
                             auto md = mean_se(vd);
                             double bias_c = std::fabs(mc.mean - oracle);
                             double bias_f = std::fabs(mf.mean - oracle);
                             r.observed = bias_f;
                             r.target = 0.0;
                             r.tolerance = std::max(bias_c + kSigma * md.se, kSigma * mf.se);
                             r.tolerance_kind = "3se";
                             r.pass = bias_f <= r.tolerance;
                         }});
    }
    {
        nlohmann::json inputs{{"family", "laguerre"}, {"dt", 0.01}, {"lambda", "(2)"}};
        uint64_t seed = splitmix64(config.seed ^ 0xb1a6ULL);
        int paths = sc.paths;
        double dt = sc.oracle_dt;
        items.push_back({"sde", "sde.bias_decay", inputs, [paths, seed, dt](ReportRecord& r) {
                             ModelParams mp;
                             mp.n = 2;
                             mp.theta = 1.0;
                             mp.d = 3.0;
                             std::vector<double> x0{0.5, 1.5};
                             double t = 0.5;
                             const JackTable& table = shared_jack_table(1.0);
                             const auto& poly = table.expansion(Partition{2}, 2);
                             double oracle =
                                 exact_moment(x0, Partition{2}, mp, Family::laguerre, t);
                             auto run = [&](double step, uint64_t s) {
                                 SimConfig cfg;
                                 cfg.dt = step;
                                 cfg.paths = paths;
                                 cfg.seed = s;
                                 auto ends = simulate(Family::laguerre, x0, mp, t, cfg);
                                 std::vector<double> vals;
                                 vals.reserve(ends.size());
                                 for (const auto& e : ends) vals.push_back(sym_eval(poly, e));
                                 return mean_se(vals);
                             };
                             auto coarse = run(dt, seed);
                             auto fine = run(0.5 * dt, splitmix64(seed));
                             double bias_c = std::fabs(coarse.mean - oracle);
                             double bias_f = std::fabs(fine.mean - oracle);
                             r.observed = bias_f;
                             r.target = 0.0;
                             r.tolerance = std::max(bias_c + kSigma * fine.se, kSigma * fine.se);
                             r.tolerance_kind = "3se";
                             r.pass = bias_f <= r.tolerance;
                         }});
    }
}

// ---------------------------------------------------------------------------
// ensemble suite
// ---------------------------------------------------------------------------

void build_ensemble_items(const RunConfig& config, std::vector<CheckItem>& items) {
    const auto& ec = config.ensemble;
    const double a_shift = config.control ? 0.5 : 0.0;

    // n=1 exactness against Beta moments
    for (auto [a, b] : {std::pair{2.0, 2.0}, std::pair{3.0, 1.0}}) {
        for (int k = 1; k <= 4; ++k) {
            EnsembleSpec spec{1, a, b, 2.0};
            nlohmann::json inputs{{"a", a}, {"b", b}, {"beta", 2.0}, {"moment", k}};
            uint64_t seed = splitmix64(config.seed ^ (static_cast<uint64_t>(k) << 8) ^
                                       static_cast<uint64_t>(std::llround(16 * (a + 8 * b))));
            int samples = ec.mc_samples / 2;
            items.push_back({"ensemble", "ensemble.beta_moments", inputs,
                             [spec, k, samples, seed, a_shift](ReportRecord& r) {
                                 McmcOptions opts;
                                 opts.seed = seed;
                                 auto chain = ensemble_mcmc(spec, samples, opts);
                                 std::vector<double> vals;
                                 vals.reserve(chain.samples.size());
                                 for (const auto& s : chain.samples) {
                                     double v = 1;
                                     for (int j = 0; j < k; ++j) v *= s[0];
                                     vals.push_back(v);
                                 }
                                 auto ms = mean_se(vals);
                                 EnsembleSpec target_spec = spec;
                                 target_spec.a += a_shift;
                                 set_three_se(r, ms.mean, beta_moment(target_spec, k), ms.se);
                             }});
        }
    }

    // reflection symmetry at a=b: odd central moments vanish
    if (!config.control) {
        for (double beta : {1.0, 2.0}) {
            for (int k : {1, 3}) {
                EnsembleSpec spec{2, 2.0, 2.0, beta};
                nlohmann::json inputs{{"beta", beta}, {"power", k}};
                uint64_t seed =
                    splitmix64(config.seed ^ 0x5151ULL ^ static_cast<uint64_t>(k * 1000 + beta));
                int samples = ec.mc_samples / 2;
                items.push_back({"ensemble", "ensemble.reflect_symmetry", inputs,
                                 [spec, k, samples, seed](ReportRecord& r) {
                                     McmcOptions opts;
                                     opts.seed = seed;
                                     auto chain = ensemble_mcmc(spec, samples, opts);
                                     std::vector<double> vals;
                                     for (const auto& s : chain.samples) {
                                         double acc = 0;
                                         for (double v : s) acc += std::pow(v - 0.5, k);
                                         vals.push_back(acc);
                                     }
                                     auto ms = batch_mean_se(vals);
                                     set_three_se(r, ms.mean, 0.0, ms.se);
                                 }});
            }
        }
    }

    // corollary, quadrature anchor at n=1
    {
        EnsembleSpec spec{1, 2.0, 2.0, 2.0};
        for (int k = 1; k <= 3; ++k) {
            nlohmann::json inputs{{"a", 2.0}, {"b", 2.0}, {"beta", 2.0}, {"moment", k}};
            items.push_back({"ensemble", "ensemble.corollary_quadrature", inputs,
                             [spec, k, a_shift](ReportRecord& r) {
                                 SymmetricPoly<double> p(1);
                                 p.add_term(Partition{k}, 1.0);
                                 CorollaryOptions opts;
                                 opts.mode = CorollaryMode::quadrature;
                                 EnsembleSpec run_spec = spec;
                                 run_spec.a += a_shift; // control: shifted upper level
                                 auto checks = check_corollary(run_spec, {p}, opts);
                                 double target = beta_moment(spec, k);
                                 set_absolute(r, checks[0].lhs, target, kCorollaryQuadTol);
                             }});
        }
    }

    // corollary, two-estimator Monte Carlo at n=2
    {
        EnsembleSpec spec{2, 2.5, 1.5, 1.0};
        const JackTable& table = shared_jack_table(0.5);
        std::vector<std::pair<std::string, SymmetricPoly<double>>> polys;
        polys.emplace_back("J(1)", table.expansion(Partition{1}, 2));
        polys.emplace_back("J(2)", table.expansion(Partition{2}, 2));
        SymmetricPoly<double> m11(2);
        m11.add_term(Partition{1, 1}, 1.0);
        polys.emplace_back("m(1,1)", m11);
        for (const auto& [name, poly] : polys) {
            nlohmann::json inputs{
                {"a", spec.a}, {"b", spec.b}, {"beta", spec.beta}, {"poly", name},
                {"samples", ec.mc_samples}};
            uint64_t seed = splitmix64(config.seed ^ std::hash<std::string>{}(name));
            int samples = ec.mc_samples;
            SymmetricPoly<double> p = poly;
            items.push_back({"ensemble", "ensemble.corollary_mc", inputs,
                             [spec, p, samples, seed, a_shift](ReportRecord& r) {
                                 CorollaryOptions opts;
                                 opts.mode = CorollaryMode::mc;
                                 opts.mc_samples = samples;
                                 opts.seed = seed;
                                 EnsembleSpec run_spec = spec;
                                 run_spec.a += a_shift;
                                 auto checks = check_corollary(run_spec, {p}, opts);
                                 // compare against the unshifted lower level
                                 double rhs = checks[0].rhs;
                                 if (a_shift != 0.0) {
                                     CorollaryOptions ref_opts = opts;
                                     ref_opts.seed = splitmix64(seed + 17);
                                     auto ref = check_corollary(spec, {p}, ref_opts);
                                     rhs = ref[0].rhs;
                                 }
                                 double se = std::sqrt(checks[0].lhs_se * checks[0].lhs_se +
                                                       checks[0].rhs_se * checks[0].rhs_se);
                                 set_three_se(r, checks[0].lhs, rhs, se);
                             }});
        }
    }
    if (config.control) return;

    // SDE stationarity against the ensemble
    {
        const JackTable& table = shared_jack_table(1.0);
        std::vector<std::pair<EnsembleSpec, std::vector<std::pair<std::string, SymmetricPoly<double>>>>>
            stat_cases;
        {
            SymmetricPoly<double> p1(1), p2(1);
            p1.add_term(Partition{1}, 1.0);
            p2.add_term(Partition{2}, 1.0);
            stat_cases.push_back({EnsembleSpec{1, 2.0, 2.0, 2.0},
                                  {{"y", p1}, {"y^2", p2}}});
        }
        stat_cases.push_back({EnsembleSpec{2, 2.0, 2.0, 2.0},
                              {{"J(1)", table.expansion(Partition{1}, 2)},
                               {"J(2)", table.expansion(Partition{2}, 2)}}});
        int case_index = 0;
        for (const auto& [spec, polys] : stat_cases) {
            for (const auto& [name, poly] : polys) {
                nlohmann::json inputs{{"n", spec.n}, {"a", spec.a},   {"b", spec.b},
                                      {"beta", spec.beta},            {"poly", name}};
                uint64_t seed = splitmix64(config.seed ^ 0xeeff00ULL ^
                                           std::hash<std::string>{}(name) ^
                                           static_cast<uint64_t>(case_index));
                SymmetricPoly<double> p = poly;
                StationarityOptions opts;
                opts.sim.paths = ec.stationarity_paths;
                opts.sim.dt = ec.stationarity_dt;
                opts.sim.seed = seed;
                opts.mcmc.seed = splitmix64(seed + 3);
                opts.t_values = ec.stationarity_t_values;
                items.push_back({"ensemble", "ensemble.stationarity", inputs,
                                 [spec, p, opts](ReportRecord& r) {
                                     auto checks = check_sde_stationarity(spec, {p}, opts);
                                     double worst_z = -1, worst_diff = 0, band = 0;
                                     for (const auto& c : checks) {
                                         double diff = c.sde_mean - c.ensemble_mean;
                                         double se = std::sqrt(c.sde_se * c.sde_se +
                                                               c.ensemble_se * c.ensemble_se);
                                         if (std::fabs(diff) / se >= worst_z) {
                                             worst_z = std::fabs(diff) / se;
                                             worst_diff = diff;
                                             band = kSigma * se;
                                         }
                                     }
                                     r.observed = worst_diff;
                                     r.target = 0.0;
                                     r.tolerance = band;
                                     r.tolerance_kind = "3se";
                                     r.pass = checks.size() > 0;
                                     for (const auto& c : checks) r.pass = r.pass && c.pass;
                                 }});
            }
            ++case_index;
        }
    }

    // symmetrization identities (deterministic)
    {
        nlohmann::json inputs{{"n", 2}};
        items.push_back({"ensemble", "ensemble.symmetrize", inputs, [](ReportRecord& r) {
                             std::vector<std::vector<double>> samples{
                                 {0.2, 0.9}, {0.4, 1.7}, {1.1, 3.0}};
                             MultiPoly<double> q1(2);
                             q1.add_term({1, 0}, 1.0); // z1
                             double v1 = symmetrize_and_moment(samples, q1);
                             double e1 = 0;
                             for (const auto& s : samples) e1 += 0.5 * (s[0] + s[1]);
                             e1 /= static_cast<double>(samples.size());
                             MultiPoly<double> q2(2);
                             q2.add_term({2, 1}, 1.0); // z1^2 z2
                             double v2 = symmetrize_and_moment(samples, q2);
                             double e2 = 0;
                             for (const auto& s : samples)
                                 e2 += 0.5 * (s[0] * s[0] * s[1] + s[1] * s[1] * s[0]);
                             e2 /= static_cast<double>(samples.size());
                             double worst =
                                 std::max(std::fabs(v1 - e1), std::fabs(v2 - e2));
                             set_absolute(r, worst, 0.0, 1e-12);
                         }});
    }
}

} // namespace

Report run_suites(const RunConfig& config) {
    std::vector<CheckItem> items;
    auto wants = [&](Suite s) { return config.suite == Suite::all || config.suite == s; };
    if (wants(Suite::generator)) build_generator_items(config, items);
    if (wants(Suite::semigroup)) build_semigroup_items(config, items);
    if (wants(Suite::kernel)) build_kernel_items(config, items);
    if (wants(Suite::sde)) build_sde_items(config, items);
    if (wants(Suite::ensemble)) build_ensemble_items(config, items);

    Report report;
    report.suite = suite_to_string(config.suite);
    report.seed = config.seed;
    report.control_mode = config.control;
    report.records.resize(items.size());

    int workers = config.workers;
    if (workers <= 0) {
        if (const char* env = std::getenv("ITW_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) {
            unsigned hw = std::thread::hardware_concurrency();
            workers = hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
        }
    }

    std::atomic<size_t> next{0};
    auto run_worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= items.size()) break;
            const CheckItem& item = items[idx];
            ReportRecord& record = report.records[idx];
            record.suite = item.suite;
            record.check_id = item.check_id;
            record.inputs = item.inputs;
            auto start = std::chrono::steady_clock::now();
            try {
                item.run(record);
            } catch (const std::exception& e) {
                record.pass = false;
                record.error = e.what();
            }
            record.wall_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        }
    };
    if (workers <= 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

int exit_code_for(const Report& report) {
    if (report.numerical_failures() > 0) return 4;
    if (report.failures() > 0) return 2;
    return 0;
}

} // namespace itw
