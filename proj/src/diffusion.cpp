#include "itw/diffusion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

namespace itw {

namespace {

// pairwise interaction terms with the symmetric-split regularization at
// coincidences: the ordered-pair sum for {i,j} is continuous there, and the
// split keeps sum_i sum_{j!=i} nu(x_i)/(x_i-x_j) identities intact
void add_interaction(std::vector<double>& drift, const std::vector<double>& x, Family family) {
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double xi = x[static_cast<size_t>(i)], xj = x[static_cast<size_t>(j)];
            double gap = xi - xj;
            double scale = std::max({1.0, std::fabs(xi), std::fabs(xj)});
            if (std::fabs(gap) > 1e-12 * scale) {
                if (family == Family::laguerre) {
                    drift[static_cast<size_t>(i)] += 2.0 * xi / gap;
                    drift[static_cast<size_t>(j)] += 2.0 * xj / -gap;
                } else {
                    drift[static_cast<size_t>(i)] += 2.0 * xi * (1.0 - xi) / gap;
                    drift[static_cast<size_t>(j)] += 2.0 * xj * (1.0 - xj) / -gap;
                }
            } else {
                // coincident pair: each particle takes half the pair total
                double split = family == Family::laguerre ? 1.0 : 1.0 - (xi + xj);
                drift[static_cast<size_t>(i)] += split;
                drift[static_cast<size_t>(j)] += split;
            }
        }
    }
}

void drift_and_diffusion(const std::vector<double>& x, Family family, const ModelParams& p,
                         std::vector<double>& drift, std::vector<double>& sigma) {
    const int n = static_cast<int>(x.size());
    const double beta = 2.0 * p.theta;
    drift.assign(static_cast<size_t>(n), 0.0);
    add_interaction(drift, x, family);
    for (int i = 0; i < n; ++i) {
        double xi = x[static_cast<size_t>(i)];
        if (family == Family::laguerre) {
            drift[static_cast<size_t>(i)] = beta * (0.5 * p.d + drift[static_cast<size_t>(i)]);
            sigma[static_cast<size_t>(i)] = 2.0 * std::sqrt(std::max(xi, 0.0));
        } else {
            drift[static_cast<size_t>(i)] =
                beta * (p.a - (p.a + p.b) * xi + drift[static_cast<size_t>(i)]);
            sigma[static_cast<size_t>(i)] = 2.0 * std::sqrt(std::max(xi * (1.0 - xi), 0.0));
        }
    }
}

void clamp_and_sort(std::vector<double>& x, Family family) {
    for (double& v : x) {
        if (family == Family::laguerre) {
            v = std::max(v, 0.0);
        } else {
            v = std::min(std::max(v, 0.0), 1.0);
        }
    }
    std::sort(x.begin(), x.end());
}

// substep small enough that drift displacements stay a fraction of the local
// gaps; bounded below to guarantee progress
double stable_substep(const std::vector<double>& x, const std::vector<double>& drift,
                      double remaining, const SimConfig& cfg) {
    double h = remaining;
    const int n = static_cast<int>(x.size());
    const double floor = cfg.dt / cfg.max_substeps;
    for (int i = 0; i < n; ++i) {
        double gap = std::numeric_limits<double>::infinity();
        if (i > 0) gap = std::min(gap, x[static_cast<size_t>(i)] - x[static_cast<size_t>(i - 1)]);
        if (i + 1 < n)
            gap = std::min(gap, x[static_cast<size_t>(i + 1)] - x[static_cast<size_t>(i)]);
        if (!std::isfinite(gap)) continue;
        double di = std::fabs(drift[static_cast<size_t>(i)]);
        if (di > 0) h = std::min(h, cfg.gap_safety * std::max(gap, floor) / di);
    }
    return std::max(h, std::min(remaining, floor));
}

DiffusionState step_family(const DiffusionState& state, Family family, double dt, Rng& rng,
                           const SimConfig& config) {
    DiffusionState out = state;
    const int n = static_cast<int>(out.coords.size());
    std::vector<double> drift, sigma(static_cast<size_t>(n));
    double remaining = dt;
    while (remaining > 0) {
        drift_and_diffusion(out.coords, family, out.params, drift, sigma);
        double h = config.scheme == Scheme::adaptive
                       ? stable_substep(out.coords, drift, remaining, config)
                       : remaining;
        double sqh = std::sqrt(h);
        for (int i = 0; i < n; ++i) {
            out.coords[static_cast<size_t>(i)] += drift[static_cast<size_t>(i)] * h +
                                                  sigma[static_cast<size_t>(i)] * sqh *
                                                      rng.normal();
            if (!std::isfinite(out.coords[static_cast<size_t>(i)]))
                throw NumericalError("diffusion step produced a non-finite coordinate at t=" +
                                     std::to_string(out.time));
        }
        clamp_and_sort(out.coords, family);
        remaining -= h;
        out.time += h;
    }
    return out;
}

} // namespace

double interaction_sum(const std::vector<double>& coords) {
    double acc = 0;
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = 0; j < coords.size(); ++j) {
            if (i == j) continue;
            acc += 2.0 * coords[i] / (coords[i] - coords[j]);
        }
    return acc;
}

DiffusionState step_laguerre(const DiffusionState& state, double dt, Rng& rng,
                             const SimConfig& config) {
    return step_family(state, Family::laguerre, dt, rng, config);
}

DiffusionState step_jacobi(const DiffusionState& state, double dt, Rng& rng,
                           const SimConfig& config) {
    return step_family(state, Family::jacobi, dt, rng, config);
}

namespace {

void check_start(Family family, const std::vector<double>& x0) {
    if (!std::is_sorted(x0.begin(), x0.end()))
        throw DomainError("simulate: start point must be ordered");
    for (double v : x0) {
        if (family == Family::laguerre && v < 0)
            throw DomainError("simulate: Laguerre start needs nonnegative coordinates");
        if (family == Family::jacobi && (v < 0 || v > 1))
            throw DomainError("simulate: Jacobi start must lie in [0,1]");
    }
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ITW_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

std::vector<double> run_one_path(Family family, const std::vector<double>& x0,
                                 const ModelParams& params, double t, const SimConfig& config,
                                 uint64_t path_index) {
    Rng rng = Rng::stream(config.seed, path_index);
    DiffusionState state;
    state.coords = x0;
    state.family = family;
    state.params = params;
    double remaining = t;
    while (remaining > 1e-15) {
        double dt = std::min(config.dt, remaining);
        state = step_family(state, family, dt, rng, config);
        remaining -= dt;
    }
    return state.coords;
}

} // namespace

std::vector<std::vector<double>> simulate(Family family, const std::vector<double>& x0,
                                          const ModelParams& params, double t,
                                          const SimConfig& config) {
    check_start(family, x0);
    if (config.paths < 1 || config.dt <= 0)
        throw DomainError("simulate: need paths >= 1 and dt > 0");
    std::vector<std::vector<double>> endpoints(static_cast<size_t>(config.paths));
    const int workers = resolve_workers(config.workers);
    std::atomic<int> next{0};
    std::atomic<int> failed_path{-1};
    std::mutex error_mutex;
    std::string error_message;
    auto worker = [&]() {
        while (failed_path.load() < 0) {
            int p = next.fetch_add(1);
            if (p >= config.paths) break;
            try {
                endpoints[static_cast<size_t>(p)] =
                    run_one_path(family, x0, params, t, config, static_cast<uint64_t>(p));
            } catch (const std::exception& e) {
                int expected = -1;
                if (failed_path.compare_exchange_strong(expected, p)) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    error_message = e.what();
                }
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed_path.load() >= 0)
        throw NumericalError("path " + std::to_string(failed_path.load()) +
                             " failed: " + error_message);
    return endpoints;
}

CoupledEndpoints simulate_coupled(Family family, const std::vector<double>& x0,
                                  const ModelParams& params, double t, const SimConfig& config) {
    check_start(family, x0);
    CoupledEndpoints out;
    out.coarse.resize(static_cast<size_t>(config.paths));
    out.fine.resize(static_cast<size_t>(config.paths));
    const int nsteps = std::max(1, static_cast<int>(std::llround(t / config.dt)));
    const int n = static_cast<int>(x0.size());
    for (int p = 0; p < config.paths; ++p) {
        Rng rng = Rng::stream(config.seed, static_cast<uint64_t>(p));
        std::vector<double> xc = x0, xf = x0;
        std::vector<double> driftc, sigmac(static_cast<size_t>(n));
        std::vector<double> driftf, sigmaf(static_cast<size_t>(n));
        const double h = t / nsteps;
        const double hf = 0.5 * h;
        const double sqf = std::sqrt(hf);
        std::vector<double> dw(static_cast<size_t>(n));
        for (int s = 0; s < nsteps; ++s) {
            std::fill(dw.begin(), dw.end(), 0.0);
            for (int half = 0; half < 2; ++half) {
                drift_and_diffusion(xf, family, params, driftf, sigmaf);
                for (int i = 0; i < n; ++i) {
                    double z = sqf * rng.normal();
                    dw[static_cast<size_t>(i)] += z;
                    xf[static_cast<size_t>(i)] +=
                        driftf[static_cast<size_t>(i)] * hf + sigmaf[static_cast<size_t>(i)] * z;
                }
                clamp_and_sort(xf, family);
            }
            drift_and_diffusion(xc, family, params, driftc, sigmac);
            for (int i = 0; i < n; ++i)
                xc[static_cast<size_t>(i)] += driftc[static_cast<size_t>(i)] * h +
                                              sigmac[static_cast<size_t>(i)] * dw[static_cast<size_t>(i)];
            clamp_and_sort(xc, family);
        }
        out.coarse[static_cast<size_t>(p)] = xc;
        out.fine[static_cast<size_t>(p)] = xf;
    }
    return out;
}

NormProcessReport check_norm_process(const ModelParams& params, const std::vector<double>& x0,
                                     double t, const SimConfig& config) {
    const double beta = 2.0 * params.theta;
    const int n = static_cast<int>(x0.size());
    NormProcessReport report;
    report.dimension = beta * (0.5 * params.d * n + n * (n - 1));
    double norm0 = 0;
    for (double v : x0) norm0 += v;
    report.target = norm0 + report.dimension * t;
    report.besq_var = 4.0 * t * norm0 + 2.0 * report.dimension * t * t;

    auto endpoints = simulate(Family::laguerre, x0, params, t, config);
    double sum = 0, sumsq = 0;
    for (const auto& x : endpoints) {
        double norm = 0;
        for (double v : x) norm += v;
        sum += norm;
        sumsq += norm * norm;
    }
    const double m = static_cast<double>(endpoints.size());
    report.empirical_mean = sum / m;
    report.empirical_var = sumsq / m - report.empirical_mean * report.empirical_mean;
    report.se = std::sqrt(std::max(report.empirical_var, 0.0) / m);
    report.pass = std::fabs(report.empirical_mean - report.target) <= 3.0 * report.se;
    return report;
}

} // namespace itw
