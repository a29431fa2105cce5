#include "itw/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "itw/dixon_anderson.hpp"
#include "itw/quadrature.hpp"
#include "itw/stats.hpp"

namespace itw {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double ensemble_log_density_unnormalized(const std::vector<double>& x, const EnsembleSpec& spec) {
    if (static_cast<int>(x.size()) != spec.n)
        throw DomainError("ensemble density: dimension mismatch");
    const double ea = 0.5 * spec.beta * spec.a - 1.0;
    const double eb = 0.5 * spec.beta * spec.b - 1.0;
    double acc = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && x[i] < 1.0)) return -kInf;
        if (i > 0 && !(x[i] > x[i - 1])) return -kInf;
        acc += ea * std::log(x[i]) + eb * std::log(1.0 - x[i]);
    }
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) acc += spec.beta * std::log(x[j] - x[i]);
    return acc;
}

namespace {

// unordered-representative log density terms touching coordinate i only
double site_log_density(const std::vector<double>& x, size_t i, const EnsembleSpec& spec) {
    const double ea = 0.5 * spec.beta * spec.a - 1.0;
    const double eb = 0.5 * spec.beta * spec.b - 1.0;
    double v = x[i];
    if (!(v > 0.0 && v < 1.0)) return -kInf;
    double acc = ea * std::log(v) + eb * std::log(1.0 - v);
    for (size_t j = 0; j < x.size(); ++j) {
        if (j == i) continue;
        double gap = std::fabs(v - x[j]);
        if (gap == 0.0) return -kInf;
        acc += spec.beta * std::log(gap);
    }
    return acc;
}

} // namespace

McmcResult ensemble_mcmc(const EnsembleSpec& spec, int samples, const McmcOptions& options) {
    if (spec.n < 1 || spec.beta <= 0) throw DomainError("ensemble_mcmc: invalid spec");
    if (!(0.5 * spec.beta * spec.a > 0.0 && 0.5 * spec.beta * spec.b > 0.0))
        throw DomainError("ensemble_mcmc: density exponents must exceed -1");
    McmcResult result;
    result.samples.reserve(static_cast<size_t>(samples));
    Rng rng(splitmix64(options.seed ^ 0x6a5d1f0b2c3e4d58ULL));

    if (spec.n == 1) { // exact Beta(beta a/2, beta b/2)
        for (int s = 0; s < samples; ++s)
            result.samples.push_back({rng.beta(0.5 * spec.beta * spec.a, 0.5 * spec.beta * spec.b)});
        return result;
    }

    const size_t n = static_cast<size_t>(spec.n);
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = (static_cast<double>(i) + 1.0) / (n + 1.0);
    std::vector<double> step(n, 0.1);

    int64_t accepted = 0, proposed = 0;
    const double shape_a = 0.5 * spec.beta * spec.a;
    const double shape_b = 0.5 * spec.beta * spec.b;
    // log of the Vandermonde interaction seen from site i; the single-site
    // Beta factors cancel against the independence proposal below
    auto interaction = [&](size_t i, double v) {
        double acc = 0;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double gap = std::fabs(v - x[j]);
            if (gap == 0.0) return -kInf;
            acc += spec.beta * std::log(gap);
        }
        return acc;
    };
    auto sweep = [&](bool adapt, int iteration) {
        // random-walk pass with adaptive scale
        for (size_t i = 0; i < n; ++i) {
            double cur = site_log_density(x, i, spec);
            double old = x[i];
            x[i] = old + step[i] * rng.normal();
            double prop = site_log_density(x, i, spec);
            bool accept = std::log(rng.uniform()) < prop - cur;
            if (!accept) x[i] = old;
            if (adapt) {
                double rate = accept ? 1.0 : 0.0;
                step[i] *= std::exp((rate - 0.3) / std::pow(iteration + 1.0, 0.6));
                step[i] = std::clamp(step[i], 1e-4, 0.5);
            } else {
                ++proposed;
                accepted += accept ? 1 : 0;
            }
        }
        // independence pass: Beta-marginal proposals cut through the edge
        // spikes that slow the random walk down
        for (size_t i = 0; i < n; ++i) {
            double v = rng.beta(shape_a, shape_b);
            if (std::log(rng.uniform()) < interaction(i, v) - interaction(i, x[i])) x[i] = v;
        }
    };

    for (int s = 0; s < options.burn_in; ++s) sweep(true, s);
    for (int s = 0; s < samples; ++s) {
        for (int k = 0; k < options.thin; ++k) sweep(false, 0);
        std::vector<double> ordered = x;
        std::sort(ordered.begin(), ordered.end());
        result.samples.push_back(std::move(ordered));
    }
    result.acceptance_rate =
        proposed > 0 ? static_cast<double>(accepted) / static_cast<double>(proposed) : 1.0;
    result.acceptance_in_range =
        result.acceptance_rate >= 0.1 && result.acceptance_rate <= 0.6;
    return result;
}

double beta_moment(const EnsembleSpec& spec, int k) {
    const double alpha = 0.5 * spec.beta * spec.a;
    const double beta_p = 0.5 * spec.beta * spec.b;
    double acc = 1;
    for (int j = 0; j < k; ++j) acc *= (alpha + j) / (alpha + beta_p + j);
    return acc;
}

namespace {

// closed-form Beta moment of a one-variable polynomial stored symmetrically
double beta_poly_moment(const SymmetricPoly<double>& p, const EnsembleSpec& spec) {
    double acc = 0;
    for (const auto& [mu, c] : p.terms) {
        if (mu.length() > 1) throw DomainError("beta moment: polynomial not univariate");
        acc += c * beta_moment(spec, mu.empty() ? 0 : mu.part(1));
    }
    return acc;
}

// 2D outer integral (full square, symmetric integrand) of
//   prod w(x_i) * |x2-x1|^beta * inner(sorted x)
// for inner = the kernel-averaged polynomial, plus the same with inner = 1.
struct CorollaryQuadResult {
    double ratio = 0;
    double error = 0;
};

CorollaryQuadResult corollary_quadrature(const EnsembleSpec& spec_n,
                                         const SymmetricPoly<double>& poly, double quad_tol) {
    const double beta = spec_n.beta;
    const double theta = 0.5 * beta;
    const double ca = 0.5 * beta * (spec_n.a - 1.0) - 1.0; // exponent at 0
    const double cb = 0.5 * beta * (spec_n.b - 1.0) - 1.0; // exponent at 1
    const double inner_prefactor =
        std::exp(std::lgamma(2.0 * theta) - 2.0 * std::lgamma(theta)) /
        std::pow(2.0, 2.0 * theta - 1.0);

    QuadratureRule inner_ref = gauss_jacobi(24, theta - 1.0, theta - 1.0);

    auto pass = [&](int nodes) {
        QuadratureRule outer = gauss_jacobi(nodes, cb, ca);
        // map to [0,1]: weight (1-x)^cb * x^ca
        std::vector<double> xs(outer.nodes.size()), ws(outer.nodes.size());
        const double power = std::pow(0.5, ca + cb + 1.0);
        for (size_t k = 0; k < outer.nodes.size(); ++k) {
            xs[k] = 0.5 * (outer.nodes[k] + 1.0);
            ws[k] = power * outer.weights[k];
        }
        double numer = 0, denom = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            for (size_t j = 0; j < xs.size(); ++j) {
                double lo = std::min(xs[i], xs[j]), hi = std::max(xs[i], xs[j]);
                if (lo == hi) continue;
                double w = ws[i] * ws[j] * std::pow(hi - lo, beta);
                double inner = 0;
                for (size_t k = 0; k < inner_ref.nodes.size(); ++k) {
                    double y = lo + 0.5 * (hi - lo) * (inner_ref.nodes[k] + 1.0);
                    inner += inner_ref.weights[k] * sym_eval(poly, {y});
                }
                numer += w * inner_prefactor * inner;
                denom += w;
            }
        }
        return numer / denom;
    };

    CorollaryQuadResult res;
    double prev = pass(16);
    for (int nodes = 32; nodes <= 256; nodes *= 2) {
        double cur = pass(nodes);
        res.ratio = cur;
        res.error = std::fabs(cur - prev);
        if (res.error <= quad_tol * std::max(1.0, std::fabs(cur))) return res;
        prev = cur;
    }
    return res;
}

} // namespace

std::vector<TwoEstimatorCheck> check_corollary(const EnsembleSpec& spec_n,
                                               const std::vector<SymmetricPoly<double>>& test_polys,
                                               const CorollaryOptions& options) {
    if (!(spec_n.a > 1.0 && spec_n.b > 1.0))
        throw DomainError("corollary check requires a, b > 1");
    if (spec_n.beta < 1.0) throw DomainError("corollary check requires beta >= 1");

    std::vector<TwoEstimatorCheck> out;
    if (options.mode == CorollaryMode::quadrature) {
        if (spec_n.n != 1) throw DomainError("corollary quadrature mode is fixed at n = 1");
        for (const auto& poly : test_polys) {
            TwoEstimatorCheck check;
            auto quad = corollary_quadrature(spec_n, poly, options.quad_tol);
            check.lhs = quad.ratio;
            check.quad_error = quad.error;
            check.rhs = beta_poly_moment(poly, spec_n);
            check.pass = std::fabs(check.lhs - check.rhs) <=
                         1e-6 * std::max(1.0, std::fabs(check.rhs));
            out.push_back(check);
        }
        return out;
    }

    // MC mode: x ~ ensemble(n+1, a-1, b-1), y ~ kernel(x, .), vs direct ensemble(n, a, b)
    EnsembleSpec upper{spec_n.n + 1, spec_n.a - 1.0, spec_n.b - 1.0, spec_n.beta};
    McmcOptions upper_opts;
    upper_opts.seed = options.seed;
    auto upper_chain = ensemble_mcmc(upper, options.mc_samples, upper_opts);

    McmcOptions lower_opts;
    lower_opts.seed = splitmix64(options.seed + 1);
    auto lower_chain = ensemble_mcmc(spec_n, options.mc_samples, lower_opts);

    const double theta = 0.5 * spec_n.beta;
    Rng kernel_rng(splitmix64(options.seed + 2));
    std::vector<std::vector<double>> pushed;
    pushed.reserve(upper_chain.samples.size());
    for (const auto& x : upper_chain.samples)
        pushed.push_back(da_gibbs_sample(x, theta, options.gibbs_sweeps, kernel_rng));

    for (const auto& poly : test_polys) {
        TwoEstimatorCheck check;
        std::vector<double> lhs_vals, rhs_vals;
        lhs_vals.reserve(pushed.size());
        for (const auto& y : pushed) lhs_vals.push_back(sym_eval(poly, y));
        rhs_vals.reserve(lower_chain.samples.size());
        for (const auto& y : lower_chain.samples) rhs_vals.push_back(sym_eval(poly, y));
        auto lhs = batch_mean_se(lhs_vals);
        auto rhs = batch_mean_se(rhs_vals);
        check.lhs = lhs.mean;
        check.lhs_se = lhs.se;
        check.rhs = rhs.mean;
        check.rhs_se = rhs.se;
        double combined = std::sqrt(lhs.se * lhs.se + rhs.se * rhs.se);
        check.pass = std::fabs(check.lhs - check.rhs) <= 3.0 * combined;
        out.push_back(check);
    }
    return out;
}

std::vector<StationarityCheck> check_sde_stationarity(
    const EnsembleSpec& spec, const std::vector<SymmetricPoly<double>>& test_polys,
    const StationarityOptions& options) {
    if (!(spec.a > 1.0 / spec.beta && spec.b > 1.0 / spec.beta))
        throw DomainError("stationarity check requires a, b > 1/beta");

    auto chain = ensemble_mcmc(spec, options.sim.paths, options.mcmc);
    ModelParams params;
    params.n = spec.n;
    params.theta = 0.5 * spec.beta;
    params.a = spec.a;
    params.b = spec.b;

    std::vector<StationarityCheck> out;
    for (double t : options.t_values) {
        // paired comparison: each start evolves for time t with its own stream
        std::vector<std::vector<double>> ends(chain.samples.size());
        for (size_t p = 0; p < chain.samples.size(); ++p) {
            SimConfig one = options.sim;
            one.paths = 1;
            one.workers = 1;
            one.seed = splitmix64(options.sim.seed ^ (0x9e3779b97f4a7c15ULL * (p + 1)));
            ends[p] = simulate(Family::jacobi, chain.samples[p], params, t, one)[0];
        }
        for (const auto& poly : test_polys) {
            StationarityCheck check;
            check.t = t;
            std::vector<double> diffs, sde_vals, ens_vals;
            diffs.reserve(ends.size());
            for (size_t p = 0; p < ends.size(); ++p) {
                double vt = sym_eval(poly, ends[p]);
                double v0 = sym_eval(poly, chain.samples[p]);
                sde_vals.push_back(vt);
                ens_vals.push_back(v0);
                diffs.push_back(vt - v0);
            }
            auto sde = batch_mean_se(sde_vals);
            auto ens = batch_mean_se(ens_vals);
            auto diff = batch_mean_se(diffs);
            check.sde_mean = sde.mean;
            check.sde_se = sde.se;
            check.ensemble_mean = ens.mean;
            check.ensemble_se = ens.se;
            check.pass = std::fabs(diff.mean) <= 3.0 * std::max(diff.se, 1e-300);
            out.push_back(check);
        }
    }
    return out;
}

SymmetricPoly<double> symmetrize_polynomial(const MultiPoly<double>& q) {
    if (q.nvars > 20) throw DomainError("symmetrize: factorial bookkeeping capped at 20 variables");
    SymmetricPoly<double> out(q.nvars);
    for (const auto& [exp, c] : q.terms) {
        // aut(e) = prod over distinct values of count!, zeros included
        std::vector<int> sorted = exp;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        double aut = 1;
        int run = 1;
        for (size_t i = 1; i <= sorted.size(); ++i) {
            if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
                ++run;
            } else {
                for (int k = 2; k <= run; ++k) aut *= k;
                run = 1;
            }
        }
        double nfact = 1;
        for (int k = 2; k <= q.nvars; ++k) nfact *= k;
        std::vector<int> parts;
        for (int e : sorted)
            if (e > 0) parts.push_back(e);
        out.add_term(Partition(std::move(parts)), c * aut / nfact);
    }
    out.prune();
    return out;
}

double symmetrize_and_moment(const std::vector<std::vector<double>>& mu_samples,
                             const MultiPoly<double>& q) {
    SymmetricPoly<double> p = symmetrize_polynomial(q);
    double acc = 0;
    for (const auto& z : mu_samples) acc += sym_eval(p, z);
    return mu_samples.empty() ? 0.0 : acc / static_cast<double>(mu_samples.size());
}

} // namespace itw
