#pragma once

#include <cstdint>
#include <vector>

#include "itw/diffusion.hpp"
#include "itw/rng.hpp"
#include "itw/symmetric_poly.hpp"

namespace itw {

/// Parameters (n, a, b, beta) of a beta-Jacobi ensemble on [0,1]^n:
///   density ~ prod x_i^{beta a/2 - 1} (1-x_i)^{beta b/2 - 1}
///           * prod_{i<j} |x_j - x_i|^beta.
/// The normalization constant is never computed; all checks use normalized
/// samplers or moment ratios.
struct EnsembleSpec {
    int n = 1;
    double a = 2;
    double b = 2;
    double beta = 2;
};

/// Log of the unnormalized density at a strictly ordered interior point.
/// Returns -inf for boundary or degenerate input.
double ensemble_log_density_unnormalized(const std::vector<double>& x, const EnsembleSpec& spec);

struct McmcOptions {
    int burn_in = 2000;   // adaptation happens here
    int thin = 4;         // sweeps between retained samples
    uint64_t seed = 1;
};

struct McmcResult {
    std::vector<std::vector<double>> samples; // ordered interior points
    double acceptance_rate = 1.0;             // 1.0 for the exact n=1 path
    bool acceptance_in_range = true;          // [0.1, 0.6] after adaptation
};

/// Metropolis random-walk sampler for the ensemble; n = 1 short-circuits to
/// exact Beta(beta a/2, beta b/2) draws.
McmcResult ensemble_mcmc(const EnsembleSpec& spec, int samples, const McmcOptions& options);

/// Moment of the Beta(beta a/2, beta b/2) law, i.e. the n=1 ensemble: E[y^k].
double beta_moment(const EnsembleSpec& spec, int k);

struct TwoEstimatorCheck {
    double lhs = 0; // push x ~ ensemble(n+1, a-1, b-1) through the kernel
    double rhs = 0; // direct ensemble(n, a, b) moment
    double lhs_se = 0;
    double rhs_se = 0;
    double quad_error = 0; // quadrature mode only
    bool pass = false;
};

enum class CorollaryMode { quadrature, mc };

struct CorollaryOptions {
    CorollaryMode mode = CorollaryMode::mc;
    int mc_samples = 100000;
    int gibbs_sweeps = 12; // kernel-draw sweeps per retained x
    uint64_t seed = 1;
    double quad_tol = 1e-8;
};

/// Checks that sampling x from the (n+1)-level ensemble at (a-1, b-1) and
/// pushing through the Dixon-Anderson kernel reproduces the n-level ensemble
/// at (a, b), tested against the supplied symmetric polynomials (in n
/// variables). Quadrature mode requires n = 1.
std::vector<TwoEstimatorCheck> check_corollary(const EnsembleSpec& spec_n,
                                               const std::vector<SymmetricPoly<double>>& test_polys,
                                               const CorollaryOptions& options);

struct StationarityOptions {
    SimConfig sim;        // paths doubles as the MC budget
    McmcOptions mcmc;
    std::vector<double> t_values{0.1, 1.0, 5.0};
};

struct StationarityCheck {
    double t = 0;
    double sde_mean = 0;
    double sde_se = 0;
    double ensemble_mean = 0;
    double ensemble_se = 0;
    bool pass = false;
};

/// Starts the Jacobi SDE from ensemble draws and verifies the moments of the
/// test polynomials stay at their ensemble values for every requested t.
std::vector<StationarityCheck> check_sde_stationarity(
    const EnsembleSpec& spec, const std::vector<SymmetricPoly<double>>& test_polys,
    const StationarityOptions& options);

/// Symmetrization of an arbitrary polynomial q (exponent-map form) into the
/// monomial symmetric basis: (1/n!) sum over permutations, computed by orbit
/// counting rather than explicit n! summation.
SymmetricPoly<double> symmetrize_polynomial(const MultiPoly<double>& q);

/// Empirical mean of the symmetrized q over ordered sample points.
double symmetrize_and_moment(const std::vector<std::vector<double>>& mu_samples,
                             const MultiPoly<double>& q);

} // namespace itw
