#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "itw/partition.hpp"
#include "itw/rng.hpp"

namespace itw {

enum class Domain { laguerre, jacobi }; // [0, inf) vs [0, 1]

/// A point x in W^{n+1} together with y in W^{n,n+1}(x):
/// x_1 <= y_1 <= x_2 <= ... <= y_n <= x_{n+1}.
struct InterlacingPair {
    std::vector<double> x;
    std::vector<double> y;
    Domain domain = Domain::laguerre;

    int level() const { return static_cast<int>(y.size()); }
    /// Throws DomainError unless the interlacing and interval constraints hold.
    void validate() const;
};

/// Log of the Dixon-Anderson conditional density
///   Gamma(theta(n+1))/Gamma(theta)^{n+1}
///   * prod_{i<j} (x_j-x_i)^{1-2 theta} * prod_{i<j} (y_j-y_i)
///   * prod_{i,j} |y_i-x_j|^{theta-1}.
/// Returns +inf when a touching coordinate makes the density diverge
/// (theta < 1) and -inf when it vanishes (theta > 1 or coincident y's).
double da_log_density(const InterlacingPair& pair, double theta);

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0; // difference of the last two refinement levels
    int nodes_per_dim = 0;
    bool converged = false;
};

/// (Lambda f)(x) = int over W^{n,n+1}(x) of the kernel times f, by tensor
/// Gauss-Jacobi quadrature on the boxes [x_i, x_{i+1}] with the edge
/// singularities |y_i-x_i|^{theta-1}, |y_i-x_{i+1}|^{theta-1} absorbed into
/// the weight. Node count doubles until the estimated error is below tol.
/// Requires n <= 3.
QuadratureResult da_integrate(const std::vector<double>& x,
                              const std::function<double(const std::vector<double>&)>& f,
                              double theta, double tol);

/// Gibbs sampler over the interlacing polytope; each coordinate is refreshed
/// from its exact 1D conditional by rejection against a Beta(theta,theta)
/// proposal under an adaptive envelope.
class DaGibbsChain {
  public:
    DaGibbsChain(std::vector<double> x, double theta, Rng rng);

    /// One full coordinate sweep.
    void sweep();
    const std::vector<double>& state() const { return y_; }
    int level() const { return static_cast<int>(y_.size()); }

  private:
    void refresh_coordinate(int i);
    std::vector<double> x_;
    std::vector<double> y_;
    double theta_;
    Rng rng_;
};

struct GibbsConfig {
    int burn_in = 50;
    int thin = 5;
};

/// One approximate sample of the conditional density given x: a fresh chain
/// advanced `sweeps` full sweeps.
std::vector<double> da_gibbs_sample(const std::vector<double>& x, double theta, int sweeps,
                                    Rng& rng);

struct KernelCheckResult {
    double lhs = 0;        // (Lambda J_lambda)(x), quadrature or MC estimate
    double rhs = 0;        // c(lambda, n, theta) J_lambda(x)
    double rel_error = 0;  // absolute error when rhs == 0
    double se = 0;         // MC standard error (0 in quadrature mode)
    double quad_error = 0; // quadrature error estimate (0 in MC mode)
};

enum class KernelCheckMode { quadrature, mc };

/// Verifies the eigenrelation (Lambda J_lambda)(x) = c(lambda,n,theta) J_lambda(x).
KernelCheckResult check_kernel_eigenrelation(const Partition& lambda,
                                             const std::vector<double>& x, double theta,
                                             KernelCheckMode mode, double quad_tol = 1e-8,
                                             int mc_samples = 100000,
                                             const GibbsConfig& gibbs = {}, uint64_t seed = 1);

} // namespace itw
