#pragma once

#include <Eigen/Dense>

#include <vector>

#include "itw/jack.hpp"
#include "itw/partition.hpp"

namespace itw {

enum class Family { laguerre, jacobi };

/// Parameters of one diffusion model. theta = beta/2; Laguerre carries the
/// dimension parameter d, Jacobi the pair (a,b).
struct ModelParams {
    int n = 1;
    double theta = 1.0;
    double d = 0.0;
    double a = 0.0;
    double b = 0.0;
    double t = 0.0;
};

/// Ordered entrywise-containment down-set of a top partition, the finite
/// Jack-basis truncation every matrix in this module acts on. Index 0 is the
/// zero partition; the order is (weight, revlex), a linear extension of
/// dominance, so generator matrices come out lower triangular.
struct PartitionBasis {
    Partition top;
    int nvars = 0;
    std::vector<Partition> members;

    static PartitionBasis build(const Partition& top, int nvars);
    int index_of(const Partition& p) const; // -1 when absent
    int size() const { return static_cast<int>(members.size()); }
};

enum class MatrixKind { laguerre, jacobi, dyson_commutator, kernel };

/// Matrix of an operator on the Jack-basis truncation. Row kappa holds the
/// coefficients of the image of J_kappa: (A f)_kappa = sum_nu M(kappa,nu) f_nu
/// for the moment system f_kappa(t) = E[J_kappa(X(t))].
struct GeneratorMatrix {
    PartitionBasis basis;
    Eigen::MatrixXd entries;
    MatrixKind kind = MatrixKind::laguerre;
};

/// Matrix of the Laguerre generator 2 B2 + theta d B1 on n variables over the
/// down-set of `top`, assembled from the closed-form action on Jack polynomials.
GeneratorMatrix laguerre_generator_matrix(const Partition& top, const ModelParams& params,
                                          const JackTable& table);

/// Matrix of the Jacobi generator 2 B2 - 2 D + 2 theta a B1 - 2 theta (a+b) B3.
GeneratorMatrix jacobi_generator_matrix(const Partition& top, const ModelParams& params,
                                        const JackTable& table);

/// Diagonal matrix of the Dixon-Anderson kernel acting on Jack polynomials:
/// entry c(kappa, n, theta) = Gamma((n+1)theta)/Gamma(theta)
///   * prod_{i=1..n} Gamma((n+1-i)theta + kappa_i) / Gamma((n+2-i)theta + kappa_i).
GeneratorMatrix kernel_matrix(const Partition& top, int n, double theta);

/// The scalar c(lambda, n, theta) above.
double kernel_eigenvalue(const Partition& lambda, int n, double theta);

/// Max-norm residual of the generator-level intertwining through the kernel:
/// with M3 the (n+1)-variable generator at shifted parameters (d-2, resp.
/// (a-1,b-1)), M2 the n-variable generator and M1 the kernel diagonal, the
/// conjugation identity M1 M3 = M2 M1 holds exactly; the residual is its
/// max-norm defect, normalized by max(1, entry scale). `upper_shift` perturbs
/// the upper-level parameter (d resp. a) and exists for falsification
/// controls; the identity requires it to be zero.
double check_generator_intertwining(const Partition& top, const ModelParams& params,
                                    Family family, double upper_shift = 0.0);

/// e^{t M}; t >= 0. Exploits the triangular structure through a dense
/// scaling-and-squaring Pade evaluation.
GeneratorMatrix semigroup_matrix(const GeneratorMatrix& gen, double t);

/// Residual of the semigroup-level identity M1 e^{t M3} = e^{t M2} M1,
/// normalized like check_generator_intertwining.
double check_semigroup_intertwining(const Partition& top, const ModelParams& params,
                                    Family family, double t, double upper_shift = 0.0);

/// E_x[J_top(X(t); theta)]: the `top` row of e^{tM} applied to the vector of
/// Jack values at the start point. Serves as the exact oracle for the SDE
/// integrators.
double exact_moment(const std::vector<double>& x, const Partition& top,
                    const ModelParams& params, Family family, double t);

/// Max deviation of (B1 B2 - B2 B1) p from the Dyson generator applied to p,
/// over the supplied sample polynomials.
double check_dyson_commutator(int nvars, double theta,
                              const std::vector<SymmetricPoly<double>>& sample_polys);

} // namespace itw
