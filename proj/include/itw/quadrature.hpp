#pragma once

#include <functional>
#include <vector>

#include "itw/errors.hpp"

namespace itw {

/// Nodes and weights of a quadrature rule on a reference interval.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Jacobi rule on [-1,1] for the weight (1-x)^alpha (1+x)^beta,
/// alpha, beta > -1, computed by Golub-Welsch. Gauss-Legendre is the
/// alpha = beta = 0 case.
QuadratureRule gauss_jacobi(int npoints, double alpha, double beta);

inline QuadratureRule gauss_legendre(int npoints) { return gauss_jacobi(npoints, 0.0, 0.0); }

/// Map a reference rule to [a,b]. The weight function transforms as
/// (b-x)^alpha (x-a)^beta with the stated interval powers kept explicit:
///   int_a^b (b-x)^alpha (x-a)^beta f(x) dx
///     = ((b-a)/2)^(alpha+beta+1) * sum_k w_k f(x_k).
struct MappedRule {
    std::vector<double> nodes;   // in [a,b]
    std::vector<double> weights; // include the interval power factor
};
MappedRule map_rule(const QuadratureRule& rule, double a, double b, double alpha, double beta);

/// Integral int_a^b (b-x)^alpha (x-a)^beta f(x) dx.
double integrate_jacobi_weighted(const std::function<double(double)>& f, double a, double b,
                                 double alpha, double beta, int npoints);

} // namespace itw
