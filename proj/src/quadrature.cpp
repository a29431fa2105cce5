#include "itw/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>

namespace itw {

namespace {

QuadratureRule compute_gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw DomainError("quadrature rule needs at least one node");
    if (alpha <= -1.0 || beta <= -1.0)
        throw DomainError("Jacobi weight exponents must exceed -1");

    // Golub-Welsch: eigen-decomposition of the Jacobi recurrence matrix.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        double denom = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        double ak;
        if (k == 0) {
            ak = (beta - alpha) / (ab + 2.0);
        } else {
            ak = (beta * beta - alpha * alpha) / denom;
        }
        J(k, k) = ak;
        if (k + 1 < n) {
            double kk = k + 1.0;
            double bk2;
            if (k == 0) {
                // the (1+ab) factors cancel; the raw form is 0/0 at ab = -1
                bk2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
            } else {
                double num = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab);
                double den =
                    (2.0 * kk + ab - 1.0) * std::pow(2.0 * kk + ab, 2) * (2.0 * kk + ab + 1.0);
                bk2 = num / den;
            }
            double bk = std::sqrt(bk2);
            J(k, k + 1) = bk;
            J(k + 1, k) = bk;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw NumericalError("Gauss-Jacobi eigen-decomposition failed");

    // mu0 = int_{-1}^{1} (1-x)^alpha (1+x)^beta dx = 2^(a+b+1) B(a+1, b+1)
    double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                     std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
    double mu0 = std::exp(log_mu0);

    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        rule.nodes[static_cast<size_t>(k)] = es.eigenvalues()(k);
        double v = es.eigenvectors()(0, k);
        rule.weights[static_cast<size_t>(k)] = mu0 * v * v;
    }
    return rule;
}

} // namespace

QuadratureRule gauss_jacobi(int npoints, double alpha, double beta) {
    struct Key {
        int n;
        double a, b;
        bool operator<(const Key& o) const {
            if (n != o.n) return n < o.n;
            if (a != o.a) return a < o.a;
            return b < o.b;
        }
    };
    static std::map<Key, QuadratureRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace(Key{npoints, alpha, beta});
    if (inserted) it->second = compute_gauss_jacobi(npoints, alpha, beta);
    return it->second;
}

MappedRule map_rule(const QuadratureRule& rule, double a, double b, double alpha, double beta) {
    if (!(b > a)) throw DomainError("map_rule: empty interval");
    MappedRule out;
    const double half = 0.5 * (b - a);
    const double power = std::pow(half, alpha + beta + 1.0);
    out.nodes.reserve(rule.nodes.size());
    out.weights.reserve(rule.nodes.size());
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        out.nodes.push_back(a + half * (rule.nodes[k] + 1.0));
        out.weights.push_back(power * rule.weights[k]);
    }
    return out;
}

double integrate_jacobi_weighted(const std::function<double(double)>& f, double a, double b,
                                 double alpha, double beta, int npoints) {
    auto mapped = map_rule(gauss_jacobi(npoints, alpha, beta), a, b, alpha, beta);
    double acc = 0;
    for (size_t k = 0; k < mapped.nodes.size(); ++k) acc += mapped.weights[k] * f(mapped.nodes[k]);
    return acc;
}

} // namespace itw
