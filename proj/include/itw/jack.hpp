#pragma once

#include <cmath>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "itw/operators.hpp"
#include "itw/partition.hpp"
#include "itw/symmetric_poly.hpp"

namespace itw {

/// Index of a Jack polynomial J_lambda(.;theta) in a fixed number of variables,
/// with theta = beta/2.
struct JackIndex {
    Partition lambda;
    int nvars = 0;
    double theta = 1.0;
};

/// Eigenvalue of the operator D on J_lambda in n variables:
///   2 B(lambda') - 2 theta B(lambda) + 2 theta (n-1) |lambda|.
template <class T>
T eval_eigenvalue(const Partition& lambda, int n, const T& theta) {
    if (n < lambda.length())
        throw DomainError("eval_eigenvalue: fewer variables than parts");
    T res = T(2 * lambda.conjugate().b_stat());
    res -= T(2) * theta * T(lambda.b_stat());
    res += T(2) * theta * T(n - 1) * T(lambda.weight());
    return res;
}

inline double eval_eigenvalue(const Partition& lambda, int n, double theta) {
    return eval_eigenvalue<double>(lambda, n, theta);
}

/// J_lambda at the all-ones point:
///   theta^{-|lambda|} prod_i Gamma((n+1-i)theta + lambda_i) / Gamma((n+1-i)theta).
/// The double path works in log space; the rational path uses the rising
/// factorial form of the Gamma ratios, exact for rational theta.
template <class T>
T jack_norm_at_ones(const Partition& lambda, int n, const T& theta) {
    if (n < lambda.length())
        throw DomainError("jack_norm_at_ones: fewer variables than parts");
    if constexpr (std::is_same_v<T, double>) {
        double log_acc = -static_cast<double>(lambda.weight()) * std::log(theta);
        for (int i = 1; i <= lambda.length(); ++i) {
            double base = (n + 1 - i) * theta;
            log_acc += std::lgamma(base + lambda.part(i)) - std::lgamma(base);
        }
        return std::exp(log_acc);
    } else {
        T acc(1);
        for (int i = 1; i <= lambda.length(); ++i) {
            T base = T(n + 1 - i) * theta;
            for (int k = 0; k < lambda.part(i); ++k) acc *= base + T(k);
        }
        T denom(1);
        for (int64_t k = 0; k < lambda.weight(); ++k) denom *= theta;
        return acc / denom;
    }
}

/// Near-collision guard for the triangular solve; collisions cannot occur for
/// theta > 0 across dominance-comparable partitions, so tripping it means a bug.
inline constexpr double kResonanceThreshold = 1e-9;

/// Monomial-basis expansion of J_lambda(.;theta) in n variables, pinned by the
/// eigenfunction property of D, dominance triangularity, and the value at the
/// all-ones point.
template <class T>
SymmetricPoly<T> jack_expand(const Partition& lambda, int n, const T& theta,
                             double resonance_threshold = kResonanceThreshold) {
    if (lambda.length() > n)
        throw DomainError("jack_expand: fewer variables than parts");
    const int m = static_cast<int>(lambda.weight());

    // dominance down-set of lambda within its weight class, top first
    std::vector<Partition> basis;
    for (const auto& mu : partitions_of_weight(m, n))
        if (dominance_leq(mu, lambda)) basis.push_back(mu);
    std::sort(basis.begin(), basis.end(),
              [](const Partition& a, const Partition& b) { return weight_revlex_less(b, a); });
    // basis[0] == lambda

    std::map<Partition, int, WeightRevlexLess> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

    // columns of the operator D in the monomial basis
    std::vector<std::map<int, T>> column(basis.size()); // column[nu] : row -> coeff
    for (size_t c = 0; c < basis.size(); ++c) {
        SymmetricPoly<T> mono(n);
        mono.add_term(basis[c], T(1));
        SymmetricPoly<T> image = apply_operator(JackOperator::D, mono, theta);
        for (const auto& [mu, coeff] : image.terms) {
            auto it = index.find(mu);
            if (it == index.end())
                throw NumericalError("operator image escaped the dominance down-set");
            column[c].emplace(it->second, coeff);
        }
    }

    const T ev_top = eval_eigenvalue(lambda, n, theta);
    std::vector<T> coeffs(basis.size(), T(0));
    coeffs[0] = T(1);
    for (size_t r = 1; r < basis.size(); ++r) {
        T rhs(0);
        for (size_t c = 0; c < r; ++c) {
            auto it = column[c].find(static_cast<int>(r));
            if (it != column[c].end()) rhs += it->second * coeffs[c];
        }
        T denom = ev_top - eval_eigenvalue(basis[r], n, theta);
        if (std::fabs(to_double(denom)) < resonance_threshold)
            throw NumericalError("resonant eigenvalue gap in Jack triangular solve at " +
                                 basis[r].to_string());
        coeffs[r] = rhs / denom;
    }

    SymmetricPoly<T> out(n);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coeff_is_zero(coeffs[i], 0.0)) out.add_term(basis[i], coeffs[i]);

    // normalize to the Gamma-product value at 1_n
    T raw = sym_eval_at_ones(out);
    out *= jack_norm_at_ones(lambda, n, theta) / raw;
    return out;
}

/// Numeric evaluation of J_lambda(z;theta).
double jack_eval(const JackIndex& idx, const std::vector<double>& z);

/// Substitute z_i -> 1 + z_i in every variable.
template <class T>
MultiPoly<T> shift_all_by_one(const MultiPoly<T>& p) {
    MultiPoly<T> out(p.nvars);
    for (const auto& [exp, c] : p.terms) {
        // expand prod_i (1+z_i)^{exp_i}
        std::vector<std::vector<int64_t>> binom_rows(exp.size());
        for (size_t i = 0; i < exp.size(); ++i) {
            binom_rows[i].resize(static_cast<size_t>(exp[i]) + 1);
            int64_t v = 1;
            for (int k = 0; k <= exp[i]; ++k) {
                binom_rows[i][static_cast<size_t>(k)] = v;
                v = v * (exp[i] - k) / (k + 1);
            }
        }
        std::vector<int> k(exp.size(), 0);
        while (true) {
            int64_t mult = 1;
            for (size_t i = 0; i < exp.size(); ++i)
                mult *= binom_rows[i][static_cast<size_t>(k[i])];
            out.add_term(k, c * T(mult));
            size_t pos = 0;
            while (pos < exp.size() && k[pos] == exp[pos]) k[pos++] = 0;
            if (pos == exp.size()) break;
            ++k[pos];
        }
    }
    return out;
}

/// First-order generalized binomial coefficients binom(lambda, lambda_(i))_theta,
/// read off the expansion of J_lambda(1_n + z)/J_lambda(1_n) in the Jack basis
/// at degree |lambda|-1. Entry i-1 corresponds to decrementing part i; entries
/// where lambda_(i) is not a partition are zero. Values do not depend on the
/// auxiliary variable count, which must be at least length+1.
template <class T>
std::vector<T> first_order_binomials(const Partition& lambda, const T& theta,
                                     int aux_n = 0) {
    if (lambda.empty())
        throw DomainError("first_order_binomials: zero partition has no lower edges");
    const int l = lambda.length();
    const int n = aux_n > 0 ? aux_n : l + 1;
    if (n < l + 1)
        throw DomainError("first_order_binomials: auxiliary n must exceed the length");
    const int m = static_cast<int>(lambda.weight());

    SymmetricPoly<T> jl = jack_expand(lambda, n, theta);
    MultiPoly<T> shifted = shift_all_by_one(to_multi(jl));

    // homogeneous degree m-1 component
    MultiPoly<T> comp(n);
    for (const auto& [exp, c] : shifted.terms) {
        int deg = 0;
        for (int e : exp) deg += e;
        if (deg == m - 1) comp.add_term(exp, c);
    }
    SymmetricPoly<T> q = to_symmetric(comp);

    // peel off Jack polynomials of weight m-1 in dominance-descending order
    std::vector<Partition> degree_basis = partitions_of_weight(m - 1, n);
    std::sort(degree_basis.begin(), degree_basis.end(),
              [](const Partition& a, const Partition& b) { return weight_revlex_less(b, a); });
    const double scale = to_double(q.max_abs_coeff());
    std::map<Partition, T, WeightRevlexLess> jack_coeff;
    for (const auto& rho : degree_basis) {
        T lead = q.coeff(rho);
        if (coeff_is_zero(lead, 1e-13 * scale)) continue;
        SymmetricPoly<T> jr = jack_expand(rho, n, theta);
        T d = lead / jr.coeff(rho);
        jr *= d;
        q -= jr;
        jack_coeff.emplace(rho, d);
    }
    q.prune(1e-9 * scale);
    if (!q.terms.empty())
        throw NumericalError("Jack-basis peeling left a residual at degree " +
                             std::to_string(m - 1));

    const T norm_lambda = jack_norm_at_ones(lambda, n, theta);
    std::vector<T> out(static_cast<size_t>(l), T(0));
    for (int i = 1; i <= l; ++i) {
        auto low = lambda.decremented(i);
        if (!low) continue;
        auto it = jack_coeff.find(*low);
        if (it == jack_coeff.end()) continue;
        out[static_cast<size_t>(i - 1)] =
            it->second * jack_norm_at_ones(*low, n, theta) / norm_lambda;
    }
    return out;
}

/// Memoized double-precision Jack data for one fixed theta. Thread-safe.
class JackTable {
  public:
    explicit JackTable(double theta) : theta_(theta) {
        if (theta <= 0) throw DomainError("theta must be positive");
    }

    double theta() const { return theta_; }
    double norm_at_ones(const Partition& lambda, int n) const {
        return jack_norm_at_ones(lambda, n, theta_);
    }
    const SymmetricPoly<double>& expansion(const Partition& lambda, int n) const;
    /// binom(lambda, lambda_(i)) for i = 1..length (index i-1).
    const std::vector<double>& binomials(const Partition& lambda) const;

  private:
    double theta_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Partition, int>, std::unique_ptr<SymmetricPoly<double>>,
                     bool (*)(const std::pair<Partition, int>&, const std::pair<Partition, int>&)>
        expansions_{&JackTable::pair_less};
    mutable std::map<Partition, std::unique_ptr<std::vector<double>>, WeightRevlexLess> binoms_;

    static bool pair_less(const std::pair<Partition, int>& a, const std::pair<Partition, int>& b) {
        if (a.second != b.second) return a.second < b.second;
        return weight_revlex_less(a.first, b.first);
    }
};

/// Process-wide memoized table for the given theta.
const JackTable& shared_jack_table(double theta);

} // namespace itw
