#pragma once

#include "itw/symmetric_poly.hpp"

namespace itw {

enum class JackOperator { B1, B2, B3, D };

namespace detail {

/// sum_{i != j} z_i^k / (z_i - z_j) d/dz_i applied to a symmetric polynomial,
/// evaluated exactly as a polynomial: each unordered pair contributes the
/// divided difference (z_i^k dp/dz_i - z_j^k dp/dz_j) / (z_i - z_j).
template <class T>
MultiPoly<T> singular_drift_sum(const MultiPoly<T>& p, int k) {
    MultiPoly<T> out(p.nvars);
    std::vector<MultiPoly<T>> dp;
    dp.reserve(static_cast<size_t>(p.nvars));
    for (int v = 0; v < p.nvars; ++v) dp.push_back(derivative(p, v));
    for (int i = 0; i < p.nvars; ++i) {
        for (int j = i + 1; j < p.nvars; ++j) {
            MultiPoly<T> numer = shift_exponent(dp[static_cast<size_t>(i)], i, k);
            numer -= shift_exponent(dp[static_cast<size_t>(j)], j, k);
            numer.prune();
            if (numer.terms.empty()) continue;
            out += divide_by_difference(numer, i, j);
        }
    }
    return out;
}

/// sum_i z_i^k d^2/dz_i^2
template <class T>
MultiPoly<T> weighted_laplacian(const MultiPoly<T>& p, int k) {
    MultiPoly<T> out(p.nvars);
    for (int v = 0; v < p.nvars; ++v)
        out += shift_exponent(derivative(derivative(p, v), v), v, k);
    return out;
}

} // namespace detail

/// Exact symbolic action of one of the basic operators on a symmetric
/// polynomial:
///   B1 = sum_i d_i
///   B2 = sum_i z_i d_i^2 + 2 theta sum_{i != j} z_i/(z_i - z_j) d_i
///   B3 = sum_i z_i d_i
///   D  = sum_i z_i^2 d_i^2 + 2 theta sum_{i != j} z_i^2/(z_i - z_j) d_i
/// theta is ignored for B1 and B3.
template <class T>
SymmetricPoly<T> apply_operator(JackOperator which, const SymmetricPoly<T>& poly,
                                const T& theta) {
    MultiPoly<T> p = to_multi(poly);
    MultiPoly<T> out(p.nvars);
    switch (which) {
    case JackOperator::B1:
        for (int v = 0; v < p.nvars; ++v) out += derivative(p, v);
        break;
    case JackOperator::B3:
        for (const auto& [exp, c] : p.terms) {
            int deg = 0;
            for (int e : exp) deg += e;
            if (deg) out.add_term(exp, c * T(deg));
        }
        break;
    case JackOperator::B2: {
        out = detail::weighted_laplacian(p, 1);
        MultiPoly<T> s = detail::singular_drift_sum(p, 1);
        s *= T(2) * theta;
        out += s;
        break;
    }
    case JackOperator::D: {
        out = detail::weighted_laplacian(p, 2);
        MultiPoly<T> s = detail::singular_drift_sum(p, 2);
        s *= T(2) * theta;
        out += s;
        break;
    }
    }
    out.prune();
    return to_symmetric(out);
}

/// The Dyson-type generator sum_i d_i^2 + 2 theta sum_{i != j} (z_i-z_j)^{-1} d_i,
/// which equals the commutator [B1, B2].
template <class T>
SymmetricPoly<T> apply_dyson_generator(const SymmetricPoly<T>& poly, const T& theta) {
    MultiPoly<T> p = to_multi(poly);
    MultiPoly<T> out = detail::weighted_laplacian(p, 0);
    MultiPoly<T> s = detail::singular_drift_sum(p, 0);
    s *= T(2) * theta;
    out += s;
    out.prune();
    return to_symmetric(out);
}

/// [B1, B2] p = B1(B2 p) - B2(B1 p), computed symbolically.
template <class T>
SymmetricPoly<T> apply_b1_b2_commutator(const SymmetricPoly<T>& poly, const T& theta) {
    SymmetricPoly<T> a = apply_operator(JackOperator::B1,
                                        apply_operator(JackOperator::B2, poly, theta), theta);
    SymmetricPoly<T> b = apply_operator(JackOperator::B2,
                                        apply_operator(JackOperator::B1, poly, theta), theta);
    a -= b;
    a.prune();
    return a;
}

} // namespace itw
