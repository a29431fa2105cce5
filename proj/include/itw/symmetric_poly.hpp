#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "itw/errors.hpp"
#include "itw/partition.hpp"
#include "itw/rational.hpp"

namespace itw {

/// Symmetric polynomial in a fixed number of variables, stored as a linear
/// combination of monomial symmetric polynomials m_mu. Keys are the monomial
/// types; every stored partition has length <= nvars.
template <class T>
struct SymmetricPoly {
    int nvars = 0;
    std::map<Partition, T, WeightRevlexLess> terms;

    SymmetricPoly() = default;
    explicit SymmetricPoly(int n) : nvars(n) {}

    T coeff(const Partition& mu) const {
        auto it = terms.find(mu);
        return it == terms.end() ? T(0) : it->second;
    }

    void add_term(const Partition& mu, const T& c) {
        if (mu.length() > nvars)
            throw DomainError("monomial type longer than variable count");
        auto [it, inserted] = terms.emplace(mu, c);
        if (!inserted) it->second += c;
    }

    SymmetricPoly& operator+=(const SymmetricPoly& o) {
        for (const auto& [mu, c] : o.terms) add_term(mu, c);
        return *this;
    }

    SymmetricPoly& operator-=(const SymmetricPoly& o) {
        for (const auto& [mu, c] : o.terms) add_term(mu, T(-1) * c);
        return *this;
    }

    SymmetricPoly& operator*=(const T& s) {
        for (auto& [mu, c] : terms) c *= s;
        return *this;
    }

    /// Drop terms with coefficients below tol (exact zero test in rational mode).
    void prune(double tol = 0.0) {
        for (auto it = terms.begin(); it != terms.end();)
            it = coeff_is_zero(it->second, tol) ? terms.erase(it) : std::next(it);
    }

    T max_abs_coeff() const {
        T m(0);
        for (const auto& [mu, c] : terms) m = std::max<T>(m, coeff_abs(c));
        return m;
    }
};

/// Distinct permutations of mu padded with zeros to n entries, i.e. the
/// exponent vectors of the monomial orbit of m_mu.
std::vector<std::vector<int>> monomial_orbit(const Partition& mu, int nvars);

/// m_mu(1,...,1) in n variables: the number of distinct rearrangements.
int64_t monomial_count_at_ones(const Partition& mu, int nvars);

/// Numeric evaluation of m_mu at a point (size nvars).
double monomial_eval(const Partition& mu, const std::vector<double>& z);

/// Numeric evaluation of a symmetric polynomial at a point.
template <class T>
double sym_eval(const SymmetricPoly<T>& p, const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != p.nvars)
        throw DomainError("evaluation point has wrong dimension");
    double acc = 0;
    for (const auto& [mu, c] : p.terms) acc += to_double(c) * monomial_eval(mu, z);
    return acc;
}

/// Value at the all-ones point, exact in the coefficient type.
template <class T>
T sym_eval_at_ones(const SymmetricPoly<T>& p) {
    T acc(0);
    for (const auto& [mu, c] : p.terms)
        acc += c * T(monomial_count_at_ones(mu, p.nvars));
    return acc;
}

// ---------------------------------------------------------------------------
// Dense exponent-map polynomial used internally by the operator calculus.
// ---------------------------------------------------------------------------

template <class T>
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, T> terms; // exponent vector -> coefficient

    MultiPoly() = default;
    explicit MultiPoly(int n) : nvars(n) {}

    void add_term(const std::vector<int>& exp, const T& c) {
        auto [it, inserted] = terms.emplace(exp, c);
        if (!inserted) it->second += c;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, T(-1) * c);
        return *this;
    }

    MultiPoly& operator*=(const T& s) {
        for (auto& [e, c] : terms) c *= s;
        return *this;
    }

    void prune(double tol = 0.0) {
        for (auto it = terms.begin(); it != terms.end();)
            it = coeff_is_zero(it->second, tol) ? terms.erase(it) : std::next(it);
    }

    double max_abs() const {
        double m = 0;
        for (const auto& [e, c] : terms) m = std::max(m, std::fabs(to_double(c)));
        return m;
    }
};

/// Expand sum of m_mu into the exponent-map representation.
template <class T>
MultiPoly<T> to_multi(const SymmetricPoly<T>& p) {
    MultiPoly<T> out(p.nvars);
    for (const auto& [mu, c] : p.terms)
        for (const auto& exp : monomial_orbit(mu, p.nvars)) out.add_term(exp, c);
    return out;
}

/// Collect a symmetric exponent-map polynomial back into the monomial basis.
/// The coefficient of m_mu is read off the sorted-decreasing representative;
/// symmetry of the input is the caller's invariant.
template <class T>
SymmetricPoly<T> to_symmetric(const MultiPoly<T>& p) {
    SymmetricPoly<T> out(p.nvars);
    for (const auto& [exp, c] : p.terms) {
        if (coeff_is_zero(c, 0.0)) continue;
        bool sorted_desc = std::is_sorted(exp.begin(), exp.end(), std::greater<int>());
        if (!sorted_desc) continue;
        std::vector<int> parts;
        for (int e : exp)
            if (e > 0) parts.push_back(e);
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

/// Partial derivative with respect to variable i (0-based).
template <class T>
MultiPoly<T> derivative(const MultiPoly<T>& p, int var) {
    MultiPoly<T> out(p.nvars);
    for (const auto& [exp, c] : p.terms) {
        if (exp[static_cast<size_t>(var)] == 0) continue;
        std::vector<int> e = exp;
        int k = e[static_cast<size_t>(var)]--;
        out.add_term(e, c * T(k));
    }
    return out;
}

/// Multiply by z_var^power.
template <class T>
MultiPoly<T> shift_exponent(const MultiPoly<T>& p, int var, int power) {
    MultiPoly<T> out(p.nvars);
    for (const auto& [exp, c] : p.terms) {
        std::vector<int> e = exp;
        e[static_cast<size_t>(var)] += power;
        out.add_term(e, c);
    }
    return out;
}

/// Exact division by (z_i - z_j). The remainder must vanish, which holds
/// whenever p is antisymmetric-free under the i<->j swap; rel_tol guards the
/// floating-point path.
template <class T>
MultiPoly<T> divide_by_difference(const MultiPoly<T>& p, int vi, int vj,
                                  double rel_tol = 1e-9) {
    // organize as a polynomial in z_vi with MultiPoly coefficients
    std::map<int, MultiPoly<T>> by_deg;
    int top = 0;
    for (const auto& [exp, c] : p.terms) {
        int m = exp[static_cast<size_t>(vi)];
        top = std::max(top, m);
        std::vector<int> e = exp;
        e[static_cast<size_t>(vi)] = 0;
        auto [it, ins] = by_deg.try_emplace(m, MultiPoly<T>(p.nvars));
        it->second.add_term(e, c);
    }
    // synthetic division: Q_{m-1} = A_m + z_j * Q_m, remainder = A_0 + z_j * Q_0
    MultiPoly<T> quotient(p.nvars);
    MultiPoly<T> carry(p.nvars); // Q_m while descending
    for (int m = top; m >= 1; --m) {
        MultiPoly<T> qm = shift_exponent(carry, vj, 1);
        auto it = by_deg.find(m);
        if (it != by_deg.end()) qm += it->second;
        qm.prune();
        quotient += shift_exponent(qm, vi, m - 1);
        carry = std::move(qm);
    }
    MultiPoly<T> rem = shift_exponent(carry, vj, 1);
    if (auto it = by_deg.find(0); it != by_deg.end()) rem += it->second;
    rem.prune(p.max_abs() * rel_tol);
    if (!rem.terms.empty())
        throw NumericalError("nonzero remainder dividing by a coordinate difference");
    quotient.prune();
    return quotient;
}

} // namespace itw
