#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

namespace itw {

/// Exact coefficient type for the rational-mode Jack calculus.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline std::string coeff_to_string(const Rational& r) { return r.str(); }
inline std::string coeff_to_string(double x) {
    return std::to_string(x);
}

/// abs() usable from templated code on either coefficient type.
inline double coeff_abs(double x) { return std::fabs(x); }
inline Rational coeff_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline bool coeff_is_zero(double x, double tol) { return std::fabs(x) <= tol; }
inline bool coeff_is_zero(const Rational& r, double /*tol*/) { return r == 0; }

} // namespace itw
