#pragma once

#include <stdexcept>
#include <string>

namespace itw {

// Precondition violation on a mathematical domain (bad partition, unordered
// point, parameter outside the admissible range).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical breakdown: NaN/overflow in an integrator, quadrature collapse,
// resonant denominator in a triangular solve.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed configuration file or invalid CLI option combination.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace itw
