#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "itw/quadrature.hpp"

using namespace itw;

TEST_CASE("gauss-legendre matches known rules") {
    auto rule = gauss_legendre(3);
    // nodes: 0, +-sqrt(3/5); weights: 8/9, 5/9
    CHECK(rule.nodes[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rule.nodes[2] == doctest::Approx(std::sqrt(3.0 / 5.0)));
    CHECK(rule.weights[1] == doctest::Approx(8.0 / 9.0));
    CHECK(rule.weights[0] == doctest::Approx(5.0 / 9.0));
}

TEST_CASE("chebyshev case alpha=beta=-1/2") {
    const int n = 7;
    auto rule = gauss_jacobi(n, -0.5, -0.5);
    for (int k = 0; k < n; ++k) {
        CHECK(rule.weights[static_cast<size_t>(k)] == doctest::Approx(M_PI / n).epsilon(1e-12));
        double expect = std::cos((2.0 * (n - k) - 1.0) / (2.0 * n) * M_PI);
        CHECK(rule.nodes[static_cast<size_t>(k)] == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("polynomial exactness with jacobi weight") {
    // int_{-1}^1 (1-x)^a (1+x)^b x^k for a=1.5, b=0.5, against high-order reference
    double a = 1.5, b = 0.5;
    auto fine = gauss_jacobi(60, a, b);
    auto coarse = gauss_jacobi(8, a, b);
    for (int k = 0; k <= 15; ++k) { // 8-point rule exact through degree 15
        double ref = 0, got = 0;
        for (int i = 0; i < fine.size(); ++i)
            ref += fine.weights[static_cast<size_t>(i)] * std::pow(fine.nodes[static_cast<size_t>(i)], k);
        for (int i = 0; i < coarse.size(); ++i)
            got += coarse.weights[static_cast<size_t>(i)] *
                   std::pow(coarse.nodes[static_cast<size_t>(i)], k);
        CHECK(got == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("beta integral via mapped rule") {
    // int_0^1 y^(t-1) (1-y)^(t-1) dy = B(t,t)
    for (double t : {0.5, 0.75, 1.0, 2.0}) {
        double got = integrate_jacobi_weighted([](double) { return 1.0; }, 0.0, 1.0, t - 1.0,
                                               t - 1.0, 24);
        double expect = std::exp(2 * std::lgamma(t) - std::lgamma(2 * t));
        CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("interval mapping") {
    // int_1^3 (3-x)^0.5 (x-1)^0.5 x dx, reference by substitution x = 2 + u
    auto mapped = map_rule(gauss_jacobi(16, 0.5, 0.5), 1.0, 3.0, 0.5, 0.5);
    double got = 0;
    for (size_t k = 0; k < mapped.nodes.size(); ++k) got += mapped.weights[k] * mapped.nodes[k];
    // int_{-1}^{1} sqrt(1-u^2)(2+u) du = 2 * pi/2 = pi
    CHECK(got == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(gauss_jacobi(0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(map_rule(gauss_legendre(4), 2.0, 1.0, 0.0, 0.0), DomainError);
}
