#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "itw/ensemble.hpp"
#include "itw/jack.hpp"
#include "itw/stats.hpp"

using namespace itw;

namespace {
SymmetricPoly<double> power_poly(int k) {
    SymmetricPoly<double> p(1);
    p.add_term(Partition{k}, 1.0);
    return p;
}
} // namespace

TEST_CASE("log density") {
    EnsembleSpec spec{1, 2, 2, 2};
    CHECK(ensemble_log_density_unnormalized({0.5}, spec) ==
          doctest::Approx(std::log(0.25)).epsilon(1e-14));
    CHECK(ensemble_log_density_unnormalized({0.0}, spec) ==
          -std::numeric_limits<double>::infinity());

    EnsembleSpec s2{2, 2, 2, 2};
    CHECK(ensemble_log_density_unnormalized({0.4, 0.4}, s2) ==
          -std::numeric_limits<double>::infinity());
    // reflection symmetry at a=b
    CHECK(ensemble_log_density_unnormalized({0.2, 0.7}, s2) ==
          doctest::Approx(ensemble_log_density_unnormalized({0.3, 0.8}, s2)).epsilon(1e-13));
    CHECK_THROWS_AS(ensemble_log_density_unnormalized({0.5}, s2), DomainError);
}

TEST_CASE("beta moments closed form") {
    EnsembleSpec spec{1, 2, 2, 2};
    CHECK(beta_moment(spec, 1) == doctest::Approx(0.5));
    CHECK(beta_moment(spec, 2) == doctest::Approx(0.3));
    EnsembleSpec s31{1, 3, 1, 2};
    CHECK(beta_moment(s31, 1) == doctest::Approx(0.75));
}

TEST_CASE("n=1 sampler is exact Beta") {
    McmcOptions opts;
    opts.seed = 41;
    EnsembleSpec spec{1, 2, 2, 2};
    auto res = ensemble_mcmc(spec, 40000, opts);
    CHECK(res.acceptance_rate == 1.0);
    std::vector<double> m1, m2, m3, m4;
    for (const auto& s : res.samples) {
        m1.push_back(s[0]);
        m2.push_back(s[0] * s[0]);
        m3.push_back(s[0] * s[0] * s[0]);
        m4.push_back(s[0] * s[0] * s[0] * s[0]);
    }
    auto c1 = mean_se(m1), c2 = mean_se(m2), c3 = mean_se(m3), c4 = mean_se(m4);
    CHECK(std::fabs(c1.mean - beta_moment(spec, 1)) < 3 * c1.se);
    CHECK(std::fabs(c2.mean - beta_moment(spec, 2)) < 3 * c2.se);
    CHECK(std::fabs(c3.mean - beta_moment(spec, 3)) < 3 * c3.se);
    CHECK(std::fabs(c4.mean - beta_moment(spec, 4)) < 3 * c4.se);
}

TEST_CASE("mcmc output is ordered and interior") {
    EnsembleSpec spec{3, 2.0, 1.5, 1.0};
    McmcOptions opts;
    opts.seed = 43;
    auto res = ensemble_mcmc(spec, 5000, opts);
    CHECK(res.acceptance_in_range);
    for (const auto& s : res.samples) {
        REQUIRE(s.size() == 3);
        CHECK(s[0] > 0.0);
        CHECK(s[2] < 1.0);
        CHECK(std::is_sorted(s.begin(), s.end()));
    }
}

TEST_CASE("corollary by quadrature at n=1") {
    EnsembleSpec spec{1, 2, 2, 2};
    CorollaryOptions opts;
    opts.mode = CorollaryMode::quadrature;
    auto checks = check_corollary(spec, {power_poly(1), power_poly(2)}, opts);
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].lhs == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(checks[1].lhs == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(checks[0].pass);
    CHECK(checks[1].pass);
    CHECK_THROWS_AS(check_corollary(EnsembleSpec{2, 2, 2, 2}, {power_poly(1)}, opts),
                    DomainError);
    CHECK_THROWS_AS(check_corollary(EnsembleSpec{1, 0.9, 2, 2}, {power_poly(1)}, opts),
                    DomainError);
}

TEST_CASE("corollary by Monte Carlo") {
    EnsembleSpec spec{1, 2, 2, 2};
    CorollaryOptions opts;
    opts.mode = CorollaryMode::mc;
    opts.mc_samples = 30000;
    opts.seed = 47;
    auto checks = check_corollary(spec, {power_poly(1), power_poly(2)}, opts);
    for (const auto& c : checks) CHECK(c.pass);

    // n=2 with a Jack test polynomial
    EnsembleSpec s2{2, 2.5, 1.5, 1.0};
    const JackTable& table = shared_jack_table(0.5);
    CorollaryOptions o2;
    o2.mode = CorollaryMode::mc;
    o2.mc_samples = 30000;
    o2.seed = 49;
    auto c2 = check_corollary(s2, {table.expansion(Partition{1}, 2)}, o2);
    CHECK(c2[0].pass);
    // E[x1+x2] of the n=2 ensemble at (2.5, 1.5, beta=1) is 7/6
    CHECK(c2[0].rhs == doctest::Approx(7.0 / 6.0).epsilon(0.01));
}

TEST_CASE("sde stationarity") {
    EnsembleSpec spec{1, 2, 2, 2};
    StationarityOptions opts;
    opts.sim.paths = 4000;
    opts.sim.dt = 0.005;
    opts.sim.seed = 53;
    opts.mcmc.seed = 54;
    opts.t_values = {0.1, 1.0};
    auto checks = check_sde_stationarity(spec, {power_poly(1), power_poly(2)}, opts);
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        CHECK(c.pass);
        CHECK(c.ensemble_mean ==
              doctest::Approx(beta_moment(spec, c.sde_mean > 0.4 ? 1 : 2)).epsilon(0.05));
    }
    CHECK_THROWS_AS(
        check_sde_stationarity(EnsembleSpec{1, 0.3, 2, 2}, {power_poly(1)}, opts),
        DomainError);
}

TEST_CASE("symmetrization") {
    MultiPoly<double> q(2);
    q.add_term({1, 0}, 1.0); // z1
    auto p = symmetrize_polynomial(q);
    CHECK(p.coeff(Partition{1}) == doctest::Approx(0.5));

    MultiPoly<double> q2(2);
    q2.add_term({2, 1}, 1.0); // z1^2 z2 -> (m_21)/2
    auto p2 = symmetrize_polynomial(q2);
    CHECK(p2.coeff(Partition{2, 1}) == doctest::Approx(0.5));

    // symmetric input: symmetrization is the identity on means
    std::vector<std::vector<double>> samples{{0.2, 0.9}, {0.4, 1.7}, {1.1, 3.0}};
    MultiPoly<double> sym(2);
    sym.add_term({1, 0}, 1.0);
    sym.add_term({0, 1}, 1.0); // z1 + z2
    double got = symmetrize_and_moment(samples, sym);
    double plain = 0;
    for (const auto& s : samples) plain += s[0] + s[1];
    plain /= static_cast<double>(samples.size());
    CHECK(got == doctest::Approx(plain).epsilon(1e-14));

    double two_term = symmetrize_and_moment(samples, q2);
    double expect = 0;
    for (const auto& s : samples) expect += 0.5 * (s[0] * s[0] * s[1] + s[1] * s[1] * s[0]);
    expect /= static_cast<double>(samples.size());
    CHECK(two_term == doctest::Approx(expect).epsilon(1e-14));
}
