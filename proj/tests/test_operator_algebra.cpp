#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "itw/operator_matrix.hpp"
#include "itw/rng.hpp"

using namespace itw;

TEST_CASE("partition basis layout") {
    auto basis = PartitionBasis::build(Partition{2, 1}, 3);
    REQUIRE(basis.size() == 5);
    CHECK(basis.members[0] == Partition{});
    CHECK(basis.index_of(Partition{2, 1}) == 4);
    CHECK(basis.index_of(Partition{3}) == -1);
    // length filter
    auto narrow = PartitionBasis::build(Partition{1, 1}, 2);
    CHECK(narrow.size() == 3); // (), (1), (1,1)
    CHECK_THROWS_AS(PartitionBasis::build(Partition{1, 1, 1}, 2), DomainError);
}

TEST_CASE("laguerre generator entries") {
    ModelParams mp;
    mp.n = 3;
    mp.theta = 1.25;
    mp.d = 3.5;
    const JackTable& table = shared_jack_table(mp.theta);

    auto zero = laguerre_generator_matrix(Partition{}, mp, table);
    CHECK(zero.entries.rows() == 1);
    CHECK(zero.entries(0, 0) == 0.0);

    auto gm = laguerre_generator_matrix(Partition{1}, mp, table);
    CHECK(gm.entries(1, 0) ==
          doctest::Approx(mp.theta * mp.n * (mp.d + 2 * (mp.n - 1))).epsilon(1e-12));
    CHECK(gm.entries(0, 0) == 0.0);
    CHECK(gm.entries(1, 1) == 0.0);
}

TEST_CASE("jacobi generator entries") {
    ModelParams mp;
    mp.n = 1;
    mp.theta = 1.0;
    mp.a = 2.0;
    mp.b = 2.0;
    const JackTable& table = shared_jack_table(1.0);
    auto gm = jacobi_generator_matrix(Partition{1}, mp, table);
    CHECK(gm.entries(1, 1) == doctest::Approx(-8.0));
    CHECK(gm.entries(1, 0) == doctest::Approx(4.0));
}

TEST_CASE("generator matrices are triangular, kernels diagonal") {
    ModelParams mp;
    mp.n = 3;
    mp.theta = 0.75;
    mp.d = 4.0;
    mp.a = 2.0;
    mp.b = 1.5;
    const JackTable& table = shared_jack_table(mp.theta);
    for (const auto& top : {Partition{3, 1}, Partition{2, 2, 1}}) {
        auto lag = laguerre_generator_matrix(top, mp, table);
        auto jac = jacobi_generator_matrix(top, mp, table);
        for (int r = 0; r < lag.basis.size(); ++r) {
            for (int c = r + 1; c < lag.basis.size(); ++c) {
                CHECK(lag.entries(r, c) == 0.0);
                CHECK(jac.entries(r, c) == 0.0);
            }
            CHECK(lag.entries(r, r) == 0.0); // degree strictly drops
        }
        auto ker = kernel_matrix(top, mp.n, mp.theta);
        for (int r = 0; r < ker.basis.size(); ++r)
            for (int c = 0; c < ker.basis.size(); ++c)
                if (r != c) CHECK(ker.entries(r, c) == 0.0);
    }
}

TEST_CASE("matrix action matches the symbolic operator") {
    // rows of the generator matrix expand L J_kappa over the Jack basis;
    // compare with the symbolic differential operator applied to J_kappa
    for (double theta : {0.5, 1.0}) {
        const JackTable& table = shared_jack_table(theta);
        for (const auto& top : {Partition{2, 1}, Partition{4}, Partition{2, 2}}) {
            ModelParams mp;
            mp.n = 2;
            mp.theta = theta;
            mp.d = 3.5;
            mp.a = 2.0;
            mp.b = 1.5;
            if (top.length() > mp.n) continue;
            auto lag = laguerre_generator_matrix(top, mp, table);
            auto jac = jacobi_generator_matrix(top, mp, table);
            for (int r = 0; r < lag.basis.size(); ++r) {
                const Partition& kappa = lag.basis.members[static_cast<size_t>(r)];
                auto jk = table.expansion(kappa, mp.n);

                // Laguerre: 2 B2 + theta d B1
                auto sym = apply_operator(JackOperator::B2, jk, theta);
                sym *= 2.0;
                auto extra = apply_operator(JackOperator::B1, jk, theta);
                extra *= theta * mp.d;
                sym += extra;
                SymmetricPoly<double> viamatrix(mp.n);
                for (int c = 0; c < lag.basis.size(); ++c) {
                    if (lag.entries(r, c) == 0.0) continue;
                    SymmetricPoly<double> jc =
                        table.expansion(lag.basis.members[static_cast<size_t>(c)], mp.n);
                    jc *= lag.entries(r, c);
                    viamatrix += jc;
                }
                sym -= viamatrix;
                CHECK(to_double(sym.max_abs_coeff()) < 1e-10 * std::max(1.0, lag.entries.cwiseAbs().maxCoeff()));

                // Jacobi: 2 B2 - 2 D + 2 theta a B1 - 2 theta (a+b) B3
                auto symj = apply_operator(JackOperator::B2, jk, theta);
                symj *= 2.0;
                auto d_term = apply_operator(JackOperator::D, jk, theta);
                d_term *= -2.0;
                symj += d_term;
                auto b1_term = apply_operator(JackOperator::B1, jk, theta);
                b1_term *= 2.0 * theta * mp.a;
                symj += b1_term;
                auto b3_term = apply_operator(JackOperator::B3, jk, theta);
                b3_term *= -2.0 * theta * (mp.a + mp.b);
                symj += b3_term;
                SymmetricPoly<double> viamatrixj(mp.n);
                for (int c = 0; c < jac.basis.size(); ++c) {
                    if (jac.entries(r, c) == 0.0) continue;
                    SymmetricPoly<double> jc =
                        table.expansion(jac.basis.members[static_cast<size_t>(c)], mp.n);
                    jc *= jac.entries(r, c);
                    viamatrixj += jc;
                }
                symj -= viamatrixj;
                CHECK(to_double(symj.max_abs_coeff()) <
                      1e-10 * std::max(1.0, jac.entries.cwiseAbs().maxCoeff()));
            }
        }
    }
}

TEST_CASE("kernel eigenvalues") {
    CHECK(kernel_eigenvalue(Partition{}, 2, 0.8) == doctest::Approx(1.0));
    CHECK(kernel_eigenvalue(Partition{1}, 1, 1.0) == doctest::Approx(0.5));
    CHECK(kernel_eigenvalue(Partition{1}, 2, 1.0) == doctest::Approx(2.0 / 3.0));
    // c((1), n, theta) = n/(n+1) for every theta
    for (double theta : {0.5, 1.0, 2.5})
        for (int n = 1; n <= 4; ++n)
            CHECK(kernel_eigenvalue(Partition{1}, n, theta) ==
                  doctest::Approx(static_cast<double>(n) / (n + 1)).epsilon(1e-12));
}

TEST_CASE("generator intertwining") {
    {
        ModelParams mp;
        mp.n = 1;
        mp.theta = 1.0;
        mp.d = 4.0;
        CHECK(check_generator_intertwining(Partition{1}, mp, Family::laguerre) < 1e-12);
    }
    {
        ModelParams mp;
        mp.n = 3;
        mp.theta = 0.75;
        mp.a = 2.5;
        mp.b = 1.5;
        CHECK(check_generator_intertwining(Partition{3, 2}, mp, Family::jacobi) < 1e-10);
        // perturbed control must break the identity decisively
        CHECK(check_generator_intertwining(Partition{3, 2}, mp, Family::jacobi, 0.1) > 1e-3);
    }
    // parameter domain guards
    ModelParams bad;
    bad.n = 1;
    bad.theta = 1.0;
    bad.d = 1.5;
    CHECK_THROWS_AS(check_generator_intertwining(Partition{1}, bad, Family::laguerre),
                    DomainError);
    bad.d = 4;
    bad.a = 0.5;
    bad.b = 2;
    CHECK_THROWS_AS(check_generator_intertwining(Partition{1}, bad, Family::jacobi), DomainError);
}

TEST_CASE("semigroup matrix") {
    ModelParams mp;
    mp.n = 2;
    mp.theta = 1.0;
    mp.d = 3.0;
    const JackTable& table = shared_jack_table(1.0);
    auto gen = laguerre_generator_matrix(Partition{1}, mp, table);

    auto identity = semigroup_matrix(gen, 0.0);
    CHECK((identity.entries - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

    // 2x2 strictly triangular: e^{tM}((1),()) = t * theta n (d + 2(n-1))
    double t = 0.7;
    auto sg = semigroup_matrix(gen, t);
    CHECK(sg.entries(1, 0) == doctest::Approx(t * 1.0 * 2 * (3.0 + 2.0)).epsilon(1e-12));

    // semigroup law
    Rng rng(17);
    for (int rep = 0; rep < 3; ++rep) {
        double s = rng.uniform(), u = rng.uniform();
        auto both = semigroup_matrix(gen, s + u);
        Eigen::MatrixXd split = semigroup_matrix(gen, s).entries * semigroup_matrix(gen, u).entries;
        CHECK((both.entries - split).cwiseAbs().maxCoeff() < 1e-11);
    }
    CHECK_THROWS_AS(semigroup_matrix(gen, -0.1), DomainError);
}

TEST_CASE("semigroup intertwining") {
    {
        ModelParams mp;
        mp.n = 2;
        mp.theta = 1.0;
        mp.d = 3.0;
        CHECK(check_semigroup_intertwining(Partition{2}, mp, Family::laguerre, 0.7) < 1e-10);
        CHECK(check_semigroup_intertwining(Partition{2}, mp, Family::laguerre, 0.0) == 0.0);
    }
    {
        ModelParams mp;
        mp.n = 2;
        mp.theta = 0.5;
        mp.a = 2.0;
        mp.b = 2.0;
        CHECK(check_semigroup_intertwining(Partition{2, 1}, mp, Family::jacobi, 1.3) < 1e-10);
        CHECK(check_semigroup_intertwining(Partition{2, 1}, mp, Family::jacobi, 1.3, 0.1) >
              1e-4);
    }
}

TEST_CASE("exact moments") {
    ModelParams mp;
    mp.n = 2;
    mp.theta = 0.6;
    mp.d = 3.0;
    std::vector<double> x{0.3, 1.1};
    CHECK(exact_moment(x, Partition{1}, mp, Family::laguerre, 0.0) == doctest::Approx(1.4));
    CHECK(exact_moment(x, Partition{1}, mp, Family::laguerre, 0.8) ==
          doctest::Approx(1.4 + mp.theta * 2 * (3.0 + 2.0) * 0.8).epsilon(1e-12));

    ModelParams mj;
    mj.n = 1;
    mj.theta = 1.0;
    mj.a = 2.0;
    mj.b = 2.0;
    double t = 0.3;
    CHECK(exact_moment({0.2}, Partition{1}, mj, Family::jacobi, t) ==
          doctest::Approx(0.2 * std::exp(-8 * t) + 0.5 * (1 - std::exp(-8 * t))).epsilon(1e-12));

    CHECK_THROWS_AS(exact_moment({1.1, 0.3}, Partition{1}, mp, Family::laguerre, 0.1),
                    DomainError);
}

TEST_CASE("dyson commutator") {
    const JackTable& t1 = shared_jack_table(1.0);
    SymmetricPoly<double> one(2);
    one.add_term(Partition{}, 1.0);
    CHECK(check_dyson_commutator(2, 1.0, {one}) == 0.0);
    CHECK(check_dyson_commutator(2, 1.0, {t1.expansion(Partition{2}, 2)}) < 1e-11);
    const JackTable& t05 = shared_jack_table(0.5);
    CHECK(check_dyson_commutator(3, 0.5, {t05.expansion(Partition{2, 1}, 3)}) < 1e-11);
}
