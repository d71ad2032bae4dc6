#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "l1path/random.hpp"

using namespace testing;
using l1path::project_l1_ball;
using l1path::soft_threshold;

TEST_CASE("soft threshold") {
    CHECK(soft_threshold(Rational(5), Rational(2)) == Rational(3));
    CHECK(soft_threshold(Rational(-5), Rational(2)) == Rational(-3));
    CHECK(soft_threshold(Rational(2), Rational(2)) == Rational(0));
    CHECK(soft_threshold(vec({12, -8, 5, 1, 2}), Rational(1)) == vec({11, -7, 4, 0, 1}));
    CHECK(soft_threshold(vec({3, -3}), vec({3, 3})) == vec({0, 0}));
    CHECK(soft_threshold(vec({3, -3}), vec({1, 2})) == vec({2, -1}));
    CHECK_THROWS_AS(soft_threshold(Rational(1), Rational(-1)), l1path::DomainError);
    CHECK_THROWS_AS(soft_threshold(vec({1, 2}), vec({1})), l1path::DimensionError);
    CHECK_THROWS_AS(soft_threshold(vec({1, 2}), vec({1, -1})), l1path::DomainError);
}

TEST_CASE("soft threshold shrinks toward zero") {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20), lam(0, 40);
    for (int k = 0; k < 3000; ++k) {
        const Rational u(num(gen), den(gen));
        const Rational l(lam(gen), den(gen));
        const Rational s = soft_threshold(u, l);
        CHECK(abs(s) <= abs(u));
        CHECK((s.sign() == 0 || s.sign() == u.sign()));
        if (abs(u) >= l) CHECK(s == u - l * Rational(u.sign()));
        else CHECK(s.is_zero());
    }
}

TEST_CASE("projection onto the l1 ball") {
    CHECK(project_l1_ball(vec({1, -1}), Rational(5)) == vec({1, -1}));
    CHECK(project_l1_ball(vec({3, 1}), Rational(1)) == vec({1, 0}));
    CHECK(project_l1_ball(vec({12, -8, 5, 1, 2}), Rational(0)) == vec({0, 0, 0, 0, 0}));
    CHECK(project_l1_ball(vec({12, -8, 5, 1, 2}), Rational(10)) == vec({7, -3, 0, 0, 0}));
    CHECK(project_l1_ball(vec({12, -8, 5, 1, 2}), Rational(28)) == vec({12, -8, 5, 1, 2}));
    CHECK(project_l1_ball(vec({2, 2}), Rational(1)) == qvec({"1/2", "1/2"}));
    CHECK_THROWS_AS(project_l1_ball(vec({1}), Rational(-1)), l1path::DomainError);
}

TEST_CASE("projection of (3,1) onto the unit ball beats a grid over the ball") {
    const Vector<double> x = vec<double>({3, 1});
    const Vector<double> p = project_l1_ball(x, 1.0);
    CHECK(l1path::l1_norm(p) == doctest::Approx(1.0));
    const double best = (x - p).squaredNorm();
    const int N = 400;
    for (int i = -N; i <= N; ++i) {
        for (int j = -N; j <= N; ++j) {
            Vector<double> u(2);
            u << double(i) / N, double(j) / N;
            if (l1path::l1_norm(u) > 1.0) continue;
            CHECK((x - u).squaredNorm() >= best - 1e-12);
        }
    }
}

TEST_CASE("projection is feasible and optimal on random instances") {
    l1path::Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Index n = rng.integer(1, 4);
        Vector<double> x(n);
        for (Index i = 0; i < n; ++i) x(i) = rng.uniform(-5, 5);
        const double R = rng.uniform(0, 8);
        const Vector<double> p = project_l1_ball(x, R);
        CHECK(l1path::l1_norm(p) <= R + 1e-12);
        if (l1path::l1_norm(x) >= R) CHECK(l1path::l1_norm(p) == doctest::Approx(R));
        const double best = (x - p).squaredNorm();
        for (int k = 0; k < 10000; ++k) {
            Vector<double> u(n);
            for (Index i = 0; i < n; ++i) u(i) = rng.uniform(-1, 1);
            const double norm = l1path::l1_norm(u);
            if (norm > 0) u *= R * rng.uniform() / norm;
            CHECK((x - u).squaredNorm() >= best - 1e-9);
        }
    }
}

TEST_CASE("exact projection hits the radius on random rationals") {
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
    for (int k = 0; k < 500; ++k) {
        Vector<Rational> x(4);
        for (Index i = 0; i < 4; ++i) x(i) = Rational(num(gen), den(gen));
        const Rational R(std::abs(num(gen)), den(gen));
        const Vector<Rational> p = project_l1_ball(x, R);
        if (l1path::l1_norm(x) >= R) CHECK(l1path::l1_norm(p) == R);
        else CHECK(p == x);
        // KKT of the projection: p = S_tau(x) for one tau >= 0
        const Rational tau = l1path::l1_ball_threshold(x, R);
        CHECK(tau >= Rational(0));
        CHECK(soft_threshold(x, tau) == p);
    }
}

TEST_CASE("weighted norms") {
    CHECK(l1path::weighted_l1_norm(vec({7, -3, 0, 0, 0}), vec({1, 1, 1, 1, 1})) == Rational(10));
    CHECK(l1path::weighted_l1_norm(vec({3, -4, 1}), vec({2, 1, 0})) == Rational(10));
    CHECK(l1path::weighted_l1_norm(vec({0, 0, 0}), vec({1, 1, 1})) == Rational(0));
    CHECK(l1path::l1_norm(vec({7, -3, 0, 0, 0})) == Rational(10));
    CHECK_THROWS_AS(l1path::weighted_l1_norm(vec({1, 1}), vec({1, -1})), l1path::DomainError);
    CHECK_THROWS_AS(l1path::weighted_l1_norm(vec({1, 1}), vec({1})), l1path::DimensionError);
}

TEST_CASE("remainder") {
    CHECK(l1path::remainder(identity_example(), vec({0, 0, 0, 0, 0})) == vec({12, -8, 5, 1, 2}));
    CHECK(l1path::remainder(tie_example(), vec({0, 0, 0})) == vec({-192, 106, 192}));
    CHECK(l1path::remainder(removal_example(), vec({-1, 2, 3})) == vec({0, 0, 0}));
    CHECK_THROWS_AS(l1path::remainder(tie_example(), vec({0, 0})), l1path::DimensionError);

    l1path::Rng rng(23);
    for (int k = 0; k < 20; ++k) {
        const Problem<double> p(rng.normal_matrix(4, 6), rng.normal_matrix(4, 1).col(0));
        const Vector<double> r0 = l1path::remainder(p, Vector<double>(Vector<double>::Zero(6)));
        CHECK((r0 - p.K.transpose() * p.y).norm() == 0.0);
        Matrix<Rational> Kq(4, 6), Kt(6, 4);
        Vector<Rational> yq(4);
        for (Index i = 0; i < 4; ++i) {
            yq(i) = Rational(rng.integer(-9, 9), rng.integer(1, 9));
            for (Index j = 0; j < 6; ++j) {
                Kq(i, j) = Rational(rng.integer(-9, 9), rng.integer(1, 9));
                Kt(j, i) = Kq(i, j);
            }
        }
        // transpose-multiply agrees with an explicitly built transpose
        CHECK(l1path::remainder(Problem<Rational>(Kq, yq), Vector<Rational>(Vector<Rational>::Zero(6))) == Kt * yq);
    }
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(Problem<Rational>(mat({{1, 2}}), vec({1, 2})), l1path::DimensionError);
    CHECK_THROWS_AS(Problem<Rational>(mat({{1, 2}}), vec({1}), vec({1})), l1path::DimensionError);
    CHECK_THROWS_AS(Problem<Rational>(mat({{1, 2}}), vec({1}), vec({1, -1})), l1path::DomainError);
    CHECK_THROWS_AS(Problem<Rational>(Matrix<Rational>(0, 0), Vector<Rational>(0)), l1path::DimensionError);
    const Problem<Rational> p(mat({{1, 2}}), vec({1}));
    CHECK(p.w == vec({1, 1}));
}
