#include <doctest.h>

#include <cmath>
#include <random>

#include "gausskit/linsolve.hpp"

using namespace gausskit;
using numerics::BigMatrix;

namespace {

std::vector<BigReal> vec(std::initializer_list<double> xs, int digits) {
    std::vector<BigReal> v;
    for (double x : xs) v.emplace_back(x, digits);
    return v;
}

}  // namespace

TEST_CASE("solve_dense: identity and diagonal systems") {
    const int d = 30;
    auto x = numerics::solve_dense(BigMatrix::identity(3, d), vec({1, 2, 3}, d));
    CHECK(x[0].to_double() == 1.0);
    CHECK(x[1].to_double() == 2.0);
    CHECK(x[2].to_double() == 3.0);

    BigMatrix A(2, d);
    A.at(0, 0) = BigReal(2.0, d);
    A.at(1, 1) = BigReal(4.0, d);
    auto y = numerics::solve_dense(A, vec({2, 8}, d));
    CHECK(y[0].to_double() == doctest::Approx(1.0));
    CHECK(y[1].to_double() == doctest::Approx(2.0));
}

TEST_CASE("solve_dense: 7x7 Hilbert matrix at 60 digits recovers all-ones") {
    const int n = 7, d = 60;
    BigMatrix H(n, d);
    std::vector<BigReal> rhs(n, BigReal(d));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            H.at(i, j) = BigReal(1.0, d) / BigReal(double(i + j + 1), d);
            rhs[i] += H.at(i, j);
        }
    }
    auto x = numerics::solve_dense(H, rhs);
    for (int i = 0; i < n; ++i)
        CHECK(std::abs(x[i].to_double() - 1.0) < 1e-10);
}

TEST_CASE("solve_dense: singular matrix reports pivot underflow") {
    const int d = 30;
    BigMatrix A(2, d);
    A.at(0, 0) = BigReal(1.0, d);
    A.at(0, 1) = BigReal(2.0, d);
    A.at(1, 0) = BigReal(2.0, d);
    A.at(1, 1) = BigReal(4.0, d);
    CHECK_THROWS_AS(numerics::solve_dense(A, vec({1, 1}, d)), Singular);
}

TEST_CASE("solve_dense: residual bound on random well-conditioned systems") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int digits : {15, 30, 50, 100}) {
        const int n = 5;
        BigMatrix A(n, digits);
        std::vector<BigReal> b(n, BigReal(digits));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                A.at(i, j) = BigReal(u(rng) + (i == j ? 4.0 : 0.0), digits);
            b[i] = BigReal(u(rng), digits);
        }
        REQUIRE(numerics::condition_estimate(A) < 1e3);
        auto x = numerics::solve_dense(A, b);
        const double res = numerics::residual_inf_norm(A, x, b).to_double();
        double bmax = 0.0;
        for (const auto& e : b) bmax = std::max(bmax, std::abs(e.to_double()));
        CHECK(res <= std::pow(10.0, 5 - digits) * bmax);
    }
}

TEST_CASE("condition_estimate: identity and scaled diagonal") {
    const int d = 30;
    CHECK(numerics::condition_estimate(BigMatrix::identity(4, d)) == doctest::Approx(1.0));
    BigMatrix A(2, d);
    A.at(0, 0) = BigReal(1.0, d);
    A.at(1, 1) = BigReal(1e-6, d);
    CHECK(numerics::condition_estimate(A) == doctest::Approx(1e6).epsilon(1e-6));
}
