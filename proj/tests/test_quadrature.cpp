#include <doctest.h>

#include <cmath>
#include <complex>

#include "gausskit/quadrature.hpp"

using namespace gausskit;
using numerics::Interval;
using numerics::QuadratureConfig;
using numerics::whole_line;

namespace {
const QuadratureConfig cfg{};
}

TEST_CASE("integrate: whole-line Gaussian equals sqrt(pi)") {
    const double I = numerics::integrate([](double x) { return std::exp(-x * x); },
                                         whole_line(), cfg);
    CHECK(I == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-12));
}

TEST_CASE("integrate: zero integrand and unit rectangle") {
    CHECK(numerics::integrate([](double) { return 0.0; }, whole_line(), cfg) == 0.0);
    CHECK(numerics::integrate([](double) { return 1.0; }, Interval{0.0, 1.0}, cfg) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("integrate: linearity") {
    auto f = [](double x) { return std::exp(-x * x); };
    auto g = [](double x) { return std::exp(-2.0 * x * x); };
    const double If = numerics::integrate(f, whole_line(), cfg);
    const double Ig = numerics::integrate(g, whole_line(), cfg);
    const double Ifg = numerics::integrate(
        [&](double x) { return 3.0 * f(x) - 2.0 * g(x); }, whole_line(), cfg);
    CHECK(std::abs(Ifg - (3.0 * If - 2.0 * Ig)) < 10 * cfg.abs_tol);
}

TEST_CASE("integrate: breakpoints let jumps converge") {
    auto step = [](double x) { return (x >= 0.25 && x < 0.75) ? 1.0 : 0.0; };
    const double I = numerics::integrate(step, Interval{0.0, 1.0}, cfg, {0.25, 0.75});
    CHECK(I == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("integrate: narrow bump inside a wide panel is not missed") {
    // A sparse rule on [-30, 30] samples nowhere near the bump; the pre-split
    // of wide chunks must still find it.
    auto bump = [](double x) { return std::exp(-200.0 * (x - 7.3) * (x - 7.3)); };
    const double I = numerics::integrate(bump, Interval{-30.0, 30.0}, cfg);
    CHECK(I == doctest::Approx(std::sqrt(std::acos(-1.0) / 200.0)).epsilon(1e-10));
}

TEST_CASE("integrate: error paths") {
    CHECK_THROWS_AS(numerics::integrate([](double) { return 0.0; }, Interval{1.0, 0.0}, cfg),
                    InvalidDomain);
    // Non-decaying whole-line integrand fails the tail check.
    CHECK_THROWS_AS(numerics::integrate([](double) { return 1.0; }, whole_line(), cfg),
                    NonConvergence);
    QuadratureConfig bad = cfg;
    bad.abs_tol = -1.0;
    CHECK_THROWS_AS(numerics::integrate([](double) { return 0.0; }, whole_line(), bad),
                    InvalidParameter);
}

TEST_CASE("integrate_complex: oscillatory Gaussian") {
    // integral of e^{-x^2} e^{-isx} = sqrt(pi) e^{-s^2/4}.
    const double s = 2.0;
    const auto I = numerics::integrate_complex(
        [s](double x) { return std::exp(-x * x) * std::polar(1.0, -s * x); },
        whole_line(), cfg);
    const double expect = std::sqrt(std::acos(-1.0)) * std::exp(-s * s / 4.0);
    CHECK(I.real() == doctest::Approx(expect).epsilon(1e-10));
    CHECK(std::abs(I.imag()) < 1e-10);
}

TEST_CASE("l2_norm: unit indicator, Gaussian, zero") {
    auto chi01 = [](double x) { return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0; };
    CHECK(numerics::l2_norm(chi01, cfg, {0.0, 1.0}, Interval{-1.0, 2.0}) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(numerics::l2_norm([](double x) { return std::exp(-x * x); }, cfg) ==
          doctest::Approx(std::pow(std::acos(-1.0) / 2.0, 0.25)).epsilon(1e-10));
    CHECK(numerics::l2_norm([](double) { return 0.0; }, cfg) == 0.0);
}

TEST_CASE("weighted_l2_norm: constants and unimodular functions") {
    const double quarter_root_pi = std::pow(std::acos(-1.0), 0.25);
    CHECK(numerics::weighted_l2_norm([](double) { return 1.0; }, cfg) ==
          doctest::Approx(quarter_root_pi).epsilon(1e-10));
    CHECK(numerics::weighted_l2_norm([](double) { return 0.0; }, cfg) == 0.0);
    CHECK(numerics::weighted_l2_norm_complex(
              [](double x) { return std::polar(1.0, x); }, cfg) ==
          doctest::Approx(quarter_root_pi).epsilon(1e-10));
}

TEST_CASE("weighted norm never exceeds plain norm") {
    auto f = [](double x) { return std::exp(-x * x / 2.0) * std::sin(3.0 * x); };
    CHECK(numerics::weighted_l2_norm(f, cfg) <= numerics::l2_norm(f, cfg) + 10 * cfg.abs_tol);
}

TEST_CASE("l2_norm triangle inequality") {
    auto f = [](double x) { return std::exp(-x * x); };
    auto g = [](double x) { return x * std::exp(-x * x); };
    const double lhs = numerics::l2_norm([&](double x) { return f(x) + g(x); }, cfg);
    CHECK(lhs <= numerics::l2_norm(f, cfg) + numerics::l2_norm(g, cfg) + 10 * cfg.abs_tol);
}
