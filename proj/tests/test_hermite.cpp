#include <doctest.h>

#include <cmath>

#include "gausskit/funcspec.hpp"
#include "gausskit/hermite.hpp"
#include "gausskit/parallel.hpp"
#include "gausskit/quadrature.hpp"
#include "gausskit/stencil.hpp"

using namespace gausskit;
using funcspec::Support;
using funcspec::TargetFunction;
using numerics::QuadratureConfig;

namespace {
const QuadratureConfig cfg{};
const double kPi = std::acos(-1.0);
}

TEST_CASE("hermite_poly: low orders against closed forms") {
    CHECK(hermite::hermite_poly(0, 1.7) == 1.0);
    CHECK(hermite::hermite_poly(1, 3.0) == doctest::Approx(6.0));   // 2x
    CHECK(hermite::hermite_poly(2, 1.0) == doctest::Approx(2.0));   // 4x^2-2
    CHECK(hermite::hermite_poly(3, 0.5) == doctest::Approx(-5.0));  // 8x^3-12x
}

TEST_CASE("hermite_function: values and normalization") {
    CHECK(hermite::hermite_function(0, 0.0) == doctest::Approx(std::pow(kPi, -0.25)));
    CHECK(hermite::hermite_function(1, 0.0) == 0.0);
    const double I = numerics::integrate(
        [](double x) { double h = hermite::hermite_function(3, x); return h * h; },
        numerics::whole_line(), cfg);
    CHECK(I == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("hermite_function: large order stays finite where doubles would overflow") {
    // n! 2^n overflows double range near n=150; the normalized recurrence
    // must not.
    const double v = hermite::hermite_function(200, 1.3);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 1.0);  // orthonormal functions are uniformly bounded
}

TEST_CASE("normalized_hermite_row matches normalized_hermite") {
    const auto row = hermite::normalized_hermite_row(10, 0.73);
    REQUIRE(row.size() == 11);
    for (int n = 0; n <= 10; ++n)
        CHECK(row[n] == doctest::Approx(hermite::normalized_hermite(n, 0.73)).epsilon(1e-13));
}

TEST_CASE("gaussian_derivative: closed forms") {
    CHECK(hermite::gaussian_derivative(0, 0.0) == doctest::Approx(1.0));
    CHECK(hermite::gaussian_derivative(1, 1.0) == doctest::Approx(-2.0 * std::exp(-1.0)));
    CHECK(hermite::gaussian_derivative(2, 0.0) == doctest::Approx(-2.0));
}

TEST_CASE("hermite_poly consistent with a numerical derivative stencil") {
    // Rodrigues: H_n(x) = (-1)^n e^{x^2} d^n/dx^n e^{-x^2}; take the
    // derivative from a high-order central stencil.
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        std::vector<stencil::Scalar> nodes;
        for (int i = -5; i <= 5; ++i) nodes.emplace_back(double(i), 0.0);
        const auto s = stencil::solve_stencil(n, nodes);
        for (double x : {-3.0, -1.2, 0.0, 0.7, 3.0}) {
            const double deriv = stencil::apply_stencil(
                s, [](double y) { return std::exp(-y * y); }, x, 0.02);
            const double expect = (n % 2 ? -1.0 : 1.0) * std::exp(x * x) * deriv;
            CHECK(hermite::hermite_poly(n, x) == doctest::Approx(expect).epsilon(1e-6));
        }
    }
}

TEST_CASE("gaussian_derivative_bound dominates sampled values") {
    for (int n : {1, 3, 8}) {
        const double bound = hermite::gaussian_derivative_bound(n);
        for (int i = 0; i <= 200; ++i) {
            const double x = -6.0 + 12.0 * i / 200.0;
            REQUIRE(std::abs(hermite::gaussian_derivative(n, x)) <= bound);
        }
    }
}

TEST_CASE("compute_bn: Gaussian target gives e_0") {
    const auto f = funcspec::gaussian_translate(0.0);
    const auto b = hermite::compute_bn(f, 3, cfg);
    REQUIRE(b.order() == 3);
    CHECK_FALSE(b.truncation_M.has_value());
    CHECK(b.b[0] == doctest::Approx(1.0).epsilon(1e-10));
    for (int n = 1; n <= 3; ++n) CHECK(std::abs(b.b[n]) < 1e-8);
}

TEST_CASE("compute_bn: derivative of the Gaussian gives e_1") {
    auto f = TargetFunction::from_function(
        [](double x) { return -2.0 * x * std::exp(-x * x); }, Support::whole(), {},
        funcspec::Decay::gaussian);
    const auto b = hermite::compute_bn(f, 3, cfg);
    CHECK(std::abs(b.b[0]) < 1e-8);
    CHECK(b.b[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(b.b[2]) < 1e-8);
    CHECK(std::abs(b.b[3]) < 1e-8);
}

TEST_CASE("compute_bn: zero target, and bounded support skips truncation") {
    const auto z = hermite::compute_bn(TargetFunction::parse("0 * chi(0,1)"), 4, cfg);
    for (double v : z.b) CHECK(v == 0.0);

    // Bounded support: chi_[-M,M] is a no-op, so no truncation is recorded.
    const auto b = hermite::compute_bn(TargetFunction::parse("chi(-1,2)"), 2, cfg);
    CHECK_FALSE(b.truncation_M.has_value());
    CHECK(b.b[0] == doctest::Approx(3.0 / std::sqrt(kPi)).epsilon(1e-10));
}

TEST_CASE("compute_bn: whole-line target without decay gets a doubling-search M") {
    // e^{-x^2/4} decays, but not fast enough for f e^{x^2/2} to be
    // square-integrable: truncation must kick in with finite M.
    auto f = TargetFunction::from_function(
        [](double x) { return std::exp(-x * x / 4.0); }, Support::whole(), {},
        funcspec::Decay::unknown);
    const auto b = hermite::compute_bn(f, 2, cfg);
    REQUIRE(b.truncation_M.has_value());
    CHECK(*b.truncation_M > 0.0);
    CHECK(std::isfinite(b.b[0]));
}

TEST_CASE("eval_hermite_expansion: direct partial sums") {
    hermite::HermiteCoefficients c;
    c.b = {1.0};
    CHECK(hermite::eval_hermite_expansion(c, 0.0) == doctest::Approx(1.0));
    c.b = {0.0, 1.0};
    CHECK(hermite::eval_hermite_expansion(c, 1.0) == doctest::Approx(-2.0 * std::exp(-1.0)));
    c.b = {1.0, 1.0};
    CHECK(hermite::eval_hermite_expansion(c, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("expansion idempotence on its own span") {
    hermite::HermiteCoefficients c;
    c.b = {0.5, -1.25, 0.0, 2.0};
    auto f = TargetFunction::from_function(
        [c](double x) { return hermite::eval_hermite_expansion(c, x); }, Support::whole(), {},
        funcspec::Decay::gaussian);
    const auto b = hermite::compute_bn(f, 3, cfg);
    for (int n = 0; n <= 3; ++n)
        CHECK(b.b[n] == doctest::Approx(c.b[n]).epsilon(1e-8));
}

TEST_CASE("partial-sum L2 error is non-increasing in N") {
    const auto f = TargetFunction::parse("(x-1)^2*chi(-1,2)");
    double prev = -1.0;
    for (int N : {2, 5, 9, 14}) {
        const auto b = hermite::compute_bn(f, N, cfg);
        auto diff = [&](double x) {
            const double d = f.evaluate(x) - hermite::eval_hermite_expansion(b, x);
            return d * d;
        };
        const double err = std::sqrt(
            numerics::integrate(diff, numerics::Interval{-9.0, 11.0}, cfg, f.breakpoints()));
        if (prev >= 0.0) CHECK(err <= prev + 10 * cfg.abs_tol);
        prev = err;
    }
}

TEST_CASE("compute_bn serial and parallel agree exactly") {
    const auto f = TargetFunction::parse("sin(x)*chi(-pi,pi)");
    const auto a = hermite::compute_bn(f, 12, cfg, Exec::serial);
    const auto b = hermite::compute_bn(f, 12, cfg, Exec::parallel);
    REQUIRE(a.b.size() == b.b.size());
    for (std::size_t i = 0; i < a.b.size(); ++i) CHECK(a.b[i] == b.b[i]);
}
