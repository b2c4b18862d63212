#include <doctest.h>

#include <cmath>
#include <complex>

#include "gausskit/funcspec.hpp"
#include "gausskit/gaussfit.hpp"
#include "gausskit/lowfreq.hpp"
#include "gausskit/quadrature.hpp"

using namespace gausskit;
using funcspec::Support;
using funcspec::TargetFunction;
using std::complex;

namespace {

const numerics::QuadratureConfig cfg{};
const double kPi = std::acos(-1.0);

double gauss_hat(double s) { return std::exp(-s * s / 4.0) / std::sqrt(2.0); }

// Samples f on a symmetric grid wide enough for trapezoid transforms.
lowfreq::GridFunction sampled(const TargetFunction& f, double hw, double h) {
    auto g = lowfreq::make_grid(hw, h);
    for (std::size_t i = 0; i < g.xs.size(); ++i) g.values[i] = f.evaluate_complex(g.xs[i]);
    return g;
}

}  // namespace

TEST_CASE("fourier_transform: Gaussian closed form") {
    const auto f = funcspec::gaussian_translate(0.0);
    for (double s : {0.0, -1.0, 2.0, 4.0}) {
        const auto v = lowfreq::fourier_transform(f, s, cfg);
        CHECK(v.real() == doctest::Approx(gauss_hat(s)).epsilon(1e-10));
        CHECK(std::abs(v.imag()) < 1e-10);
    }
    const auto zero = lowfreq::fourier_transform(TargetFunction::parse("0*chi(0,1)"), 1.0, cfg);
    CHECK(std::abs(zero) < 1e-12);
}

TEST_CASE("fourier_transform: translation multiplies by a phase") {
    const double c = 0.7, s = 1.3;
    const auto shifted = lowfreq::fourier_transform(funcspec::gaussian_translate(c), s, cfg);
    const complex<double> expect = std::polar(1.0, -c * s) * gauss_hat(s);
    CHECK(std::abs(shifted - expect) < 1e-10);
}

TEST_CASE("inverse transform agrees with the forward on even real input") {
    const auto f = funcspec::gaussian_translate(0.0);
    for (double x : {0.0, 1.5}) {
        const auto fwd = lowfreq::fourier_transform(f, x, cfg);
        const auto inv = lowfreq::inverse_fourier_transform(f, x, cfg);
        CHECK(std::abs(fwd - inv) < 1e-10);
        CHECK(inv.real() == doctest::Approx(gauss_hat(x)).epsilon(1e-10));
    }
}

TEST_CASE("grid transform matches the quadrature transform") {
    const auto g = sampled(funcspec::gaussian_translate(0.0), 8.5, 0.01);
    for (double s : {0.0, 1.0, 2.0})
        CHECK(std::abs(lowfreq::fourier_transform(g, s) - complex<double>(gauss_hat(s), 0.0)) <
              1e-8);
}

TEST_CASE("Plancherel within a percent on the sampled transform") {
    const auto f = TargetFunction::parse("x*exp(-x^2)");
    const auto g = sampled(f, 8.5, 0.01);
    // ||x e^{-2 x^2 / 2}||^2 ... direct quadrature on both sides.
    const double lhs = std::pow(numerics::l2_norm(f, cfg), 2);
    double rhs = 0.0;
    const double ds = 0.01;
    for (double s = -8.0; s <= 8.0 + ds / 2; s += ds)
        rhs += std::norm(lowfreq::fourier_transform(g, s)) * ds;
    CHECK(rhs == doctest::Approx(lhs).epsilon(1e-2));
}

TEST_CASE("make_grid and grid_interpolate") {
    const auto g = lowfreq::make_grid(2.0, 0.5);
    REQUIRE(g.xs.size() == 9);
    CHECK(g.xs.front() == doctest::Approx(-2.0));
    CHECK(g.xs.back() == doctest::Approx(2.0));

    auto h = g;
    for (std::size_t i = 0; i < h.xs.size(); ++i) h.values[i] = {h.xs[i], -1.0};
    const auto mid = lowfreq::grid_interpolate(h, 0.25);  // halfway between nodes
    CHECK(mid.real() == doctest::Approx(0.25));
    CHECK(mid.imag() == doctest::Approx(-1.0));
    CHECK(lowfreq::grid_interpolate(h, 5.0) == complex<double>(0.0, 0.0));

    CHECK_THROWS_AS(lowfreq::make_grid(0.0, 0.5), InvalidParameter);
    CHECK_THROWS_AS(lowfreq::make_grid(2.0, -0.1), InvalidParameter);
}

TEST_CASE("gaussian_convolve: zero input, closed-form Gaussian, edge guard") {
    auto z = lowfreq::make_grid(5.0, 0.1);
    for (const auto& v : lowfreq::gaussian_convolve(z, cfg).values)
        CHECK(std::abs(v) < 1e-14);

    // (1/sqrt(2 pi)) (e^{-x^2} * e^{-y^2}) = (1/2) e^{-x^2/2}.
    const auto g = sampled(funcspec::gaussian_translate(0.0), 10.0, 0.01);
    const auto conv = lowfreq::gaussian_convolve(g, cfg);
    for (double x : {0.0, 0.5, -1.7, 3.0}) {
        const auto v = lowfreq::grid_interpolate(conv, x);
        CHECK(v.real() == doctest::Approx(0.5 * std::exp(-x * x / 2.0)).epsilon(1e-4));
        CHECK(std::abs(v.imag()) < 1e-12);
    }

    const auto tight = sampled(funcspec::gaussian_translate(0.0), 1.0, 0.01);
    CHECK_THROWS_AS(lowfreq::gaussian_convolve(tight, cfg), EdgeLeakage);
}

TEST_CASE("gaussian_convolve serial and parallel agree exactly") {
    const auto g = sampled(TargetFunction::parse("exp(-x^2)*cos(3*x)"), 9.0, 0.05);
    const auto a = lowfreq::gaussian_convolve(g, cfg, Exec::serial);
    const auto b = lowfreq::gaussian_convolve(g, cfg, Exec::parallel);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("fit_lowfreq: zero target and guards") {
    const auto c = lowfreq::fit_lowfreq(TargetFunction::parse("0*chi(0,1)"), 3, 0.1, cfg);
    for (int n = 0; n <= 3; ++n) {
        CHECK(c.a_re[n].to_double() == 0.0);
        CHECK(c.a_im[n].to_double() == 0.0);
    }
    CHECK(c.max_frequency == doctest::Approx(0.3));
    CHECK_THROWS_AS(lowfreq::fit_lowfreq(TargetFunction::parse("chi(0,1)"), 3, 0.0, cfg),
                    ZeroStep);
    CHECK_THROWS_AS(lowfreq::fit_lowfreq(TargetFunction::parse("chi(0,1)"), -1, 0.1, cfg),
                    InvalidParameter);
}

TEST_CASE("fit_lowfreq: narrow-spectrum even target fits in the weighted norm") {
    // f(s) = (1/sqrt 2) e^{-s^2/4}: its inverse transform convolved with the
    // Gaussian is (1/2) e^{-x^2/2}, well inside the reach of six translates.
    const auto f = TargetFunction::from_function(gauss_hat, Support::whole(), {},
                                                 funcspec::Decay::gaussian);
    const lowfreq::GridOptions grid{12.0, 0.02};
    const auto c = lowfreq::fit_lowfreq(f, 5, 0.1, cfg, grid);
    CHECK(c.digits >= 50);
    for (int n = 0; n <= 5; ++n) CHECK(std::abs(c.a_im[n].to_double()) < 1e-6);  // real target
    const double werr = lowfreq::weighted_fit_error(f, c, cfg);
    const double norm = std::sqrt(0.5 * std::sqrt(2.0 * kPi / 3.0));  // ||f||_G
    CHECK(werr < 0.05);
    CHECK(werr < 0.1 * norm);
}

TEST_CASE("weighted error is controlled by the time-domain fit error") {
    // Modulated version of the target above; the weighted mismatch stays
    // below sqrt(2) x the L2 distance between f_2 and the Gaussian sum.
    const double c0 = 0.2;
    const auto f = TargetFunction::from_complex_function(
        [c0](double s) { return std::polar(gauss_hat(s), -c0 * s); }, Support::whole(), {},
        funcspec::Decay::gaussian);
    const lowfreq::GridOptions grid{12.0, 0.02};
    const auto c = lowfreq::fit_lowfreq(f, 5, 0.1, cfg, grid);
    const double werr = lowfreq::weighted_fit_error(f, c, cfg);
    CHECK(werr < 0.05);

    const auto f2 = TargetFunction::from_function(
        [c0](double x) { return 0.5 * std::exp(-(x - c0) * (x - c0) / 2.0); }, Support::whole(),
        {}, funcspec::Decay::gaussian);
    gaussfit::GaussianCombination re;
    re.t = c.t;
    re.digits = c.digits;
    re.a = c.a_re;
    CHECK(werr <= std::sqrt(2.0) * gaussfit::l2_fit_error(f2, re, cfg) + 1e-6);
}

TEST_CASE("weighted_fit_error: pure exponential in the span is exact") {
    const double t = 0.1;
    const int n0 = 2;
    const auto f = TargetFunction::from_complex_function(
        [t](double s) { return std::polar(1.0, -n0 * t * s); }, Support::whole(), {},
        funcspec::Decay::unknown);
    lowfreq::TrigCombination c;
    c.t = t;
    c.N = 4;
    c.digits = 50;
    c.a_re.assign(5, BigReal(50));
    c.a_im.assign(5, BigReal(50));
    c.a_re[n0] = BigReal(1.0, 50);
    c.max_frequency = c.N * t;
    CHECK(lowfreq::weighted_fit_error(f, c, cfg) < 1e-10);
}

TEST_CASE("fit_sincos: in-span cosine, low N") {
    // cos(x) on [-pi/2, pi/2] with N t = 1 < omega. Larger N amplifies the
    // 1/t^n divided differences faster than the extra translates help, so
    // N = 3 is the sweet spot for this target.
    const auto f = TargetFunction::parse("cos(x)");
    const lowfreq::GridOptions grid{15.0, 0.01};
    const auto sc = lowfreq::fit_sincos(f, -kPi / 2, kPi / 2, 3, 1.0 / 3.0, 1.5, cfg, grid);
    const double norm = std::sqrt(kPi / 2.0);  // ||cos||_2 on [-pi/2, pi/2]
    CHECK(sc.error < 0.3 * norm);
    CHECK(sc.error > 0.0);
    CHECK(sc.combo.max_frequency == doctest::Approx(1.0));
    for (int n = 0; n <= 3; ++n)  // even real target: cosine coefficients only
        CHECK(std::abs(sc.combo.a_im[n].to_double()) < 1e-6);
    CHECK(std::isfinite(sc.weighted_error));
}

TEST_CASE("fit_sincos: guards") {
    const auto f = TargetFunction::parse("cos(x)");
    CHECK_THROWS_AS(lowfreq::fit_sincos(f, 1.0, -1.0, 3, 0.1, 1.0, cfg), InvalidDomain);
    CHECK_THROWS_AS(lowfreq::fit_sincos(f, -1.0, 1.0, 3, 0.0, 1.0, cfg), ZeroStep);
    CHECK_THROWS_AS(lowfreq::fit_sincos(f, -1.0, 1.0, -2, 0.1, 1.0, cfg), InvalidParameter);
    CHECK_THROWS_AS(lowfreq::fit_sincos(f, -1.0, 1.0, 10, 0.1, 1.0, cfg), FrequencyBound);
    CHECK_THROWS_AS(lowfreq::fit_cosine_even(f, -1.0, 3, 0.1, 1.0, cfg), InvalidDomain);
}

TEST_CASE("fit_cosine_even: parabola on the unit interval") {
    const auto f = TargetFunction::parse("1 - x^2");
    const lowfreq::GridOptions grid{25.0, 0.02};
    const auto cf = lowfreq::fit_cosine_even(f, 1.0, 2, 0.3, 1.0, cfg, grid);
    const double norm = std::sqrt(8.0 / 15.0);  // ||1 - x^2||_2 on [0, 1]
    CHECK(cf.error < 0.15 * norm);

    // The even extension is fitted by an even sum, so the cosine error is the
    // two-sided error over sqrt(2).
    const auto even = TargetFunction::from_function(
        [](double x) { return std::abs(x) <= 1.0 ? 1.0 - x * x : 0.0; },
        Support::interval(-1.0, 1.0), {-1.0, 1.0}, funcspec::Decay::compact);
    const auto sc = lowfreq::fit_sincos(even, -1.0, 1.0, 2, 0.3, 1.0, cfg, grid);
    CHECK(cf.error == doctest::Approx(sc.error / std::sqrt(2.0)).epsilon(1e-2));
    for (double x : {0.2, 0.8})
        CHECK(cf.combo.eval_cos_part(x) == doctest::Approx(sc.combo.eval(x).real()).epsilon(1e-6));
}

TEST_CASE("fit_lowfreq serial and parallel agree exactly") {
    const auto f = TargetFunction::from_function(gauss_hat, Support::whole(), {},
                                                 funcspec::Decay::gaussian);
    const lowfreq::GridOptions grid{10.0, 0.05};
    const auto a = lowfreq::fit_lowfreq(f, 4, 0.1, cfg, grid, Exec::serial);
    const auto b = lowfreq::fit_lowfreq(f, 4, 0.1, cfg, grid, Exec::parallel);
    for (int n = 0; n <= 4; ++n) {
        CHECK(a.a_re[n].to_double() == b.a_re[n].to_double());
        CHECK(a.a_im[n].to_double() == b.a_im[n].to_double());
    }
}
