#include "gausskit/lowfreq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gausskit/errors.hpp"
#include "gausskit/gaussfit.hpp"
#include "gausskit/kahan.hpp"

namespace gausskit::lowfreq {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143268;  // 1/sqrt(2 pi)

// Period boundaries of e^{i freq u} inside [lo, hi]; empty when the count
// would be useless (too few) or wasteful (huge) -- adaptivity covers those.
std::vector<double> osc_breakpoints(double freq, double lo, double hi) {
    std::vector<double> out;
    const double af = std::abs(freq);
    if (af < 1e-12) return out;
    const double period = 2.0 * std::numbers::pi / af;
    const double count = (hi - lo) / period;
    if (count < 4.0 || count > 2000.0) return out;
    for (long long k = static_cast<long long>(std::ceil(lo / period));
         k * period < hi; ++k)
        out.push_back(k * period);
    return out;
}

std::complex<double> transform_impl(const TargetFunction& f, double s, int sign,
                                    const QuadratureConfig& cfg) {
    const auto& sup = f.support();
    if (sup.kind == funcspec::Support::Kind::empty) return {0.0, 0.0};

    numerics::Domain domain = numerics::whole_line();
    double lo = -cfg.tail_cutoff, hi = cfg.tail_cutoff;
    if (sup.kind == funcspec::Support::Kind::bounded) {
        domain = numerics::Interval{sup.lo, sup.hi};
        lo = sup.lo;
        hi = sup.hi;
    }
    std::vector<double> splits = osc_breakpoints(s, lo, hi);
    splits.insert(splits.end(), f.breakpoints().begin(), f.breakpoints().end());

    auto integrand = [&f, s, sign](double x) {
        const std::complex<double> fv = f.evaluate_complex(x);
        if (fv == std::complex<double>(0.0, 0.0)) return fv;
        return fv * std::polar(1.0, sign * s * x);
    };
    return kInvSqrt2Pi * numerics::integrate_complex(integrand, domain, cfg, splits);
}

}  // namespace

GridFunction make_grid(double half_width, double spacing) {
    if (half_width <= 0.0 || spacing <= 0.0)
        throw InvalidParameter("make_grid: half_width and spacing must be positive");
    const auto count = static_cast<std::size_t>(std::llround(2.0 * half_width / spacing));
    if (count < 2) throw InvalidParameter("make_grid: grid has fewer than 3 points");
    GridFunction g;
    g.spacing = spacing;
    g.xs.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) g.xs.push_back(-half_width + double(i) * spacing);
    g.values.assign(count + 1, {0.0, 0.0});
    return g;
}

std::complex<double> grid_interpolate(const GridFunction& g, double x) {
    if (g.xs.empty() || x < g.xs.front() || x > g.xs.back()) return {0.0, 0.0};
    const double pos = (x - g.xs.front()) / g.spacing;
    auto i = static_cast<std::size_t>(pos);
    if (i >= g.xs.size() - 1) i = g.xs.size() - 2;
    const double w = (x - g.xs[i]) / g.spacing;
    return (1.0 - w) * g.values[i] + w * g.values[i + 1];
}

std::complex<double> fourier_transform(const TargetFunction& f, double s,
                                       const QuadratureConfig& cfg) {
    return transform_impl(f, s, -1, cfg);
}

std::complex<double> inverse_fourier_transform(const TargetFunction& f, double x,
                                               const QuadratureConfig& cfg) {
    return transform_impl(f, x, +1, cfg);
}

std::complex<double> fourier_transform(const GridFunction& g, double s) {
    KahanAccumulator<double> re, im;
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
        const double w = (i == 0 || i + 1 == g.xs.size()) ? 0.5 : 1.0;
        const std::complex<double> term = w * g.values[i] * std::polar(1.0, -s * g.xs[i]);
        re += term.real();
        im += term.imag();
    }
    return kInvSqrt2Pi * g.spacing * std::complex<double>(re, im);
}

GridFunction inverse_transform_grid(const TargetFunction& f, double half_width, double spacing,
                                    const QuadratureConfig& cfg, Exec exec) {
    GridFunction g = make_grid(half_width, spacing);
    for_each_index(g.xs.size(), exec,
                   [&](std::size_t i) { g.values[i] = inverse_fourier_transform(f, g.xs[i], cfg); });
    return g;
}

GridFunction gaussian_convolve(const GridFunction& g, const QuadratureConfig& cfg, Exec exec) {
    if (g.xs.size() < 2) throw InvalidParameter("gaussian_convolve: grid too small");
    // Truncating the convolution at the grid edge perturbs the result by the
    // order of the edge magnitude, so judge it relative to the peak.
    double gmax = 0.0;
    for (const auto& v : g.values) gmax = std::max(gmax, std::abs(v));
    const double edge_tol = std::max(cfg.abs_tol, 1e-2 * gmax);
    if (std::abs(g.values.front()) > edge_tol || std::abs(g.values.back()) > edge_tol)
        throw EdgeLeakage("gaussian_convolve: samples at the grid edges exceed 1% of the "
                          "peak; enlarge the grid half-width");

    // e^{-v^2} below 1e-32 outside |v| <= 9: segments farther than that from
    // the output point contribute nothing at working tolerance.
    constexpr double kWindow = 9.0;
    const double h = g.spacing;
    const double sqrt_pi_half = 0.5 * std::sqrt(std::numbers::pi);

    GridFunction out = g;
    for_each_index(g.xs.size(), exec, [&](std::size_t i) {
        const double x = g.xs[i];
        KahanAccumulator<double> re, im;
        double erf_hi = 0.0, exp_hi = 0.0;
        bool carry = false;
        for (std::size_t j = 0; j + 1 < g.xs.size(); ++j) {
            const double y0 = g.xs[j], y1 = g.xs[j + 1];
            if (y1 < x - kWindow || y0 > x + kWindow) {
                carry = false;
                continue;
            }
            const double a = y0 - x, b = y1 - x;
            const double erf_lo = carry ? erf_hi : std::erf(a);
            const double exp_lo = carry ? exp_hi : std::exp(-a * a);
            erf_hi = std::erf(b);
            exp_hi = std::exp(-b * b);
            carry = true;

            // Linear interpolant alpha + beta y on [y0, y1]; the segment
            // integral of (alpha + beta y) e^{-(x-y)^2} in closed form.
            const std::complex<double> beta = (g.values[j + 1] - g.values[j]) / h;
            const std::complex<double> alpha = g.values[j] - beta * y0;
            const std::complex<double> term =
                (alpha + beta * x) * (sqrt_pi_half * (erf_hi - erf_lo)) -
                0.5 * beta * (exp_hi - exp_lo);
            re += term.real();
            im += term.imag();
        }
        out.values[i] = kInvSqrt2Pi * std::complex<double>(re, im);
    });
    return out;
}

std::complex<double> TrigCombination::eval(double s) const {
    BigReal re(digits), im(digits);
    const BigReal arg_step = BigReal(t, digits) * BigReal(s, digits);
    for (int n = 0; n <= N; ++n) {
        const BigReal theta = BigReal(double(n), digits) * arg_step;
        const BigReal c = cos(theta), si = sin(theta);
        re += a_re[n] * c + a_im[n] * si;
        im += a_im[n] * c - a_re[n] * si;
    }
    return {re.to_double(), im.to_double()};
}

double TrigCombination::eval_cos_part(double s) const {
    BigReal re(digits);
    const BigReal arg_step = BigReal(t, digits) * BigReal(s, digits);
    for (int n = 0; n <= N; ++n) re += a_re[n] * cos(BigReal(double(n), digits) * arg_step);
    return re.to_double();
}

TrigCombination fit_lowfreq(const TargetFunction& f, int N, double t, const QuadratureConfig& cfg,
                            const GridOptions& grid, Exec exec) {
    if (t == 0.0) throw ZeroStep("fit_lowfreq: t must be nonzero");
    if (N < 0) throw InvalidParameter("fit_lowfreq: N >= 0 required");

    const GridFunction f2 =
        gaussian_convolve(inverse_transform_grid(f, grid.half_width, grid.spacing, cfg, exec),
                          cfg, exec);

    const auto sup = funcspec::Support::interval(-grid.half_width, grid.half_width);
    auto part = [&](bool real_part) {
        // Grid nodes as breakpoints: between nodes the integrands are
        // polynomials, which the panel rule integrates exactly.
        auto fn = funcspec::TargetFunction::from_function(
            [f2, real_part](double x) {
                const std::complex<double> v = grid_interpolate(f2, x);
                return real_part ? v.real() : v.imag();
            },
            sup, f2.xs, funcspec::Decay::compact);
        return gaussfit::fit(fn, N, t, cfg, exec);
    };
    const gaussfit::GaussianCombination cre = part(true);
    const gaussfit::GaussianCombination cim = part(false);

    TrigCombination out;
    out.t = t;
    out.N = N;
    out.digits = cre.digits;
    out.a_re = cre.a;
    out.a_im = cim.a;
    out.max_frequency = N * t;
    return out;
}

double weighted_fit_error(const TargetFunction& f, const TrigCombination& c,
                          const QuadratureConfig& cfg) {
    auto integrand = [&](double s) {
        const std::complex<double> d = f.evaluate_complex(s) - c.eval(s);
        return std::norm(d) * std::exp(-s * s);
    };
    const double I = numerics::integrate(integrand, numerics::whole_line(), cfg, f.breakpoints());
    return std::sqrt(std::max(0.0, I));
}

SinCosFit fit_sincos(const TargetFunction& f, double lo, double hi, int N, double t, double omega,
                     const QuadratureConfig& cfg, const GridOptions& grid, Exec exec) {
    if (lo >= hi) throw InvalidDomain("fit_sincos: need lo < hi");
    if (N < 0) throw InvalidParameter("fit_sincos: N >= 0 required");
    if (t == 0.0) throw ZeroStep("fit_sincos: t must be nonzero");
    if (N * std::abs(t) >= omega)
        throw FrequencyBound("fit_sincos: max frequency N*t = " +
                             std::to_string(N * std::abs(t)) + " is not below omega = " +
                             std::to_string(omega));

    std::vector<double> bps = f.breakpoints();
    bps.push_back(lo);
    bps.push_back(hi);
    auto restricted = funcspec::TargetFunction::from_function(
        [f, lo, hi](double x) { return (x >= lo && x < hi) ? f.evaluate(x) : 0.0; },
        funcspec::Support::interval(lo, hi), bps, funcspec::Decay::compact);

    SinCosFit fit;
    fit.lo = lo;
    fit.hi = hi;
    fit.combo = fit_lowfreq(restricted, N, t, cfg, grid, exec);

    auto diff = [&](double x) {
        const double d = f.evaluate(x) - fit.combo.eval(x).real();
        return d * d;
    };
    const double I =
        numerics::integrate(diff, numerics::Interval{lo, hi}, cfg, f.breakpoints());
    fit.error = std::sqrt(std::max(0.0, I));
    fit.weighted_error = weighted_fit_error(restricted, fit.combo, cfg);
    return fit;
}

CosineFit fit_cosine_even(const TargetFunction& f, double b, int N, double t, double omega,
                          const QuadratureConfig& cfg, const GridOptions& grid, Exec exec) {
    if (b <= 0.0) throw InvalidDomain("fit_cosine_even: b > 0 required");

    auto even = funcspec::TargetFunction::from_function(
        [f, b](double x) {
            const double ax = std::abs(x);
            return ax <= b ? f.evaluate(ax) : 0.0;
        },
        funcspec::Support::interval(-b, b), {-b, 0.0, b}, funcspec::Decay::compact);

    const SinCosFit sc = fit_sincos(even, -b, b, N, t, omega, cfg, grid, exec);

    CosineFit fit;
    fit.combo = sc.combo;
    fit.b = b;
    auto diff = [&](double x) {
        const double d = f.evaluate(x) - fit.combo.eval_cos_part(x);
        return d * d;
    };
    const double I = numerics::integrate(diff, numerics::Interval{0.0, b}, cfg, f.breakpoints());
    fit.error = std::sqrt(std::max(0.0, I));
    return fit;
}

}  // namespace gausskit::lowfreq
