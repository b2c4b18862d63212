#include "gausskit/hermite.hpp"

#include <cmath>
#include <numbers>

#include "gausskit/kahan.hpp"

namespace gausskit::hermite {

namespace {

constexpr double kQuarterLogPi = 0.25 * 1.1447298858494002;  // log(pi)/4

}  // namespace

double hermite_poly(int n, double x) {
    if (n < 0) throw InvalidParameter("hermite_poly: n >= 0 required");
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double p2 = 2.0 * x * p1 - 2.0 * k * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double normalized_hermite(int n, double x) {
    if (n < 0) throw InvalidParameter("normalized_hermite: n >= 0 required");
    double p0 = std::exp(-kQuarterLogPi);  // pi^{-1/4}
    if (n == 0) return p0;
    double p1 = std::sqrt(2.0) * x * p0;
    for (int k = 1; k < n; ++k) {
        const double p2 = std::sqrt(2.0 / (k + 1)) * x * p1 - std::sqrt(double(k) / (k + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::vector<double> normalized_hermite_row(int N, double x) {
    std::vector<double> row(static_cast<std::size_t>(N) + 1);
    row[0] = std::exp(-kQuarterLogPi);
    if (N >= 1) row[1] = std::sqrt(2.0) * x * row[0];
    for (int k = 1; k < N; ++k)
        row[k + 1] = std::sqrt(2.0 / (k + 1)) * x * row[k] - std::sqrt(double(k) / (k + 1)) * row[k - 1];
    return row;
}

double hermite_function(int n, double x) {
    return normalized_hermite(n, x) * std::exp(-0.5 * x * x);
}

double log_norm_const(int n) {
    return 0.5 * (std::lgamma(n + 1.0) + n * std::numbers::ln2 + 0.5 * std::log(std::numbers::pi));
}

double gaussian_derivative(int n, double x) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * normalized_hermite(n, x) * std::exp(log_norm_const(n) - x * x);
}

double gaussian_derivative_bound(int n, double tail_cutoff) {
    const int samples = 4000;
    double best = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double x = -tail_cutoff + 2.0 * tail_cutoff * i / samples;
        best = std::max(best, std::abs(gaussian_derivative(n, x)));
    }
    return 1.05 * best;
}

namespace {

// L2 mass of f outside [-M, M].
double discarded_mass(const TargetFunction& f, double M, const QuadratureConfig& cfg) {
    using namespace numerics;
    const double tail = cfg.tail_cutoff;
    if (M >= tail) return 0.0;
    auto sq = [&f](double x) {
        const double v = f.evaluate(x);
        return v * v;
    };
    const double left = integrate(sq, Interval{-tail, -M}, cfg, f.breakpoints());
    const double right = integrate(sq, Interval{M, tail}, cfg, f.breakpoints());
    return std::sqrt(std::max(0.0, left + right));
}

}  // namespace

HermiteCoefficients compute_bn(const TargetFunction& f, int N, const QuadratureConfig& cfg,
                               Exec exec) {
    if (N < 0) throw InvalidParameter("compute_bn: N >= 0 required");
    using namespace numerics;

    // Decide the integration window and whether truncation is real.
    Domain domain = whole_line();
    std::optional<double> truncation;
    const auto& sup = f.support();
    if (sup.kind == funcspec::Support::Kind::empty) {
        HermiteCoefficients out;
        out.b.assign(static_cast<std::size_t>(N) + 1, 0.0);
        return out;
    }
    if (sup.bounded()) {
        domain = Interval{sup.lo, sup.hi};
    } else if (!f.decays_for_hermite()) {
        double M = 1.0;
        while (M < cfg.tail_cutoff && discarded_mass(f, M, cfg) >= cfg.abs_tol) M *= 2.0;
        M = std::min(M, cfg.tail_cutoff);
        truncation = M;
        domain = Interval{-M, M};
    }

    HermiteCoefficients out;
    out.truncation_M = truncation;
    out.b.assign(static_cast<std::size_t>(N) + 1, 0.0);

    for_each_index(static_cast<std::size_t>(N) + 1, exec, [&](std::size_t n) {
        auto integrand = [&f, n](double x) {
            const double fv = f.evaluate(x);
            if (fv == 0.0) return 0.0;
            return fv * normalized_hermite(static_cast<int>(n), x);
        };
        const double I = integrate(integrand, domain, cfg, f.breakpoints());
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        out.b[n] = sign * I * std::exp(-log_norm_const(static_cast<int>(n)));
    });
    return out;
}

double eval_hermite_expansion(const HermiteCoefficients& coeffs, double x) {
    const int N = coeffs.order();
    const auto row = normalized_hermite_row(N, x);
    KahanAccumulator<double> sum;
    for (int n = 0; n <= N; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += coeffs.b[n] * row[n] * sign * std::exp(log_norm_const(n) - x * x);
    }
    return sum;
}

}  // namespace gausskit::hermite
