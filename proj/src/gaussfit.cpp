#include "gausskit/gaussfit.hpp"

#include <algorithm>
#include <cmath>

#include "gausskit/errors.hpp"

namespace gausskit::gaussfit {

double GaussianCombination::coeff_value(int n) const { return a[n].to_double(); }

int suggested_digits(int N, double t) {
    if (t == 0.0) throw ZeroStep("suggested_digits: t must be nonzero");
    const double growth = std::abs(t) < 1.0 ? N * std::log10(1.0 / std::abs(t)) : 0.0;
    return std::max(50, static_cast<int>(std::ceil(growth)) + 30);
}

GaussianCombination bn_to_an(const HermiteCoefficients& b, double t) {
    if (t == 0.0) throw ZeroStep("bn_to_an: t must be nonzero");
    const int N = b.order();
    const int digits = suggested_digits(N, t);

    GaussianCombination out;
    out.t = t;
    out.digits = digits;
    out.b_used = b.b;
    out.truncation_M = b.truncation_M;
    out.a.assign(static_cast<std::size_t>(N) + 1, BigReal(digits));

    // Powers of 1/t.
    std::vector<BigReal> inv_t_pow(static_cast<std::size_t>(N) + 1, BigReal(digits));
    inv_t_pow[0] = BigReal(1.0, digits);
    const BigReal inv_t = BigReal(1.0, digits) / BigReal(t, digits);
    for (int n = 1; n <= N; ++n) inv_t_pow[n] = inv_t_pow[n - 1] * inv_t;

    // binom[k] tracks C(n, k) while n grows (Pascal's rule, exact in mpfr
    // well past any practical N).
    std::vector<BigReal> binom(static_cast<std::size_t>(N) + 1, BigReal(digits));
    for (int n = 0; n <= N; ++n) {
        for (int k = n; k >= 1; --k) binom[k] = binom[k] + binom[k - 1];
        binom[n] = BigReal(1.0, digits);
        const BigReal bn = BigReal(b.b[n], digits) * inv_t_pow[n];
        for (int k = 0; k <= n; ++k) {
            const BigReal term = bn * binom[k];
            if (k % 2 == 0)
                out.a[k] += term;
            else
                out.a[k] -= term;
        }
    }
    return out;
}

GaussianCombination fit(const TargetFunction& f, int N, double t, const QuadratureConfig& cfg,
                        Exec exec) {
    return bn_to_an(hermite::compute_bn(f, N, cfg, exec), t);
}

double eval_combo(const GaussianCombination& c, double x) {
    const int digits = c.digits;
    BigReal sum(digits);
    const BigReal bx(x, digits);
    const BigReal bt(c.t, digits);
    for (std::size_t n = 0; n < c.a.size(); ++n) {
        const BigReal d = bx - BigReal(double(n), digits) * bt;
        sum += c.a[n] * exp(-(d * d));
    }
    return sum.to_double();
}

double l2_fit_error(const TargetFunction& f, const GaussianCombination& c,
                    const QuadratureConfig& cfg) {
    const double span = c.order() * c.t;
    double lo, hi;
    const auto& sup = f.support();
    if (sup.bounded()) {
        // Every Gaussian translate is below 1e-31 eight-and-a-half units from
        // its center; clipping there loses nothing at double precision.
        const double window = 8.5;
        lo = std::min(sup.lo, std::min(0.0, span)) - window;
        hi = std::max(sup.hi, std::max(0.0, span)) + window;
    } else {
        const double tail = cfg.tail_cutoff;
        lo = std::min(-tail, std::min(0.0, span) - tail);
        hi = std::max(tail, std::max(0.0, span) + tail);
    }
    auto diff = [&](double x) {
        const double d = f.evaluate(x) - eval_combo(c, x);
        return d * d;
    };
    const double I = numerics::integrate(diff, numerics::Interval{lo, hi}, cfg, f.breakpoints());
    return std::sqrt(std::max(0.0, I));
}

ImpulseTrain impulse_synthesis(const TargetFunction& f, int N, double tau,
                               const QuadratureConfig& cfg, Exec exec) {
    if (N < 0) throw InvalidParameter("impulse_synthesis: N >= 0 required");
    if (tau <= 0.0) throw InvalidParameter("impulse_synthesis: tau > 0 required");

    // All impulse times n t, n <= N, land strictly before the load time tau.
    const double t = tau / (N + 1);
    ImpulseTrain train;
    train.load_time = tau;
    train.combo = fit(f, N, t, cfg, exec);

    const int digits = train.combo.digits;
    const BigReal sqrt_pi = sqrt(BigReal::pi(digits));
    train.times.reserve(N + 1);
    train.weights.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        train.times.push_back(n * t);
        train.weights.push_back(sqrt_pi * train.combo.a[n]);
    }
    return train;
}

double eval_filtered_train(const ImpulseTrain& train, double x) {
    const int digits = train.combo.digits;
    const BigReal inv_sqrt_pi = BigReal(1.0, digits) / sqrt(BigReal::pi(digits));
    BigReal sum(digits);
    for (std::size_t n = 0; n < train.weights.size(); ++n) {
        const BigReal d = BigReal(x - train.times[n], digits);
        sum += train.weights[n] * exp(-(d * d)) * inv_sqrt_pi;
    }
    return sum.to_double();
}

}  // namespace gausskit::gaussfit
