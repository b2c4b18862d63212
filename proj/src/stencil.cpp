#include "gausskit/stencil.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

#include "gausskit/bigreal.hpp"
#include "gausskit/hermite.hpp"
#include "gausskit/kahan.hpp"

namespace gausskit::stencil {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_nodes(int k, const std::vector<Scalar>& nodes) {
    const int n = static_cast<int>(nodes.size()) - 1;
    if (n < 0) throw InvalidParameter("solve_stencil: need at least one node");
    if (k < 0 || k > n)
        throw OrderTooHigh("solve_stencil: derivative order " + std::to_string(k) +
                           " exceeds node count - 1 (" + std::to_string(n) + ")");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw DuplicateNodes("solve_stencil: nodes must be pairwise distinct");
}

std::vector<Scalar> solve_rational(int k, const std::vector<Scalar>& nodes) {
    const int n = static_cast<int>(nodes.size()) - 1;
    const int dim = n + 1;

    // Rows k_i^j / j!, augmented with e_k.
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(dim + 1, 0));
    Rational fact = 1;
    for (int j = 0; j < dim; ++j) {
        if (j > 0) fact *= j;
        for (int i = 0; i < dim; ++i) {
            Rational base(nodes[i].real());
            Rational p = 1;
            for (int e = 0; e < j; ++e) p *= base;
            aug[j][i] = p / fact;
        }
        aug[j][dim] = (j == k) ? 1 : 0;
    }

    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int r = col; r < dim; ++r)
            if (aug[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw Singular("solve_stencil: rational elimination hit zero column");
        std::swap(aug[piv], aug[col]);
        for (int r = col + 1; r < dim; ++r) {
            if (aug[r][col] == 0) continue;
            Rational factor = aug[r][col] / aug[col][col];
            for (int c = col; c <= dim; ++c) aug[r][c] -= factor * aug[col][c];
        }
    }
    std::vector<Rational> x(dim);
    for (int i = dim - 1; i >= 0; --i) {
        Rational s = aug[i][dim];
        for (int j = i + 1; j < dim; ++j) s -= aug[i][j] * x[j];
        x[i] = s / aug[i][i];
    }

    std::vector<Scalar> out(dim);
    for (int i = 0; i < dim; ++i) out[i] = Scalar(static_cast<double>(x[i]), 0.0);
    return out;
}

std::vector<Scalar> solve_extended(int k, const std::vector<Scalar>& nodes) {
    const int n = static_cast<int>(nodes.size()) - 1;
    const int dim = n + 1;
    const int digits = 100;  // 2x the default working precision

    std::vector<std::vector<BigComplex>> aug(
        dim, std::vector<BigComplex>(dim + 1, BigComplex(digits)));
    BigReal fact(1.0, digits);
    for (int j = 0; j < dim; ++j) {
        if (j > 0) fact *= BigReal(double(j), digits);
        for (int i = 0; i < dim; ++i) {
            BigComplex p(1.0, 0.0, digits);
            BigComplex base(nodes[i].real(), nodes[i].imag(), digits);
            for (int e = 0; e < j; ++e) p = p * base;
            aug[j][i] = {p.re / fact, p.im / fact};
        }
        aug[j][dim] = BigComplex(j == k ? 1.0 : 0.0, 0.0, digits);
    }

    for (int col = 0; col < dim; ++col) {
        int piv = col;
        BigReal best = aug[col][col].abs2();
        for (int r = col + 1; r < dim; ++r) {
            BigReal m = aug[r][col].abs2();
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best.is_zero()) throw Singular("solve_stencil: zero pivot");
        std::swap(aug[piv], aug[col]);
        for (int r = col + 1; r < dim; ++r) {
            BigComplex factor = aug[r][col] / aug[col][col];
            for (int c = col; c <= dim; ++c)
                aug[r][c] = aug[r][c] - factor * aug[col][c];
        }
    }
    std::vector<BigComplex> x(dim, BigComplex(digits));
    for (int i = dim - 1; i >= 0; --i) {
        BigComplex s = aug[i][dim];
        for (int j = i + 1; j < dim; ++j) s = s - aug[i][j] * x[j];
        x[i] = s / aug[i][i];
    }

    std::vector<Scalar> out(dim);
    for (int i = 0; i < dim; ++i) out[i] = Scalar(x[i].re.to_double(), x[i].im.to_double());
    return out;
}

}  // namespace

Stencil solve_stencil(int deriv_order, const std::vector<Scalar>& nodes) {
    check_nodes(deriv_order, nodes);
    const int n = static_cast<int>(nodes.size()) - 1;

    bool all_real = true;
    for (const auto& z : nodes)
        if (z.imag() != 0.0) all_real = false;

    Stencil s;
    s.deriv_order = deriv_order;
    s.nodes = nodes;
    s.coeffs = all_real ? solve_rational(deriv_order, nodes) : solve_extended(deriv_order, nodes);
    s.order_of_accuracy = n + 1 - deriv_order;
    return s;
}

Stencil backward_difference_stencil(int n) {
    if (n < 0) throw InvalidParameter("backward_difference_stencil: n >= 0 required");
    Stencil s;
    s.deriv_order = n;
    s.order_of_accuracy = 1;
    s.nodes.reserve(n + 1);
    s.coeffs.reserve(n + 1);
    double binom = 1.0;
    for (int i = 0; i <= n; ++i) {
        s.nodes.emplace_back(-double(i), 0.0);
        s.coeffs.emplace_back((i % 2 == 0 ? 1.0 : -1.0) * binom, 0.0);
        binom = binom * (n - i) / (i + 1);
    }
    return s;
}

Scalar apply_stencil(const Stencil& s, const std::function<Scalar(Scalar)>& g, double x,
                     double t) {
    if (t == 0.0) throw ZeroStep("apply_stencil: t must be nonzero");
    KahanAccumulator<double> re, im;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        const Scalar v = s.coeffs[i] * g(Scalar(x, 0.0) + s.nodes[i] * t);
        re += v.real();
        im += v.imag();
    }
    const double scale = std::pow(t, -s.deriv_order);
    return Scalar(re, im) * scale;
}

double apply_stencil(const Stencil& s, const numerics::RealFn& g, double x, double t) {
    if (!s.real_nodes())
        throw InvalidParameter("apply_stencil: complex nodes require a complex-analytic g");
    if (t == 0.0) throw ZeroStep("apply_stencil: t must be nonzero");
    KahanAccumulator<double> sum;
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
        sum += s.coeffs[i].real() * g(x + s.nodes[i].real() * t);
    return static_cast<double>(sum) * std::pow(t, -s.deriv_order);
}

double truncation_error_bound(const Stencil& s, double max_deriv, double t) {
    if (t == 0.0) throw ZeroStep("truncation_error_bound: t must be nonzero");
    if (max_deriv < 0) throw InvalidParameter("truncation_error_bound: max_deriv >= 0");
    const int n = static_cast<int>(s.nodes.size()) - 1;
    KahanAccumulator<double> sum;
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
        sum += std::abs(s.coeffs[i]) * std::pow(std::abs(s.nodes[i]), n + 1);
    return std::pow(std::abs(t), n + 1 - s.deriv_order) / std::tgamma(n + 2.0) * max_deriv *
           static_cast<double>(sum);
}

Scalar vandermonde_det(const std::vector<Scalar>& nodes) {
    const int n = static_cast<int>(nodes.size()) - 1;
    Scalar num(1.0, 0.0);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) num *= nodes[j] - nodes[i];
    double denom = 1.0;
    for (int i = 2; i <= n; ++i) denom *= std::tgamma(i + 1.0);
    return num / denom;
}

double divided_difference_l2_error(int n, double t, double p,
                                   const numerics::QuadratureConfig& cfg) {
    if (t == 0.0) throw ZeroStep("divided_difference_l2_error: t must be nonzero");
    if (p <= 0.0) throw InvalidParameter("divided_difference_l2_error: p > 0 required");
    if (n < 0) throw InvalidParameter("divided_difference_l2_error: n >= 0 required");

    const Stencil s = backward_difference_stencil(n);
    numerics::RealFn gauss = [](double x) { return std::exp(-x * x); };
    auto integrand = [&](double x) {
        const double approx = apply_stencil(s, gauss, x, t);
        const double exact = hermite::gaussian_derivative(n, x);
        return std::pow(std::abs(exact - approx), p);
    };
    // The 2^n/t^n coefficient scale amplifies double roundoff into noise of
    // that order in every integrand sample; tolerances below the resulting
    // floor are unattainable, not just slow.
    numerics::QuadratureConfig noisy = cfg;
    const double noise = 2e4 * 2.22e-16 * std::pow(2.0 / std::abs(t), n);
    noisy.abs_tol = std::max(cfg.abs_tol, noise);
    const double I = numerics::integrate(integrand, numerics::whole_line(), noisy);
    return std::pow(std::max(0.0, I), 1.0 / p);
}

}  // namespace gausskit::stencil
