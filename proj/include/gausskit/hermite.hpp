#pragma once

#include <optional>
#include <vector>

#include "gausskit/funcspec.hpp"
#include "gausskit/parallel.hpp"
#include "gausskit/quadrature.hpp"

namespace gausskit::hermite {

using funcspec::TargetFunction;
using numerics::QuadratureConfig;

// Physicists' Hermite polynomial H_n(x), three-term recurrence.
double hermite_poly(int n, double x);

// Orthonormal Hermite function h_n(x) = H_n(x) e^{-x^2/2} / sqrt(n! 2^n sqrt(pi)),
// evaluated by the normalized recurrence (no overflow for large n).
double hermite_function(int n, double x);

// Hhat_n(x) = H_n(x) / sqrt(n! 2^n sqrt(pi)) = h_n(x) e^{x^2/2}.
double normalized_hermite(int n, double x);

// All of Hhat_0..Hhat_N at one x in a single sweep.
std::vector<double> normalized_hermite_row(int N, double x);

// log( sqrt(n! 2^n sqrt(pi)) ), the orthonormalization constant.
double log_norm_const(int n);

// d^n/dx^n e^{-x^2} = (-1)^n H_n(x) e^{-x^2}, evaluated through the
// normalized recurrence so n up to ~200 stays in range.
double gaussian_derivative(int n, double x);

// Grid bound on max_x |d^n/dx^n e^{-x^2}| with a 5% safety factor.
double gaussian_derivative_bound(int n, double tail_cutoff = 30.0);

// Expansion weights of f in derivatives of the Gaussian, with the truncation
// radius that was applied (absent when f e^{x^2/2} is square-integrable).
struct HermiteCoefficients {
    std::vector<double> b;
    std::optional<double> truncation_M;

    int order() const { return static_cast<int>(b.size()) - 1; }
};

// b_n = (-1)^n / (n! 2^n sqrt(pi)) * integral of f * chi_[-M,M] * H_n.
// M comes from the support when bounded, is absent for sufficiently decaying
// whole-line f, and otherwise grows by doubling until the discarded L2 mass
// falls below cfg.abs_tol.
HermiteCoefficients compute_bn(const TargetFunction& f, int N, const QuadratureConfig& cfg,
                               Exec exec = Exec::parallel);

// Partial sum  sum_n b_n d^n/dx^n e^{-x^2}  at x (compensated).
double eval_hermite_expansion(const HermiteCoefficients& coeffs, double x);

}  // namespace gausskit::hermite
