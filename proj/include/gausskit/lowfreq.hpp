#pragma once

#include <complex>
#include <vector>

#include "gausskit/bigreal.hpp"
#include "gausskit/funcspec.hpp"
#include "gausskit/parallel.hpp"
#include "gausskit/quadrature.hpp"

namespace gausskit::lowfreq {

using funcspec::TargetFunction;
using numerics::QuadratureConfig;

// Complex-valued samples on a uniform grid.
struct GridFunction {
    std::vector<double> xs;
    std::vector<std::complex<double>> values;
    double spacing = 0.0;
};

GridFunction make_grid(double half_width, double spacing);

// Zero outside the grid, linear between samples.
std::complex<double> grid_interpolate(const GridFunction& g, double x);

// F[f](s) = (1/sqrt(2 pi)) integral of f(x) e^{-i s x} dx; the inverse uses
// e^{+i s x}. For large |s| the domain is pre-split at period boundaries.
std::complex<double> fourier_transform(const TargetFunction& f, double s,
                                       const QuadratureConfig& cfg);
std::complex<double> inverse_fourier_transform(const TargetFunction& f, double x,
                                               const QuadratureConfig& cfg);

// Trapezoid-rule transform of the sampled function (spectrally accurate for
// smooth samples decaying inside the grid).
std::complex<double> fourier_transform(const GridFunction& g, double s);

// F^{-1}[f] sampled on [-half_width, half_width].
GridFunction inverse_transform_grid(const TargetFunction& f, double half_width, double spacing,
                                    const QuadratureConfig& cfg, Exec exec = Exec::parallel);

// (1/sqrt(2 pi)) (e^{-x^2} * g)(x) on g's grid, by the per-segment erf
// closed form for the linear interpolant. Throws EdgeLeakage when |g| at the
// grid edges exceeds cfg.abs_tol (grid too small).
GridFunction gaussian_convolve(const GridFunction& g, const QuadratureConfig& cfg,
                               Exec exec = Exec::parallel);

// s |-> sum_n a_n e^{-i n t s}. Coefficients grow like 1/t^n, so they are
// kept in extended precision and partial sums are evaluated there.
struct TrigCombination {
    double t = 1.0;
    int N = 0;
    std::vector<BigReal> a_re, a_im;
    int digits = 50;
    double max_frequency = 0.0;  // N * t

    std::complex<double> eval(double s) const;
    // Even projection  sum_n Re(a_n) cos(n t s)  of the real part.
    double eval_cos_part(double s) const;
};

struct GridOptions {
    double half_width = 15.0;
    double spacing = 0.01;
};

// F^{-1}[f] on the grid, convolved with the Gaussian, then the real and
// imaginary parts fitted independently with translates of e^{-x^2}.
TrigCombination fit_lowfreq(const TargetFunction& f, int N, double t, const QuadratureConfig& cfg,
                            const GridOptions& grid = {}, Exec exec = Exec::parallel);

// || f - combination ||_{2,G} with weight G = e^{-s^2}.
double weighted_fit_error(const TargetFunction& f, const TrigCombination& c,
                          const QuadratureConfig& cfg);

struct SinCosFit {
    TrigCombination combo;
    double lo = 0.0, hi = 0.0;
    // L2([lo,hi]) distance of f to  sum_n cos_n cos(n t x) + sin_n sin(n t x),
    // where cos_n = Re(a_n) and sin_n = Im(a_n).
    double error = 0.0;
    // Same distance in the Gaussian-weighted norm, against f restricted to
    // [lo, hi).
    double weighted_error = 0.0;
};

// Real trigonometric fit on a finite interval; every frequency n t stays
// below omega (FrequencyBound otherwise).
SinCosFit fit_sincos(const TargetFunction& f, double lo, double hi, int N, double t, double omega,
                     const QuadratureConfig& cfg, const GridOptions& grid = {},
                     Exec exec = Exec::parallel);

struct CosineFit {
    TrigCombination combo;  // of the even extension
    double b = 0.0;
    double error = 0.0;  // L2([0,b]) distance of f to the cosine partial sum
};

// Even-extends f from [0,b] to [-b,b], runs fit_sincos, keeps the cosine part.
CosineFit fit_cosine_even(const TargetFunction& f, double b, int N, double t, double omega,
                          const QuadratureConfig& cfg, const GridOptions& grid = {},
                          Exec exec = Exec::parallel);

}  // namespace gausskit::lowfreq
