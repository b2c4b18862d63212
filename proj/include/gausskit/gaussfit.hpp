#pragma once

#include <optional>
#include <vector>

#include "gausskit/bigreal.hpp"
#include "gausskit/funcspec.hpp"
#include "gausskit/hermite.hpp"
#include "gausskit/parallel.hpp"
#include "gausskit/quadrature.hpp"

namespace gausskit::gaussfit {

using funcspec::TargetFunction;
using hermite::HermiteCoefficients;
using numerics::QuadratureConfig;

// x |-> sum_n a_n e^{-(x - n t)^2}.
//
// The a_n scale like 1/t^N and evaluation cancels almost all of that
// magnitude, so coefficients are kept in extended precision and the sum is
// evaluated there; doubles would lose the result entirely for small t.
// The (sign, log10) view backs the CSV export format.
struct GaussianCombination {
    double t = 1.0;
    std::vector<BigReal> a;
    int digits = 50;

    // fit() provenance, for reporting.
    std::vector<double> b_used;
    std::optional<double> truncation_M;

    int order() const { return static_cast<int>(a.size()) - 1; }
    int coeff_sign(int n) const { return a[n].sign(); }
    double coeff_log10(int n) const { return a[n].log10_abs(); }
    double coeff_value(int n) const;  // +-inf when outside double range
};

// Working precision that survives the 1/t^n growth plus guard digits.
int suggested_digits(int N, double t);

// a_k = sum_{n=k}^{N} b_n (-1)^k binom(n,k) / t^n.
GaussianCombination bn_to_an(const HermiteCoefficients& b, double t);

// compute_bn then bn_to_an.
GaussianCombination fit(const TargetFunction& f, int N, double t, const QuadratureConfig& cfg,
                        Exec exec = Exec::parallel);

double eval_combo(const GaussianCombination& c, double x);

// ||f - combo||_2 over [min(-tail, support_lo, Nt-tail), max(tail, Nt+tail)].
double l2_fit_error(const TargetFunction& f, const GaussianCombination& c,
                    const QuadratureConfig& cfg);

// Dirac-impulse view: the combination as weights sqrt(pi) a_n at times n t,
// to be fed through the Gaussian filter G(x) = e^{-x^2} / sqrt(pi).
struct ImpulseTrain {
    std::vector<double> times;
    std::vector<BigReal> weights;
    double load_time = 0.0;
    GaussianCombination combo;
};

// Chooses t = tau / (N+1) so max(times) < tau strictly.
ImpulseTrain impulse_synthesis(const TargetFunction& f, int N, double tau,
                               const QuadratureConfig& cfg, Exec exec = Exec::parallel);

// sum_n w_n G(x - times_n); equals eval_combo of the underlying combination.
double eval_filtered_train(const ImpulseTrain& train, double x);

}  // namespace gausskit::gaussfit
