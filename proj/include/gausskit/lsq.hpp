#pragma once

#include <vector>

#include "gausskit/bigreal.hpp"
#include "gausskit/funcspec.hpp"
#include "gausskit/gaussfit.hpp"
#include "gausskit/linsolve.hpp"
#include "gausskit/parallel.hpp"
#include "gausskit/quadrature.hpp"

namespace gausskit::lsq {

using funcspec::TargetFunction;
using gaussfit::GaussianCombination;
using numerics::BigMatrix;
using numerics::QuadratureConfig;

// Normal equations M a = rhs of the continuous least-squares problem
// minimize || f - sum_n a_n e^{-(x-nt)^2} ||_2.
// M[j][k] = sqrt(pi/2) e^{-(j-k)^2 t^2 / 2}  (Gaussian-translate Gram matrix),
// rhs_j   = integral of f(x) e^{-(x-jt)^2} dx.
struct NormalSystem {
    BigMatrix M;
    std::vector<BigReal> rhs;
    double t = 1.0;
    int N = 0;
    int precision_digits = 50;
};

NormalSystem build_normal_system(const TargetFunction& f, int N, double t, int precision,
                                 const QuadratureConfig& cfg, Exec exec = Exec::parallel);

struct LeastSquaresFit {
    GaussianCombination combo;
    BigReal residual;          // ||M a - rhs||_inf
    double condition_estimate; // kappa_inf(M)
};

// Solves the normal equations at the system's working precision.
LeastSquaresFit solve_least_squares(const NormalSystem& sys);

// l2_fit_error under the lsq name, for reporting symmetry.
double least_squares_error(const TargetFunction& f, const GaussianCombination& c,
                           const QuadratureConfig& cfg);

// E2(a') - E2(a) computed exactly from the quadratic form
// (a'^T M a' - a^T M a) - 2 (a' - a)^T rhs  (the ||f||^2 term cancels).
// Resolves perturbations far below quadrature noise.
BigReal e2_gap(const NormalSystem& sys, const std::vector<BigReal>& a,
               const std::vector<BigReal>& a_perturbed);

}  // namespace gausskit::lsq
