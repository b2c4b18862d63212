#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "gausskit/errors.hpp"

namespace gausskit::numerics {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 60;
    // |x| beyond which integrands of Gaussian decay are treated as zero.
    double tail_cutoff = 30.0;

    void validate() const {
        if (abs_tol <= 0 || rel_tol <= 0 || max_depth < 1 || tail_cutoff <= 0)
            throw InvalidParameter("QuadratureConfig: tolerances and tail_cutoff must be "
                                   "positive, max_depth >= 1");
    }
};

// Finite interval [lo, hi]; absent means the whole real line.
struct Interval {
    double lo, hi;
};
using Domain = std::optional<Interval>;
inline Domain whole_line() { return std::nullopt; }

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

// Adaptive Gauss-Kronrod integration. Whole-line integrands must decay like
// e^{-c x^2} past |x| = tail_cutoff (checked). `breakpoints` are known
// discontinuities; the domain is split there before adapting.
double integrate(const RealFn& g, const Domain& domain, const QuadratureConfig& cfg,
                 const std::vector<double>& breakpoints = {});

std::complex<double> integrate_complex(const ComplexFn& g, const Domain& domain,
                                       const QuadratureConfig& cfg,
                                       const std::vector<double>& breakpoints = {});

// (integral of |g|^2)^{1/2} over `domain`.
double l2_norm(const RealFn& g, const QuadratureConfig& cfg,
               const std::vector<double>& breakpoints = {},
               const Domain& domain = whole_line());

double l2_norm_complex(const ComplexFn& g, const QuadratureConfig& cfg,
                       const std::vector<double>& breakpoints = {},
                       const Domain& domain = whole_line());

// (integral of |g(x)|^2 e^{-x^2})^{1/2} over the whole line.
double weighted_l2_norm(const RealFn& g, const QuadratureConfig& cfg,
                        const std::vector<double>& breakpoints = {});

double weighted_l2_norm_complex(const ComplexFn& g, const QuadratureConfig& cfg,
                                const std::vector<double>& breakpoints = {});

}  // namespace gausskit::numerics
