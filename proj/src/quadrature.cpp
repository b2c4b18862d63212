#include "gausskit/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "gausskit/kahan.hpp"

namespace gausskit::numerics {

namespace {

using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;

struct PanelResult {
    double value;
    double error;
    double l1;
};

// Chunks wider than ~2 are pre-split: a sparse Kronrod rule applied to a
// wide panel can miss a localized bump entirely yet report a tiny error.
// Each chunk then goes through the library's adaptive driver, whose
// termination test is relative to the local L1 mass.
//
// The driver's error estimate has an absolute floor (~1e-12) independent of
// panel width, so chunks whose integrand is essentially zero would refine to
// full depth for nothing. chunk_abs is this chunk's proportional share of the
// overall absolute budget: once the estimate fits in it at a shallow depth,
// deeper refinement is pointless.
void adapt(const RealFn& g, double a, double b, double tol, double chunk_abs, int depth,
           KahanAccumulator<double>& value, KahanAccumulator<double>& error,
           KahanAccumulator<double>& l1) {
    if ((b - a) > 2.0) {
        const double m = 0.5 * (a + b);
        adapt(g, a, m, tol, 0.5 * chunk_abs, depth, value, error, l1);
        adapt(g, m, b, tol, 0.5 * chunk_abs, depth, value, error, l1);
        return;
    }
    PanelResult r{};
    for (int d : {4, 8, depth}) {
        if (d > depth) d = depth;
        r.value = GK15::integrate(g, a, b, d, tol, &r.error, &r.l1);
        if (r.error <= chunk_abs || r.error <= tol * r.l1 || d >= depth) break;
    }
    value += r.value;
    error += r.error;
    l1 += r.l1;
}

std::vector<double> segment_edges(double lo, double hi, const std::vector<double>& breakpoints) {
    std::vector<double> edges;
    edges.push_back(lo);
    for (double bp : breakpoints)
        if (bp > lo && bp < hi) edges.push_back(bp);
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

double integrate(const RealFn& g, const Domain& domain, const QuadratureConfig& cfg,
                 const std::vector<double>& breakpoints) {
    cfg.validate();
    double lo, hi;
    if (domain) {
        if (domain->lo > domain->hi)
            throw InvalidDomain("integrate: interval endpoints not ordered");
        lo = domain->lo;
        hi = domain->hi;
    } else {
        lo = -cfg.tail_cutoff;
        hi = cfg.tail_cutoff;
        // Tail check: the integrand must already be negligible at the cutoff.
        for (double x : {lo, hi, 1.05 * lo, 1.05 * hi}) {
            if (!(std::abs(g(x)) <= cfg.abs_tol))
                throw NonConvergence("integrate: integrand not negligible at tail_cutoff; "
                                     "whole-line truncation invalid");
        }
    }
    if (lo == hi) return 0.0;

    // The per-chunk tolerance is relative to the chunk's own L1 mass, so the
    // same value serves every chunk: accumulated error stays <= tol * total L1.
    const auto edges = segment_edges(lo, hi, breakpoints);
    const std::size_t nseg = edges.size() - 1;
    const double seg_tol = std::min(cfg.rel_tol, cfg.abs_tol);
    const int depth = std::min(cfg.max_depth, 15);

    KahanAccumulator<double> value, error, l1;
    for (std::size_t i = 0; i < nseg; ++i) {
        const double chunk_abs = cfg.abs_tol * (edges[i + 1] - edges[i]) / (hi - lo);
        adapt(g, edges[i], edges[i + 1], seg_tol, chunk_abs, depth, value, error, l1);
    }

    // Relative accuracy is judged against the L1 mass: for integrands with
    // heavy cancellation the signed value says nothing about attainable
    // precision.
    const double I = value;
    const double scale = std::max(std::abs(I), static_cast<double>(l1));
    if (static_cast<double>(error) > std::max(cfg.abs_tol, cfg.rel_tol * scale))
        throw NonConvergence("integrate: max_depth reached without meeting tolerance "
                             "(error estimate " + std::to_string(static_cast<double>(error)) +
                             ", value " + std::to_string(I) + ", L1 " +
                             std::to_string(static_cast<double>(l1)) + ")");
    return I;
}

std::complex<double> integrate_complex(const ComplexFn& g, const Domain& domain,
                                       const QuadratureConfig& cfg,
                                       const std::vector<double>& breakpoints) {
    // Whole-line tail checks apply to |g|; route both parts through a config
    // whose tail check sees the part being integrated.
    const double re = integrate([&](double x) { return g(x).real(); }, domain, cfg, breakpoints);
    const double im = integrate([&](double x) { return g(x).imag(); }, domain, cfg, breakpoints);
    return {re, im};
}

double l2_norm(const RealFn& g, const QuadratureConfig& cfg,
               const std::vector<double>& breakpoints, const Domain& domain) {
    const double I = integrate([&](double x) { double v = g(x); return v * v; },
                               domain, cfg, breakpoints);
    return std::sqrt(std::max(0.0, I));
}

double l2_norm_complex(const ComplexFn& g, const QuadratureConfig& cfg,
                       const std::vector<double>& breakpoints, const Domain& domain) {
    const double I = integrate([&](double x) { return std::norm(g(x)); },
                               domain, cfg, breakpoints);
    return std::sqrt(std::max(0.0, I));
}

double weighted_l2_norm(const RealFn& g, const QuadratureConfig& cfg,
                        const std::vector<double>& breakpoints) {
    const double I = integrate(
        [&](double x) { double v = g(x); return v * v * std::exp(-x * x); },
        whole_line(), cfg, breakpoints);
    return std::sqrt(std::max(0.0, I));
}

double weighted_l2_norm_complex(const ComplexFn& g, const QuadratureConfig& cfg,
                                const std::vector<double>& breakpoints) {
    const double I = integrate(
        [&](double x) { return std::norm(g(x)) * std::exp(-x * x); },
        whole_line(), cfg, breakpoints);
    return std::sqrt(std::max(0.0, I));
}

}  // namespace gausskit::numerics
