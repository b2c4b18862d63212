#include "gausskit/lsq.hpp"

#include <algorithm>
#include <cmath>

#include "gausskit/errors.hpp"

namespace gausskit::lsq {

NormalSystem build_normal_system(const TargetFunction& f, int N, double t, int precision,
                                 const QuadratureConfig& cfg, Exec exec) {
    if (t == 0.0) throw ZeroStep("build_normal_system: t must be nonzero");
    if (N < 0) throw InvalidParameter("build_normal_system: N >= 0 required");
    if (precision < BigReal::kMinDigits)
        throw InvalidParameter("build_normal_system: precision >= 15 required");
    cfg.validate();

    const int dim = N + 1;
    NormalSystem sys{BigMatrix(dim, precision), {}, t, N, precision};

    // Entries depend on |j - k| only; compute each diagonal band once.
    const BigReal half(0.5, precision);
    const BigReal root = sqrt(BigReal::pi(precision) * half);
    const BigReal bt(t, precision);
    std::vector<BigReal> band(dim, BigReal(precision));
    for (int d = 0; d < dim; ++d) {
        const BigReal dd(double(d), precision);
        band[d] = root * exp(-(dd * bt) * (dd * bt) * half);
    }
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) sys.M.at(j, k) = band[std::abs(j - k)];

    // rhs by quadrature, tightened toward the precision the solve needs
    // (floored near double roundoff -- the integrand itself is double).
    QuadratureConfig rhs_cfg = cfg;
    rhs_cfg.abs_tol = std::max(1e-13, std::min(cfg.abs_tol, std::pow(10.0, -precision / 2.0)));
    rhs_cfg.rel_tol = std::max(rhs_cfg.rel_tol, rhs_cfg.abs_tol);

    numerics::Domain domain = numerics::whole_line();
    const auto& sup = f.support();
    if (sup.bounded()) domain = numerics::Interval{sup.lo, sup.hi};

    sys.rhs.assign(dim, BigReal(precision));
    if (sup.kind != funcspec::Support::Kind::empty) {
        for_each_index(static_cast<std::size_t>(dim), exec, [&](std::size_t j) {
            const double shift = double(j) * t;
            auto integrand = [&f, shift](double x) {
                const double fv = f.evaluate(x);
                if (fv == 0.0) return 0.0;
                const double d = x - shift;
                return fv * std::exp(-d * d);
            };
            const double I = numerics::integrate(integrand, domain, rhs_cfg, f.breakpoints());
            sys.rhs[j] = BigReal(I, precision);
        });
    }
    return sys;
}

LeastSquaresFit solve_least_squares(const NormalSystem& sys) {
    std::vector<BigReal> a;
    try {
        a = numerics::solve_dense(sys.M, sys.rhs);
    } catch (const Singular& e) {
        // The Gram matrix is invertible in exact arithmetic; a zero pivot
        // means the working precision could not resolve it.
        throw Singular(std::string(e.what()) +
                       "; the normal-equation matrix is invertible in exact arithmetic -- "
                       "increase precision_digits");
    }

    LeastSquaresFit fit{GaussianCombination{}, numerics::residual_inf_norm(sys.M, a, sys.rhs),
                        numerics::condition_estimate(sys.M)};
    fit.combo.t = sys.t;
    fit.combo.digits = sys.precision_digits;
    fit.combo.a = std::move(a);
    return fit;
}

double least_squares_error(const TargetFunction& f, const GaussianCombination& c,
                           const QuadratureConfig& cfg) {
    return gaussfit::l2_fit_error(f, c, cfg);
}

BigReal e2_gap(const NormalSystem& sys, const std::vector<BigReal>& a,
               const std::vector<BigReal>& a_perturbed) {
    const int dim = sys.N + 1;
    if (static_cast<int>(a.size()) != dim || static_cast<int>(a_perturbed.size()) != dim)
        throw InvalidParameter("e2_gap: coefficient length must be N+1");
    const int digits = 2 * sys.precision_digits;

    auto quad_form = [&](const std::vector<BigReal>& v) {
        BigReal q(digits);
        for (int j = 0; j < dim; ++j) {
            BigReal row(digits);
            for (int k = 0; k < dim; ++k) row += sys.M.at(j, k) * v[k];
            q += v[j] * row;
            q -= BigReal(2.0, digits) * v[j] * sys.rhs[j];
        }
        return q;
    };
    return quad_form(a_perturbed) - quad_form(a);
}

}  // namespace gausskit::lsq
