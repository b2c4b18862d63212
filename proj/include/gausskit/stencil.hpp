#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gausskit/quadrature.hpp"

namespace gausskit::stencil {

using Scalar = std::complex<double>;

// Finite-difference rule: approximates d^k/dx^k g(x) by
// (1/t^k) sum_i c_i g(x + k_i t).
struct Stencil {
    int deriv_order = 0;
    std::vector<Scalar> nodes;
    std::vector<Scalar> coeffs;
    int order_of_accuracy = 0;  // n+1-k for n+1 nodes

    bool real_nodes() const {
        for (const auto& z : nodes)
            if (z.imag() != 0.0) return false;
        return true;
    }
};

// Coefficients from the (n+1)x(n+1) moment system with rows k_i^j / j! and
// right-hand side e_k. Exact rational arithmetic when all nodes are real
// (every double is an exact rational), extended precision otherwise.
Stencil solve_stencil(int deriv_order, const std::vector<Scalar>& nodes);

// Nodes 0,-1,...,-n with coefficients (-1)^i binom(n,i): the backward
// divided-difference rule for the n-th derivative.
Stencil backward_difference_stencil(int n);

Scalar apply_stencil(const Stencil& s, const std::function<Scalar(Scalar)>& g, double x,
                     double t);

// Real convenience overload; requires real nodes.
double apply_stencil(const Stencil& s, const numerics::RealFn& g, double x, double t);

// (|t|^{n+1-k} / (n+1)!) * max_deriv * sum_i |c_i| |k_i|^{n+1}; rigorous bound
// on the truncation error given |g^{(n+1)}| <= max_deriv over the node span.
double truncation_error_bound(const Stencil& s, double max_deriv, double t);

// Determinant of the moment-system matrix:
// prod_{i<j}(k_j - k_i) / prod_{2<=i<=n} i!.
Scalar vandermonde_det(const std::vector<Scalar>& nodes);

// L^p distance between d^n/dx^n e^{-x^2} and its backward divided-difference
// approximant at step t.
double divided_difference_l2_error(int n, double t, double p,
                                   const numerics::QuadratureConfig& cfg);

}  // namespace gausskit::stencil
