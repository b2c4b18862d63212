#pragma once

#include <vector>

#include "gausskit/bigreal.hpp"
#include "gausskit/errors.hpp"

namespace gausskit::numerics {

// Dense square matrix of extended-precision reals, row-major.
class BigMatrix {
  public:
    BigMatrix(int n, int digits) : n_(n), data_(static_cast<std::size_t>(n) * n, BigReal(digits)) {}

    int size() const { return n_; }
    BigReal& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const BigReal& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    static BigMatrix identity(int n, int digits) {
        BigMatrix m(n, digits);
        for (int i = 0; i < n; ++i) m.at(i, i) = BigReal(1.0, digits);
        return m;
    }

  private:
    int n_;
    std::vector<BigReal> data_;
};

// Gaussian elimination with partial pivoting at the matrix's working
// precision. Throws Singular (with the pivot magnitude) if a pivot underflows
// the working precision relative to the matrix scale.
std::vector<BigReal> solve_dense(const BigMatrix& A, const std::vector<BigReal>& b);

// max_i |(A x - b)_i|, accumulated at twice the working precision.
BigReal residual_inf_norm(const BigMatrix& A, const std::vector<BigReal>& x,
                          const std::vector<BigReal>& b);

// Estimate of the infinity-norm condition number ||A||_inf * ||A^-1||_inf,
// via explicit inversion (dimensions here are small).
double condition_estimate(const BigMatrix& A);

}  // namespace gausskit::numerics
