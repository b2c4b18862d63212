#include "gausskit/linsolve.hpp"

#include <utility>

namespace gausskit::numerics {

namespace {

int working_digits(const BigMatrix& A) {
    return A.size() > 0 ? A.at(0, 0).precision_digits() : BigReal::kMinDigits;
}

BigReal matrix_scale(const BigMatrix& A) {
    const int n = A.size();
    BigReal s(working_digits(A));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigReal m = abs(A.at(i, j));
            if (m > s) s = m;
        }
    return s;
}

// Eliminate in-place on an n x (n + k) augmented system.
void eliminate(std::vector<std::vector<BigReal>>& aug, int n, int digits,
               const BigReal& scale) {
    // A pivot this far below the matrix scale carries no information at the
    // working precision.
    BigReal floor_mag = scale * exp(BigReal(static_cast<double>(-2.302585092994046 * (digits - 2)), digits));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        BigReal best = abs(aug[col][col]);
        for (int r = col + 1; r < n; ++r) {
            BigReal m = abs(aug[r][col]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best.is_zero() || best < floor_mag)
            throw Singular("solve_dense: pivot magnitude " + best.to_string(3) +
                           " underflows working precision (" + std::to_string(digits) +
                           " digits); increase precision_digits");
        if (piv != col) std::swap(aug[piv], aug[col]);
        const std::size_t width = aug[col].size();
        for (int r = col + 1; r < n; ++r) {
            BigReal factor = aug[r][col] / aug[col][col];
            for (std::size_t c = col; c < width; ++c)
                aug[r][c] -= factor * aug[col][c];
        }
    }
}

}  // namespace

std::vector<BigReal> solve_dense(const BigMatrix& A, const std::vector<BigReal>& b) {
    const int n = A.size();
    if (static_cast<int>(b.size()) != n)
        throw InvalidParameter("solve_dense: dimension mismatch");
    const int digits = working_digits(A);

    std::vector<std::vector<BigReal>> aug(n);
    for (int i = 0; i < n; ++i) {
        aug[i].reserve(n + 1);
        for (int j = 0; j < n; ++j) aug[i].push_back(A.at(i, j));
        aug[i].push_back(b[i]);
    }
    eliminate(aug, n, digits, matrix_scale(A));

    std::vector<BigReal> x(n, BigReal(digits));
    for (int i = n - 1; i >= 0; --i) {
        BigReal s = aug[i][n];
        for (int j = i + 1; j < n; ++j) s -= aug[i][j] * x[j];
        x[i] = s / aug[i][i];
    }
    return x;
}

BigReal residual_inf_norm(const BigMatrix& A, const std::vector<BigReal>& x,
                          const std::vector<BigReal>& b) {
    const int n = A.size();
    const int digits = 2 * working_digits(A);
    BigReal worst(digits);
    for (int i = 0; i < n; ++i) {
        BigReal s(digits);
        for (int j = 0; j < n; ++j) {
            BigReal term(digits);
            term = A.at(i, j);
            term *= x[j];
            s += term;
        }
        BigReal bi(digits);
        bi = b[i];
        BigReal r = abs(s - bi);
        if (r > worst) worst = r;
    }
    return worst;
}

double condition_estimate(const BigMatrix& A) {
    const int n = A.size();
    const int digits = working_digits(A);

    std::vector<std::vector<BigReal>> aug(n);
    for (int i = 0; i < n; ++i) {
        aug[i].reserve(2 * n);
        for (int j = 0; j < n; ++j) aug[i].push_back(A.at(i, j));
        for (int j = 0; j < n; ++j)
            aug[i].push_back(BigReal(i == j ? 1.0 : 0.0, digits));
    }
    eliminate(aug, n, digits, matrix_scale(A));

    // Back-substitute each identity column to recover the inverse.
    BigMatrix inv(n, digits);
    for (int col = 0; col < n; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            BigReal s = aug[i][n + col];
            for (int j = i + 1; j < n; ++j) s -= aug[i][j] * inv.at(j, col);
            inv.at(i, col) = s / aug[i][i];
        }
    }

    auto inf_norm = [n, digits](auto&& get) {
        BigReal worst(digits);
        for (int i = 0; i < n; ++i) {
            BigReal row(digits);
            for (int j = 0; j < n; ++j) row += abs(get(i, j));
            if (row > worst) worst = row;
        }
        return worst;
    };
    BigReal na = inf_norm([&](int i, int j) -> const BigReal& { return A.at(i, j); });
    BigReal ni = inf_norm([&](int i, int j) -> const BigReal& { return inv.at(i, j); });
    return (na * ni).to_double();
}

}  // namespace gausskit::numerics
