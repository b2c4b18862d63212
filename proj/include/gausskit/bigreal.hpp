#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "gausskit/errors.hpp"

namespace gausskit {

// Software arbitrary-precision real, a thin RAII wrapper over mpfr_t.
// Precision is set per value in decimal digits (>= 15); arithmetic rounds
// to the precision of the receiving value.
class BigReal {
  public:
    static constexpr int kMinDigits = 15;

    static mpfr_prec_t bits_for_digits(int digits) {
        if (digits < kMinDigits) digits = kMinDigits;
        // log2(10) = 3.3219...; a few guard bits on top.
        return static_cast<mpfr_prec_t>(digits * 3.3220) + 8;
    }

    explicit BigReal(int digits = 50) : digits_(digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_zero(v_, 1);
    }
    BigReal(double x, int digits) : digits_(digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigReal(const std::string& s, int digits) : digits_(digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw InvalidParameter("BigReal: cannot parse '" + s + "'");
    }
    BigReal(const BigReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            digits_ = o.digits_;
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) {
            digits_ = o.digits_;
            mpfr_swap(v_, o.v_);
        }
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    int precision_digits() const { return digits_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string to_string(int sig_digits = 0) const {
        if (sig_digits <= 0) sig_digits = digits_;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", sig_digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigReal operator-() const {
        BigReal r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator-=(const BigReal& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator*=(const BigReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator/=(const BigReal& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend BigReal abs(const BigReal& a) {
        BigReal r(a);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal sqrt(const BigReal& a) {
        BigReal r(a);
        mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal exp(const BigReal& a) {
        BigReal r(a);
        mpfr_exp(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal log(const BigReal& a) {
        BigReal r(a);
        mpfr_log(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal sin(const BigReal& a) {
        BigReal r(a);
        mpfr_sin(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal cos(const BigReal& a) {
        BigReal r(a);
        mpfr_cos(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    static BigReal pi(int digits) {
        BigReal r(digits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    // log10 of |x| as a double; -inf for zero.
    double log10_abs() const {
        if (is_zero()) return -HUGE_VAL;
        BigReal t = abs(*this);
        mpfr_log10(t.v_, t.v_, MPFR_RNDN);
        return t.to_double();
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
    int digits_;
};

// Minimal complex number over BigReal; just enough for Gaussian elimination
// with complex stencil nodes.
struct BigComplex {
    BigReal re, im;

    explicit BigComplex(int digits = 50) : re(digits), im(digits) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, int digits) : re(r, digits), im(i, digits) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BigComplex operator-() const { return {-re, -im}; }

    BigReal abs2() const { return re * re + im * im; }
};

}  // namespace gausskit
