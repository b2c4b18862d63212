#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gausskit/errors.hpp"
#include "gausskit/quadrature.hpp"

namespace gausskit::funcspec {

// Smallest interval outside which a function vanishes identically.
struct Support {
    enum class Kind { whole_line, bounded, empty };
    Kind kind = Kind::whole_line;
    double lo = 0.0, hi = 0.0;

    static Support whole() { return {}; }
    static Support interval(double lo, double hi) {
        return {Kind::bounded, lo, hi};
    }
    static Support none() { return {Kind::empty, 0.0, 0.0}; }

    bool bounded() const { return kind == Kind::bounded || kind == Kind::empty; }
    bool contains(double x) const {
        switch (kind) {
            case Kind::whole_line: return true;
            case Kind::bounded: return x >= lo && x <= hi;
            case Kind::empty: return false;
        }
        return false;
    }
};

namespace ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { number, var, add, sub, mul, div, pow, neg, sin, cos, exp, chi };
    Kind kind;
    double value = 0.0;   // number
    int exponent = 0;     // pow
    double a = 0.0, b = 0.0;  // chi endpoints
    NodePtr lhs, rhs;
};

double eval(const Node& n, double x);
std::string render(const Node& n);

}  // namespace ast

// How fast |f| falls off at infinity; drives the truncation logic in the
// coefficient pipeline.
enum class Decay { compact, gaussian, unknown };

// An immutable target function f: evaluation, support, and discontinuity
// breakpoints. Either backed by a parsed expression or by arbitrary
// callables (used when intermediate pipeline products become functions).
class TargetFunction {
  public:
    using RealFn = std::function<double(double)>;
    using ComplexFn = std::function<std::complex<double>(double)>;

    // Parses the mini-language:
    //   expr   := ['-'] term (('+'|'-') term)*
    //   term   := factor (('*'|'/') factor)*
    //   factor := atom ('^' integer)?
    //   atom   := number | 'x' | 'pi' | 'sin(' expr ')' | 'cos(' expr ')'
    //           | 'exp(' expr ')' | 'chi(' signed ',' signed ')' | '(' expr ')'
    // ASCII, whitespace-insensitive. Indicators evaluate right-continuously.
    static TargetFunction parse(const std::string& text);

    static TargetFunction from_function(RealFn f, Support support,
                                        std::vector<double> breakpoints = {},
                                        Decay decay = Decay::unknown);
    static TargetFunction from_complex_function(ComplexFn f, Support support,
                                                std::vector<double> breakpoints = {},
                                                Decay decay = Decay::unknown);

    double evaluate(double x) const;
    std::complex<double> evaluate_complex(double x) const;
    double operator()(double x) const { return evaluate(x); }

    const Support& support() const { return support_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    bool is_complex() const { return complex_fn_ != nullptr; }
    Decay decay() const { return decay_; }

    bool has_expression() const { return root_ != nullptr; }
    // Textual form of the expression; only for parsed / clamped functions.
    std::string render() const;

    // g(x) = f(x) * (x-a)^n * (x+a)^n * chi_[-a,a](x).
    TargetFunction clamp(double a, int n) const;

    // True when f * e^{x^2/2} is square-integrable as far as the support /
    // decay metadata can tell (compact support, or a numeric probe of
    // |f| e^{x^2/2} far out for whole-line functions).
    bool decays_for_hermite() const;

  private:
    TargetFunction() = default;

    ast::NodePtr root_;
    RealFn real_fn_;
    ComplexFn complex_fn_;
    Support support_;
    std::vector<double> breakpoints_;
    Decay decay_ = Decay::unknown;
};

// The worked examples shipped with the tool, by name.
std::vector<std::pair<std::string, std::string>> catalog();
TargetFunction catalog_function(const std::string& name);

// e^{-(x-c)^2}.
TargetFunction gaussian_translate(double c);

}  // namespace gausskit::funcspec
