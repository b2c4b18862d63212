#include "gausskit/funcspec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gausskit::funcspec {

namespace ast {

double eval(const Node& n, double x) {
    switch (n.kind) {
        case Node::Kind::number: return n.value;
        case Node::Kind::var: return x;
        case Node::Kind::add: return eval(*n.lhs, x) + eval(*n.rhs, x);
        case Node::Kind::sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
        case Node::Kind::mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
        case Node::Kind::div: return eval(*n.lhs, x) / eval(*n.rhs, x);
        case Node::Kind::neg: return -eval(*n.lhs, x);
        case Node::Kind::pow: {
            double base = eval(*n.lhs, x);
            double r = 1.0;
            for (int i = 0; i < n.exponent; ++i) r *= base;
            return r;
        }
        case Node::Kind::sin: return std::sin(eval(*n.lhs, x));
        case Node::Kind::cos: return std::cos(eval(*n.lhs, x));
        case Node::Kind::exp: return std::exp(eval(*n.lhs, x));
        case Node::Kind::chi: return (x >= n.a && x < n.b) ? 1.0 : 0.0;
    }
    return 0.0;
}

namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string render(const Node& n) {
    switch (n.kind) {
        case Node::Kind::number: return fmt_num(n.value);
        case Node::Kind::var: return "x";
        case Node::Kind::add: return "(" + render(*n.lhs) + "+" + render(*n.rhs) + ")";
        case Node::Kind::sub: return "(" + render(*n.lhs) + "-" + render(*n.rhs) + ")";
        case Node::Kind::mul: return "(" + render(*n.lhs) + "*" + render(*n.rhs) + ")";
        case Node::Kind::div: return "(" + render(*n.lhs) + "/" + render(*n.rhs) + ")";
        case Node::Kind::neg: return "(0-" + render(*n.lhs) + ")";
        case Node::Kind::pow: return "(" + render(*n.lhs) + ")^" + std::to_string(n.exponent);
        case Node::Kind::sin: return "sin(" + render(*n.lhs) + ")";
        case Node::Kind::cos: return "cos(" + render(*n.lhs) + ")";
        case Node::Kind::exp: return "exp(" + render(*n.lhs) + ")";
        case Node::Kind::chi: return "chi(" + fmt_num(n.a) + "," + fmt_num(n.b) + ")";
    }
    return "";
}

}  // namespace ast

namespace {

using ast::Node;
using ast::NodePtr;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

NodePtr binary(Node::Kind k, NodePtr l, NodePtr r) {
    Node n;
    n.kind = k;
    n.lhs = std::move(l);
    n.rhs = std::move(r);
    return make(std::move(n));
}

NodePtr number(double v) {
    Node n;
    n.kind = Node::Kind::number;
    n.value = v;
    return make(std::move(n));
}

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ < s_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    NodePtr expr() {
        NodePtr e;
        if (accept('-')) {
            Node n;
            n.kind = Node::Kind::neg;
            n.lhs = term();
            e = make(std::move(n));
        } else {
            e = term();
        }
        for (;;) {
            if (accept('+'))
                e = binary(Node::Kind::add, e, term());
            else if (accept('-'))
                e = binary(Node::Kind::sub, e, term());
            else
                return e;
        }
    }

    NodePtr term() {
        NodePtr e = factor();
        for (;;) {
            if (accept('*'))
                e = binary(Node::Kind::mul, e, factor());
            else if (accept('/'))
                e = binary(Node::Kind::div, e, factor());
            else
                return e;
        }
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (accept('^')) {
            Node n;
            n.kind = Node::Kind::pow;
            n.lhs = base;
            n.exponent = integer();
            return make(std::move(n));
        }
        return base;
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected integer exponent", pos_);
        return std::stoi(s_.substr(start, pos_ - start));
    }

    double number_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        if (pos_ == start) throw SyntaxError("expected number", pos_);
        return std::stod(s_.substr(start, pos_ - start));
    }

    // chi endpoints: optionally signed number or pi.
    double signed_constant() {
        double sign = 1.0;
        if (accept('-')) sign = -1.0;
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::string id = identifier();
            if (id == "pi") return sign * std::numbers::pi;
            throw UnknownSymbol("unknown constant '" + id + "'");
        }
        return sign * number_literal();
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    NodePtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number(number_literal());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string id = identifier();
            if (id == "x") {
                Node n;
                n.kind = Node::Kind::var;
                return make(std::move(n));
            }
            if (id == "pi") return number(std::numbers::pi);
            if (id == "sin" || id == "cos" || id == "exp") {
                expect('(');
                Node n;
                n.kind = id == "sin"   ? Node::Kind::sin
                         : id == "cos" ? Node::Kind::cos
                                       : Node::Kind::exp;
                n.lhs = expr();
                expect(')');
                return make(std::move(n));
            }
            if (id == "chi") {
                expect('(');
                double a = signed_constant();
                expect(',');
                double b = signed_constant();
                expect(')');
                if (a > b) std::swap(a, b);  // tolerate reversed endpoints
                Node n;
                n.kind = Node::Kind::chi;
                n.a = a;
                n.b = b;
                return make(std::move(n));
            }
            throw UnknownSymbol("unknown symbol '" + id + "' at position " + std::to_string(at));
        }
        throw SyntaxError("expected atom", pos_);
    }
};

Support intersect(const Support& a, const Support& b) {
    if (a.kind == Support::Kind::empty || b.kind == Support::Kind::empty) return Support::none();
    if (a.kind == Support::Kind::whole_line) return b;
    if (b.kind == Support::Kind::whole_line) return a;
    double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return Support::none();
    return Support::interval(lo, hi);
}

Support hull(const Support& a, const Support& b) {
    if (a.kind == Support::Kind::empty) return b;
    if (b.kind == Support::Kind::empty) return a;
    if (a.kind == Support::Kind::whole_line || b.kind == Support::Kind::whole_line)
        return Support::whole();
    return Support::interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Support derive_support(const Node& n) {
    switch (n.kind) {
        case Node::Kind::number:
            return n.value == 0.0 ? Support::none() : Support::whole();
        case Node::Kind::var:
            return Support::whole();
        case Node::Kind::add:
        case Node::Kind::sub:
            return hull(derive_support(*n.lhs), derive_support(*n.rhs));
        case Node::Kind::mul:
            return intersect(derive_support(*n.lhs), derive_support(*n.rhs));
        case Node::Kind::div:
            return derive_support(*n.lhs);
        case Node::Kind::neg:
            return derive_support(*n.lhs);
        case Node::Kind::pow:
            return n.exponent == 0 ? Support::whole() : derive_support(*n.lhs);
        case Node::Kind::sin:
            // sin(0) = 0, so zero regions of the argument stay zero.
            return derive_support(*n.lhs);
        case Node::Kind::cos:
        case Node::Kind::exp:
            return Support::whole();
        case Node::Kind::chi:
            return Support::interval(n.a, n.b);
    }
    return Support::whole();
}

void collect_breakpoints(const Node& n, std::vector<double>& out) {
    if (n.kind == Node::Kind::chi) {
        out.push_back(n.a);
        out.push_back(n.b);
    }
    if (n.lhs) collect_breakpoints(*n.lhs, out);
    if (n.rhs) collect_breakpoints(*n.rhs, out);
}

std::vector<double> sorted_unique_within(std::vector<double> v, const Support& s) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (s.bounded()) {
        std::erase_if(v, [&](double x) { return x < s.lo || x > s.hi; });
    }
    return v;
}

}  // namespace

TargetFunction TargetFunction::parse(const std::string& text) {
    Parser p(text);
    TargetFunction f;
    f.root_ = p.run();
    f.support_ = derive_support(*f.root_);
    std::vector<double> bps;
    collect_breakpoints(*f.root_, bps);
    f.breakpoints_ = sorted_unique_within(std::move(bps), f.support_);
    f.decay_ = f.support_.bounded() ? Decay::compact : Decay::unknown;
    return f;
}

TargetFunction TargetFunction::from_function(RealFn fn, Support support,
                                             std::vector<double> breakpoints, Decay decay) {
    TargetFunction f;
    f.real_fn_ = std::move(fn);
    f.support_ = support;
    f.breakpoints_ = sorted_unique_within(std::move(breakpoints), support);
    f.decay_ = support.bounded() ? Decay::compact : decay;
    return f;
}

TargetFunction TargetFunction::from_complex_function(ComplexFn fn, Support support,
                                                     std::vector<double> breakpoints,
                                                     Decay decay) {
    TargetFunction f;
    f.complex_fn_ = std::move(fn);
    f.support_ = support;
    f.breakpoints_ = sorted_unique_within(std::move(breakpoints), support);
    f.decay_ = support.bounded() ? Decay::compact : decay;
    return f;
}

double TargetFunction::evaluate(double x) const {
    if (root_) return ast::eval(*root_, x);
    if (real_fn_) return real_fn_(x);
    if (complex_fn_) return complex_fn_(x).real();
    return 0.0;
}

std::complex<double> TargetFunction::evaluate_complex(double x) const {
    if (complex_fn_) return complex_fn_(x);
    return {evaluate(x), 0.0};
}

std::string TargetFunction::render() const {
    if (!root_) throw InvalidParameter("render: function has no expression form");
    return ast::render(*root_);
}

TargetFunction TargetFunction::clamp(double a, int n) const {
    if (a <= 0 || n < 1)
        throw InvalidParameter("clamp: need a > 0 and n >= 1");

    auto clamp_factor = [a, n](double x) {
        if (x < a * -1.0 || x >= a) return 0.0;
        double p = 1.0;
        for (int i = 0; i < n; ++i) p *= (x - a) * (x + a);
        return p;
    };

    Support sup = Support::interval(-a, a);
    std::vector<double> bps = breakpoints_;
    bps.push_back(-a);
    bps.push_back(a);

    if (root_) {
        // Build (x-a)^n * (x+a)^n * chi(-a,a) as expression nodes so the
        // result keeps a textual form.
        Node var;
        var.kind = Node::Kind::var;
        NodePtr x = make(std::move(var));
        Node m1;
        m1.kind = Node::Kind::pow;
        m1.lhs = binary(Node::Kind::sub, x, number(a));
        m1.exponent = n;
        Node m2;
        m2.kind = Node::Kind::pow;
        m2.lhs = binary(Node::Kind::add, x, number(a));
        m2.exponent = n;
        Node chi;
        chi.kind = Node::Kind::chi;
        chi.a = -a;
        chi.b = a;
        NodePtr prod = binary(Node::Kind::mul, root_,
                              binary(Node::Kind::mul, make(std::move(m1)),
                                     binary(Node::Kind::mul, make(std::move(m2)),
                                            make(std::move(chi)))));
        TargetFunction g;
        g.root_ = prod;
        g.support_ = sup;
        g.breakpoints_ = sorted_unique_within(std::move(bps), sup);
        g.decay_ = Decay::compact;
        return g;
    }

    const TargetFunction base = *this;
    return from_function([base, clamp_factor](double x) { return base.evaluate(x) * clamp_factor(x); },
                         sup, std::move(bps), Decay::compact);
}

bool TargetFunction::decays_for_hermite() const {
    if (support_.bounded()) return true;
    if (decay_ == Decay::gaussian) return true;
    if (decay_ == Decay::compact) return true;
    // Numeric probe: |f(x)| e^{x^2/2} must be negligible far out, i.e. f
    // decays strictly faster than e^{-x^2/2}.
    for (double x : {8.0, -8.0, 12.0, -12.0, 16.0, -16.0, 20.0, -20.0}) {
        double v = std::abs(evaluate(x));
        if (v == 0.0) continue;
        if (std::log(v) + 0.5 * x * x > std::log(1e-8)) return false;
    }
    return true;
}

std::vector<std::pair<std::string, std::string>> catalog() {
    return {
        {"chi_far", "chi(-11,-10)"},
        {"parabola", "(x-1)^2*chi(-1,2)"},
        {"sine", "sin(x)*chi(-pi,pi)"},
        {"clamped_linear", "x*(x-2)^2*(x+2)^2*chi(-2,2)"},
        {"clamped_cubic", "(x^3-x)*(x-1.5)^2*(x+1.5)^2*chi(-1.5,1.5)"},
        {"gauss", "exp(-x^2)"},
    };
}

TargetFunction catalog_function(const std::string& name) {
    for (const auto& [n, text] : catalog())
        if (n == name) return TargetFunction::parse(text);
    throw UnknownSymbol("no catalog function named '" + name + "'");
}

TargetFunction gaussian_translate(double c) {
    return TargetFunction::from_function(
        [c](double x) { return std::exp(-(x - c) * (x - c)); }, Support::whole(), {},
        Decay::gaussian);
}

}  // namespace gausskit::funcspec
