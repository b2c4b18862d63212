// Command-line front end: parse a target function, run a pipeline, emit a
// JSON report on stdout plus optional CSV files. Exit codes: 0 success,
// 1 usage error, 2 numerical failure. Wall time goes to stderr so repeated
// runs with identical flags produce byte-identical outputs.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gausskit/errors.hpp"
#include "gausskit/funcspec.hpp"
#include "gausskit/gaussfit.hpp"
#include "gausskit/hermite.hpp"
#include "gausskit/lowfreq.hpp"
#include "gausskit/lsq.hpp"
#include "gausskit/quadrature.hpp"
#include "gausskit/stencil.hpp"

namespace {

using gausskit::BigReal;
using gausskit::Exec;
using json = nlohmann::ordered_json;
namespace fs = gausskit::funcspec;
namespace num = gausskit::numerics;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Options {
    std::string f_text;
    int N = 0;
    double t = 0.0;
    std::optional<double> M;
    int digits = 50;
    bool digits_explicit = false;
    double tau = 1.0;
    double omega = 0.0;
    std::string nodes_text;
    int order = 0;
    double grid_spacing = 0.01;
    double grid_halfwidth = 15.0;
    double abs_tol = 1e-10;
    std::string csv_path;
    std::string coeffs_csv_path;
    std::string range_text;
    int samples = 500;
    bool serial = false;
};

int default_digits() {
    if (const char* env = std::getenv("GAUSSKIT_DEFAULT_DIGITS")) {
        const int d = std::atoi(env);
        if (d >= 15) return d;
    }
    return 50;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto pos = text.find(':');
    if (pos == std::string::npos)
        throw gausskit::InvalidParameter("--range expects LO:HI");
    try {
        const double lo = std::stod(text.substr(0, pos));
        const double hi = std::stod(text.substr(pos + 1));
        if (!(lo < hi)) throw gausskit::InvalidDomain("--range needs LO < HI");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw gausskit::InvalidParameter("--range expects numeric LO:HI");
    }
}

std::complex<double> parse_scalar(std::string tok) {
    std::erase(tok, ' ');
    if (tok.empty()) throw gausskit::InvalidParameter("--nodes: empty entry");
    if (tok.back() != 'i') {
        std::size_t used = 0;
        const double re = std::stod(tok, &used);
        if (used != tok.size())
            throw gausskit::InvalidParameter("--nodes: cannot parse '" + tok + "'");
        return {re, 0.0};
    }
    tok.pop_back();  // imaginary component present
    // Split at the sign that separates real and imaginary parts (not a
    // leading sign, not an exponent sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < tok.size(); ++i)
        if ((tok[i] == '+' || tok[i] == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E') split = i;
    auto unit = [](const std::string& s) -> std::optional<double> {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return std::nullopt;
    };
    try {
        if (split == std::string::npos) {
            if (auto u = unit(tok)) return {0.0, *u};
            return {0.0, std::stod(tok)};
        }
        const double re = std::stod(tok.substr(0, split));
        const std::string ims = tok.substr(split);
        if (auto u = unit(ims)) return {re, *u};
        return {re, std::stod(ims)};
    } catch (const std::invalid_argument&) {
        throw gausskit::InvalidParameter("--nodes: cannot parse '" + tok + "i'");
    }
}

std::vector<std::complex<double>> parse_nodes(const std::string& text) {
    std::vector<std::complex<double>> nodes;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        nodes.push_back(parse_scalar(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return nodes;
}

fs::TargetFunction load_function(const Options& opt) {
    if (opt.f_text.empty()) throw gausskit::InvalidParameter("--f is required");
    for (const auto& [name, expr] : fs::catalog())
        if (name == opt.f_text) return fs::TargetFunction::parse(expr);
    return fs::TargetFunction::parse(opt.f_text);
}

// f * chi_[-M, M], for the truncation override.
fs::TargetFunction truncate_function(const fs::TargetFunction& f, double M) {
    if (M <= 0) throw gausskit::InvalidParameter("--M must be positive");
    const auto& sup = f.support();
    double lo = -M, hi = M;
    if (sup.kind == fs::Support::Kind::bounded) {
        lo = std::max(lo, sup.lo);
        hi = std::min(hi, sup.hi);
    }
    auto support = (sup.kind == fs::Support::Kind::empty || lo >= hi)
                       ? fs::Support::none()
                       : fs::Support::interval(lo, hi);
    std::vector<double> bps = f.breakpoints();
    bps.push_back(-M);
    bps.push_back(M);
    return fs::TargetFunction::from_function(
        [f, M](double x) { return (x >= -M && x < M) ? f.evaluate(x) : 0.0; }, support, bps,
        fs::Decay::compact);
}

num::QuadratureConfig quad_config(const Options& opt) {
    num::QuadratureConfig cfg;
    cfg.abs_tol = opt.abs_tol;
    cfg.rel_tol = std::max(cfg.rel_tol, opt.abs_tol);
    cfg.validate();
    return cfg;
}

std::pair<double, double> curve_range(const Options& opt, const fs::TargetFunction& f) {
    if (!opt.range_text.empty()) return parse_range(opt.range_text);
    const auto& sup = f.support();
    if (sup.kind == fs::Support::Kind::bounded) return {sup.lo - 1.0, sup.hi + 1.0};
    return {-5.0, 5.0};
}

void write_curve_csv(const std::string& path, const num::RealFn& f, const num::RealFn& approx,
                     double lo, double hi, int samples) {
    if (samples < 2) throw gausskit::InvalidParameter("--samples must be at least 2");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gausskit::IoError("cannot open '" + path + "' for writing");
    out << "x,f,approx,diff\n";
    for (int i = 0; i < samples; ++i) {
        const double x = lo + (hi - lo) * i / (samples - 1);
        const double fv = f(x), av = approx(x);
        out << fmt17(x) << ',' << fmt17(fv) << ',' << fmt17(av) << ',' << fmt17(fv - av) << '\n';
    }
    if (!out) throw gausskit::IoError("write failed on '" + path + "'");
}

json combo_coefficients(const gausskit::gaussfit::GaussianCombination& c) {
    json arr = json::array();
    for (int n = 0; n <= c.order(); ++n) {
        json e;
        e["index"] = n;
        e["shift"] = n * c.t;
        e["sign"] = c.coeff_sign(n);
        const double lg = c.coeff_log10(n);
        e["log10_magnitude"] = std::isfinite(lg) ? json(lg) : json(nullptr);
        const double v = c.coeff_value(n);
        e["value"] = std::isfinite(v) ? json(v) : json(nullptr);
        arr.push_back(e);
    }
    return arr;
}

void write_combo_csv(const std::string& path, const gausskit::gaussfit::GaussianCombination& c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gausskit::IoError("cannot open '" + path + "' for writing");
    out << "index,shift,coefficient_sign,coefficient_log10_magnitude,coefficient_value\n";
    for (int n = 0; n <= c.order(); ++n)
        out << n << ',' << fmt17(n * c.t) << ',' << c.coeff_sign(n) << ','
            << fmt17(c.coeff_log10(n)) << ',' << fmt17(c.coeff_value(n)) << '\n';
}

json trig_coefficients(const gausskit::lowfreq::TrigCombination& c) {
    json arr = json::array();
    for (int n = 0; n <= c.N; ++n) {
        json e;
        e["index"] = n;
        e["frequency"] = n * c.t;
        e["re"] = c.a_re[n].to_double();
        e["im"] = c.a_im[n].to_double();
        arr.push_back(e);
    }
    return arr;
}

void write_trig_csv(const std::string& path, const gausskit::lowfreq::TrigCombination& c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gausskit::IoError("cannot open '" + path + "' for writing");
    out << "index,frequency,re,im\n";
    for (int n = 0; n <= c.N; ++n)
        out << n << ',' << fmt17(n * c.t) << ',' << fmt17(c.a_re[n].to_double()) << ','
            << fmt17(c.a_im[n].to_double()) << '\n';
}

std::string scalar_text(const std::complex<double>& z) {
    if (z.imag() == 0.0) return fmt17(z.real());
    return fmt17(z.real()) + (z.imag() < 0 ? "" : "+") + fmt17(z.imag()) + "i";
}

void emit_report(const json& report) { std::cout << report.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"Approximate square-integrable functions by linear combinations of "
                 "translates of exp(-x^2), and related pipelines"};
    app.require_subcommand(1);
    Options opt;
    opt.digits = default_digits();

    auto add_common = [&](CLI::App* sub, bool needs_f) {
        auto* f = sub->add_option("--f", opt.f_text, "target function expression or catalog name");
        if (needs_f) f->required();
        sub->add_option("--abs-tol", opt.abs_tol, "quadrature absolute tolerance");
        sub->add_option("--csv", opt.csv_path, "write x,f,approx,diff curve CSV here");
        sub->add_option("--range", opt.range_text, "curve range LO:HI");
        sub->add_option("--samples", opt.samples, "curve sample count");
        sub->add_flag("--serial", opt.serial, "disable parallel kernels");
    };
    auto add_fit_flags = [&](CLI::App* sub) {
        sub->add_option("--N", opt.N, "highest translate index")->required();
        sub->add_option("--t", opt.t, "translate step (nonzero)")->required();
    };

    auto* fit = app.add_subcommand("fit", "Gaussian-translate fit via the Hermite pipeline");
    add_common(fit, true);
    add_fit_flags(fit);
    fit->add_option("--M", opt.M, "truncation radius override");
    fit->add_option("--coeffs-csv", opt.coeffs_csv_path, "write coefficient CSV here");

    auto* hermite = app.add_subcommand("hermite", "Hermite expansion only");
    add_common(hermite, true);
    hermite->add_option("--N", opt.N, "expansion order")->required();
    hermite->add_option("--M", opt.M, "truncation radius override");

    auto* lsq = app.add_subcommand("lsq", "least-squares fit via the normal equations");
    add_common(lsq, true);
    add_fit_flags(lsq);
    lsq->add_option("--digits", opt.digits, "working precision in decimal digits")
        ->each([&](const std::string&) { opt.digits_explicit = true; });
    lsq->add_option("--coeffs-csv", opt.coeffs_csv_path, "write coefficient CSV here");

    auto* trig = app.add_subcommand("trig", "sine/cosine fit on a finite interval");
    add_common(trig, true);
    add_fit_flags(trig);
    trig->add_option("--omega", opt.omega, "strict frequency bound")->required();
    trig->add_option("--grid-spacing", opt.grid_spacing, "transform grid spacing");
    trig->add_option("--grid-halfwidth", opt.grid_halfwidth, "transform grid half-width");
    trig->add_option("--coeffs-csv", opt.coeffs_csv_path, "write coefficient CSV here");

    auto* cosine = app.add_subcommand("cosine", "cosine-only fit via even extension");
    add_common(cosine, true);
    add_fit_flags(cosine);
    cosine->add_option("--omega", opt.omega, "strict frequency bound")->required();
    cosine->add_option("--grid-spacing", opt.grid_spacing, "transform grid spacing");
    cosine->add_option("--grid-halfwidth", opt.grid_halfwidth, "transform grid half-width");
    cosine->add_option("--coeffs-csv", opt.coeffs_csv_path, "write coefficient CSV here");

    auto* stencil = app.add_subcommand("stencil", "finite-difference stencil coefficients");
    stencil->add_option("--order", opt.order, "derivative order")->required();
    stencil->add_option("--nodes", opt.nodes_text, "comma-separated nodes (complex as a+bi)")
        ->required();
    stencil->add_option("--csv", opt.csv_path, "write node,coefficient CSV here");

    auto* synth = app.add_subcommand("synth", "impulse-train synthesis");
    add_common(synth, true);
    synth->add_option("--N", opt.N, "highest translate index")->required();
    synth->add_option("--tau", opt.tau, "load window; impulse times stay below it")->required();
    synth->add_option("--coeffs-csv", opt.coeffs_csv_path, "write coefficient CSV here");

    auto* eval = app.add_subcommand("eval", "sample the target function to CSV");
    add_common(eval, true);

    auto* error = app.add_subcommand("error", "fit error report without coefficients");
    add_common(error, true);
    add_fit_flags(error);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 1;
    }

    const auto started = std::chrono::steady_clock::now();
    const Exec exec = opt.serial ? Exec::serial : Exec::parallel;
    const num::QuadratureConfig cfg = quad_config(opt);

    json report;
    json params;
    params["abs_tol"] = opt.abs_tol;

    if (app.got_subcommand(stencil)) {
        const auto nodes = parse_nodes(opt.nodes_text);
        const auto s = gausskit::stencil::solve_stencil(opt.order, nodes);
        report["method"] = "stencil";
        params["order"] = opt.order;
        params["nodes"] = opt.nodes_text;
        report["parameters"] = params;
        report["order_of_accuracy"] = s.order_of_accuracy;
        json arr = json::array();
        for (std::size_t i = 0; i < s.nodes.size(); ++i) {
            json e;
            e["node"] = scalar_text(s.nodes[i]);
            e["coefficient"] = scalar_text(s.coeffs[i]);
            arr.push_back(e);
        }
        report["coefficients"] = arr;
        if (!opt.csv_path.empty()) {
            std::ofstream out(opt.csv_path, std::ios::binary);
            if (!out) throw gausskit::IoError("cannot open '" + opt.csv_path + "' for writing");
            out << "# derivative_order=" << s.deriv_order
                << " order_of_accuracy=" << s.order_of_accuracy << "\n";
            out << "node,coefficient\n";
            for (std::size_t i = 0; i < s.nodes.size(); ++i)
                out << scalar_text(s.nodes[i]) << ',' << scalar_text(s.coeffs[i]) << '\n';
        }
        emit_report(report);
    } else if (app.got_subcommand(eval)) {
        const auto f = load_function(opt);
        const auto [lo, hi] = curve_range(opt, f);
        report["method"] = "eval";
        params["range"] = json::array({lo, hi});
        params["samples"] = opt.samples;
        report["parameters"] = params;
        if (!opt.csv_path.empty())
            write_curve_csv(
                opt.csv_path, [&](double x) { return f.evaluate(x); },
                [&](double x) { return f.evaluate(x); }, lo, hi, opt.samples);
        emit_report(report);
    } else if (app.got_subcommand(hermite)) {
        auto f = load_function(opt);
        if (opt.M) f = truncate_function(f, *opt.M);
        const auto b = gausskit::hermite::compute_bn(f, opt.N, cfg, exec);
        auto approx = [&](double x) { return gausskit::hermite::eval_hermite_expansion(b, x); };
        auto diff = [&](double x) {
            const double d = f.evaluate(x) - approx(x);
            return d * d;
        };
        const double e2 = std::sqrt(std::max(
            0.0, num::integrate(diff, num::whole_line(), cfg, f.breakpoints())));
        report["method"] = "hermite";
        params["N"] = opt.N;
        if (b.truncation_M) params["truncation_M"] = *b.truncation_M;
        report["parameters"] = params;
        report["error_l2"] = e2;
        report["coefficients"] = b.b;
        if (!opt.csv_path.empty()) {
            const auto [lo, hi] = curve_range(opt, f);
            write_curve_csv(opt.csv_path, [&](double x) { return f.evaluate(x); }, approx, lo, hi,
                            opt.samples);
        }
        emit_report(report);
    } else if (app.got_subcommand(fit) || app.got_subcommand(error)) {
        auto f = load_function(opt);
        if (opt.M) f = truncate_function(f, *opt.M);
        const auto c = gausskit::gaussfit::fit(f, opt.N, opt.t, cfg, exec);
        const double e2 = gausskit::gaussfit::l2_fit_error(f, c, cfg);
        report["method"] = "gauss-thm3";
        params["N"] = opt.N;
        params["t"] = opt.t;
        params["digits"] = c.digits;
        if (c.truncation_M) params["truncation_M"] = *c.truncation_M;
        report["parameters"] = params;
        report["error_l2"] = e2;
        if (app.got_subcommand(fit)) report["coefficients"] = combo_coefficients(c);
        if (!opt.coeffs_csv_path.empty()) write_combo_csv(opt.coeffs_csv_path, c);
        if (!opt.csv_path.empty()) {
            const auto [lo, hi] = curve_range(opt, f);
            write_curve_csv(opt.csv_path, [&](double x) { return f.evaluate(x); },
                            [&](double x) { return gausskit::gaussfit::eval_combo(c, x); }, lo, hi,
                            opt.samples);
        }
        emit_report(report);
    } else if (app.got_subcommand(lsq)) {
        const auto f = load_function(opt);
        if (opt.N > 5 && std::abs(opt.t) <= 0.01 && !opt.digits_explicit)
            throw gausskit::InvalidParameter(
                "lsq: the normal-equation condition number grows past 10^10 beyond N=5 at this "
                "step; N > 5 with |t| <= 0.01 needs an explicit --digits above the default");
        const auto sys =
            gausskit::lsq::build_normal_system(f, opt.N, opt.t, opt.digits, cfg, exec);
        const auto sol = gausskit::lsq::solve_least_squares(sys);
        const double e2 = gausskit::lsq::least_squares_error(f, sol.combo, cfg);
        report["method"] = "gauss-lsq";
        params["N"] = opt.N;
        params["t"] = opt.t;
        params["precision_digits"] = opt.digits;
        report["parameters"] = params;
        report["e2_error"] = e2;
        report["condition_estimate"] = sol.condition_estimate;
        report["residual_inf_norm"] = sol.residual.to_string(6);
        report["coefficients"] = combo_coefficients(sol.combo);
        if (!opt.coeffs_csv_path.empty()) write_combo_csv(opt.coeffs_csv_path, sol.combo);
        if (!opt.csv_path.empty()) {
            const auto [lo, hi] = curve_range(opt, f);
            write_curve_csv(opt.csv_path, [&](double x) { return f.evaluate(x); },
                            [&](double x) { return gausskit::gaussfit::eval_combo(sol.combo, x); },
                            lo, hi, opt.samples);
        }
        emit_report(report);
    } else if (app.got_subcommand(trig) || app.got_subcommand(cosine)) {
        const auto f = load_function(opt);
        gausskit::lowfreq::GridOptions grid;
        grid.spacing = opt.grid_spacing;
        grid.half_width = opt.grid_halfwidth;
        params["N"] = opt.N;
        params["t"] = opt.t;
        params["omega"] = opt.omega;
        params["grid_spacing"] = grid.spacing;
        params["grid_halfwidth"] = grid.half_width;
        const auto [lo, hi] = curve_range(opt, f);
        params["range"] = json::array({lo, hi});
        report["method"] = app.got_subcommand(trig) ? "trig" : "cosine";
        report["parameters"] = params;
        if (app.got_subcommand(trig)) {
            const auto sc =
                gausskit::lowfreq::fit_sincos(f, lo, hi, opt.N, opt.t, opt.omega, cfg, grid, exec);
            report["error_l2"] = sc.error;
            report["error_weighted"] = sc.weighted_error;
            report["coefficients"] = trig_coefficients(sc.combo);
            if (!opt.coeffs_csv_path.empty()) write_trig_csv(opt.coeffs_csv_path, sc.combo);
            if (!opt.csv_path.empty())
                write_curve_csv(opt.csv_path, [&](double x) { return f.evaluate(x); },
                                [&](double x) { return sc.combo.eval(x).real(); }, lo, hi,
                                opt.samples);
        } else {
            if (lo != 0.0)
                throw gausskit::InvalidDomain("cosine: --range must start at 0 (even extension)");
            const auto cf =
                gausskit::lowfreq::fit_cosine_even(f, hi, opt.N, opt.t, opt.omega, cfg, grid, exec);
            report["error_l2"] = cf.error;
            report["coefficients"] = trig_coefficients(cf.combo);
            if (!opt.coeffs_csv_path.empty()) write_trig_csv(opt.coeffs_csv_path, cf.combo);
            if (!opt.csv_path.empty())
                write_curve_csv(opt.csv_path, [&](double x) { return f.evaluate(x); },
                                [&](double x) { return cf.combo.eval_cos_part(x); }, lo, hi,
                                opt.samples);
        }
        emit_report(report);
    } else if (app.got_subcommand(synth)) {
        const auto f = load_function(opt);
        const auto train = gausskit::gaussfit::impulse_synthesis(f, opt.N, opt.tau, cfg, exec);
        const double e2 = gausskit::gaussfit::l2_fit_error(f, train.combo, cfg);
        report["method"] = "synth";
        params["N"] = opt.N;
        params["tau"] = opt.tau;
        params["t"] = train.combo.t;
        params["digits"] = train.combo.digits;
        report["parameters"] = params;
        report["error_l2"] = e2;
        report["load_time"] = train.load_time;
        json arr = json::array();
        for (std::size_t n = 0; n < train.times.size(); ++n) {
            json e;
            e["index"] = n;
            e["time"] = train.times[n];
            e["weight_sign"] = train.weights[n].sign();
            const double lg = train.weights[n].log10_abs();
            e["weight_log10_magnitude"] = std::isfinite(lg) ? json(lg) : json(nullptr);
            const double v = train.weights[n].to_double();
            e["weight_value"] = std::isfinite(v) ? json(v) : json(nullptr);
            arr.push_back(e);
        }
        report["impulses"] = arr;
        if (!opt.coeffs_csv_path.empty()) write_combo_csv(opt.coeffs_csv_path, train.combo);
        if (!opt.csv_path.empty()) {
            const auto [lo, hi] = curve_range(opt, f);
            write_curve_csv(
                opt.csv_path, [&](double x) { return f.evaluate(x); },
                [&](double x) { return gausskit::gaussfit::eval_filtered_train(train, x); }, lo, hi,
                opt.samples);
        }
        emit_report(report);
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << "wall_time_ms=" << elapsed << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gausskit::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
