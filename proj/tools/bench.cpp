// Wall-time comparison of the parallel batch kernels against the serial
// reference implementation, with an exact-agreement check on the outputs.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "gausskit/funcspec.hpp"
#include "gausskit/hermite.hpp"
#include "gausskit/lowfreq.hpp"
#include "gausskit/lsq.hpp"
#include "gausskit/parallel.hpp"

using namespace gausskit;

namespace {

const numerics::QuadratureConfig cfg{};

template <typename Fn>
double timed(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   outputs identical: %s\n", name.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "yes" : "NO");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    {
        const auto f = funcspec::TargetFunction::parse("sin(x)*chi(-pi,pi)");
        hermite::HermiteCoefficients a, b;
        const double ts = timed([&] { a = hermite::compute_bn(f, 120, cfg, Exec::serial); });
        const double tp = timed([&] { b = hermite::compute_bn(f, 120, cfg, Exec::parallel); });
        row("compute_bn N=120", ts, tp, a.b == b.b);
    }
    {
        const auto f = funcspec::TargetFunction::parse("(x-1)^2*chi(-1,2)");
        bool same = true;
        lsq::NormalSystem a = lsq::build_normal_system(f, 0, 0.01, 50, cfg);
        lsq::NormalSystem b = a;
        const double ts =
            timed([&] { a = lsq::build_normal_system(f, 40, 0.01, 150, cfg, Exec::serial); });
        const double tp =
            timed([&] { b = lsq::build_normal_system(f, 40, 0.01, 150, cfg, Exec::parallel); });
        for (int j = 0; j <= 40; ++j) same = same && a.rhs[j].to_double() == b.rhs[j].to_double();
        row("normal system rhs N=40", ts, tp, same);
    }
    {
        const auto f = funcspec::TargetFunction::parse("exp(-x^2)");
        lowfreq::GridFunction a, b;
        const double ts =
            timed([&] { a = lowfreq::inverse_transform_grid(f, 12.0, 0.01, cfg, Exec::serial); });
        const double tp = timed(
            [&] { b = lowfreq::inverse_transform_grid(f, 12.0, 0.01, cfg, Exec::parallel); });
        row("inverse transform grid", ts, tp, a.values == b.values);

        lowfreq::GridFunction ca, cb;
        const double cs = timed([&] { ca = lowfreq::gaussian_convolve(a, cfg, Exec::serial); });
        const double cp = timed([&] { cb = lowfreq::gaussian_convolve(b, cfg, Exec::parallel); });
        row("gaussian convolve", cs, cp, ca.values == cb.values);
    }
    return 0;
}
