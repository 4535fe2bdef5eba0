// Benchmark of the two parallel kernels against their serial reference
// implementations: the zero-table batch fill and the X-ray grid evaluation.
// Results are checked for bit-identical agreement while timing, so the
// benchmark doubles as a determinism witness.
#include "seczeta/parallel.hpp"
#include "seczeta/xray.hpp"
#include "seczeta/zeros.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

using namespace seczeta;

namespace {

double now() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Timing {
    double serial = 0.0;
    double parallel = 0.0;
    bool identical = false;
};

void print_row(const char* name, const Timing& t) {
    std::printf("%-28s %9.3f s %9.3f s  %5.2fx  %s\n", name, t.serial,
                t.parallel, t.parallel > 0.0 ? t.serial / t.parallel : 0.0,
                t.identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    long zeros_count = 40;
    long zeros_digits = 30;
    long grid_n = 25;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--zeros")) zeros_count = std::atol(argv[i + 1]);
        if (!std::strcmp(argv[i], "--digits")) zeros_digits = std::atol(argv[i + 1]);
        if (!std::strcmp(argv[i], "--grid")) grid_n = std::atol(argv[i + 1]);
    }

    std::printf("threads available: %d\n", static_cast<int>(max_threads()));
    if (max_threads() == 1)
        std::printf("note: single hardware thread; expect speedup ~1.0x\n");
    std::printf("%-28s %11s %11s %7s\n", "kernel", "serial", "parallel", "ratio");

    {
        // Warm the per-precision zeta coefficient caches outside the timings.
        compute_zero_ordinates(std::min(zeros_count, 3L), zeros_digits, false);
        Timing t;
        double t0 = now();
        std::vector<Real> a = compute_zero_ordinates(zeros_count, zeros_digits, false);
        t.serial = now() - t0;
        t0 = now();
        std::vector<Real> b = compute_zero_ordinates(zeros_count, zeros_digits, true);
        t.parallel = now() - t0;
        t.identical = a.size() == b.size();
        for (std::size_t i = 0; t.identical && i < a.size(); ++i)
            t.identical = (a[i] - b[i]).is_zero() && a[i].prec() == b[i].prec();
        char label[64];
        std::snprintf(label, sizeof label, "zero table (%ld @ %ld digits)",
                      zeros_count, zeros_digits);
        print_row(label, t);
    }

    {
        XRayRegion region{-4.0, 3.0, 2.0, 9.0};
        // Warm the shared zero/arithmetic caches once so neither timed run
        // pays the one-time fill the other would then skip.
        xray_grid_eval(region, 2, 2, 10, false);
        Timing t;
        double t0 = now();
        std::vector<XRayGridValue> a = xray_grid_eval(region, grid_n, grid_n, 10, false);
        t.serial = now() - t0;
        t0 = now();
        std::vector<XRayGridValue> b = xray_grid_eval(region, grid_n, grid_n, 10, true);
        t.parallel = now() - t0;
        t.identical = a.size() == b.size();
        for (std::size_t i = 0; t.identical && i < a.size(); ++i)
            t.identical = std::memcmp(&a[i].re, &b[i].re, sizeof(double)) == 0 &&
                          std::memcmp(&a[i].im, &b[i].im, sizeof(double)) == 0 &&
                          a[i].pole == b[i].pole;
        char label[64];
        std::snprintf(label, sizeof label, "x-ray grid (%ldx%ld @ 10 digits)",
                      grid_n, grid_n);
        print_row(label, t);
    }
    return 0;
}
