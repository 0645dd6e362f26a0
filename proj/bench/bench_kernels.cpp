// Timing comparison of the OpenMP kernels against their serial twins. The two
// must agree bitwise; the interesting output is the speedup at realistic and
// oversized problem sizes.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "splitwave/field.hpp"
#include "splitwave/kernels.hpp"

using namespace splitwave;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

Field random_field(const PeriodicGrid& grid, int max_mode, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53 - 0.5; };
    std::vector<std::complex<double>> c(grid.size(), 0.0);
    for (int m = 1; m <= max_mode; ++m) {
        c[m] = std::complex<double>(uniform(), uniform()) / double(max_mode);
        c[grid.size() - m] = std::conj(c[m]);
    }
    return Field::from_spectrum(grid, c);
}

template <typename F>
double best_of(int repeats, F&& run) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const double t0 = now_seconds();
        run();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    bool all_equal = true;

    std::printf("interpolate_batch (batch = 8n points)\n");
    std::printf("%8s %12s %12s %9s\n", "n", "serial_s", "parallel_s", "speedup");
    for (int n : {256, 1024, 4096}) {
        const PeriodicGrid grid(n, 2.0 * pi);
        const Field f = random_field(grid, n / 3, 42);
        std::mt19937_64 rng(7);
        std::vector<double> pts(8 * n);
        for (double& p : pts)
            p = static_cast<double>(rng() >> 11) * 0x1p-53 * grid.length();

        std::vector<double> serial_out, parallel_out;
        const double ts = best_of(3, [&] {
            serial_out = kernels::serial::interpolate_batch(f.spectrum(), grid, pts);
        });
        const double tp = best_of(3, [&] {
            parallel_out = kernels::interpolate_batch(f.spectrum(), grid, pts);
        });
        all_equal = all_equal && bitwise_equal(serial_out, parallel_out);
        std::printf("%8d %12.6f %12.6f %8.2fx\n", n, ts, tp, ts / tp);
    }

    std::printf("\ncharacteristic_solve (t = 0.4 shock-guarded sine)\n");
    std::printf("%8s %12s %12s %9s\n", "n", "serial_s", "parallel_s", "speedup");
    for (int n : {256, 1024, 4096}) {
        const PeriodicGrid grid(n, 2.0 * pi);
        std::vector<double> s(n);
        for (int j = 0; j < n; ++j) s[j] = std::sin(grid.node(j));
        const Field u0 = Field::from_samples(grid, std::move(s));

        kernels::CharacteristicResult serial_out, parallel_out;
        const double ts = best_of(3, [&] {
            serial_out = kernels::serial::characteristic_solve(
                u0.spectrum(), grid, u0.samples(), 0.4, 1.0 / 1.4, 1e-12, 100);
        });
        const double tp = best_of(3, [&] {
            parallel_out = kernels::characteristic_solve(
                u0.spectrum(), grid, u0.samples(), 0.4, 1.0 / 1.4, 1e-12, 100);
        });
        all_equal = all_equal && bitwise_equal(serial_out.values, parallel_out.values);
        std::printf("%8d %12.6f %12.6f %8.2fx\n", n, ts, tp, ts / tp);
    }

    std::printf("\nserial and parallel outputs %s\n",
                all_equal ? "agree bitwise" : "DIFFER");
    return all_equal ? 0 : 1;
}
