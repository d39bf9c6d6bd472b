#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "mercode/ntt.hpp"
#include "mercode/parallel.hpp"
#include "mercode/rng.hpp"

using namespace mercode;

// Compares the serial reference transform against the OpenMP kernel on a
// doubling ladder and cross-checks their outputs elementwise.

static double time_ms(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int main() {
    Field F(2013265921);
    Rng rng(1);
    std::cout << "threads=" << thread_cap() << "\n";
    std::cout << "size,serial_ms,omp_ms,speedup\n";
    for (size_t lg = 14; lg <= 20; ++lg) {
        const size_t n = size_t(1) << lg;
        std::vector<u32> base(n);
        for (u32& v : base) v = u32(rng.below(F.p));
        const int reps = lg < 18 ? 8 : 3;

        std::vector<u32> a = base, b = base;
        ntt_serial(a, false, F);
        ntt_omp(b, false, F);
        if (a != b) {
            std::cerr << "kernel mismatch at size " << n << "\n";
            return 1;
        }

        const double ts = time_ms(
            [&] {
                std::vector<u32> v = base;
                ntt_serial(v, false, F);
            },
            reps);
        const double tp = time_ms(
            [&] {
                std::vector<u32> v = base;
                ntt_omp(v, false, F);
            },
            reps);
        std::cout << n << ',' << std::fixed << std::setprecision(3) << ts << ',' << tp << ','
                  << std::setprecision(2) << ts / tp << "\n";
    }
    return 0;
}
