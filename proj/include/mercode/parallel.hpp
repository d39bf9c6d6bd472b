#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mercode {

// Worker cap honored by every parallel loop in the library. MERCODE_THREADS
// overrides the OpenMP default; unset or invalid means "use all".
inline int thread_cap() {
    static int cap = [] {
        int hw = 1;
#ifdef _OPENMP
        hw = omp_get_max_threads();
#endif
        if (const char* env = std::getenv("MERCODE_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1 && v < hw) return v;
        }
        return hw;
    }();
    return cap;
}

}  // namespace mercode
