#include "bns/frozen_oracle.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

// Compares the serial reference oracle against the OpenMP kernel that
// distributes top-row entries across threads.

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n_max = argc > 1 ? std::atoi(argv[1]) : 13;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%4s %4s %12s %12s %8s\n", "n", "s", "serial[s]", "parallel[s]",
                "speedup");
    for (int n = 10; n <= n_max; ++n) {
        const int s = n / 4;  // representative mid-cap case
        auto t0 = std::chrono::steady_clock::now();
        const bns::ExactInt serial = bns::count_frozen_serial(n, s);
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const bns::ExactInt parallel = bns::count_frozen(n, s);
        const double tp = seconds_since(t0);

        if (serial != parallel) {
            std::fprintf(stderr, "MISMATCH at n=%d s=%d\n", n, s);
            return 1;
        }
        std::printf("%4d %4d %12.3f %12.3f %8.2f\n", n, s, ts, tp, ts / tp);
    }
    return 0;
}
