// Timing harness for the two OpenMP kernels against their serial
// reference implementations: operator-matrix construction and
// fraction-free rank. Checks agreement while it measures.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "nushuffle/elimination.hpp"
#include "nushuffle/operators.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

void report(const char* kernel, double serial, double parallel, bool match) {
    std::printf("%-22s serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n",
                kernel, serial, parallel, serial / parallel,
                match ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    int n = 5;
    int k = 2;
    CLI::App app{"serial vs OpenMP kernel timings"};
    app.add_option("--n", n, "sequence length (default 5)");
    app.add_option("--k", k, "operator index (default 2)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    double t0 = now_seconds();
    nushuffle::OperatorMatrix serial_m = nushuffle::nu_matrix_sn_serial(n, k);
    double t1 = now_seconds();
    nushuffle::OperatorMatrix parallel_m = nushuffle::nu_matrix_sn(n, k);
    double t2 = now_seconds();
    report("matrix construction", t1 - t0, t2 - t1,
           serial_m.entries == parallel_m.entries);

    // Rank of the operator itself: the kernel is large, so the pivot walk
    // exercises both the elimination and the early-exit path.
    t0 = now_seconds();
    std::size_t r_serial = nushuffle::rank_serial(serial_m.entries);
    t1 = now_seconds();
    std::size_t r_parallel = nushuffle::rank(parallel_m.entries);
    t2 = now_seconds();
    report("fraction-free rank", t1 - t0, t2 - t1, r_serial == r_parallel);

    std::printf("rank(nu_%d on S_%d) = %zu of %zu\n", k, n, r_parallel,
                parallel_m.entries.rows());
    return 0;
}
