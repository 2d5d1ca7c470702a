// timing comparison of the serial and OpenMP truncated-series products on the
// marker-ring workloads that dominate the operator expansions
#include <chrono>
#include <cstdio>

#include "phylogf/algebra.hpp"
#include "phylogf/series.hpp"

using namespace phylogf;

static double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 400;
    int k = argc > 2 ? std::atoi(argv[2]) : 3;
    if (N < 8 || k < 0 || k > 3) {
        std::fprintf(stderr, "usage: bench_series [order] [markers<=3]\n");
        return 2;
    }

    // a realistic operand pair: the fully marked path against the marked trees
    MultilinearElem none(k);
    MleSeries p = build_P(N, k > 0 ? MultilinearElem::gen_sum(k, (1u << k) - 1) : none,
                          k > 1 ? MultilinearElem::gen(k, 2) : none,
                          k > 2 ? MultilinearElem::gen(k, 3) : none);
    MleSeries m = build_M(N, k > 0 ? MultilinearElem::gen(k, 1) : none);

    auto t0 = std::chrono::steady_clock::now();
    MleSeries serial = ts_mul_serial(p, m);
    double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    MleSeries parallel = ts_mul(p, m);
    double t_parallel = seconds_since(t0);

    for (int i = 0; i <= N; ++i)
        if (serial.c[i] != parallel.c[i]) {
            std::fprintf(stderr, "mismatch at z^%d\n", i);
            return 1;
        }

    std::printf("order %d, %d markers\n", N, k);
    std::printf("  serial    %8.3f s\n", t_serial);
    std::printf("  parallel  %8.3f s\n", t_parallel);
    std::printf("  speedup   %8.2fx\n", t_parallel > 0 ? t_serial / t_parallel : 0.0);
    return 0;
}
