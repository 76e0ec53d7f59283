// Small throughput harness: solves a batch of dense random instances with the
// top-level driver and reports per-instance wall time. Independent instances
// are fanned across OpenMP workers; each worker owns its solver state.

#include "driver.hpp"
#include "gen.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main(int argc, char **argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 200;
    int count = argc > 2 ? std::atoi(argv[2]) : 8;
    double density = argc > 3 ? std::atof(argv[3]) : 0.55;

    std::vector<graph> inst(count);
    for (int i = 0; i < count; i++) inst[i] = gen_two_connected(n, density, 1000 + i);

    std::vector<double> ms(count, 0.0);
    std::vector<int> len(count, 0);
    std::vector<char> ok(count, 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; i++) {
        auto t0 = std::chrono::steady_clock::now();
        ldc_verdict v = solve_ldc({inst[i], {}, 0});
        auto t1 = std::chrono::steady_clock::now();
        ms[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        ok[i] = v.yes && v.cert && verify_certificate(inst[i], *v.cert);
        len[i] = v.cert ? v.cert->length() : 0;
    }

    double total = 0, worst = 0;
    for (int i = 0; i < count; i++) {
        std::printf("instance %2d  n=%d  cycle=%3d  %s  %8.2f ms\n", i, n, len[i],
                    ok[i] ? "ok " : "BAD", ms[i]);
        total += ms[i];
        if (ms[i] > worst) worst = ms[i];
        if (!ok[i]) return 1;
    }
    std::printf("total %.2f ms, worst %.2f ms over %d instances\n", total, worst, count);
    return 0;
}
