// Timing comparison between the OpenMP kernels and their serial reference
// implementations. Build target only; not part of ctest.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zk/hochster.hpp"
#include "zk/pogorelov.hpp"
#include "zk/polytope.hpp"

using namespace zk;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto start = std::chrono::steady_clock::now();
        fn();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0);
}

// A flag-but-not-Pogorelov associahedron-like polytope would be nicer, but
// a disjoint-looking wide complex stresses the subset loop just as well.
SimplicialComplex wide_complex() {
    std::vector<std::vector<int>> maximal;
    for (int i = 1; i <= 16; ++i) maximal.push_back({i, i % 16 + 1});  // 16-cycle
    for (int i = 1; i <= 8; ++i) maximal.push_back({i, i + 8});
    return SimplicialComplex::build(maximal, 16);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    SimplicialComplex icosa = dual_complex(SimplePolytope3::dodecahedron());
    BettiTable ref, par;
    double s1 = time_best_of(3, [&] { ref = betti_numbers_serial(icosa); });
    double p1 = time_best_of(3, [&] { par = betti_numbers(icosa); });
    row("betti: icosahedron (2^12 subsets)", s1, p1);
    if (!(ref == par)) {
        std::printf("MISMATCH between serial and parallel betti tables\n");
        return 1;
    }

    SimplicialComplex wide = wide_complex();
    double s2 = time_best_of(1, [&] { ref = betti_numbers_serial(wide); });
    double p2 = time_best_of(1, [&] { par = betti_numbers(wide); });
    row("betti: 16-vertex graph (2^16)", s2, p2);
    if (!(ref == par)) {
        std::printf("MISMATCH between serial and parallel betti tables\n");
        return 1;
    }

    std::vector<ObstructionHit> h1, h2;
    double s3 = time_best_of(3, [&] { h1 = obstruction_scan_serial(wide); });
    double p3 = time_best_of(3, [&] { h2 = obstruction_scan(wide); });
    row("obstruction scan: C(16,6) subsets", s3, p3);
    if (!(h1 == h2)) {
        std::printf("MISMATCH between serial and parallel scans\n");
        return 1;
    }
    return 0;
}
