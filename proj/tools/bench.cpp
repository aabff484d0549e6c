#include <omp.h>

#include <cstdio>
#include <string>

#include "latkit/glue.hpp"

namespace {

using namespace latkit;

struct Timing {
    double serial_ms;
    double parallel_ms;
    bool equal;
};

template <typename SerialFn, typename ParallelFn>
Timing run(SerialFn serial, ParallelFn parallel, int iters) {
    auto s0 = omp_get_wtime();
    auto serial_out = serial();
    for (int i = 1; i < iters; ++i) serial_out = serial();
    auto s1 = omp_get_wtime();
    auto parallel_out = parallel();
    for (int i = 1; i < iters; ++i) parallel_out = parallel();
    auto s2 = omp_get_wtime();
    return {(s1 - s0) * 1e3 / iters, (s2 - s1) * 1e3 / iters,
            serial_out == parallel_out};
}

void report(const std::string& name, const Timing& t) {
    std::printf("%-34s %10.2f ms %10.2f ms %7.2fx  %s\n", name.c_str(), t.serial_ms,
                t.parallel_ms, t.serial_ms / t.parallel_ms,
                t.equal ? "identical" : "MISMATCH");
}

IntegerLattice repeat_sum(const ADEType& t, int copies) {
    std::vector<IntegerLattice> parts(copies, make_ade(t));
    return direct_sum(std::span<const IntegerLattice>(parts));
}

}  // namespace

int main(int argc, char** argv) {
    int iters = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, iterations per kernel: %d\n", omp_get_max_threads(),
                iters);
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        IntegerLattice l = repeat_sum(ADEType('E', 8), 3);  // rank 24, 720 roots
        report("roots E8+E8+E8",
               run([&] { return root_vectors_serial(l); },
                   [&] { return root_vectors(l); }, iters));
    }
    {
        IntegerLattice l = direct_sum({repeat_sum(ADEType('D', 12), 2)});  // rank 24
        report("roots D12+D12",
               run([&] { return root_vectors_serial(l); },
                   [&] { return root_vectors(l); }, iters));
    }
    {
        DiscriminantGroup g = discriminant_group(repeat_sum(ADEType('A', 2), 7));
        report("isotropic scan A2^7 (|A|=2187)",
               run([&] { return isotropic_elements_serial(g); },
                   [&] { return isotropic_elements(g); }, iters));
    }
    {
        DiscriminantGroup g = discriminant_group(repeat_sum(ADEType('A', 4), 5));
        report("isotropic scan A4^5 (|A|=3125)",
               run([&] { return isotropic_elements_serial(g, 4000); },
                   [&] { return isotropic_elements(g, 4000); }, iters));
    }
    {
        DiscriminantGroup g = discriminant_group(repeat_sum(ADEType('A', 1), 10));
        report("isotropic scan A1^10 (|A|=1024)",
               run([&] { return isotropic_elements_serial(g); },
                   [&] { return isotropic_elements(g); }, iters));
    }
    return 0;
}
