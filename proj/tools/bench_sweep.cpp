// Compares the serial reference signature sweep against the OpenMP sweep on
// a generated instance and reports timings and agreement.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>

#include "dpc/coloring.hpp"
#include "dpc/generator.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dpc;

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 12;
    std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;
    int max_jobs =
#ifdef _OPENMP
        omp_get_max_threads();
#else
        1;
#endif

    GenConfig cfg;
    cfg.target_vertices = n;
    cfg.seed = seed;
    cfg.max_cyclomatic = 6;
    auto g = std::make_shared<const PlaneGraph>(generate(cfg));
    SignatureClasses classes(g, 3);
    std::cout << "vertices " << g->num_vertices() << "  edges " << g->num_edges() << "  classes "
              << classes.count() << "\n";

    auto time = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        SweepResult r = fn();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return std::make_pair(r, s);
    };

    auto [serial, t_serial] = time([&] { return sweep_signatures_serial(g, 3); });
    std::cout << "serial    " << t_serial << " s  verdict " << serial.all_colorable << "\n";

    for (int jobs = 1; jobs <= max_jobs; jobs *= 2) {
        auto [par, t_par] = time([&] { return sweep_signatures_parallel(g, 3, jobs); });
        bool agree = par.all_colorable == serial.all_colorable && par.failing_class == serial.failing_class;
        std::cout << "parallel " << jobs << "  " << t_par << " s  speedup " << t_serial / t_par
                  << "  agree " << (agree ? "yes" : "NO") << "\n";
        if (!agree) return 1;
    }
    return 0;
}
