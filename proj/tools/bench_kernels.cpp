// Timing comparison of the OpenMP kernels against their serial references:
// dense symmetric matvec (the power-iteration workhorse) and SIS trials.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "tdiff/diffusion.hpp"
#include "tdiff/generators.hpp"

using namespace tdiff;
using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 1500;
    int reps = argc > 2 ? std::atoi(argv[2]) : 50;

    std::printf("threads: %d\n", omp_get_max_threads());

    Graph g = barabasiAlbert(n, 5, 7);
    std::vector<double> x(n, 1.0), y(n);

    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) matvec_serial(g.matrix(), x, y);
    double serial = seconds(t0);

    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) matvec(g.matrix(), x, y);
    double parallel = seconds(t0);

    std::printf("matvec n=%d reps=%d  serial %.3fs  omp %.3fs  speedup %.2fx\n", n, reps,
                serial, parallel, serial / parallel);

    TargetSet s = percentileTarget(g, 90.0, 7);
    SISParams p;
    p.trials = 500;
    t0 = Clock::now();
    SimulationResult rs = simulateSISSerial(g, s, p);
    serial = seconds(t0);
    t0 = Clock::now();
    SimulationResult rp = simulateSIS(g, s, p);
    parallel = seconds(t0);
    bool match = rs.perTrial == rp.perTrial;

    std::printf("sis trials=%d  serial %.3fs  omp %.3fs  speedup %.2fx  identical: %s\n",
                p.trials, serial, parallel, serial / parallel, match ? "yes" : "NO");
    return match ? 0 : 1;
}
