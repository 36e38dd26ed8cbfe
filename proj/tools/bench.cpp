// Times the OpenMP kernels against their serial references on a fixed
// workload: the inner-witness sweep and a parameter-grid scan.
#include <chrono>
#include <cstdio>

#include "rotkit/dfpoly.hpp"
#include "rotkit/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rotkit;
using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif

    DigitWord w = DigitWord::parse("(2220)");
    {
        auto t0 = clk::now();
        InnerResult ref = inner_polytope_reference(w, 11);
        double ref_ms = ms_since(t0);
        t0 = clk::now();
        InnerResult fast = inner_polytope(w, 11);
        double fast_ms = ms_since(t0);
        std::printf("inner witnesses p<=11   reference %8.1f ms   lyndon+omp %8.1f ms   equal=%d\n",
                    ref_ms, fast_ms, ref.poly == fast.poly);
    }
    {
        auto t0 = clk::now();
        PlateauList ser = scan_serial(Rat(0), Rat(1), 96, 8);
        double ser_ms = ms_since(t0);
        t0 = clk::now();
        PlateauList par = scan(Rat(0), Rat(1), 96, 8);
        double par_ms = ms_since(t0);
        bool equal = ser.plateau_id == par.plateau_id && ser.n_vertices == par.n_vertices;
        std::printf("scan 96 points depth 8  serial    %8.1f ms   parallel   %8.1f ms   equal=%d\n",
                    ser_ms, par_ms, equal);
    }
    return 0;
}
