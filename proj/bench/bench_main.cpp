// Compares the serial reference kernels against the OpenMP ones and reports
// wall times and speedups. Workload sizes stay in the seconds range.

#include <chrono>
#include <cstdio>
#include <functional>

#include "hyperweil/admissibility.hpp"
#include "hyperweil/census.hpp"
#include "hyperweil/sieve.hpp"
#include "hyperweil/weil_enum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hyperweil;

namespace {

double time_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %10.3f s %10.3f s %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("compiled without OpenMP; both columns run serially\n");
#endif
    std::printf("%-34s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        int64_t ns = 0, np = 0;
        double ts = time_of([&] {
            enumerate_weil_serial(3, 13, [&](const WeilPolyCoeffs&) { ++ns; });
        });
        double tp = time_of([&] {
            enumerate_weil(3, 13, [&](const WeilPolyCoeffs&) { ++np; }, true);
        });
        row("weil enumeration (g=3, q=13)", ts, tp);
        if (ns != np) std::printf("  MISMATCH: %lld vs %lld\n", (long long)ns, (long long)np);
    }

    {
        // an inadmissible genus-4 class forces the full lift scan
        std::vector<uint8_t> parities;
        const ClassTable& table = admissible_classes_cached(4);
        for (uint32_t mask = 0; mask < 16; ++mask) {
            if (!table.mask_admissible(mask)) {
                parities = parities_from_mask(mask, 4);
                break;
            }
        }
        bool rs = false, rp = false;
        double ts = time_of([&] { rs = class_ruled_out_serial(parities, 4, 4); });
        double tp = time_of([&] { rp = class_ruled_out(parities, 4, 4); });
        row("class lift sieve (g=4, M=4)", ts, tp);
        if (rs != rp) std::printf("  MISMATCH\n");
    }

    {
        CensusSummary ss, sp;
        double ts = time_of([&] { ss = census_serial(2, 5, CensusMode::Exhaustive()); });
        double tp = time_of([&] { sp = census(2, 5, CensusMode::Exhaustive()); });
        row("curve census (g=2, q=5)", ts, tp);
        if (ss.curves != sp.curves || ss.violations != sp.violations) std::printf("  MISMATCH\n");
    }
    return 0;
}
