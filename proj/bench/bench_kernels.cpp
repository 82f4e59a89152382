// Times the OpenMP counting kernels against their serial reference
// implementations. Usage: bench_kernels [--census N] [--avoid N] [--scan K]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "catsort/dyck.hpp"
#include "catsort/noncross.hpp"
#include "catsort/perm.hpp"
#include "catsort/stacksort.hpp"
#include "catsort/textio.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace catsort;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double timed(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, std::uint64_t value) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   value %llu\n", name,
                serial_s, parallel_s, serial_s / (parallel_s > 0 ? parallel_s : 1e-9),
                static_cast<unsigned long long>(value));
}

}  // namespace

int main(int argc, char** argv) {
    int census_n = 9;
    int avoid_n = 12;
    int scan_k = 8;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--census") == 0) census_n = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--avoid") == 0) avoid_n = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--scan") == 0) scan_k = std::atoi(argv[i + 1]);
    }
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    {
        std::uint64_t images_serial = 0, images_parallel = 0;
        const double ts = timed([&] { images_serial = serial::build_census(census_n).distinct_images(); });
        const double tp = timed([&] { images_parallel = detail::build_census_parallel(census_n).distinct_images(); });
        if (images_serial != images_parallel) {
            std::printf("census kernels disagree!\n");
            return 1;
        }
        report(("census S_" + std::to_string(census_n)).c_str(), ts, tp, images_serial);
    }
    {
        const auto p = *parse_pattern_set("231");
        std::uint64_t cs = 0, cp = 0;
        const double ts = timed([&] { cs = serial::count_avoiders(avoid_n, p); });
        const double tp = timed([&] { cp = count_avoiders(avoid_n, p); });
        if (cs != cp) {
            std::printf("avoider kernels disagree!\n");
            return 1;
        }
        report(("avoiders 231 n=" + std::to_string(avoid_n)).c_str(), ts, tp, cs);
    }
    {
        std::uint64_t cs = 0, cp = 0;
        const double ts = timed([&] { cs = serial::count_intervals(scan_k, PosetKind::tamari, scan_k); });
        const double tp = timed([&] { cp = count_intervals(scan_k, PosetKind::tamari, scan_k); });
        if (cs != cp) {
            std::printf("interval kernels disagree!\n");
            return 1;
        }
        report(("tamari scan k=" + std::to_string(scan_k)).c_str(), ts, tp, cs);
    }
    {
        std::uint64_t cs = 0, cp = 0;
        const double ts = timed([&] { cs = serial::count_nc_intervals(scan_k, scan_k); });
        const double tp = timed([&] { cp = count_nc_intervals(scan_k, scan_k); });
        if (cs != cp) {
            std::printf("refinement kernels disagree!\n");
            return 1;
        }
        report(("refinement scan k=" + std::to_string(scan_k)).c_str(), ts, tp, cs);
    }
    return 0;
}
