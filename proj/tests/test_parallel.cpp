// The OpenMP kernels must agree with their serial reference
// implementations bit for bit, at any thread count.

#include <algorithm>
#include <vector>

#include "catsort/dyck.hpp"
#include "catsort/noncross.hpp"
#include "catsort/perm.hpp"
#include "catsort/stacksort.hpp"
#include "catsort/textio.hpp"
#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace catsort;

TEST_CASE("census kernels agree") {
    for (int n : {0, 1, 5, 7}) {
        const FertilityCensus ref = serial::build_census(n);
        const FertilityCensus par = detail::build_census_parallel(n);
        CHECK(ref.distinct_images() == par.distinct_images());
        std::vector<int> v;
        for (int x = 1; x <= n; ++x) v.push_back(x);
        std::sort(v.begin(), v.end());
        do {
            const Perm p(v);
            CHECK(ref.fertility_of(p) == par.fertility_of(p));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("avoider counting kernels agree") {
    const auto p231 = *parse_pattern_set("231");
    const auto two = *parse_pattern_set("132;4312");
    for (int n = 0; n <= 9; ++n) {
        CHECK(count_avoiders(n, p231) == serial::count_avoiders(n, p231));
        CHECK(count_avoiders(n, two) == serial::count_avoiders(n, two));
    }
}

TEST_CASE("uniquely sorted counting kernels agree") {
    const auto cls = *parse_pattern_set("312;1342");
    for (int k = 0; k <= 4; ++k)
        CHECK(count_uniquely_sorted(k, cls) == serial::count_uniquely_sorted(k, cls));
    for (int k = 0; k <= 4; ++k)
        CHECK(count_uniquely_sorted(k, {}) == serial::count_uniquely_sorted(k, {}));
}

TEST_CASE("interval scan kernels agree") {
    for (int k = 0; k <= 6; ++k)
        for (PosetKind kind : {PosetKind::stanley, PosetKind::tamari, PosetKind::pallo, PosetKind::antichain})
            CHECK(count_intervals(k, kind) == serial::count_intervals(k, kind));
    for (int k = 0; k <= 6; ++k)
        CHECK(count_nc_intervals(k) == serial::count_nc_intervals(k));
}

#ifdef _OPENMP
TEST_CASE("results are stable across thread counts") {
    const auto p312 = *parse_pattern_set("312");
    const int saved = omp_get_max_threads();
    std::uint64_t first = 0;
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        const std::uint64_t c = count_avoiders(9, p312);
        if (first == 0)
            first = c;
        else
            CHECK(c == first);
        CHECK(count_intervals(5, PosetKind::tamari) == 399);
    }
    omp_set_num_threads(saved);
}
#endif
