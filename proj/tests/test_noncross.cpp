#include <algorithm>
#include <set>

#include "catsort/formulas.hpp"
#include "catsort/noncross.hpp"
#include "catsort/textio.hpp"
#include "doctest.h"

using namespace catsort;

namespace {

NCPartition NC(std::initializer_list<std::initializer_list<int>> blocks, int k) {
    std::vector<std::vector<int>> b;
    for (auto blk : blocks) b.emplace_back(blk);
    return NCPartition::make(std::move(b), k);
}

}  // namespace

TEST_CASE("crossing detection") {
    CHECK_FALSE(is_noncrossing({{1, 3}, {2, 4}}, 4));
    CHECK(is_noncrossing({{1, 4}, {2, 3}}, 4));
    CHECK(is_noncrossing({{1, 2, 3, 4}}, 4));
    CHECK_THROWS_AS(is_noncrossing({{1, 2}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(is_noncrossing({{1}, {1, 2}}, 2), std::invalid_argument);
    // brute count over all 15 set partitions of [4]
    CHECK(all_noncrossing(4).size() == 14);
    for (int k = 0; k <= 8; ++k) CHECK(all_noncrossing(k).size() == catalan(k));
}

TEST_CASE("refinement order") {
    const auto mini = NC({{1}, {2}, {3}}, 3);
    for (const auto& p : all_noncrossing(3)) CHECK(nc_leq(mini, p));
    CHECK_FALSE(nc_leq(NC({{1, 2}, {3}}, 3), NC({{1, 3}, {2}}, 3)));
    CHECK(all_nc_intervals(3).size() == 12);
    CHECK(count_nc_intervals(3) == 12);
    for (int k = 0; k <= 6; ++k)
        CHECK(count_nc_intervals(k) == closed_form(Formula::kreweras_intervals, k));
    CHECK_THROWS_AS(nc_leq(NC({{1}}, 1), NC({{1}, {2}}, 2)), std::invalid_argument);
}

TEST_CASE("exposed blocks ordered right to left") {
    CHECK(exposed_blocks(NC({{1}, {2}, {3}}, 3)) ==
          std::vector<std::vector<int>>{{3}, {2}, {1}});
    CHECK(exposed_blocks(NC({{1, 4}, {2, 3}}, 4)) == std::vector<std::vector<int>>{{1, 4}});
    CHECK(exposed_blocks(NC({{1, 3}, {2}, {4}}, 4)) ==
          std::vector<std::vector<int>>{{4}, {1, 3}});
}

TEST_CASE("interval labels") {
    CHECK(interval_label(nc_root()) == 3);
    CHECK(interval_label(NCInterval{NC({{1}, {2}}, 2), NC({{1}, {2}}, 2)}) == 5);
    CHECK(interval_label(NCInterval{NC({{1}, {2}}, 2), NC({{1, 2}}, 2)}) == 4);
}

TEST_CASE("succession operations") {
    const auto kids = nc_children(nc_root());
    REQUIRE(kids.size() == 3);
    std::multiset<int> labels;
    for (const auto& kid : kids) labels.insert(interval_label(kid));
    CHECK(labels == std::multiset<int>{3, 4, 5});
    CHECK(kids[0].rho == NC({{1}, {2}}, 2));
    CHECK(kids[0].kappa == NC({{1}, {2}}, 2));

    // two levels of expansion hit every interval of [3] exactly once
    std::vector<NCInterval> level{nc_root()};
    for (int k = 2; k <= 5; ++k) {
        std::vector<NCInterval> next;
        for (const auto& iv : level) {
            const auto c = nc_children(iv);
            next.insert(next.end(), c.begin(), c.end());
        }
        level = std::move(next);
        std::set<NCInterval> seen(level.begin(), level.end());
        CHECK(seen.size() == level.size());
        const auto scan = all_nc_intervals(k);
        CHECK(seen == std::set<NCInterval>(scan.begin(), scan.end()));
        // label-set rule at each node of the previous level
        for (const auto& iv : level) {
            const int a = interval_label(iv);
            std::multiset<int> kid_labels;
            for (const auto& kid : nc_children(iv)) kid_labels.insert(interval_label(kid));
            std::multiset<int> want;
            for (int m = 3; m <= a + 2; ++m) want.insert(m);
            CHECK(kid_labels == want);
        }
    }
}

TEST_CASE("partition text format") {
    CHECK(format_nc_partition(NC({{1, 3}, {2}}, 3)) == "{1,3}{2}");
    const auto parsed = parse_nc_partition("{1,3}{2}");
    REQUIRE(parsed.has_value());
    CHECK(*parsed == NC({{1, 3}, {2}}, 3));
    CHECK(parse_nc_partition("{}")->ground() == 0);
    CHECK_FALSE(parse_nc_partition("{1,3}{2").has_value());
    CHECK_FALSE(parse_nc_partition("{1,3}{2,4}").has_value());  // crossing
    const auto iv = parse_nc_interval("{1,3}{2}{4}|{1,2,3}{4}");
    REQUIRE(iv.has_value());
    CHECK(format_nc_interval(*iv) == "{1,3}{2}{4}|{1,2,3}{4}");
    CHECK_FALSE(parse_nc_interval("{1,2}|{1}{2}").has_value());  // not refinement-ordered
}
