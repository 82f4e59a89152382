#include <algorithm>
#include <numeric>
#include <set>

#include "catsort/formulas.hpp"
#include "catsort/perm.hpp"
#include "catsort/textio.hpp"
#include "doctest.h"

using namespace catsort;

namespace {

Perm P(std::initializer_list<int> v) { return Perm(std::vector<int>(v)); }

template <class Fn>
void each_perm(int n, Fn&& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// rank-by-value oracle, independent of normalize()
Perm normalize_oracle(const Perm& p) {
    std::vector<int> sorted = p.entries();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (int x : p.entries())
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
    return Perm(out);
}

}  // namespace

TEST_CASE("normalize ranks entries by value") {
    CHECK(normalize(P({2, 4, 9, 6})) == P({1, 2, 4, 3}));
    CHECK(normalize(P({1, 2, 3})) == P({1, 2, 3}));
    CHECK(normalize(P({4, 7, 2, 1, 9})) == normalize_oracle(P({4, 7, 2, 1, 9})));
    CHECK(normalize(P({4, 7, 2, 1, 9})) == P({3, 4, 2, 1, 5}));
    CHECK(normalize(Perm()) == Perm());
    // idempotent on normalized input
    each_perm(5, [](const Perm& p) { CHECK(normalize(p) == p); });
}

TEST_CASE("descents by direct scan") {
    CHECK(descents(P({3, 5, 2, 4, 1})) == std::vector<int>{2, 4});
    CHECK(descents(P({1, 2, 3, 4, 5})).empty());
    CHECK(descents(P({2, 1})) == std::vector<int>{1});
    CHECK(descents(Perm()).empty());
    each_perm(5, [](const Perm& p) {
        std::vector<int> want;
        for (int i = 1; i < p.size(); ++i)
            if (p.at(i) > p.at(i + 1)) want.push_back(i);
        CHECK(descents(p) == want);
    });
}

TEST_CASE("symmetries") {
    // position-of-value oracle
    CHECK(inverted(P({2, 3, 1})) == P({3, 1, 2}));
    // two-point plot rotation
    CHECK(rotated(P({2, 1})) == P({1, 2}));
    each_perm(6, [](const Perm& p) {
        CHECK(reversed(reversed(p)) == p);
        CHECK(inverted(inverted(p)) == p);
        CHECK(rotated_inv(rotated(p)) == p);
        CHECK(rotated(p) == reversed(inverted(p)));
    });
    // reversal complements the descent count
    for (int n = 1; n <= 7; ++n)
        each_perm(n, [n](const Perm& p) {
            CHECK(descent_count(reversed(p)) == n - 1 - descent_count(p));
        });
    CHECK_THROWS_AS(inverted(P({2, 4})), std::invalid_argument);
}

TEST_CASE("sums place one plot relative to another") {
    // shift-and-concatenate oracle
    CHECK(direct_sum(P({2, 1}), P({1, 2})) == P({2, 1, 3, 4}));
    CHECK(direct_sum(Perm(), P({3, 1, 2})) == P({3, 1, 2}));
    CHECK(skew_sum(P({1}), P({1})) == P({2, 1}));
    CHECK(skew_sum(P({2, 1}), P({1, 2})) == P({4, 3, 1, 2}));
}

TEST_CASE("pattern containment") {
    CHECK_FALSE(contains(P({3, 2, 5, 4, 1, 6, 7}), P({3, 1, 2})));
    CHECK_FALSE(contains(P({2, 1, 5, 4, 3, 6, 7}), P({4, 1, 3, 2})));
    CHECK(contains(P({3, 2, 5, 4, 1, 6, 7}), P({1, 2, 3})));
    for (int n = 1; n <= 5; ++n)
        each_perm(n, [](const Perm& p) { CHECK(contains(p, P({1}))); });
    CHECK_FALSE(contains(Perm(), P({1})));
    // containment is invariant under normalization of the text
    CHECK(contains(P({2, 4, 9, 6}), P({1, 3, 2})) == contains(P({1, 2, 4, 3}), P({1, 3, 2})));
    auto occ = find_occurrence(P({3, 5, 2, 4, 1}), P({2, 3, 1}));
    REQUIRE(occ.has_value());
    CHECK(occ->size() == 3);
}

TEST_CASE("avoider enumeration is lexicographic, duplicate-free, Catalan-counted") {
    const std::vector<Perm> single231 = {P({2, 3, 1})};
    for (int n = 0; n <= 8; ++n) {
        const auto av = avoiders(n, single231);
        CHECK(av.size() == catalan(n));
        CHECK(std::is_sorted(av.begin(), av.end()));
        CHECK(std::adjacent_find(av.begin(), av.end()) == av.end());
    }
    for (const char* digits : {"312", "132"}) {
        const auto pats = *parse_pattern_set(digits);
        for (int n = 0; n <= 8; ++n) CHECK(count_avoiders(n, pats) == catalan(n));
    }
    CHECK(avoiders(0, single231).size() == 1);
    CHECK(avoiders(0, single231).front() == Perm());
    const auto pats2 = *parse_pattern_set("132;231");
    CHECK(avoiders(4, pats2).size() == 8);
    // brute filter oracle
    for (int n = 0; n <= 6; ++n) {
        std::set<Perm> brute;
        each_perm(n, [&](const Perm& p) {
            if (avoids_all(p, pats2)) brute.insert(p);
        });
        const auto fast = avoiders(n, pats2);
        CHECK(brute == std::set<Perm>(fast.begin(), fast.end()));
    }
}

TEST_CASE("avoider counts at depth") {
    for (const char* digits : {"231", "312", "132"}) {
        const auto pats = *parse_pattern_set(digits);
        CHECK(count_avoiders(10, pats) == 16796);
    }
    CHECK(serial::count_avoiders(10, *parse_pattern_set("312")) == 16796);
}

TEST_CASE("permutation text round trips") {
    CHECK(parse_perm("3,5,2,4,1") == P({3, 5, 2, 4, 1}));
    CHECK(parse_perm("35241") == P({3, 5, 2, 4, 1}));
    CHECK(parse_perm("10,2,1") == P({10, 2, 1}));
    CHECK(parse_perm("") == Perm());
    CHECK_FALSE(parse_perm("3,3").has_value());
    CHECK_FALSE(parse_perm("a").has_value());
    CHECK(format_perm(P({3, 5, 2, 4, 1})) == "3,5,2,4,1");
    const auto pats = parse_pattern_set("231;4123");
    REQUIRE(pats.has_value());
    CHECK(pats->size() == 2);
    CHECK((*pats)[1] == P({4, 1, 2, 3}));
    CHECK(format_pattern_set(*pats) == "231;4123");
}
