#include <algorithm>
#include <numeric>
#include <set>

#include "catsort/formulas.hpp"
#include "catsort/stacksort.hpp"
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

// literal recursion s(LnR) = s(L) s(R) n, the oracle for the simulation
Perm s_recursive(const Perm& p) {
    if (p.size() <= 1) return p;
    const std::vector<int> v = p.entries();
    std::size_t pos = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[pos]) pos = i;
    std::vector<int> out;
    if (pos > 0) {
        const Perm left = s_recursive(Perm(std::vector<int>(v.begin(), v.begin() + static_cast<long>(pos))));
        out.insert(out.end(), left.entries().begin(), left.entries().end());
    }
    if (pos + 1 < v.size()) {
        const Perm right = s_recursive(Perm(std::vector<int>(v.begin() + static_cast<long>(pos) + 1, v.end())));
        out.insert(out.end(), right.entries().begin(), right.entries().end());
    }
    out.push_back(v[pos]);
    return Perm(out);
}

}  // namespace

TEST_CASE("stack sort matches the recursion") {
    CHECK(stack_sort(P({3, 5, 2, 4, 1})) == P({3, 2, 1, 4, 5}));
    CHECK(stack_sort(P({2, 3, 1})) == P({2, 1, 3}));
    CHECK(stack_sort(Perm::identity(6)) == Perm::identity(6));
    CHECK(stack_sort(Perm()) == Perm());
    for (int n = 0; n <= 7; ++n)
        each_perm(n, [](const Perm& p) { CHECK(stack_sort(p) == s_recursive(p)); });
}

TEST_CASE("iterating the sort n-1 times sorts") {
    for (int n = 1; n <= 7; ++n)
        each_perm(n, [n](const Perm& p) {
            Perm q = p;
            for (int t = 1; t < n; ++t) q = stack_sort(q);
            CHECK(q == Perm::identity(n));
        });
}

TEST_CASE("canonical hook configuration") {
    const Perm plotperm = *parse_perm("2,7,3,5,9,4,8,1,6,10,11,12");
    const auto cfg = canonical_hooks(plotperm);
    REQUIRE(cfg.has_value());
    REQUIRE(cfg->hooks.size() == 3);
    // the middle descent top (5,9) hooks to (11,11)
    CHECK(cfg->hooks[1].sw == 5);
    CHECK(plotperm.at(cfg->hooks[1].sw) == 9);
    CHECK(cfg->hooks[1].ne == 11);
    CHECK(plotperm.at(cfg->hooks[1].ne) == 11);

    CHECK(canonical_hooks(Perm::identity(5))->hooks.empty());
    CHECK_FALSE(canonical_hooks(*parse_perm("51427638")).has_value());

    // southwest endpoints are exactly the descents, in order
    each_perm(6, [](const Perm& p) {
        const auto c = canonical_hooks(p);
        if (!c) return;
        std::vector<int> sws;
        for (const Hook& h : c->hooks) {
            sws.push_back(h.sw);
            CHECK(h.sw < h.ne);
            CHECK(p.at(h.sw) < p.at(h.ne));
        }
        CHECK(sws == descents(p));
    });
}

TEST_CASE("sortedness and unique sortedness") {
    CHECK_FALSE(is_sorted(*parse_perm("51427638")));
    CHECK(is_sorted(Perm::identity(4)));
    CHECK(is_sorted(*parse_perm("3254167")));
    CHECK(is_uniquely_sorted(*parse_perm("2154367")));
    CHECK_FALSE(is_uniquely_sorted(Perm::identity(5)));
    for (int n = 2; n <= 6; n += 2)
        each_perm(n, [](const Perm& p) { CHECK_FALSE(is_uniquely_sorted(p)); });
}

TEST_CASE("fertility agrees between methods and with sortedness") {
    CHECK(fertility(P({1}), FertilityMethod::brute) == 1);
    CHECK(fertility(P({2, 1, 3}), FertilityMethod::brute) == 1);
    for (int n = 1; n <= 6; ++n)
        CHECK(fertility(Perm::identity(n), FertilityMethod::brute) == catalan(n));
    for (int n = 1; n <= 6; ++n) {
        auto census = fertility_census(n);
        each_perm(n, [&](const Perm& p) {
            const std::uint64_t f = census->fertility_of(p);
            CHECK((f >= 1) == is_sorted(p));
            CHECK((f == 1) == is_uniquely_sorted(p));
        });
    }
    // census equals brute on a spot sample
    auto census6 = fertility_census(6);
    int sampled = 0;
    each_perm(6, [&](const Perm& p) {
        if (++sampled % 97 != 0) return;
        CHECK(census6->fertility_of(p) == fertility(p, FertilityMethod::brute));
    });
    CHECK_THROWS_AS(fertility(Perm::identity(12), FertilityMethod::brute), guard_error);
}

TEST_CASE("deficiency") {
    CHECK(deficiency(*parse_perm("51427638")) == 2);
    CHECK(deficiency(Perm::identity(5)) == 0);
    CHECK(deficiency(P({2, 1})) == 1);
    each_perm(6, [](const Perm& p) {
        const int l = deficiency(p);
        CHECK((l == 0) == is_sorted(p));
        if (l > 0) CHECK_FALSE(is_sorted(direct_sum(p, Perm::identity(l - 1))));
        CHECK(is_sorted(direct_sum(p, Perm::identity(l))));
    });
}

TEST_CASE("uniquely sorted enumeration") {
    CHECK(uniquely_sorted(1, {}) == std::vector<Perm>{P({2, 1, 3})});
    CHECK(uniquely_sorted(2, *parse_pattern_set("231;321")) == std::vector<Perm>{P({2, 1, 4, 3, 5})});
    CHECK(uniquely_sorted(2, *parse_pattern_set("132;231;312")) == std::vector<Perm>{P({3, 2, 1, 4, 5})});
    // pruned stream equals the census filter
    for (int k = 0; k <= 3; ++k) {
        auto census = fertility_census(2 * k + 1);
        std::set<Perm> truth;
        each_perm(2 * k + 1, [&](const Perm& p) {
            if (census->fertility_of(p) == 1) truth.insert(p);
        });
        const auto got = uniquely_sorted(k, {});
        CHECK(truth == std::set<Perm>(got.begin(), got.end()));
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
    CHECK_THROWS_AS(uniquely_sorted(6, {}), guard_error);
}

TEST_CASE("census counts follow the convolution recurrence") {
    const auto lassalle = lassalle_numbers(5);  // 1 1 5 56 1092
    CHECK(lassalle == std::vector<std::uint64_t>{1, 1, 5, 56, 1092});
    for (int k = 0; k <= 3; ++k)
        CHECK(count_uniquely_sorted(k, {}) == lassalle[static_cast<std::size_t>(k)]);
}

TEST_CASE("hook partition of nonfirst points for uniquely sorted permutations") {
    for (int k = 1; k <= 3; ++k) {
        const int n = 2 * k + 1;
        each_perm(n, [&](const Perm& p) {
            if (!is_uniquely_sorted(p)) return;
            const auto cfg = canonical_hooks(p);
            std::set<int> db;
            for (int dd : descents(p)) db.insert(dd + 1);
            std::set<int> ne;
            for (const Hook& h : cfg->hooks) ne.insert(h.ne);
            CHECK(db.size() == static_cast<std::size_t>(k));
            CHECK(ne.size() == static_cast<std::size_t>(k));
            std::set<int> all;
            all.insert(db.begin(), db.end());
            all.insert(ne.begin(), ne.end());
            CHECK(all.size() == static_cast<std::size_t>(n - 1));
            CHECK_FALSE(all.count(1));
        });
    }
}
