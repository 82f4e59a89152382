#include <algorithm>
#include <functional>
#include <set>

#include "catsort/bijections.hpp"
#include "catsort/formulas.hpp"
#include "catsort/gentree.hpp"
#include "catsort/stacksort.hpp"
#include "catsort/textio.hpp"
#include "doctest.h"

using namespace catsort;

namespace {

Perm P(std::initializer_list<int> v) { return Perm(std::vector<int>(v)); }
DyckPath D(const char* w) { return *DyckPath::parse(w); }

// all nonnegative vectors of length k summing to total
std::vector<std::vector<int>> compositions(int k, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

bool margins_admissible(const std::vector<int>& a, const std::vector<int>& b) {
    const int k = static_cast<int>(a.size());
    long long sa = 0, sb = 0;
    for (int i = 1; i <= k; ++i) {
        sa += a[static_cast<std::size_t>(k - i)];
        sb += b[static_cast<std::size_t>(k - i)];
        if (sa > sb) return false;
    }
    return sa == sb;
}

// exhaustive search over all staircase-supported matrices with the given
// margins; the independent uniqueness oracle for solve_cell_matrix
int count_solutions(const std::vector<int>& a, const std::vector<int>& b, CellMatrix* found) {
    const int k = static_cast<int>(a.size());
    CellMatrix m;
    m.k = k;
    m.m.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
    std::vector<int> colleft(b.begin(), b.end());
    int hits = 0;
    std::function<void(int)> rec = [&](int row) {
        if (row > k) {
            if (cell_matrix_properties_hold(m, a, b)) {
                ++hits;
                if (found && hits == 1) *found = m;
            }
            return;
        }
        const int rowsum = a[static_cast<std::size_t>(k - row)];
        std::function<void(int, int)> fill = [&](int col, int left) {
            if (col > k) {
                if (left == 0) rec(row + 1);
                return;
            }
            const int lo = 0;
            const int hi = (col <= k - row) ? 0 : std::min(left, colleft[static_cast<std::size_t>(col - 1)]);
            for (int v = lo; v <= hi; ++v) {
                m.at(row, col) = v;
                colleft[static_cast<std::size_t>(col - 1)] -= v;
                fill(col + 1, left - v);
                colleft[static_cast<std::size_t>(col - 1)] += v;
                m.at(row, col) = 0;
            }
        };
        fill(1, rowsum);
    };
    rec(1);
    return hits;
}

}  // namespace

TEST_CASE("descent-profile pair map on pinned inputs") {
    const DyckInterval iv = dl_forward(*parse_perm("3254167"));
    CHECK(iv.lower == D("UUDDUD"));
    CHECK(iv.upper == D("UUDUDD"));
    const DyckInterval one = dl_forward(P({2, 1, 3}));
    CHECK(one.lower == D("UD"));
    CHECK(one.upper == D("UD"));
    // layered input lands on the diagonal
    const DyckInterval lay = dl_forward(P({2, 1, 4, 3, 5}));
    CHECK(lay.lower == lay.upper);
    CHECK(lay.lower == D("UDUD"));
    CHECK_THROWS_AS(dl_forward(P({1, 2, 3})), std::invalid_argument);      // not uniquely sorted
    CHECK_THROWS_AS(dl_forward(*parse_perm("3124567")), std::invalid_argument);  // contains 312
}

TEST_CASE("cell matrices") {
    const CellMatrix m1 = cell_matrix(P({2, 1, 3}));
    CHECK(m1.k == 1);
    CHECK(m1.at(1, 1) == 1);

    // pinned 4x4 matrix reproduced from its own margins
    std::vector<int> a{3, 0, 0, 1}, b{2, 0, 1, 1};
    const CellMatrix m = solve_cell_matrix(a, b);
    const std::vector<std::int64_t> want{0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1, 0};
    CHECK(m.m == want);
    CHECK(cell_matrix_properties_hold(m, a, b));

    CHECK(solve_cell_matrix({1}, {1}).at(1, 1) == 1);
    CHECK_THROWS_AS(solve_cell_matrix({1, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_cell_matrix({0, 1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("rebuilt matrices are the unique admissible ones") {
    for (int k = 1; k <= 4; ++k)
        for (int total = 0; total <= 4; ++total)
            for (const auto& a : compositions(k, total))
                for (const auto& b : compositions(k, total)) {
                    if (!margins_admissible(a, b)) continue;
                    CellMatrix brute;
                    const int hits = count_solutions(a, b, &brute);
                    CHECK(hits == 1);
                    const CellMatrix solved = solve_cell_matrix(a, b);
                    CHECK(solved == brute);
                }
}

TEST_CASE("a rebalancing move strictly lowers the weighted energy") {
    // energy scaled by 2^(k-1) so every term is integral
    const auto energy = [](const CellMatrix& m) {
        std::uint64_t e = 0;
        for (int i = 1; i <= m.k; ++i)
            for (int j = 1; j <= m.k; ++j)
                e += static_cast<std::uint64_t>(m.at(i, j)) << (i - j + m.k - 1);
        return e;
    };
    // every corner-violating quadruple of a staircase matrix, moved once
    for (int k = 2; k <= 4; ++k) {
        std::function<void(CellMatrix&, int)> scan = [&](CellMatrix& m, int cell) {
            if (cell == k * k) {
                for (int c = 1; c <= k; ++c)
                    for (int cp = c + 1; cp <= k; ++cp)
                        for (int r = std::max(1, k + 1 - c); r <= k; ++r)
                            for (int rp = r + 1; rp <= k; ++rp) {
                                if (m.at(rp, c) <= 0 || m.at(r, cp) <= 0) continue;
                                CellMatrix moved = m;
                                moved.at(r, c) += 1;
                                moved.at(r, cp) -= 1;
                                moved.at(rp, c) -= 1;
                                moved.at(rp, cp) += 1;
                                CHECK(energy(moved) < energy(m));
                                CHECK(energy(m) - energy(moved) >= 1);
                            }
                return;
            }
            const int i = cell / k + 1, j = cell % k + 1;
            const int hi = (j <= k - i) ? 0 : 2;
            for (int v = 0; v <= hi; ++v) {
                m.at(i, j) = v;
                scan(m, cell + 1);
            }
            m.at(i, j) = 0;
        };
        CellMatrix m;
        m.k = k;
        m.m.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
        scan(m, 0);
    }
}

TEST_CASE("roundtrips through Stanley intervals") {
    CHECK(dl_inverse(DyckInterval{D("UD"), D("UD"), PosetKind::stanley}) == P({2, 1, 3}));
    CHECK(dl_inverse(DyckInterval{D("UUDDUD"), D("UUDUDD"), PosetKind::stanley}) ==
          *parse_perm("3254167"));
    const auto p312 = *parse_pattern_set("312");
    for (int k = 0; k <= 4; ++k) {
        std::uint64_t members = 0;
        for_each_uniquely_sorted(k, p312, [&](const Perm& p) {
            ++members;
            CHECK(dl_inverse(dl_forward(p)) == p);
        });
        CHECK(members == closed_form(Formula::stanley_intervals, k));
        for (const auto& lo : all_paths(k))
            for (const auto& hi : all_paths(k)) {
                if (!dyck_leq(lo, hi, PosetKind::stanley)) continue;
                const Perm p = dl_inverse(DyckInterval{lo, hi, PosetKind::stanley});
                const DyckInterval back = dl_forward(p);
                CHECK(back.lower == lo);
                CHECK(back.upper == hi);
            }
    }
    CHECK_THROWS_AS(dl_inverse(DyckInterval{D("UUDUDD"), D("UUDDUD"), PosetKind::stanley}),
                    std::invalid_argument);
}

TEST_CASE("Tamari composite with its pinned value") {
    const Perm start = *parse_perm("2154367");
    const Perm slid = slide(start, SlideOp::up);
    const DyckInterval iv = tamari_forward(slid);
    CHECK(iv.lower == D("UUDDUD"));
    CHECK(iv.upper == D("UUUDDD"));
    CHECK(dyck_leq(iv.lower, iv.upper, PosetKind::tamari));
    CHECK_FALSE(dyck_leq(iv.lower, iv.upper, PosetKind::pallo));
    CHECK(tamari_inverse(iv) == slid);

    const auto p132 = *parse_pattern_set("132");
    for (int k = 0; k <= 3; ++k) {
        std::set<std::pair<DyckPath, DyckPath>> images;
        for_each_uniquely_sorted(k, p132, [&](const Perm& p) {
            const DyckInterval x = tamari_forward(p);
            CHECK(tamari_inverse(x) == p);
            images.emplace(x.lower, x.upper);
        });
        CHECK(images.size() == closed_form(Formula::tamari_intervals, k));
    }
    CHECK(count_intervals(3, PosetKind::tamari) == 13);
}

TEST_CASE("noncrossing interval maps") {
    CHECK(nc_interval_direct(P({2, 1, 3})) == nc_root());
    CHECK(nc_interval_tree(P({2, 1, 3})) == nc_root());
    const Perm big = *parse_perm("432657819");
    CHECK(format_nc_interval(nc_interval_direct(big)) == "{1,3}{2}{4}|{1,2,3}{4}");
    const auto cls = *parse_pattern_set("312;1342");
    for (int k = 1; k <= 3; ++k) {
        std::set<NCInterval> images;
        std::uint64_t members = 0;
        for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
            ++members;
            const NCInterval a = nc_interval_direct(p);
            const NCInterval b = nc_interval_tree(p);
            CHECK(a == b);
            images.insert(b);
        });
        CHECK(members == closed_form(Formula::kreweras_intervals, k));
        CHECK(images.size() == members);
    }
}

TEST_CASE("Pallo-counted decomposition") {
    const auto series = catalan_of_x_catalan(4);
    CHECK(series == std::vector<std::uint64_t>{1, 1, 3, 11, 44});
    const auto cls = *parse_pattern_set("231;4132");
    for (int k = 0; k <= 4; ++k)
        CHECK(count_uniquely_sorted(k, cls) == series[static_cast<std::size_t>(k)]);

    const PalloSplit s1 = pallo_split(P({2, 1, 3}));
    CHECK(s1.nice);
    CHECK(s1.tail == P({1}));
    CHECK(pallo_unsplit(s1) == P({2, 1, 3}));

    const Perm pinned = *parse_perm("2154367");
    CHECK(pallo_unsplit(pallo_split(pinned)) == pinned);

    for (int k = 1; k <= 3; ++k)
        for_each_uniquely_sorted(k, cls, [](const Perm& p) {
            const PalloSplit s = pallo_split(p);
            CHECK(pallo_unsplit(s) == p);
            CHECK(is_uniquely_sorted(s.head));
            CHECK(is_uniquely_sorted(s.tail));
        });
}

TEST_CASE("parking functions") {
    CHECK(parking_from_perm(P({2, 1, 3})) == std::vector<int>{1});
    CHECK(perm_from_parking({1, 1}) == P({3, 1, 4, 2, 5}));
    CHECK(parking_from_perm(P({3, 1, 4, 2, 5})) == std::vector<int>{1, 1});
    CHECK(is_nondecreasing_parking({1, 1, 3}));
    CHECK_FALSE(is_nondecreasing_parking({2, 1}));
    CHECK_FALSE(is_nondecreasing_parking({1, 3}));
    const auto p321 = *parse_pattern_set("321");
    for (int k = 0; k <= 4; ++k) {
        std::uint64_t members = 0;
        for_each_uniquely_sorted(k, p321, [&](const Perm& p) {
            ++members;
            CHECK(perm_from_parking(parking_from_perm(p)) == p);
        });
        CHECK(members == catalan(k));
    }
    // inverse direction over all nondecreasing parking functions
    for (int k = 1; k <= 4; ++k) {
        std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& acc) {
            if (static_cast<int>(acc.size()) == k) {
                const Perm p = perm_from_parking(acc);
                CHECK(is_uniquely_sorted(p));
                CHECK(parking_from_perm(p) == acc);
                return;
            }
            const int lo = acc.empty() ? 1 : acc.back();
            for (int v = lo; v <= static_cast<int>(acc.size()) + 1; ++v) {
                acc.push_back(v);
                rec(acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        rec(acc);
    }
}

TEST_CASE("antichain routes") {
    const DyckInterval lay = antichain_map(P({2, 1, 4, 3, 5}), AntichainRoute::layered);
    CHECK(lay.lower == lay.upper);
    CHECK(is_layered(P({2, 1, 4, 3, 5})));
    CHECK_FALSE(is_layered(P({2, 3, 1})));
    const struct {
        AntichainRoute route;
        const char* pats;
    } cases[] = {
        {AntichainRoute::layered, "231;312"},
        {AntichainRoute::via_left_slide, "132;231"},
        {AntichainRoute::via_down_slide, "132;312"},
    };
    for (const auto& c : cases) {
        const auto cls = *parse_pattern_set(c.pats);
        for (int k = 0; k <= 4; ++k) {
            std::set<DyckPath> images;
            std::uint64_t members = 0;
            for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
                ++members;
                const DyckInterval iv = antichain_map(p, c.route);
                CHECK(iv.lower == iv.upper);
                images.insert(iv.lower);
            });
            CHECK(members == catalan(k));
            CHECK(images.size() == catalan(k));
        }
    }
}

TEST_CASE("decreasing-increasing encoding characterizes unique sortedness") {
    const auto cls = *parse_pattern_set("132;231");
    for (int k = 0; k <= 4; ++k) {
        const int n = 2 * k + 1;
        std::uint64_t dyck_words = 0;
        for (const Perm& p : avoiders(n, cls)) {
            const std::string w = updown_word(p);
            CHECK(w.size() == static_cast<std::size_t>(n - 1));
            const bool is_dyck = DyckPath::parse(w).has_value();
            CHECK(is_dyck == is_uniquely_sorted(p));
            if (is_dyck) ++dyck_words;
        }
        CHECK(dyck_words == catalan(k));
    }
}

TEST_CASE("explicit singleton classes") {
    for (int k = 2; k <= 4; ++k) {
        const int n = 2 * k + 1;
        std::vector<int> zig;
        for (int i = 1; i <= k; ++i) {
            zig.push_back(2 * i);
            zig.push_back(2 * i - 1);
        }
        zig.push_back(n);
        std::vector<int> vee;
        for (int x = k + 1; x >= 1; --x) vee.push_back(x);
        for (int x = k + 2; x <= n; ++x) vee.push_back(x);
        CHECK(uniquely_sorted(k, *parse_pattern_set("231;321")) == std::vector<Perm>{Perm(zig)});
        CHECK(uniquely_sorted(k, *parse_pattern_set("312;321")) == std::vector<Perm>{Perm(zig)});
        CHECK(uniquely_sorted(k, *parse_pattern_set("231;312;321")) == std::vector<Perm>{Perm(zig)});
        CHECK(uniquely_sorted(k, *parse_pattern_set("132;231;312")) == std::vector<Perm>{Perm(vee)});
        CHECK(uniquely_sorted(k, *parse_pattern_set("132;321")).empty());
    }
}
