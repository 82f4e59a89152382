#include "catsort/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "catsort/bijections.hpp"
#include "catsort/dyck.hpp"
#include "catsort/formulas.hpp"
#include "catsort/gentree.hpp"
#include "catsort/harness.hpp"
#include "catsort/noncross.hpp"
#include "catsort/perm.hpp"
#include "catsort/sliding.hpp"
#include "catsort/stacksort.hpp"
#include "catsort/textio.hpp"

namespace catsort {

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
CheckResult run_check(std::string name, Fn&& body) {
    CheckResult r;
    r.name = std::move(name);
    const auto t0 = Clock::now();
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

template <class Fn>
void for_each_perm(int n, Fn&& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Perm> pats_of(std::initializer_list<const char*> digits) {
    std::vector<Perm> out;
    for (const char* d : digits) {
        std::vector<int> v;
        for (const char* c = d; *c; ++c) v.push_back(*c - '0');
        out.emplace_back(v);
    }
    return out;
}

std::string mismatch(const std::string& what, std::uint64_t got, std::uint64_t want) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    return os.str();
}

constexpr const char* kPublished231_4123 = "1 1 3 10 36 138 553 2288 9699 41908";

std::vector<std::uint64_t> published_231_4123() {
    std::vector<std::uint64_t> out;
    std::istringstream is(kPublished231_4123);
    std::uint64_t x;
    while (is >> x) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------- lemmas

std::vector<CheckResult> lemmas_suite(int bound) {
    const int max_n = bound < 0 ? 6 : bound;
    std::vector<CheckResult> out;

    out.push_back(run_check("repeated stack sorting reaches the identity", [&](std::string& d) {
        for (int n = 0; n <= std::min(max_n, 7); ++n) {
            bool ok = true;
            for_each_perm(n, [&](const Perm& p) {
                Perm q = p;
                for (int t = 1; t < n; ++t) q = stack_sort(q);
                if (!(q == Perm::identity(n))) ok = false;
            });
            if (!ok) {
                d = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("descent sets survive the up and down slides", [&](std::string& d) {
        const Perm p312 = Perm(std::vector<int>{3, 1, 2});
        const Perm p132 = Perm(std::vector<int>{1, 3, 2});
        for (int n = 1; n <= std::min(max_n, 7); ++n) {
            bool ok = true;
            for_each_perm(n, [&](const Perm& p) {
                if (descents(slide(p, SlideOp::up)) != descents(p)) ok = false;
                if (descents(slide(p, SlideOp::down)) != descents(p)) ok = false;
                if (avoids(p, p312) && descent_count(slide(p, SlideOp::right)) != descent_count(p)) ok = false;
                if (avoids(p, p132) && descent_count(slide(p, SlideOp::left)) != descent_count(p)) ok = false;
            });
            if (!ok) {
                d = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("up/down slides swap the 231 and 132 avoidance classes", [&](std::string& d) {
        const auto p231 = pats_of({"231"});
        const auto p132 = pats_of({"132"});
        for (int n = 0; n <= std::min(max_n, 7); ++n) {
            std::set<Perm> images;
            for (const Perm& p : avoiders(n, p231)) {
                const Perm q = slide(p, SlideOp::up);
                if (!avoids_all(q, p132)) {
                    d = "image leaves the 132 class at n = " + std::to_string(n);
                    return false;
                }
                if (!(slide(q, SlideOp::down) == p)) {
                    d = "down slide fails to invert at n = " + std::to_string(n);
                    return false;
                }
                images.insert(q);
            }
            if (images.size() != avoiders(n, p132).size()) {
                d = mismatch("image count at n = " + std::to_string(n), images.size(),
                             avoiders(n, p132).size());
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("left/right slides swap the 132 and 312 avoidance classes", [&](std::string& d) {
        const auto p132 = pats_of({"132"});
        const auto p312 = pats_of({"312"});
        for (int n = 0; n <= std::min(max_n, 7); ++n) {
            std::set<Perm> images;
            for (const Perm& p : avoiders(n, p132)) {
                const Perm q = slide(p, SlideOp::left);
                if (!avoids_all(q, p312)) {
                    d = "image leaves the 312 class at n = " + std::to_string(n);
                    return false;
                }
                if (!(slide(q, SlideOp::right) == p)) {
                    d = "right slide fails to invert at n = " + std::to_string(n);
                    return false;
                }
                images.insert(q);
            }
            if (images.size() != avoiders(n, p312).size()) {
                d = mismatch("image count at n = " + std::to_string(n), images.size(),
                             avoiders(n, p312).size());
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("slides swap the two-pattern avoidance classes", [&](std::string& d) {
        for (int n = 0; n <= std::min(max_n, 7); ++n) {
            std::set<Perm> up_images, left_images;
            for (const Perm& p : avoiders(n, pats_of({"231", "312"})))
                up_images.insert(slide(p, SlideOp::up));
            const auto av132_312 = avoiders(n, pats_of({"132", "312"}));
            if (up_images != std::set<Perm>(av132_312.begin(), av132_312.end())) {
                d = "up slide image differs from the 132,312 class at n = " + std::to_string(n);
                return false;
            }
            for (const Perm& p : avoiders(n, pats_of({"132", "231"})))
                left_images.insert(slide(p, SlideOp::left));
            const auto av231_312 = avoiders(n, pats_of({"231", "312"}));
            if (left_images != std::set<Perm>(av231_312.begin(), av231_312.end())) {
                d = "left slide image differs from the 231,312 class at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("slides preserve sortedness; left slide never raises the deficiency of a 132-avoider", [&](std::string& d) {
        const Perm p132 = Perm(std::vector<int>{1, 3, 2});
        for (int n = 1; n <= std::min(max_n, 7); ++n) {
            bool ok = true;
            for_each_perm(n, [&](const Perm& p) {
                const bool sorted = is_sorted(p);
                if (sorted && !is_sorted(slide(p, SlideOp::up))) ok = false;
                if (sorted && !is_sorted(slide(p, SlideOp::down))) ok = false;
                if (avoids(p, p132)) {
                    if (deficiency(slide(p, SlideOp::left)) > deficiency(p)) ok = false;
                }
            });
            if (!ok) {
                d = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("indexed up slides compose to the recursive up slide", [&](std::string& d) {
        for (int n = 0; n <= std::min(max_n, 7); ++n) {
            bool ok = true;
            for_each_perm(n, [&](const Perm& p) {
                if (!(slide(p, SlideOp::up) == slide_up_recursive(p))) ok = false;
            });
            if (!ok) {
                d = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("after an indexed up slide the slid value tops no 132 pattern", [&](std::string& d) {
        for (int n = 1; n <= std::min(max_n, 6); ++n) {
            bool ok = true;
            for_each_perm(n, [&](const Perm& p) {
                for (int i = 1; i <= n && ok; ++i) {
                    const Perm q = slide_indexed(p, SlideOp::up, i);
                    for (int x = 1; x <= n && ok; ++x)
                        for (int y = x + 1; y <= n && ok; ++y) {
                            if (q.at(y) != i) continue;
                            for (int z = y + 1; z <= n && ok; ++z)
                                if (q.at(x) < q.at(z) && q.at(z) < q.at(y)) ok = false;
                        }
                }
            });
            if (!ok) {
                d = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("descent bottoms and northeast endpoints split the nonfirst points", [&](std::string& d) {
        for (int n = 1; n <= std::min(2 * (max_n - 1) + 1, 9); n += 2) {
            bool ok = true;
            for_each_perm(n, [&](const Perm& p) {
                if (!is_uniquely_sorted(p)) return;
                const HookConfig cfg = *canonical_hooks(p);
                std::set<int> taken;
                for (int dd : descents(p)) taken.insert(dd + 1);
                for (const Hook& h : cfg.hooks) {
                    if (taken.count(h.ne)) ok = false;
                    taken.insert(h.ne);
                }
                if (static_cast<int>(taken.size()) != n - 1 || taken.count(1)) ok = false;
            });
            if (!ok) {
                d = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("312-avoiding uniquely sorted: maxima are the first point plus northeast endpoints", [&](std::string& d) {
        const auto p312 = pats_of({"312"});
        const int kmax = std::min(max_n - 1, 5);
        for (int k = 0; k <= kmax; ++k) {
            bool ok = true;
            for_each_uniquely_sorted(k, p312, [&](const Perm& p) {
                const HookConfig cfg = *canonical_hooks(p);
                std::set<int> expected{1};
                for (const Hook& h : cfg.hooks) expected.insert(h.ne);
                std::set<int> maxima;
                int best = 0;
                for (int j = 1; j <= p.size(); ++j)
                    if (p.at(j) > best) {
                        best = p.at(j);
                        maxima.insert(j);
                    }
                if (maxima != expected) ok = false;
            });
            if (!ok) {
                d = "failed at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("hook existence and hook uniqueness match brute fertility", [&](std::string& d) {
        for (int n = 1; n <= std::min(max_n, 8); ++n) {
            auto census = fertility_census(n);
            bool ok = true;
            for_each_perm(n, [&](const Perm& p) {
                const std::uint64_t f = census->fertility_of(p);
                if ((f >= 1) != is_sorted(p)) ok = false;
                if ((f == 1) != is_uniquely_sorted(p)) ok = false;
            });
            if (!ok) {
                d = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("up slide swaps uniquely sorted 231- and 132-avoiders", [&](std::string& d) {
        const int kmax = std::min(max_n - 1, 4);
        for (int k = 0; k <= kmax; ++k) {
            const auto dom = uniquely_sorted(k, pats_of({"231"}));
            const auto cod = uniquely_sorted(k, pats_of({"132"}));
            std::set<Perm> images;
            for (const Perm& p : dom) {
                const Perm q = slide(p, SlideOp::up);
                if (!is_uniquely_sorted(q) || !(slide(q, SlideOp::down) == p)) {
                    d = "roundtrip failed at k = " + std::to_string(k);
                    return false;
                }
                images.insert(q);
            }
            if (images != std::set<Perm>(cod.begin(), cod.end())) {
                d = "image differs from the 132 class at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("first-entry counts of uniquely sorted permutations are palindromic", [&](std::string& d) {
        const int kmax = std::min(max_n - 1, 3);
        for (int k = 1; k <= kmax; ++k) {
            const int n = 2 * k + 1;
            std::vector<std::uint64_t> byfirst(static_cast<std::size_t>(n) + 1, 0);
            for_each_perm(n, [&](const Perm& p) {
                if (is_uniquely_sorted(p)) byfirst[static_cast<std::size_t>(p.at(1))]++;
            });
            for (int l = 1; l <= n; ++l)
                if (byfirst[static_cast<std::size_t>(l)] != byfirst[static_cast<std::size_t>(n + 1 - l)]) {
                    d = "asymmetry at k = " + std::to_string(k) + ", first entry " + std::to_string(l);
                    return false;
                }
        }
        return true;
    }));

    return out;
}

// ---------------------------------------------------------------- posets

std::vector<CheckResult> posets_suite(int bound) {
    const int max_k = bound < 0 ? 5 : bound;
    std::vector<CheckResult> out;

    out.push_back(run_check("interval counts match the closed forms for all five posets", [&](std::string& d) {
        for (int k = 0; k <= max_k; ++k) {
            const struct {
                PosetKind kind;
                Formula formula;
            } cases[] = {
                {PosetKind::stanley, Formula::stanley_intervals},
                {PosetKind::tamari, Formula::tamari_intervals},
                {PosetKind::pallo, Formula::pallo_intervals},
                {PosetKind::antichain, Formula::catalan_count},
            };
            for (const auto& c : cases) {
                const std::uint64_t got = count_intervals(k, c.kind, std::max(k, kIntervalScanGuardK));
                const std::uint64_t want = closed_form(c.formula, k);
                if (got != want) {
                    d = mismatch(std::string(poset_kind_token(c.kind)) + " at k = " + std::to_string(k), got, want);
                    return false;
                }
            }
            const std::uint64_t ncgot = count_nc_intervals(k, std::max(k, kIntervalScanGuardK));
            if (ncgot != closed_form(Formula::kreweras_intervals, k)) {
                d = mismatch("noncrossing refinement at k = " + std::to_string(k), ncgot,
                             closed_form(Formula::kreweras_intervals, k));
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("each path order is reflexive and antisymmetric", [&](std::string& d) {
        for (int k = 0; k <= std::min(max_k, 6); ++k) {
            const auto paths = all_paths(k);
            for (PosetKind kind : {PosetKind::stanley, PosetKind::tamari, PosetKind::pallo, PosetKind::antichain}) {
                for (const auto& a : paths)
                    if (!dyck_leq(a, a, kind)) {
                        d = std::string("reflexivity fails for ") + std::string(poset_kind_token(kind));
                        return false;
                    }
                for (const auto& a : paths)
                    for (const auto& b : paths)
                        if (!(a == b) && dyck_leq(a, b, kind) && dyck_leq(b, a, kind)) {
                            d = std::string("antisymmetry fails for ") + std::string(poset_kind_token(kind));
                            return false;
                        }
            }
        }
        return true;
    }));

    out.push_back(run_check("each path order is transitive", [&](std::string& d) {
        for (int k = 0; k <= std::min(max_k, 5); ++k) {
            const auto paths = all_paths(k);
            for (PosetKind kind : {PosetKind::stanley, PosetKind::tamari, PosetKind::pallo, PosetKind::antichain}) {
                std::vector<std::vector<bool>> le(paths.size(), std::vector<bool>(paths.size()));
                for (std::size_t i = 0; i < paths.size(); ++i)
                    for (std::size_t j = 0; j < paths.size(); ++j)
                        le[i][j] = dyck_leq(paths[i], paths[j], kind);
                for (std::size_t i = 0; i < paths.size(); ++i)
                    for (std::size_t j = 0; j < paths.size(); ++j) {
                        if (!le[i][j]) continue;
                        for (std::size_t l = 0; l < paths.size(); ++l)
                            if (le[j][l] && !le[i][l]) {
                                d = std::string("transitivity fails for ") + std::string(poset_kind_token(kind)) +
                                    " at k = " + std::to_string(k);
                                return false;
                            }
                    }
            }
        }
        return true;
    }));

    out.push_back(run_check("order extensions: antichain in pallo in tamari in stanley", [&](std::string& d) {
        for (int k = 0; k <= std::min(max_k, 6); ++k) {
            const auto paths = all_paths(k);
            for (const auto& a : paths)
                for (const auto& b : paths) {
                    const bool anti = dyck_leq(a, b, PosetKind::antichain);
                    const bool pal = dyck_leq(a, b, PosetKind::pallo);
                    const bool tam = dyck_leq(a, b, PosetKind::tamari);
                    const bool sta = dyck_leq(a, b, PosetKind::stanley);
                    if ((anti && !pal) || (pal && !tam) || (tam && !sta)) {
                        d = "chain breaks at k = " + std::to_string(k) + " for " + a.str() + " vs " + b.str();
                        return false;
                    }
                }
        }
        return true;
    }));

    out.push_back(run_check("down-run decomposition reconstructs every path", [&](std::string& d) {
        for (int k = 0; k <= std::min(max_k, 7); ++k) {
            bool ok = true;
            for_each_path(k, [&](const DyckPath& p) {
                const std::vector<int> g = gamma_runs(p);
                std::string word;
                for (int x : g) {
                    word.push_back('U');
                    word.append(static_cast<std::size_t>(x), 'D');
                }
                if (DyckPath::parse(word) != p) ok = false;
            });
            if (!ok) {
                d = "failed at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("longevities stay within their tail bounds", [&](std::string& d) {
        for (int k = 0; k <= std::min(max_k, 7); ++k) {
            bool ok = true;
            for_each_path(k, [&](const DyckPath& p) {
                const std::vector<int> lon = longevity(p);
                for (int j = 1; j <= k; ++j)
                    if (lon[static_cast<std::size_t>(j - 1)] > k - j) ok = false;
            });
            if (!ok) {
                d = "failed at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("noncrossing partitions are Catalan-many with bottom and top", [&](std::string& d) {
        for (int k = 0; k <= std::min(max_k, 8); ++k) {
            const auto parts = all_noncrossing(k);
            if (parts.size() != catalan(k)) {
                d = mismatch("partition count at k = " + std::to_string(k), parts.size(), catalan(k));
                return false;
            }
            if (k == 0) continue;
            std::vector<std::vector<int>> singles, whole{std::vector<int>{}};
            for (int x = 1; x <= k; ++x) {
                singles.push_back({x});
                whole.front().push_back(x);
            }
            const NCPartition bottom = NCPartition::make(singles, k);
            const NCPartition top = NCPartition::make(whole, k);
            for (const auto& p : parts)
                if (!nc_leq(bottom, p) || !nc_leq(p, top)) {
                    d = "bounds fail at k = " + std::to_string(k);
                    return false;
                }
        }
        return true;
    }));

    out.push_back(run_check("interval succession tree reproduces the interval family exactly once", [&](std::string& d) {
        const int kmax = std::min(max_k, 6);
        std::vector<NCInterval> level{nc_root()};
        for (int k = 1; k <= kmax; ++k) {
            std::set<NCInterval> seen(level.begin(), level.end());
            if (seen.size() != level.size()) {
                d = "duplicate generation at k = " + std::to_string(k);
                return false;
            }
            const auto scan = all_nc_intervals(k);
            if (seen != std::set<NCInterval>(scan.begin(), scan.end())) {
                d = "tree level differs from the pairwise scan at k = " + std::to_string(k);
                return false;
            }
            if (k == kmax) break;
            std::vector<NCInterval> next;
            for (const NCInterval& iv : level) {
                const auto kids = nc_children(iv);
                next.insert(next.end(), kids.begin(), kids.end());
            }
            level = std::move(next);
        }
        return true;
    }));

    out.push_back(run_check("interval tree level sizes match the closed form", [&](std::string& d) {
        const int kmax = std::min(max_k, 8);
        std::vector<NCInterval> level{nc_root()};
        for (int k = 1; k <= kmax; ++k) {
            if (level.size() != closed_form(Formula::kreweras_intervals, k)) {
                d = mismatch("level size at k = " + std::to_string(k), level.size(),
                             closed_form(Formula::kreweras_intervals, k));
                return false;
            }
            if (k == kmax) break;
            std::vector<NCInterval> next;
            for (const NCInterval& iv : level) {
                const auto kids = nc_children(iv);
                next.insert(next.end(), kids.begin(), kids.end());
            }
            level = std::move(next);
        }
        return true;
    }));

    out.push_back(run_check("child labels run from 3 to label + 2 on both sides", [&](std::string& d) {
        const int kmax = std::min(max_k, 6);
        // interval side
        std::vector<NCInterval> level{nc_root()};
        for (int k = 1; k <= kmax; ++k) {
            for (const NCInterval& iv : level) {
                const int a = interval_label(iv);
                const auto kids = nc_children(iv);
                std::multiset<int> labels;
                for (const auto& kid : kids) labels.insert(interval_label(kid));
                std::multiset<int> want;
                for (int m = 3; m <= a + 2; ++m) want.insert(m);
                if (labels != want) {
                    d = "interval child labels differ at k = " + std::to_string(k);
                    return false;
                }
            }
            std::vector<NCInterval> next;
            for (const NCInterval& iv : level) {
                const auto kids = nc_children(iv);
                next.insert(next.end(), kids.begin(), kids.end());
            }
            level = std::move(next);
        }
        // permutation side
        const auto cls = pats_of({"312", "1342"});
        for (int k = 1; k <= std::min(kmax, 4); ++k) {
            bool ok = true;
            for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
                const int b = perm_label(p);
                std::multiset<int> labels;
                for (const Perm& c : perm_children(p)) labels.insert(perm_label(c));
                std::multiset<int> want;
                for (int m = 3; m <= b + 2; ++m) want.insert(m);
                if (labels != want) ok = false;
            });
            if (!ok) {
                d = "permutation child labels differ at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("permutation succession tree levels match the closed form", [&](std::string& d) {
        const int kmax = std::min(max_k, 6);
        const auto cls = pats_of({"312", "1342"});
        for (int k = 0; k <= kmax; ++k) {
            const std::uint64_t got = count_uniquely_sorted(k, cls);
            const std::uint64_t want = closed_form(Formula::kreweras_intervals, k);
            if (got != want) {
                d = mismatch("class size at k = " + std::to_string(k), got, want);
                return false;
            }
        }
        // parent/child roundtrip
        for (int k = 0; k <= std::min(kmax, 3); ++k) {
            bool ok = true;
            for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
                for (const Perm& c : perm_children(p))
                    if (!(perm_parent(c) == p)) ok = false;
            });
            if (!ok) {
                d = "parent does not invert a child operation at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    return out;
}

// ------------------------------------------------------------- bijections

std::vector<CheckResult> bijections_suite(int bound) {
    const int max_k = bound < 0 ? 4 : bound;
    std::vector<CheckResult> out;

    out.push_back(run_check("descent-profile pair map is a bijection onto Stanley intervals", [&](std::string& d) {
        const auto p312 = pats_of({"312"});
        for (int k = 0; k <= std::min(max_k, 5); ++k) {
            std::set<std::pair<DyckPath, DyckPath>> images;
            std::uint64_t dom = 0;
            bool ok = true;
            for_each_uniquely_sorted(k, p312, [&](const Perm& p) {
                ++dom;
                const DyckInterval iv = dl_forward(p);
                if (!dyck_leq(iv.lower, iv.upper, PosetKind::stanley)) ok = false;
                if (!(dl_inverse(iv) == p)) ok = false;
                images.emplace(iv.lower, iv.upper);
            });
            if (!ok) {
                d = "forward/backward roundtrip fails at k = " + std::to_string(k);
                return false;
            }
            const std::uint64_t want = closed_form(Formula::stanley_intervals, k);
            if (dom != want || images.size() != want) {
                d = mismatch("class/image size at k = " + std::to_string(k), dom, want);
                return false;
            }
            // surjectivity with the opposite roundtrip
            const auto paths = all_paths(k);
            for (const auto& lo : paths)
                for (const auto& hi : paths) {
                    if (!dyck_leq(lo, hi, PosetKind::stanley)) continue;
                    const DyckInterval iv{lo, hi, PosetKind::stanley};
                    const Perm p = dl_inverse(iv);
                    const DyckInterval back = dl_forward(p);
                    if (!(back.lower == lo) || !(back.upper == hi)) {
                        d = "interval roundtrip fails at k = " + std::to_string(k);
                        return false;
                    }
                }
        }
        return true;
    }));

    out.push_back(run_check("cell matrices carry the path margins and rebuild uniquely", [&](std::string& d) {
        const auto p312 = pats_of({"312"});
        for (int k = 0; k <= std::min(max_k, 4); ++k) {
            bool ok = true;
            for_each_uniquely_sorted(k, p312, [&](const Perm& p) {
                const DyckInterval iv = dl_forward(p);
                const CellMatrix m = cell_matrix(p);
                const std::vector<int> g = gamma_runs(iv.lower);
                const std::vector<int> gp = gamma_runs(iv.upper);
                std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
                for (int i = 1; i <= k; ++i) {
                    a[static_cast<std::size_t>(i - 1)] = gp[static_cast<std::size_t>(k - i)];
                    b[static_cast<std::size_t>(i - 1)] = g[static_cast<std::size_t>(k - i)];
                }
                if (!cell_matrix_properties_hold(m, a, b)) ok = false;
                if (!(solve_cell_matrix(a, b) == m)) ok = false;
            });
            if (!ok) {
                d = "failed at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("sorted right slide characterizes Tamari membership", [&](std::string& d) {
        const auto p312 = pats_of({"312"});
        for (int k = 0; k <= std::min(max_k, 4); ++k) {
            bool ok = true;
            for_each_uniquely_sorted(k, p312, [&](const Perm& p) {
                const DyckInterval iv = dl_forward(p);
                const bool in_tamari = dyck_leq(iv.lower, iv.upper, PosetKind::tamari);
                if (in_tamari != is_sorted(slide(p, SlideOp::right))) ok = false;
            });
            if (!ok) {
                d = "equivalence fails at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("left-slide composite is a bijection onto Tamari intervals", [&](std::string& d) {
        const auto p132 = pats_of({"132"});
        for (int k = 0; k <= std::min(max_k, 4); ++k) {
            std::set<std::pair<DyckPath, DyckPath>> images;
            std::uint64_t dom = 0;
            bool ok = true;
            for_each_uniquely_sorted(k, p132, [&](const Perm& p) {
                ++dom;
                const DyckInterval iv = tamari_forward(p);
                if (!(tamari_inverse(iv) == p)) ok = false;
                images.emplace(iv.lower, iv.upper);
            });
            if (!ok) {
                d = "roundtrip fails at k = " + std::to_string(k);
                return false;
            }
            const std::uint64_t want = closed_form(Formula::tamari_intervals, k);
            if (dom != want || images.size() != want) {
                d = mismatch("class/image size at k = " + std::to_string(k), dom, want);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("the two noncrossing interval routes agree", [&](std::string& d) {
        const auto cls = pats_of({"312", "1342"});
        for (int k = 0; k <= std::min(max_k, 4); ++k) {
            bool ok = true;
            for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
                if (!(nc_interval_direct(p) == nc_interval_tree(p))) ok = false;
            });
            if (!ok) {
                d = "routes disagree at k = " + std::to_string(k) +
                    "; both are retained, report this as a finding";
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("tree route is a bijection onto refinement intervals", [&](std::string& d) {
        const auto cls = pats_of({"312", "1342"});
        for (int k = 1; k <= std::min(max_k, 4); ++k) {
            std::set<NCInterval> images;
            std::uint64_t dom = 0;
            bool ok = true;
            for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
                ++dom;
                const NCInterval iv = nc_interval_tree(p);
                images.insert(iv);
                // exposure statistics transport across the bijection
                const Skyline sky = skyline(p);
                int nonconj = 0;
                for (const Hook& h : sky.hooks)
                    if (!conjoined(p, h.ne)) ++nonconj;
                if (static_cast<int>(exposed_blocks(iv.kappa).size()) != nonconj) ok = false;
                if (perm_label(p) != interval_label(iv)) ok = false;
            });
            if (!ok) {
                d = "exposure statistics differ at k = " + std::to_string(k);
                return false;
            }
            const auto scan = all_nc_intervals(k);
            if (dom != scan.size() || images.size() != scan.size()) {
                d = mismatch("image size at k = " + std::to_string(k), images.size(), scan.size());
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("parking map is a bijection on uniquely sorted 321-avoiders", [&](std::string& d) {
        const auto p321 = pats_of({"321"});
        for (int k = 0; k <= std::min(max_k, 5); ++k) {
            std::set<std::vector<int>> images;
            std::uint64_t dom = 0;
            bool ok = true;
            for_each_uniquely_sorted(k, p321, [&](const Perm& p) {
                ++dom;
                const std::vector<int> a = parking_from_perm(p);
                if (!is_nondecreasing_parking(a)) ok = false;
                if (!(perm_from_parking(a) == p)) ok = false;
                if (k >= 1) {
                    std::vector<int> want_desc;
                    for (int i = 1; i <= 2 * k - 1; i += 2) want_desc.push_back(i);
                    if (descents(p) != want_desc) ok = false;
                }
                images.insert(a);
            });
            if (!ok) {
                d = "roundtrip or descent profile fails at k = " + std::to_string(k);
                return false;
            }
            if (dom != catalan(k) || images.size() != catalan(k)) {
                d = mismatch("class size at k = " + std::to_string(k), dom, catalan(k));
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("antichain restrictions are bijections onto equal-component intervals", [&](std::string& d) {
        const struct {
            AntichainRoute route;
            std::initializer_list<const char*> pats;
        } cases[] = {
            {AntichainRoute::layered, {"231", "312"}},
            {AntichainRoute::via_left_slide, {"132", "231"}},
            {AntichainRoute::via_down_slide, {"132", "312"}},
        };
        for (const auto& c : cases) {
            const auto cls = pats_of(c.pats);
            for (int k = 0; k <= std::min(max_k, 5); ++k) {
                std::set<DyckPath> images;
                std::uint64_t dom = 0;
                bool ok = true;
                for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
                    ++dom;
                    const DyckInterval iv = antichain_map(p, c.route);
                    if (!(iv.lower == iv.upper)) ok = false;
                    if (c.route == AntichainRoute::layered && !is_layered(p)) ok = false;
                    images.insert(iv.lower);
                });
                if (!ok) {
                    d = "components differ at k = " + std::to_string(k);
                    return false;
                }
                if (dom != catalan(k) || images.size() != catalan(k)) {
                    d = mismatch("class size at k = " + std::to_string(k), dom, catalan(k));
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_check("nice decomposition splits and recombines the Pallo-counted class", [&](std::string& d) {
        const auto cls = pats_of({"231", "4132"});
        const std::vector<std::uint64_t> series = catalan_of_x_catalan(std::min(max_k, 6));
        for (int k = 0; k <= std::min(max_k, 6); ++k) {
            std::uint64_t dom = 0;
            bool ok = true;
            for_each_uniquely_sorted(k, cls, [&](const Perm& p) {
                ++dom;
                if (p.size() < 3) return;
                const PalloSplit s = pallo_split(p);
                if (!(pallo_unsplit(s) == p)) ok = false;
                if (s.nice) {
                    if (!is_uniquely_sorted(s.head) || !is_uniquely_sorted(s.tail)) ok = false;
                } else {
                    if (!is_uniquely_sorted(s.head) || !is_uniquely_sorted(s.tail)) ok = false;
                    if (s.tail.size() >= 3 && !pallo_split(s.tail).nice) ok = false;
                }
            });
            if (!ok) {
                d = "split/unsplit roundtrip fails at k = " + std::to_string(k);
                return false;
            }
            if (dom != series[static_cast<std::size_t>(k)]) {
                d = mismatch("class size at k = " + std::to_string(k), dom,
                             series[static_cast<std::size_t>(k)]);
                return false;
            }
        }
        return true;
    }));

    out.push_back(run_check("triple-pattern classes collapse to singletons", [&](std::string& d) {
        for (int k = 2; k <= std::min(max_k, 5); ++k) {
            const int n = 2 * k + 1;
            std::vector<int> zig;
            for (int i = 1; i <= k; ++i) {
                zig.push_back(2 * i);
                zig.push_back(2 * i - 1);
            }
            zig.push_back(n);
            const Perm zigzag(zig);
            std::vector<int> vee;
            for (int x = k + 1; x >= 1; --x) vee.push_back(x);
            for (int x = k + 2; x <= n; ++x) vee.push_back(x);
            const Perm valley(vee);
            const struct {
                std::initializer_list<const char*> pats;
                const Perm* only;
            } cases[] = {
                {{"231", "321"}, &zigzag},
                {{"312", "321"}, &zigzag},
                {{"231", "312", "321"}, &zigzag},
                {{"132", "231", "312"}, &valley},
                {{"132", "321"}, nullptr},
            };
            for (const auto& c : cases) {
                const auto members = uniquely_sorted(k, pats_of(c.pats));
                if (c.only == nullptr) {
                    if (!members.empty()) {
                        d = "expected empty class at k = " + std::to_string(k);
                        return false;
                    }
                } else if (members.size() != 1 || !(members.front() == *c.only)) {
                    d = "explicit singleton differs at k = " + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_check("decreasing-increasing word test matches unique sortedness", [&](std::string& d) {
        const auto cls = pats_of({"132", "231"});
        for (int k = 0; k <= std::min(max_k, 4); ++k) {
            bool ok = true;
            for (const Perm& p : avoiders(2 * k + 1, cls)) {
                const std::string w = updown_word(p);
                const bool dyck = DyckPath::parse(w).has_value();
                if (dyck != is_uniquely_sorted(p)) ok = false;
            }
            if (!ok) {
                d = "characterization fails at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    }));

    return out;
}

// -------------------------------------------------------------- sequences

std::vector<CheckResult> sequences_suite(int bound, const std::string& data_dir) {
    const int max_k = bound < 0 ? 5 : bound;
    std::vector<CheckResult> out;

    out.push_back(run_check("unrestricted counts match the convolution recurrence", [&](std::string& d) {
        const int kmax = std::min(max_k, 4);
        const auto want = lassalle_numbers(kmax + 1);  // a_{k+1} counts U_{2k+1}
        const auto recs = compute_sequence({}, kmax);
        for (int k = 0; k <= kmax; ++k)
            if (recs[static_cast<std::size_t>(k)].count != want[static_cast<std::size_t>(k)]) {
                d = mismatch("k = " + std::to_string(k), recs[static_cast<std::size_t>(k)].count,
                             want[static_cast<std::size_t>(k)]);
                return false;
            }
        return true;
    }));

    out.push_back(run_check("231,4132 counts match the composed Catalan series", [&](std::string& d) {
        const int kmax = std::min(max_k, 6);
        const auto series = catalan_of_x_catalan(kmax);
        const auto recs = compute_sequence(pats_of({"231", "4132"}), kmax);
        for (int k = 0; k <= kmax; ++k)
            if (recs[static_cast<std::size_t>(k)].count != series[static_cast<std::size_t>(k)]) {
                d = mismatch("k = " + std::to_string(k), recs[static_cast<std::size_t>(k)].count,
                             series[static_cast<std::size_t>(k)]);
                return false;
            }
        return true;
    }));

    out.push_back(run_check("231,4123 counts match the published prefix", [&](std::string& d) {
        const int kmax = std::min(max_k, 7);
        const auto want = published_231_4123();
        const auto recs = compute_sequence(pats_of({"231", "4123"}), kmax, kmax);
        for (int k = 0; k <= kmax; ++k)
            if (recs[static_cast<std::size_t>(k)].count != want[static_cast<std::size_t>(k)]) {
                d = mismatch("k = " + std::to_string(k), recs[static_cast<std::size_t>(k)].count,
                             want[static_cast<std::size_t>(k)]);
                return false;
            }
        return true;
    }));

    out.push_back(run_check("classes avoiding 123 or 213 vanish past k = 1", [&](std::string& d) {
        for (const char* patname : {"123", "213"}) {
            const auto cls = pats_of({patname});
            for (int k = 2; k <= std::min(max_k, 4); ++k) {
                const std::uint64_t c = count_uniquely_sorted(k, cls);
                if (c != 0) {
                    d = mismatch(std::string(patname) + " class at k = " + std::to_string(k), c, 0);
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(run_check("reference files agree with fresh enumeration", [&](std::string& d) {
        namespace fs = std::filesystem;
        const fs::path dir = data_dir.empty() ? fs::path(default_data_dir()) : fs::path(data_dir);
        if (!fs::is_directory(dir)) {
            d = "reference directory not found: " + dir.string();
            return false;
        }
        int files = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() != ".csv") continue;
            ++files;
            const auto saved = read_sequence_csv(entry.path().string());
            if (saved.empty()) {
                d = "empty reference file " + entry.path().filename().string();
                return false;
            }
            const auto pats = parse_pattern_set(saved.front().klass);
            if (!pats) {
                d = "bad class in " + entry.path().filename().string();
                return false;
            }
            int kmax = 0;
            for (const auto& r : saved) kmax = std::max(kmax, r.k);
            kmax = std::min(kmax, std::max(max_k, 0));
            const auto fresh = compute_sequence(*pats, kmax);
            for (const auto& r : saved) {
                if (r.k > kmax) continue;
                if (fresh[static_cast<std::size_t>(r.k)].count != r.count) {
                    d = "drift in " + entry.path().filename().string() + " at k = " + std::to_string(r.k);
                    return false;
                }
            }
        }
        if (files == 0) {
            d = "no reference files in " + dir.string();
            return false;
        }
        d = std::to_string(files) + " files checked";
        return true;
    }));

    out.push_back(run_check("nested Catalan identity residual vanishes", [&](std::string& d) {
        if (!nested_catalan_identity_holds(13)) {
            d = "residual nonzero up to order 13";
            return false;
        }
        return true;
    }));

    return out;
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    if (suite == "lemmas") return lemmas_suite(opt.max_k);
    if (suite == "posets") return posets_suite(opt.max_k);
    if (suite == "bijections") return bijections_suite(opt.max_k);
    if (suite == "sequences") return sequences_suite(opt.max_k, opt.data_dir);
    if (suite == "all") {
        for (const char* s : {"lemmas", "posets", "bijections", "sequences"}) {
            auto part = run_suite(s, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verify suite: " + suite +
                                " (expected lemmas, posets, bijections, sequences, or all)");
}

}  // namespace catsort
