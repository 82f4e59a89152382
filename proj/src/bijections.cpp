#include "catsort/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "catsort/gentree.hpp"
#include "catsort/stacksort.hpp"

namespace catsort {

namespace {

const Perm& pat(const char* digits) {
    static const std::vector<std::pair<std::string, Perm>> table = [] {
        std::vector<std::pair<std::string, Perm>> t;
        for (const char* d : {"132", "231", "312", "321", "1342", "4132"}) {
            std::vector<int> v;
            for (const char* c = d; *c; ++c) v.push_back(*c - '0');
            t.emplace_back(d, Perm(v));
        }
        return t;
    }();
    for (const auto& [key, p] : table)
        if (key == digits) return p;
    throw std::logic_error("pat: unknown pattern literal");
}

std::string perm_str(const Perm& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) os << ',';
        os << p.at(i);
    }
    return os.str();
}

void require_class(const Perm& p, std::initializer_list<const char*> pats, const char* what) {
    if (p.size() % 2 == 0)
        throw std::invalid_argument(std::string(what) + ": length must be odd");
    for (const char* d : pats) {
        if (auto occ = find_occurrence(p, pat(d))) {
            std::ostringstream os;
            os << what << ": input contains " << d << " at positions";
            for (int i : *occ) os << ' ' << i;
            throw std::invalid_argument(os.str());
        }
    }
    if (!is_uniquely_sorted(p))
        throw std::invalid_argument(std::string(what) + ": " + perm_str(p) + " is not uniquely sorted");
}

}  // namespace

DyckInterval dl_forward(const Perm& p) {
    require_class(p, {"312"}, "dl_forward");
    const int n = p.size();
    const int k = (n - 1) / 2;
    const std::vector<int> des = descents(p);
    std::vector<bool> is_des(static_cast<std::size_t>(n) + 1, false);
    for (int d : des) is_des[static_cast<std::size_t>(d)] = true;
    std::vector<bool> lower(static_cast<std::size_t>(2 * k));
    for (int i = 1; i <= 2 * k; ++i)
        lower[static_cast<std::size_t>(i - 1)] = !is_des[static_cast<std::size_t>(n - i)];
    const std::vector<int> rdes = descents(rotated(p));
    std::vector<bool> upper(static_cast<std::size_t>(2 * k), false);
    for (int d : rdes)
        if (d <= 2 * k) upper[static_cast<std::size_t>(d - 1)] = true;
    return DyckInterval{DyckPath::from_steps(lower), DyckPath::from_steps(upper), PosetKind::stanley};
}

CellMatrix cell_matrix(const Perm& p) {
    require_class(p, {"312"}, "cell_matrix");
    const int n = p.size();
    const int k = (n - 1) / 2;
    std::vector<int> max_pos;  // left-to-right maxima, left to right
    int best = 0;
    for (int j = 1; j <= n; ++j) {
        if (p.at(j) > best) {
            best = p.at(j);
            max_pos.push_back(j);
        }
    }
    if (static_cast<int>(max_pos.size()) != k + 1)
        throw std::logic_error("cell_matrix: expected k+1 left-to-right maxima");
    std::vector<int> max_hts;
    for (int q : max_pos) max_hts.push_back(p.at(q));
    CellMatrix m;
    m.k = k;
    m.m.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
    for (int q = 1; q <= n; ++q) {
        if (std::binary_search(max_pos.begin(), max_pos.end(), q)) continue;
        const int h = p.at(q);
        const int tp = static_cast<int>(std::lower_bound(max_pos.begin(), max_pos.end(), q) - max_pos.begin());
        const int th = static_cast<int>(std::lower_bound(max_hts.begin(), max_hts.end(), h) - max_hts.begin());
        const int col = tp;      // gap between the (tp-1)-th and tp-th maxima
        const int row = k - th;  // height band below the th-th maximum
        if (col < 1 || col > k || row < 1 || row > k)
            throw std::logic_error("cell_matrix: point escapes the cell grid");
        m.at(row, col) += 1;
    }
    return m;
}

bool cell_matrix_properties_hold(const CellMatrix& m, const std::vector<int>& a,
                                 const std::vector<int>& b) {
    const int k = m.k;
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k) return false;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (m.at(i, j) < 0) return false;
            if (j <= k - i && m.at(i, j) != 0) return false;
        }
    for (int j = 1; j <= k; ++j) {
        std::int64_t s = 0;
        for (int i = 1; i <= k; ++i) s += m.at(i, j);
        if (s != b[static_cast<std::size_t>(j - 1)]) return false;
    }
    for (int i = 1; i <= k; ++i) {
        std::int64_t s = 0;
        for (int j = 1; j <= k; ++j) s += m.at(i, j);
        if (s != a[static_cast<std::size_t>(k - i)]) return false;
    }
    for (int c = 1; c <= k; ++c)
        for (int cp = c + 1; cp <= k; ++cp)
            for (int r = std::max(1, k + 1 - c); r <= k; ++r)
                for (int rp = r + 1; rp <= k; ++rp)
                    if (m.at(rp, c) > 0 && m.at(r, cp) > 0) return false;
    return true;
}

namespace {

CellMatrix build_from_margins(const std::vector<int>& a, const std::vector<int>& b) {
    const int k = static_cast<int>(a.size());
    CellMatrix m;
    m.k = k;
    m.m.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
    if (k == 0) return m;
    const long long total = std::accumulate(a.begin(), a.end(), 0LL);
    if (total == 0) return m;
    if (b[static_cast<std::size_t>(k - 1)] == 0) {
        const std::vector<int> a2(a.begin(), a.end() - 1);
        const std::vector<int> b2(b.begin(), b.end() - 1);
        const CellMatrix inner = build_from_margins(a2, b2);
        for (int i = 2; i <= k; ++i)
            for (int j = 1; j <= k - 1; ++j) m.at(i, j) = inner.at(i - 1, j);
        return m;
    }
    int l = 0;
    for (int cand = 1; cand <= k; ++cand) {
        if (a[static_cast<std::size_t>(k - cand)] >= 1) { l = cand; break; }
    }
    std::vector<int> a2(a), b2(b);
    a2[static_cast<std::size_t>(k - l)] -= 1;
    b2[static_cast<std::size_t>(k - 1)] -= 1;
    CellMatrix res = build_from_margins(a2, b2);
    // a_{k-l+1} governs the sum of row l, so the unit goes to cell (l, k).
    res.at(l, k) += 1;
    return res;
}

// Rebalancing move on the lexicographically smallest (r', c, r, c')
// violating quadruple; each move strictly lowers the weighted energy, so
// the loop terminates.
void normalize_corners(CellMatrix& m) {
    const int k = m.k;
    for (;;) {
        bool moved = false;
        for (int rp = 2; rp <= k && !moved; ++rp)
            for (int c = 1; c <= k && !moved; ++c) {
                if (m.at(rp, c) <= 0) continue;
                for (int r = std::max(1, k + 1 - c); r < rp && !moved; ++r)
                    for (int cp = c + 1; cp <= k && !moved; ++cp) {
                        if (m.at(r, cp) <= 0) continue;
                        m.at(r, c) += 1;
                        m.at(r, cp) -= 1;
                        m.at(rp, c) -= 1;
                        m.at(rp, cp) += 1;
                        moved = true;
                    }
            }
        if (!moved) return;
    }
}

}  // namespace

CellMatrix solve_cell_matrix(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_cell_matrix: size mismatch");
    const int k = static_cast<int>(a.size());
    for (int x : a)
        if (x < 0) throw std::invalid_argument("solve_cell_matrix: negative margin");
    for (int x : b)
        if (x < 0) throw std::invalid_argument("solve_cell_matrix: negative margin");
    long long suf_a = 0, suf_b = 0;
    for (int i = 1; i <= k; ++i) {
        suf_a += a[static_cast<std::size_t>(k - i)];
        suf_b += b[static_cast<std::size_t>(k - i)];
        if (suf_a > suf_b) {
            std::ostringstream os;
            os << "solve_cell_matrix: suffix dominance fails at the last " << i
               << " entries (" << suf_a << " > " << suf_b << ")";
            throw std::invalid_argument(os.str());
        }
    }
    if (suf_a != suf_b)
        throw std::invalid_argument("solve_cell_matrix: margin totals differ");
    CellMatrix m = build_from_margins(a, b);
    normalize_corners(m);
    return m;
}

Perm dl_inverse(const DyckInterval& iv) {
    if (iv.lower.semilength() != iv.upper.semilength())
        throw std::invalid_argument("dl_inverse: semilength mismatch");
    if (!dyck_leq(iv.lower, iv.upper, PosetKind::stanley))
        throw std::invalid_argument("dl_inverse: lower path is not weakly below upper path");
    const int k = iv.lower.semilength();
    const int n = 2 * k + 1;
    if (k == 0) return Perm::identity(1);
    const std::vector<int> g = gamma_runs(iv.lower);
    const std::vector<int> gp = gamma_runs(iv.upper);
    std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        a[static_cast<std::size_t>(i - 1)] = gp[static_cast<std::size_t>(k - i)];
        b[static_cast<std::size_t>(i - 1)] = g[static_cast<std::size_t>(k - i)];
    }
    const CellMatrix m = solve_cell_matrix(a, b);

    // Heights, top to bottom: the top two maxima, then each height band
    // (cells left to right, counts descending) followed by the maximum
    // that bounds it below.
    std::vector<int> max_height(static_cast<std::size_t>(k) + 1, 0);  // index by maxima from the right
    std::vector<std::vector<std::vector<int>>> cell_heights(
        static_cast<std::size_t>(k) + 1, std::vector<std::vector<int>>(static_cast<std::size_t>(k) + 1));
    int h = n;
    max_height[0] = h--;
    max_height[1] = h--;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j)
            for (std::int64_t t = 0; t < m.at(i, j); ++t)
                cell_heights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(h--);
        if (i + 1 <= k) max_height[static_cast<std::size_t>(i + 1)] = h--;
    }

    // Positions, left to right: leftmost maximum, then each column gap
    // (cells top band down, heights pulled highest first) followed by the
    // next maximum.
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back(max_height[static_cast<std::size_t>(k)]);
    for (int j = 1; j <= k; ++j) {
        for (int i = 1; i <= k; ++i)
            for (int ht : cell_heights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                out.push_back(ht);
        out.push_back(max_height[static_cast<std::size_t>(k - j)]);
    }
    return Perm(std::move(out));
}

DyckInterval tamari_forward(const Perm& p) {
    require_class(p, {"132"}, "tamari_forward");
    const DyckInterval base = dl_forward(slide(p, SlideOp::left));
    if (!dyck_leq(base.lower, base.upper, PosetKind::tamari))
        throw std::logic_error("tamari_forward: image escapes the Tamari order");
    return DyckInterval{base.lower, base.upper, PosetKind::tamari};
}

Perm tamari_inverse(const DyckInterval& iv) {
    if (!dyck_leq(iv.lower, iv.upper, PosetKind::tamari))
        throw std::invalid_argument("tamari_inverse: not a Tamari interval");
    return slide(dl_inverse(DyckInterval{iv.lower, iv.upper, PosetKind::stanley}), SlideOp::right);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); }
};

NCPartition partition_from_uf(UnionFind& uf, int k) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) groups[static_cast<std::size_t>(uf.find(x))].push_back(x + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return NCPartition::make(std::move(blocks), k);
}

}  // namespace

NCInterval nc_interval_direct(const Perm& p) {
    if (!in_u312_1342(p))
        throw std::invalid_argument("nc_interval_direct: not a uniquely sorted 312/1342-avoider");
    const int n = p.size();
    const int k = (n - 1) / 2;
    if (k == 0) return NCInterval{};
    const HookConfig cfg = *canonical_hooks(p);
    // Northeast endpoints by increasing height; partners sit immediately
    // right of the matching southwest endpoints.
    std::vector<Hook> by_height = cfg.hooks;
    std::sort(by_height.begin(), by_height.end(),
              [&](const Hook& x, const Hook& y) { return p.at(x.ne) < p.at(y.ne); });
    std::vector<int> w_pos(static_cast<std::size_t>(k)), v_pos(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l) {
        w_pos[static_cast<std::size_t>(l)] = by_height[static_cast<std::size_t>(l)].ne;
        v_pos[static_cast<std::size_t>(l)] = by_height[static_cast<std::size_t>(l)].sw + 1;
    }
    auto stacked = [&](int top_pos, int bot_pos) {
        return top_pos + 1 == bot_pos && p.at(top_pos) == p.at(bot_pos) + 1;
    };
    UnionFind rho_uf(k);
    for (int l = 0; l < k; ++l)
        for (int m = 0; m < k; ++m)
            if (l != m && stacked(v_pos[static_cast<std::size_t>(l)], v_pos[static_cast<std::size_t>(m)]))
                rho_uf.unite(l, m);
    UnionFind kappa_uf = rho_uf;
    for (int l = 0; l < k; ++l)
        for (int m = 0; m < k; ++m)
            if (stacked(w_pos[static_cast<std::size_t>(l)], v_pos[static_cast<std::size_t>(m)]))
                kappa_uf.unite(l, m);
    NCInterval iv{partition_from_uf(rho_uf, k), partition_from_uf(kappa_uf, k)};
    if (!nc_leq(iv.rho, iv.kappa))
        throw std::logic_error("nc_interval_direct: produced a non-interval");
    return iv;
}

NCInterval nc_interval_tree(const Perm& p) {
    if (!in_u312_1342(p))
        throw std::invalid_argument("nc_interval_tree: not a uniquely sorted 312/1342-avoider");
    if (p.size() == 1) return NCInterval{};
    // The replay starts at the unique size-3 member, matching nc_root().
    std::vector<int> path;
    Perm cur = p;
    while (cur.size() > 3) {
        const Perm parent = perm_parent(cur);
        const std::vector<Perm> kids = perm_children(parent);
        const auto it = std::find(kids.begin(), kids.end(), cur);
        if (it == kids.end()) throw std::logic_error("nc_interval_tree: parent does not regenerate child");
        path.push_back(static_cast<int>(it - kids.begin()));
        cur = parent;
    }
    std::reverse(path.begin(), path.end());
    NCInterval iv = nc_root();
    for (int idx : path) {
        const std::vector<NCInterval> kids = nc_children(iv);
        iv = kids[static_cast<std::size_t>(idx)];
    }
    return iv;
}

PalloSplit pallo_split(const Perm& p) {
    require_class(p, {"231", "4132"}, "pallo_split");
    const int n = p.size();
    if (n < 3) throw std::invalid_argument("pallo_split: needs length >= 3");
    const HookConfig cfg = *canonical_hooks(p);
    const Hook* into_last = nullptr;
    for (const Hook& h : cfg.hooks)
        if (h.ne == n) { into_last = &h; break; }
    if (into_last == nullptr) throw std::logic_error("pallo_split: last point is not a northeast endpoint");
    const int i = into_last->sw;

    if (i != 1) {
        std::vector<int> head_vals, tail_vals;
        for (int j = 1; j < i; ++j) head_vals.push_back(p.at(j));
        head_vals.push_back(p.at(i));
        for (int j = i; j <= n; ++j) tail_vals.push_back(p.at(j));
        return PalloSplit{false, normalize(Perm(head_vals)), normalize(Perm(tail_vals))};
    }

    const int first = p.at(1);
    // lam = the entries below the first entry; mu = the rest (minus n).
    std::vector<int> lam;
    for (int j = 2; j <= n; ++j)
        if (p.at(j) < first) lam.push_back(p.at(j));
    int m_best = -1;
    for (int m = 0; 2 * m + 1 <= static_cast<int>(lam.size()); ++m) {
        std::vector<int> tau_vals;
        for (int x : lam)
            if (x <= 2 * m + 1) tau_vals.push_back(x);
        if (is_uniquely_sorted(Perm(tau_vals))) m_best = m;
    }
    if (m_best < 0) throw std::logic_error("pallo_split: no uniquely sorted bottom segment");
    const int tau_top = 2 * m_best + 1;
    std::vector<int> tau_vals, rest_vals;
    rest_vals.push_back(first);
    for (int j = 2; j <= n; ++j) {
        const int x = p.at(j);
        if (j == n) continue;  // drop the final maximum
        if (x <= tau_top)
            tau_vals.push_back(x);
        else
            rest_vals.push_back(x);
    }
    return PalloSplit{true, normalize(Perm(rest_vals)), Perm(tau_vals)};
}

Perm pallo_unsplit(const PalloSplit& s) {
    if (!s.nice) {
        if (s.head.size() < 1) throw std::invalid_argument("pallo_unsplit: empty head");
        std::vector<int> sigma(s.head.entries().begin(), s.head.entries().end() - 1);
        return direct_sum(Perm(sigma), s.tail);
    }
    const int shift = s.tail.size();
    std::vector<int> out;
    for (int x : s.head.entries()) {
        out.push_back(x + shift);
        if (x == 1)
            for (int t : s.tail.entries()) out.push_back(t);
    }
    out.push_back(s.head.size() + s.tail.size() + 1);
    return Perm(std::move(out));
}

bool is_nondecreasing_parking(const std::vector<int>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1 || a[i] > static_cast<int>(i) + 1) return false;
        if (i > 0 && a[i] < a[i - 1]) return false;
    }
    return true;
}

std::vector<int> parking_from_perm(const Perm& p) {
    require_class(p, {"321"}, "parking_from_perm");
    const int k = (p.size() - 1) / 2;
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) a.push_back(p.at(2 * i) - i + 1);
    if (!is_nondecreasing_parking(a))
        throw std::logic_error("parking_from_perm: image is not a nondecreasing parking function");
    return a;
}

Perm perm_from_parking(const std::vector<int>& a) {
    if (!is_nondecreasing_parking(a))
        throw std::invalid_argument("perm_from_parking: not a nondecreasing parking function");
    const int k = static_cast<int>(a.size());
    const int n = 2 * k + 1;
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= k; ++i) {
        const int v = a[static_cast<std::size_t>(i - 1)] + i - 1;
        out[static_cast<std::size_t>(2 * i - 1)] = v;
        used[static_cast<std::size_t>(v)] = true;
    }
    int next = 1;
    for (int i = 0; i < n; i += 2) {
        while (used[static_cast<std::size_t>(next)]) ++next;
        out[static_cast<std::size_t>(i)] = next;
        used[static_cast<std::size_t>(next)] = true;
    }
    return Perm(std::move(out));
}

bool is_layered(const Perm& p) {
    return avoids(p, pat("231")) && avoids(p, pat("312"));
}

DyckInterval antichain_map(const Perm& p, AntichainRoute route) {
    DyckInterval base;
    switch (route) {
        case AntichainRoute::layered:
            require_class(p, {"231", "312"}, "antichain_map(layered)");
            base = dl_forward(p);
            break;
        case AntichainRoute::via_left_slide:
            require_class(p, {"132", "231"}, "antichain_map(via_left_slide)");
            base = dl_forward(slide(p, SlideOp::left));
            break;
        case AntichainRoute::via_down_slide:
            require_class(p, {"132", "312"}, "antichain_map(via_down_slide)");
            base = dl_forward(slide(p, SlideOp::down));
            break;
    }
    if (!(base.lower == base.upper))
        throw std::logic_error("antichain_map: image components differ");
    return DyckInterval{base.lower, base.upper, PosetKind::antichain};
}

std::string updown_word(const Perm& p) {
    if (p.size() % 2 == 0) throw std::invalid_argument("updown_word: length must be odd");
    for (const char* d : {"132", "231"})
        if (contains(p, pat(d)))
            throw std::invalid_argument(std::string("updown_word: input contains ") + d);
    const int n = p.size();
    const int k = (n - 1) / 2;
    int one_pos = 0;
    for (int j = 1; j <= n; ++j)
        if (p.at(j) == 1) { one_pos = j; break; }
    std::vector<bool> in_tail(static_cast<std::size_t>(n) + 1, false);
    for (int j = one_pos + 1; j <= n; ++j) in_tail[static_cast<std::size_t>(p.at(j))] = true;
    std::string w;
    for (int l = 1; l <= 2 * k; ++l)
        w.push_back(in_tail[static_cast<std::size_t>(2 * k + 2 - l)] ? 'U' : 'D');
    return w;
}

}  // namespace catsort
