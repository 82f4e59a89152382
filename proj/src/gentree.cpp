#include "catsort/gentree.hpp"

#include <algorithm>
#include <stdexcept>

namespace catsort {

namespace {

const Perm& pat312() {
    static const Perm p(std::vector<int>{3, 1, 2});
    return p;
}
const Perm& pat1342() {
    static const Perm p(std::vector<int>{1, 3, 4, 2});
    return p;
}

void require_member(const Perm& p, const char* what) {
    if (!in_u312_1342(p)) throw std::invalid_argument(std::string(what) + ": not a uniquely sorted 312/1342-avoider");
}

}  // namespace

bool in_u312_1342(const Perm& p) {
    return avoids(p, pat312()) && avoids(p, pat1342()) && is_uniquely_sorted(p);
}

Skyline skyline(const Perm& p) {
    require_member(p, "skyline");
    const int n = p.size();
    Skyline sky;
    sky.points.push_back(1);
    if (n == 1) return sky;
    const HookConfig cfg = *canonical_hooks(p);
    int cur = 1;
    while (cur != n) {
        const Hook* next = nullptr;
        for (const Hook& h : cfg.hooks)
            if (h.sw == cur) { next = &h; break; }
        if (next == nullptr) throw std::logic_error("skyline: chain broken before the last point");
        sky.hooks.push_back(*next);
        sky.points.push_back(next->ne);
        cur = next->ne;
    }
    return sky;
}

bool conjoined(const Perm& p, int q) {
    if (q < 1 || q > p.size()) throw std::out_of_range("conjoined: position out of range");
    if (q == p.size()) return false;
    return p.at(q) == p.at(q + 1) + 1;
}

namespace {

// Nonconjoined skyline hooks right to left, each with the run of skyline
// hooks it closes off (itself included, the next nonconjoined hook
// excluded), also right to left.
struct SkylineIndex {
    std::vector<Hook> anchors;               // H_1..H_t
    std::vector<std::vector<Hook>> runs;     // H_{i,1}..H_{i,m_i}
};

SkylineIndex skyline_index(const Perm& p, const Skyline& sky) {
    SkylineIndex idx;
    const int h = static_cast<int>(sky.hooks.size());
    int pos = h - 1;  // scan right to left
    while (pos >= 0) {
        const Hook anchor = sky.hooks[static_cast<std::size_t>(pos)];
        if (conjoined(p, anchor.ne)) throw std::logic_error("skyline_index: rightmost unscanned hook must be nonconjoined");
        std::vector<Hook> run;
        run.push_back(anchor);
        --pos;
        while (pos >= 0 && conjoined(p, sky.hooks[static_cast<std::size_t>(pos)].ne)) {
            run.push_back(sky.hooks[static_cast<std::size_t>(pos)]);
            --pos;
        }
        idx.anchors.push_back(anchor);
        idx.runs.push_back(std::move(run));
    }
    return idx;
}

}  // namespace

int perm_label(const Perm& p) {
    require_member(p, "perm_label");
    if (p.size() < 3) throw std::invalid_argument("perm_label: needs length >= 3");
    const Skyline sky = skyline(p);
    const SkylineIndex idx = skyline_index(p, sky);
    int m_total = 0;
    for (const auto& run : idx.runs) m_total += static_cast<int>(run.size());
    return 1 + static_cast<int>(idx.anchors.size()) + m_total;
}

Perm split_point(const Perm& p, int pos) {
    const int n = p.size();
    if (pos < 1 || pos > n) throw std::out_of_range("split_point: position out of range");
    const int v = p.at(pos);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        const int x = p.at(j);
        out.push_back(x >= v ? x + 1 : x);
        if (j == pos) out.push_back(v);
    }
    return Perm(std::move(out));
}

std::vector<Perm> perm_children(const Perm& p) {
    require_member(p, "perm_children");
    const Skyline sky = skyline(p);
    const SkylineIndex idx = skyline_index(p, sky);
    std::vector<Perm> out;
    out.push_back(direct_sum(skew_sum(p, Perm::identity(1)), Perm::identity(1)));
    for (const Hook& anchor : idx.anchors)
        out.push_back(direct_sum(split_point(p, anchor.ne), Perm::identity(1)));
    for (const auto& run : idx.runs)
        for (const Hook& h : run)
            out.push_back(direct_sum(split_point(p, h.sw + 1), Perm::identity(1)));
    return out;
}

Perm perm_parent(const Perm& p) {
    require_member(p, "perm_parent");
    const int n = p.size();
    if (n < 3) throw std::invalid_argument("perm_parent: the one-point permutation has no parent");
    const HookConfig cfg = *canonical_hooks(p);
    const Hook* last = nullptr;
    for (const Hook& h : cfg.hooks)
        if (h.ne == n) { last = &h; break; }
    if (last == nullptr) throw std::logic_error("perm_parent: last point is not a northeast endpoint");
    const int partner = last->sw + 1;
    std::vector<int> rest;
    for (int j = 1; j <= n; ++j) {
        if (j == n || j == partner) continue;
        rest.push_back(p.at(j));
    }
    return normalize(Perm(std::move(rest)));
}

}  // namespace catsort
