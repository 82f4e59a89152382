#include "catsort/perm.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catsort {

Perm::Perm(std::vector<int> entries) : v_(std::move(entries)) {
    std::vector<int> s(v_);
    std::sort(s.begin(), s.end());
    if (!s.empty() && s.front() < 1) throw std::invalid_argument("Perm: entries must be positive");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("Perm: entries must be distinct");
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

bool Perm::is_normalized() const {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : v_) {
        if (x > n) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    for (int i = 1; i <= n; ++i)
        if (!seen[static_cast<std::size_t>(i)]) return false;
    return true;
}

Perm normalize(const Perm& p) {
    const auto& v = p.entries();
    std::vector<int> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)]; });
    std::vector<int> out(v.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
    return Perm(std::move(out));
}

std::vector<int> descents(const Perm& p) {
    std::vector<int> d;
    const auto& v = p.entries();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] > v[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

int descent_count(const Perm& p) { return static_cast<int>(descents(p).size()); }

Perm reversed(const Perm& p) {
    std::vector<int> v(p.entries().rbegin(), p.entries().rend());
    return Perm(std::move(v));
}

static void require_normalized(const Perm& p, const char* what) {
    if (!p.is_normalized()) throw std::invalid_argument(std::string(what) + ": permutation must be normalized");
}

Perm inverted(const Perm& p) {
    require_normalized(p, "inverted");
    const auto& v = p.entries();
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[static_cast<std::size_t>(v[i] - 1)] = static_cast<int>(i) + 1;
    return Perm(std::move(out));
}

Perm rotated(const Perm& p) { return reversed(inverted(p)); }

Perm rotated_inv(const Perm& p) {
    require_normalized(p, "rotated_inv");
    return inverted(reversed(p));
}

Perm apply_symmetry(const Perm& p, Symmetry s) {
    switch (s) {
        case Symmetry::reverse: return reversed(p);
        case Symmetry::inverse: return inverted(p);
        case Symmetry::rot: return rotated(p);
        case Symmetry::rot_inverse: return rotated_inv(p);
    }
    throw std::logic_error("apply_symmetry: bad tag");
}

Perm direct_sum(const Perm& mu, const Perm& lam) {
    require_normalized(mu, "direct_sum");
    require_normalized(lam, "direct_sum");
    std::vector<int> v = mu.entries();
    const int shift = mu.size();
    for (int x : lam.entries()) v.push_back(x + shift);
    return Perm(std::move(v));
}

Perm skew_sum(const Perm& mu, const Perm& lam) {
    require_normalized(mu, "skew_sum");
    require_normalized(lam, "skew_sum");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(mu.size() + lam.size()));
    const int shift = lam.size();
    for (int x : mu.entries()) v.push_back(x + shift);
    for (int x : lam.entries()) v.push_back(x);
    return Perm(std::move(v));
}

namespace {

constexpr int kMaxPatternLen = 64;

// Backtracking occurrence search over 1-based positions. `fixed_last`
// pins the final pattern entry to the last position of `v`. Allocation
// free: this runs once per node of the avoider enumeration tree.
bool occurrence_search(const std::vector<int>& v, const std::vector<int>& pat,
                       bool fixed_last, std::vector<int>* out) {
    const int n = static_cast<int>(v.size());
    const int m = static_cast<int>(pat.size());
    if (m == 0 || m > n) return false;
    if (m > kMaxPatternLen) throw std::length_error("occurrence_search: pattern too long");
    int idx[kMaxPatternLen];  // chosen 0-based positions
    auto consistent = [&](int j, int cand) {
        for (int t = 0; t < j; ++t) {
            const bool vlt = v[static_cast<std::size_t>(idx[t])] < v[static_cast<std::size_t>(cand)];
            const bool plt = pat[static_cast<std::size_t>(t)] < pat[static_cast<std::size_t>(j)];
            if (vlt != plt) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int j, int start) -> bool {
        if (j == m) return true;
        if (fixed_last && j == m - 1) {
            const int cand = n - 1;
            if (cand < start || !consistent(j, cand)) return false;
            idx[j] = cand;
            return true;
        }
        // leave room for the m-j-1 entries still to be placed
        for (int cand = start; cand <= n - m + j; ++cand) {
            if (!consistent(j, cand)) continue;
            idx[j] = cand;
            if (self(self, j + 1, cand + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return false;
    if (out) {
        out->clear();
        for (int j = 0; j < m; ++j) out->push_back(idx[j] + 1);
    }
    return true;
}

}  // namespace

bool contains(const Perm& p, const Perm& pattern) {
    return occurrence_search(p.entries(), pattern.entries(), false, nullptr);
}

bool avoids(const Perm& p, const Perm& pattern) { return !contains(p, pattern); }

bool avoids_all(const Perm& p, std::span<const Perm> patterns) {
    for (const Perm& pat : patterns)
        if (contains(p, pat)) return false;
    return true;
}

std::optional<std::vector<int>> find_occurrence(const Perm& p, const Perm& pattern) {
    std::vector<int> out;
    if (occurrence_search(p.entries(), pattern.entries(), false, &out)) return out;
    return std::nullopt;
}

namespace detail {

bool occurrence_ending_last(const std::vector<int>& prefix, const Perm& pattern) {
    return occurrence_search(prefix, pattern.entries(), true, nullptr);
}

}  // namespace detail

std::vector<Perm> avoiders(int n, std::span<const Perm> pats) {
    std::vector<Perm> out;
    for_each_avoider(n, pats, [&](const Perm& p) { out.push_back(p); });
    return out;
}

namespace serial {

std::uint64_t count_avoiders(int n, std::span<const Perm> pats) {
    std::uint64_t c = 0;
    detail::avoider_dfs(n, pats, {}, [&](const std::vector<int>&) { ++c; });
    return c;
}

}  // namespace serial

std::uint64_t count_avoiders(int n, std::span<const Perm> pats) {
    if (n < 2) return serial::count_avoiders(n, pats);
    // Two pinned entries give n(n-1) subtrees, enough to balance the load.
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
    for (int chunk = 0; chunk < n * n; ++chunk) {
        const int first = chunk / n + 1;
        const int second = chunk % n + 1;
        if (first == second) continue;
        const int pinned[2] = {first, second};
        std::uint64_t c = 0;
        detail::avoider_dfs(n, pats, pinned, [&](const std::vector<int>&) { ++c; });
        total += c;
    }
    return total;
}

}  // namespace catsort
