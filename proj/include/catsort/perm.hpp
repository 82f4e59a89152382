#pragma once

// One-line-notation permutations: values, normalization, plot symmetries,
// sums, pattern containment, and lexicographic avoider enumeration.
// Positions and values are 1-based in every public signature; only raw
// vector indices are 0-based.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace catsort {

class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> entries);

    static Perm identity(int n);

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }

    /// Entry at 1-based position.
    int at(int pos) const {
        if (pos < 1 || pos > size()) throw std::out_of_range("Perm::at: position out of range");
        return v_[static_cast<std::size_t>(pos - 1)];
    }

    const std::vector<int>& entries() const { return v_; }

    /// True iff the entry set is exactly {1,...,n}.
    bool is_normalized() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> v_;
};

/// Unique normalized permutation with the same relative order. Idempotent.
Perm normalize(const Perm& p);

/// 1-based indices i with p_i > p_{i+1}, ascending.
std::vector<int> descents(const Perm& p);
int descent_count(const Perm& p);

enum class Symmetry { reverse, inverse, rot, rot_inverse };

Perm reversed(const Perm& p);
Perm inverted(const Perm& p);     // requires normalized
Perm rotated(const Perm& p);      // ccw 90 degrees; equals reversed(inverted(p))
Perm rotated_inv(const Perm& p);  // cw 90 degrees
Perm apply_symmetry(const Perm& p, Symmetry s);

Perm direct_sum(const Perm& mu, const Perm& lam);  // lam shifted above-right of mu
Perm skew_sum(const Perm& mu, const Perm& lam);    // lam below-right of mu

/// True iff some subsequence of p has the relative order of pattern.
bool contains(const Perm& p, const Perm& pattern);
bool avoids(const Perm& p, const Perm& pattern);
bool avoids_all(const Perm& p, std::span<const Perm> patterns);

/// 1-based positions of one occurrence, if any (lexicographically first).
std::optional<std::vector<int>> find_occurrence(const Perm& p, const Perm& pattern);

namespace detail {

// True iff some occurrence of pattern in prefix uses the last element of
// prefix as its final entry. With pattern-free proper prefixes this is the
// only check needed while extending.
bool occurrence_ending_last(const std::vector<int>& prefix, const Perm& pattern);

// DFS over prefixes of normalized permutations of [n] in ascending value
// order, pruning any prefix whose newest entry completes a pattern.
// Visit(prefix) is called on every full-length avoider, in lexicographic
// order. `pinned` fixes the leading entries (used to partition the tree
// for parallel counting); a pinned prefix that already completes a
// pattern contributes nothing.
template <class Fn>
void avoider_dfs(int n, std::span<const Perm> pats, std::span<const int> pinned, Fn&& visit) {
    if (n == 0) {
        visit(std::vector<int>{});
        return;
    }
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto violates = [&]() {
        for (const Perm& pat : pats)
            if (occurrence_ending_last(prefix, pat)) return true;
        return false;
    };
    for (int v : pinned) {
        prefix.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
        if (violates()) return;
    }
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == n) {
            visit(static_cast<const std::vector<int>&>(prefix));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            prefix.push_back(v);
            used[static_cast<std::size_t>(v)] = true;
            if (!violates()) self(self);
            prefix.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec);
}

}  // namespace detail

/// Av_n(pats) in lexicographic one-line order.
template <class Fn>
void for_each_avoider(int n, std::span<const Perm> pats, Fn&& fn) {
    detail::avoider_dfs(n, pats, {}, [&](const std::vector<int>& w) { fn(Perm(w)); });
}

std::vector<Perm> avoiders(int n, std::span<const Perm> pats);

/// |Av_n(pats)|. OpenMP-parallel over the first entry.
std::uint64_t count_avoiders(int n, std::span<const Perm> pats);

namespace serial {
/// Reference kernel: plain sequential DFS count.
std::uint64_t count_avoiders(int n, std::span<const Perm> pats);
}  // namespace serial

}  // namespace catsort
