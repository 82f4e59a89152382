#pragma once

// The stack-sorting map s, canonical hook configurations, sortedness,
// unique sortedness, fertility (brute force and whole-S_n census), the
// deficiency statistic, and enumeration of uniquely sorted permutations.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "catsort/guards.hpp"
#include "catsort/perm.hpp"

namespace catsort {

/// One pass of the stack sorter: s(LnR) = s(L) s(R) n.
Perm stack_sort(const Perm& p);

/// A hook joins a southwest endpoint to a higher northeast endpoint lying
/// to its right. Positions are 1-based.
struct Hook {
    int sw = 0;
    int ne = 0;
    bool operator==(const Hook&) const = default;
};

/// Hooks in descent order (one per descent, ascending southwest position).
struct HookConfig {
    std::vector<Hook> hooks;
};

/// The canonical hook configuration, or nullopt when some descent top
/// cannot find a northeast endpoint. Unsortedness is data, not an error.
std::optional<HookConfig> canonical_hooks(const Perm& p);

/// True iff p has positive fertility, decided via canonical_hooks.
bool is_sorted(const Perm& p);

/// Sorted with exactly (n-1)/2 descents; always false at even length.
bool is_uniquely_sorted(const Perm& p);

/// Least l >= 0 such that appending an increasing run of length l makes p
/// sorted; 0 iff p is sorted.
int deficiency(const Perm& p);

enum class FertilityMethod { brute, census };

/// Multiplicity table of the map s over S_n: fertility lookups in O(1).
class FertilityCensus {
public:
    FertilityCensus(int n, std::unordered_map<std::uint64_t, std::uint64_t> table)
        : n_(n), table_(std::move(table)) {}

    int n() const { return n_; }
    std::size_t distinct_images() const { return table_.size(); }
    std::uint64_t fertility_of(const Perm& p) const;

private:
    int n_ = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> table_;
};

/// Cached census for S_n (built on first use, shared, evicted by total
/// size bound). Safe for concurrent readers once returned.
std::shared_ptr<const FertilityCensus> fertility_census(int n, int guard_n = kFertilityGuardN);

/// |s^{-1}(p)|. brute scans S_n each call; census answers from the table.
std::uint64_t fertility(const Perm& p, FertilityMethod method = FertilityMethod::census,
                        int guard_n = kFertilityGuardN);

namespace serial {
/// Reference kernel: single-threaded census build.
FertilityCensus build_census(int n);
}  // namespace serial

namespace detail {

std::uint64_t encode_perm(const std::vector<int>& v);  // nibble-packed, n <= 16
FertilityCensus build_census_parallel(int n);

// Prefix pruning valid only for uniquely sorted targets: descent budget and
// the fact that sorted permutations end with their maximum. `pinned` fixes
// the leading entries for parallel partitioning; a pinned prefix that is
// already prunable contributes nothing.
template <class Fn>
void unique_dfs(int n, std::span<const Perm> pats, std::span<const int> pinned, Fn&& visit) {
    const int want_desc = (n - 1) / 2;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    int desc = 0;
    auto admissible = [&](int v) {
        const int len = static_cast<int>(prefix.size());
        if (v == n && len != n - 1) return false;  // sorted => ends with n
        const int add = (len > 0 && prefix.back() > v) ? 1 : 0;
        if (desc + add > want_desc) return false;
        if (desc + add + (n - len - 1) < want_desc) return false;
        return true;
    };
    auto violates = [&]() {
        for (const Perm& pat : pats)
            if (catsort::detail::occurrence_ending_last(prefix, pat)) return true;
        return false;
    };
    for (int v : pinned) {
        if (!admissible(v)) return;
        desc += (prefix.empty() || prefix.back() < v) ? 0 : 1;
        prefix.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
        if (violates()) return;
    }
    auto rec = [&](auto&& self) -> void {
        const int len = static_cast<int>(prefix.size());
        if (len == n) {
            visit(static_cast<const std::vector<int>&>(prefix));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (!admissible(v)) continue;
            const int add = (len > 0 && prefix.back() > v) ? 1 : 0;
            prefix.push_back(v);
            used[static_cast<std::size_t>(v)] = true;
            desc += add;
            if (!violates()) self(self);
            desc -= add;
            prefix.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec);
}

}  // namespace detail

/// U_{2k+1}(pats) in lexicographic order. The empty pattern set scans all
/// of S_{2k+1} and is guarded.
template <class Fn>
void for_each_uniquely_sorted(int k, std::span<const Perm> pats, Fn&& fn,
                              int guard_k = kUniqueEnumGuardK) {
    if (k < 0) throw std::invalid_argument("for_each_uniquely_sorted: k must be >= 0");
    if (pats.empty() && k > guard_k)
        throw guard_error("uniquely sorted enumeration without patterns is guarded at k <= " +
                          std::to_string(guard_k) + " (got k = " + std::to_string(k) + ")");
    const int n = 2 * k + 1;
    detail::unique_dfs(n, pats, {}, [&](const std::vector<int>& w) {
        Perm p(w);
        if (is_uniquely_sorted(p)) fn(p);
    });
}

std::vector<Perm> uniquely_sorted(int k, std::span<const Perm> pats,
                                  int guard_k = kUniqueEnumGuardK);

/// |U_{2k+1}(pats)|. OpenMP-parallel over the first entry.
std::uint64_t count_uniquely_sorted(int k, std::span<const Perm> pats,
                                    int guard_k = kUniqueEnumGuardK);

namespace serial {
std::uint64_t count_uniquely_sorted(int k, std::span<const Perm> pats,
                                    int guard_k = kUniqueEnumGuardK);
}  // namespace serial

}  // namespace catsort
