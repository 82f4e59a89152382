#pragma once

// Dyck paths as balanced U/D words, run-length and longevity statistics,
// and four partial orders on paths of one semilength (the refinement order
// on noncrossing partitions lives in noncross.hpp).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catsort/guards.hpp"

namespace catsort {

class DyckPath {
public:
    DyckPath() = default;

    /// Builds from a U/D word; rejects unbalanced or dipping words.
    static std::optional<DyckPath> parse(std::string_view word);

    /// steps[i] true = up step. Must be a valid Dyck word.
    static DyckPath from_steps(const std::vector<bool>& steps);

    int semilength() const { return k_; }
    int length() const { return 2 * k_; }
    bool up_at(int step) const { return (word_ >> (step - 1)) & 1u; }  // 1-based
    std::string str() const;

    bool operator==(const DyckPath&) const = default;
    auto operator<=>(const DyckPath&) const = default;

private:
    std::uint64_t word_ = 0;  // bit i-1 set iff step i is U
    int k_ = 0;
};

enum class PosetKind { stanley, tamari, pallo, antichain };

std::optional<PosetKind> parse_poset_kind(std::string_view token);
std::string_view poset_kind_token(PosetKind kind);

/// Run lengths (g_1,...,g_k) with path = U D^{g_1} U D^{g_2} ... U D^{g_k}.
std::vector<int> gamma_runs(const DyckPath& d);

/// For each up step j, the least t >= 0 with g_j + ... + g_{j+t} > t.
std::vector<int> longevity(const DyckPath& d);

/// Order test. stanley: prefix U-counts dominated; tamari: pointwise
/// longevity dominance; pallo: tamari plus the left-restriction side
/// condition wherever the longevity strictly grows; antichain: equality.
bool dyck_leq(const DyckPath& a, const DyckPath& b, PosetKind kind);

struct DyckInterval {
    DyckPath lower;
    DyckPath upper;
    PosetKind kind = PosetKind::stanley;
    bool operator==(const DyckInterval&) const = default;
    auto operator<=>(const DyckInterval&) const = default;
};

/// All C_k paths in lexicographic step order with U < D.
template <class Fn>
void for_each_path(int k, Fn&& fn) {
    std::vector<bool> steps(static_cast<std::size_t>(2 * k), false);
    auto rec = [&](auto&& self, int pos, int ups, int downs) -> void {
        if (pos == 2 * k) {
            fn(DyckPath::from_steps(steps));
            return;
        }
        if (ups < k) {
            steps[static_cast<std::size_t>(pos)] = true;
            self(self, pos + 1, ups + 1, downs);
        }
        if (downs < ups) {
            steps[static_cast<std::size_t>(pos)] = false;
            self(self, pos + 1, ups, downs + 1);
        }
    };
    rec(rec, 0, 0, 0);
}

std::vector<DyckPath> all_paths(int k);

/// Ordered pairs (a, b) with a <= b, counted by exhaustive pairwise scan.
/// OpenMP-parallel over the outer path.
std::uint64_t count_intervals(int k, PosetKind kind, int guard_k = kIntervalScanGuardK);

namespace serial {
std::uint64_t count_intervals(int k, PosetKind kind, int guard_k = kIntervalScanGuardK);
}  // namespace serial

}  // namespace catsort
