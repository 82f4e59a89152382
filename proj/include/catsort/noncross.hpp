#pragma once

// Noncrossing partitions of [k] under refinement, exposed blocks, interval
// labels, and the succession operations that grow an interval over [k] into
// its intervals over [k+1].

#include <cstdint>
#include <vector>

#include "catsort/guards.hpp"

namespace catsort {

/// Canonical storage: blocks sorted by minimum, elements ascending.
class NCPartition {
public:
    NCPartition() = default;  // the empty partition of [0]

    /// Validates a set partition of [k] and noncrossingness.
    static NCPartition make(std::vector<std::vector<int>> blocks, int k);

    int ground() const { return k_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Index into blocks() of the block containing x.
    int block_of(int x) const;

    bool operator==(const NCPartition&) const = default;
    auto operator<=>(const NCPartition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
    int k_ = 0;
};

/// Crossing test over a set partition of [k]; throws if blocks do not
/// partition [k].
bool is_noncrossing(const std::vector<std::vector<int>>& blocks, int k);

/// Refinement: every block of a contained in a block of b.
bool nc_leq(const NCPartition& a, const NCPartition& b);

/// Blocks not nested under any other block, ordered right to left by max.
std::vector<std::vector<int>> exposed_blocks(const NCPartition& p);

struct NCInterval {
    NCPartition rho;
    NCPartition kappa;
    bool operator==(const NCInterval&) const = default;
    auto operator<=>(const NCInterval&) const = default;
};

/// The k=1 axiom interval ({{1}}, {{1}}).
NCInterval nc_root();

/// 1 + #(exposed blocks of kappa) + #(exposed blocks of rho inside exposed
/// blocks of kappa); at least 3 for k >= 1.
int interval_label(const NCInterval& iv);

/// All interval_label(iv) children over [k+1], in canonical order: the
/// double-singleton extension, then the kappa-join extensions right to
/// left, then the joint extensions in lexicographic (i, j).
std::vector<NCInterval> nc_children(const NCInterval& iv);

std::vector<NCPartition> all_noncrossing(int k);
std::vector<NCInterval> all_nc_intervals(int k);

/// |Int(NC_k)| by exhaustive pairwise refinement scan.
std::uint64_t count_nc_intervals(int k, int guard_k = kIntervalScanGuardK);

namespace serial {
std::uint64_t count_nc_intervals(int k, int guard_k = kIntervalScanGuardK);
}  // namespace serial

}  // namespace catsort
