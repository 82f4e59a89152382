#include "catsort/noncross.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catsort {

namespace {

void validate_partition(const std::vector<std::vector<int>>& blocks, int k) {
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    int count = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition: empty block");
        for (int x : b) {
            if (x < 1 || x > k) throw std::invalid_argument("partition: element out of [k]");
            if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("partition: repeated element");
            seen[static_cast<std::size_t>(x)] = true;
            ++count;
        }
    }
    if (count != k) throw std::invalid_argument("partition: does not cover [k]");
}

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    // Merge the two sorted blocks; a crossing is an ABAB (or BABA)
    // alternation, i.e. at least four label runs.
    std::vector<std::pair<int, int>> merged;  // (element, which)
    for (int x : a) merged.emplace_back(x, 0);
    for (int x : b) merged.emplace_back(x, 1);
    std::sort(merged.begin(), merged.end());
    int runs = 0, last = -1;
    for (const auto& [x, w] : merged) {
        (void)x;
        if (w != last) { ++runs; last = w; }
    }
    return runs >= 4;
}

}  // namespace

bool is_noncrossing(const std::vector<std::vector<int>>& blocks, int k) {
    validate_partition(blocks, k);
    std::vector<std::vector<int>> sorted = blocks;
    for (auto& b : sorted) std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (blocks_cross(sorted[i], sorted[j])) return false;
    return true;
}

NCPartition NCPartition::make(std::vector<std::vector<int>> blocks, int k) {
    if (!is_noncrossing(blocks, k)) throw std::invalid_argument("NCPartition: blocks cross");
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    NCPartition p;
    p.blocks_ = std::move(blocks);
    p.k_ = k;
    return p;
}

int NCPartition::block_of(int x) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (int y : blocks_[i])
            if (y == x) return static_cast<int>(i);
    throw std::out_of_range("NCPartition::block_of: element not present");
}

bool nc_leq(const NCPartition& a, const NCPartition& b) {
    if (a.ground() != b.ground()) throw std::invalid_argument("nc_leq: ground set mismatch");
    std::vector<int> owner(static_cast<std::size_t>(b.ground()) + 1, -1);
    for (std::size_t i = 0; i < b.blocks().size(); ++i)
        for (int x : b.blocks()[i]) owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
    for (const auto& blk : a.blocks()) {
        const int o = owner[static_cast<std::size_t>(blk.front())];
        for (int x : blk)
            if (owner[static_cast<std::size_t>(x)] != o) return false;
    }
    return true;
}

std::vector<std::vector<int>> exposed_blocks(const NCPartition& p) {
    std::vector<std::vector<int>> out;
    for (const auto& b : p.blocks()) {
        bool covered = false;
        for (const auto& c : p.blocks()) {
            if (&b == &c) continue;
            if (c.front() < b.front() && b.back() < c.back()) { covered = true; break; }
        }
        if (!covered) out.push_back(b);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.back() > b.back(); });
    return out;
}

NCInterval nc_root() {
    const NCPartition one = NCPartition::make({{1}}, 1);
    return NCInterval{one, one};
}

namespace {

// Exposed kappa blocks right to left, each with the exposed rho blocks it
// contains (right to left). The label and every succession operation read
// off this structure.
struct ExposureIndex {
    std::vector<std::vector<int>> kappa_exposed;               // B_1..B_t
    std::vector<std::vector<std::vector<int>>> rho_in_kappa;   // B_{i,1}..B_{i,m_i}
};

ExposureIndex exposure(const NCInterval& iv) {
    ExposureIndex ex;
    ex.kappa_exposed = exposed_blocks(iv.kappa);
    const std::vector<std::vector<int>> rho_exposed = exposed_blocks(iv.rho);
    for (const auto& big : ex.kappa_exposed) {
        std::vector<std::vector<int>> inside;
        for (const auto& small : rho_exposed) {
            const bool contained = std::includes(big.begin(), big.end(), small.begin(), small.end());
            if (contained) inside.push_back(small);
        }
        // already right-to-left by max since rho_exposed is
        ex.rho_in_kappa.push_back(std::move(inside));
    }
    return ex;
}

NCPartition with_appended_singleton(const NCPartition& p) {
    std::vector<std::vector<int>> blocks = p.blocks();
    blocks.push_back({p.ground() + 1});
    return NCPartition::make(std::move(blocks), p.ground() + 1);
}

NCPartition with_element_added(const NCPartition& p, const std::vector<int>& target) {
    std::vector<std::vector<int>> blocks = p.blocks();
    for (auto& b : blocks) {
        if (b == target) {
            b.push_back(p.ground() + 1);
            return NCPartition::make(std::move(blocks), p.ground() + 1);
        }
    }
    throw std::logic_error("with_element_added: target block not found");
}

}  // namespace

int interval_label(const NCInterval& iv) {
    if (!nc_leq(iv.rho, iv.kappa)) throw std::invalid_argument("interval_label: not an interval");
    const ExposureIndex ex = exposure(iv);
    int m_total = 0;
    for (const auto& inside : ex.rho_in_kappa) m_total += static_cast<int>(inside.size());
    return 1 + static_cast<int>(ex.kappa_exposed.size()) + m_total;
}

std::vector<NCInterval> nc_children(const NCInterval& iv) {
    if (!nc_leq(iv.rho, iv.kappa)) throw std::invalid_argument("nc_children: not an interval");
    const ExposureIndex ex = exposure(iv);
    std::vector<NCInterval> out;
    out.push_back(NCInterval{with_appended_singleton(iv.rho), with_appended_singleton(iv.kappa)});
    for (const auto& big : ex.kappa_exposed)
        out.push_back(NCInterval{with_appended_singleton(iv.rho), with_element_added(iv.kappa, big)});
    for (std::size_t i = 0; i < ex.kappa_exposed.size(); ++i) {
        for (const auto& small : ex.rho_in_kappa[i]) {
            out.push_back(NCInterval{with_element_added(iv.rho, small),
                                     with_element_added(iv.kappa, ex.kappa_exposed[i])});
        }
    }
    return out;
}

std::vector<NCPartition> all_noncrossing(int k) {
    // Restricted-growth strings enumerate all set partitions; keep the
    // noncrossing ones. Block minima ascend by construction.
    std::vector<NCPartition> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int maxed) -> void {
        if (pos == k) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxed + 1));
            for (int i = 0; i < k; ++i)
                blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
            if (is_noncrossing(blocks, k)) out.push_back(NCPartition::make(std::move(blocks), k));
            return;
        }
        for (int b = 0; b <= maxed + 1; ++b) {
            rgs[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, std::max(maxed, b));
        }
    };
    rec(rec, 1, 0);  // element 1 always starts block 0
    return out;
}

std::vector<NCInterval> all_nc_intervals(int k) {
    const std::vector<NCPartition> parts = all_noncrossing(k);
    std::vector<NCInterval> out;
    for (const NCPartition& rho : parts)
        for (const NCPartition& kappa : parts)
            if (nc_leq(rho, kappa)) out.push_back(NCInterval{rho, kappa});
    return out;
}

namespace {

std::uint64_t nc_interval_scan(int k, bool parallel) {
    const std::vector<NCPartition> parts = all_noncrossing(k);
    const int m = static_cast<int>(parts.size());
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total) if (parallel)
#else
    (void)parallel;
#endif
    for (int i = 0; i < m; ++i) {
        std::uint64_t c = 0;
        for (int j = 0; j < m; ++j)
            if (nc_leq(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)])) ++c;
        total += c;
    }
    return total;
}

void check_nc_guard(int k, int guard_k) {
    if (k < 0) throw std::invalid_argument("count_nc_intervals: k must be >= 0");
    if (k > guard_k)
        throw guard_error("noncrossing interval scan is guarded at k <= " + std::to_string(guard_k) +
                          " (got k = " + std::to_string(k) + ")");
}

}  // namespace

std::uint64_t count_nc_intervals(int k, int guard_k) {
    check_nc_guard(k, guard_k);
    return nc_interval_scan(k, true);
}

namespace serial {

std::uint64_t count_nc_intervals(int k, int guard_k) {
    check_nc_guard(k, guard_k);
    return nc_interval_scan(k, false);
}

}  // namespace serial

}  // namespace catsort
