#include "catsort/stacksort.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catsort {

int sequence_guard_k(std::span<const Perm> pats) { return pats.empty() ? 5 : 6; }

namespace {

// Single left-to-right pass with an explicit stack; equivalent to the
// recursion s(LnR) = s(L) s(R) n, which the tests exercise directly.
void stack_sort_raw(const std::vector<int>& in, std::vector<int>& out, std::vector<int>& stk) {
    out.clear();
    stk.clear();
    for (int x : in) {
        while (!stk.empty() && stk.back() < x) {
            out.push_back(stk.back());
            stk.pop_back();
        }
        stk.push_back(x);
    }
    while (!stk.empty()) {
        out.push_back(stk.back());
        stk.pop_back();
    }
}

}  // namespace

Perm stack_sort(const Perm& p) {
    std::vector<int> out, stk;
    out.reserve(p.entries().size());
    stack_sort_raw(p.entries(), out, stk);
    return Perm(std::move(out));
}

std::optional<HookConfig> canonical_hooks(const Perm& p) {
    if (!p.is_normalized()) throw std::invalid_argument("canonical_hooks: permutation must be normalized");
    const auto& v = p.entries();
    const int n = p.size();
    const std::vector<int> des = descents(p);
    const int k = static_cast<int>(des.size());
    std::vector<Hook> hooks(static_cast<std::size_t>(k));
    // Northeast endpoints are chosen from the rightmost descent inward.
    for (int l = k - 1; l >= 0; --l) {
        const int sw = des[static_cast<std::size_t>(l)];
        const int swv = v[static_cast<std::size_t>(sw - 1)];
        int ne = 0;
        for (int j = sw + 1; j <= n; ++j) {
            if (v[static_cast<std::size_t>(j - 1)] <= swv) continue;
            bool below_later = false;
            for (int m = l + 1; m < k; ++m) {
                const Hook& h = hooks[static_cast<std::size_t>(m)];
                const int hv = v[static_cast<std::size_t>(h.ne - 1)];
                const bool strictly = h.sw < j && j < h.ne && v[static_cast<std::size_t>(j - 1)] < hv;
                if (strictly || j == h.ne) { below_later = true; break; }
            }
            if (!below_later) { ne = j; break; }
        }
        if (ne == 0) return std::nullopt;
        hooks[static_cast<std::size_t>(l)] = Hook{sw, ne};
    }
    return HookConfig{std::move(hooks)};
}

bool is_sorted(const Perm& p) { return canonical_hooks(p).has_value(); }

bool is_uniquely_sorted(const Perm& p) {
    const int n = p.size();
    if (n % 2 == 0) return false;
    if (2 * descent_count(p) != n - 1) return false;
    return is_sorted(p);
}

int deficiency(const Perm& p) {
    if (!p.is_normalized()) throw std::invalid_argument("deficiency: permutation must be normalized");
    for (int l = 0; l <= p.size() + 1; ++l) {
        if (is_sorted(direct_sum(p, Perm::identity(l)))) return l;
    }
    throw std::logic_error("deficiency: no bound found (bug)");
}

namespace detail {

std::uint64_t encode_perm(const std::vector<int>& v) {
    if (v.size() > 16) throw std::length_error("encode_perm: length must be <= 16");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        key |= static_cast<std::uint64_t>(v[i] - 1) << (4 * i);
    return key;
}

namespace {

void census_accumulate(int n, int first, std::unordered_map<std::uint64_t, std::uint64_t>& table) {
    // All of S_n with a pinned first entry, via next_permutation on the rest.
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
        if (x != first) rest.push_back(x);
    std::vector<int> perm(static_cast<std::size_t>(n)), out, stk;
    perm[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), perm.begin() + 1);
        stack_sort_raw(perm, out, stk);
        table[encode_perm(out)] += 1;
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

FertilityCensus build_census_parallel(int n) {
    if (n == 0) {
        std::unordered_map<std::uint64_t, std::uint64_t> t;
        t[0] = 1;  // empty permutation maps to itself
        return FertilityCensus(0, std::move(t));
    }
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> parts(static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int first = 1; first <= n; ++first)
        census_accumulate(n, first, parts[static_cast<std::size_t>(first - 1)]);
    std::unordered_map<std::uint64_t, std::uint64_t> table;
    for (auto& part : parts)
        for (auto& [key, cnt] : part) table[key] += cnt;
    return FertilityCensus(n, std::move(table));
}

}  // namespace detail

namespace serial {

FertilityCensus build_census(int n) {
    std::unordered_map<std::uint64_t, std::uint64_t> table;
    if (n == 0) {
        table[0] = 1;
        return FertilityCensus(0, std::move(table));
    }
    for (int first = 1; first <= n; ++first) detail::census_accumulate(n, first, table);
    return FertilityCensus(n, std::move(table));
}

}  // namespace serial

std::uint64_t FertilityCensus::fertility_of(const Perm& p) const {
    if (p.size() != n_) throw std::invalid_argument("FertilityCensus: length mismatch");
    auto it = table_.find(detail::encode_perm(p.entries()));
    return it == table_.end() ? 0 : it->second;
}

namespace {

// Registry of built censuses, LRU-evicted by total stored entries.
class CensusCache {
public:
    std::shared_ptr<const FertilityCensus> get(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        for (auto it = lru_.begin(); it != lru_.end(); ++it) {
            if ((*it)->n() == n) {
                lru_.splice(lru_.begin(), lru_, it);
                return lru_.front();
            }
        }
        auto built = std::make_shared<const FertilityCensus>(detail::build_census_parallel(n));
        entries_ += built->distinct_images();
        lru_.push_front(built);
        while (entries_ > kMaxEntries && lru_.size() > 1) {
            entries_ -= lru_.back()->distinct_images();
            lru_.pop_back();
        }
        return lru_.front();
    }

private:
    static constexpr std::size_t kMaxEntries = 60'000'000;
    std::mutex mu_;
    std::list<std::shared_ptr<const FertilityCensus>> lru_;
    std::size_t entries_ = 0;
};

CensusCache& census_cache() {
    static CensusCache cache;
    return cache;
}

}  // namespace

std::shared_ptr<const FertilityCensus> fertility_census(int n, int guard_n) {
    if (n < 0) throw std::invalid_argument("fertility_census: n must be >= 0");
    if (n > guard_n)
        throw guard_error("fertility census is guarded at n <= " + std::to_string(guard_n) +
                          " (got n = " + std::to_string(n) + ")");
    return census_cache().get(n);
}

std::uint64_t fertility(const Perm& p, FertilityMethod method, int guard_n) {
    if (!p.is_normalized()) throw std::invalid_argument("fertility: permutation must be normalized");
    const int n = p.size();
    if (n > guard_n)
        throw guard_error("brute fertility is guarded at n <= " + std::to_string(guard_n) +
                          " (got n = " + std::to_string(n) + ")");
    if (method == FertilityMethod::census) return fertility_census(n, guard_n)->fertility_of(p);
    if (n == 0) return 1;
    const std::uint64_t target = detail::encode_perm(p.entries());
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
    for (int first = 1; first <= n; ++first) {
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
            if (x != first) rest.push_back(x);
        std::vector<int> perm(static_cast<std::size_t>(n)), out, stk;
        perm[0] = first;
        std::uint64_t c = 0;
        do {
            std::copy(rest.begin(), rest.end(), perm.begin() + 1);
            stack_sort_raw(perm, out, stk);
            if (detail::encode_perm(out) == target) ++c;
        } while (std::next_permutation(rest.begin(), rest.end()));
        total += c;
    }
    return total;
}

std::vector<Perm> uniquely_sorted(int k, std::span<const Perm> pats, int guard_k) {
    std::vector<Perm> out;
    for_each_uniquely_sorted(k, pats, [&](const Perm& p) { out.push_back(p); }, guard_k);
    return out;
}

namespace serial {

std::uint64_t count_uniquely_sorted(int k, std::span<const Perm> pats, int guard_k) {
    std::uint64_t c = 0;
    for_each_uniquely_sorted(k, pats, [&](const Perm&) { ++c; }, guard_k);
    return c;
}

}  // namespace serial

std::uint64_t count_uniquely_sorted(int k, std::span<const Perm> pats, int guard_k) {
    if (k < 0) throw std::invalid_argument("count_uniquely_sorted: k must be >= 0");
    if (pats.empty() && k > guard_k)
        throw guard_error("uniquely sorted enumeration without patterns is guarded at k <= " +
                          std::to_string(guard_k) + " (got k = " + std::to_string(k) + ")");
    const int n = 2 * k + 1;
    if (n < 2) return serial::count_uniquely_sorted(k, pats, guard_k);
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
        detail::unique_dfs(n, pats, pinned, [&](const std::vector<int>& w) {
            if (is_uniquely_sorted(Perm(w))) ++c;
        });
        total += c;
    }
    return total;
}

}  // namespace catsort
