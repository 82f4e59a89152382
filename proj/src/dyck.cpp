#include "catsort/dyck.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catsort {

std::optional<DyckPath> DyckPath::parse(std::string_view word) {
    if (word.size() % 2 != 0 || word.size() > 64) return std::nullopt;
    DyckPath d;
    d.k_ = static_cast<int>(word.size() / 2);
    int height = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const char c = word[i];
        if (c == 'U' || c == 'u') {
            d.word_ |= (std::uint64_t{1} << i);
            ++height;
        } else if (c == 'D' || c == 'd') {
            --height;
            if (height < 0) return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    if (height != 0) return std::nullopt;
    return d;
}

DyckPath DyckPath::from_steps(const std::vector<bool>& steps) {
    if (steps.size() % 2 != 0 || steps.size() > 64)
        throw std::invalid_argument("DyckPath::from_steps: bad length");
    DyckPath d;
    d.k_ = static_cast<int>(steps.size() / 2);
    int height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i]) {
            d.word_ |= (std::uint64_t{1} << i);
            ++height;
        } else {
            --height;
        }
        if (height < 0) throw std::invalid_argument("DyckPath::from_steps: prefix dips below axis");
    }
    if (height != 0) throw std::invalid_argument("DyckPath::from_steps: unbalanced");
    return d;
}

std::string DyckPath::str() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(length()));
    for (int i = 1; i <= length(); ++i) s.push_back(up_at(i) ? 'U' : 'D');
    return s;
}

std::optional<PosetKind> parse_poset_kind(std::string_view token) {
    if (token == "stanley") return PosetKind::stanley;
    if (token == "tamari") return PosetKind::tamari;
    if (token == "pallo") return PosetKind::pallo;
    if (token == "antichain") return PosetKind::antichain;
    return std::nullopt;
}

std::string_view poset_kind_token(PosetKind kind) {
    switch (kind) {
        case PosetKind::stanley: return "stanley";
        case PosetKind::tamari: return "tamari";
        case PosetKind::pallo: return "pallo";
        case PosetKind::antichain: return "antichain";
    }
    return "";
}

std::vector<int> gamma_runs(const DyckPath& d) {
    const int k = d.semilength();
    std::vector<int> g(static_cast<std::size_t>(k), 0);
    int u = 0;
    for (int i = 1; i <= d.length(); ++i) {
        if (d.up_at(i))
            ++u;
        else
            ++g[static_cast<std::size_t>(u - 1)];
    }
    return g;
}

std::vector<int> longevity(const DyckPath& d) {
    const std::vector<int> g = gamma_runs(d);
    const int k = d.semilength();
    std::vector<int> lon(static_cast<std::size_t>(k), 0);
    for (int j = 1; j <= k; ++j) {
        int sum = 0;
        for (int t = 0; t <= k - j; ++t) {
            sum += g[static_cast<std::size_t>(j + t - 1)];
            if (sum > t) { lon[static_cast<std::size_t>(j - 1)] = t; break; }
        }
    }
    return lon;
}

bool dyck_leq(const DyckPath& a, const DyckPath& b, PosetKind kind) {
    if (a.semilength() != b.semilength())
        throw std::invalid_argument("dyck_leq: semilength mismatch");
    switch (kind) {
        case PosetKind::antichain:
            return a == b;
        case PosetKind::stanley: {
            int ua = 0, ub = 0;
            for (int i = 1; i <= a.length(); ++i) {
                ua += a.up_at(i) ? 1 : 0;
                ub += b.up_at(i) ? 1 : 0;
                if (ua > ub) return false;
            }
            return true;
        }
        case PosetKind::tamari: {
            const std::vector<int> la = longevity(a), lb = longevity(b);
            for (std::size_t j = 0; j < la.size(); ++j)
                if (la[j] > lb[j]) return false;
            return true;
        }
        case PosetKind::pallo: {
            const std::vector<int> la = longevity(a), lb = longevity(b);
            for (std::size_t j = 0; j < la.size(); ++j)
                if (la[j] > lb[j]) return false;
            for (std::size_t j = 0; j < la.size(); ++j) {
                if (la[j] == lb[j]) continue;
                for (std::size_t l = 0; l < j; ++l)
                    if (la[l] > static_cast<int>(j) - static_cast<int>(l) - 1) return false;
            }
            return true;
        }
    }
    throw std::logic_error("dyck_leq: bad kind");
}

std::vector<DyckPath> all_paths(int k) {
    std::vector<DyckPath> out;
    for_each_path(k, [&](const DyckPath& d) { out.push_back(d); });
    return out;
}

namespace {

std::uint64_t interval_scan(int k, PosetKind kind, bool parallel) {
    const std::vector<DyckPath> paths = all_paths(k);
    const int m = static_cast<int>(paths.size());
    // Longevity sequences are reused across the whole scan.
    std::vector<std::vector<int>> lons;
    if (kind == PosetKind::tamari || kind == PosetKind::pallo) {
        lons.reserve(paths.size());
        for (const DyckPath& d : paths) lons.push_back(longevity(d));
    }
    auto pair_leq = [&](int ia, int ib) {
        if (kind == PosetKind::stanley || kind == PosetKind::antichain)
            return dyck_leq(paths[static_cast<std::size_t>(ia)], paths[static_cast<std::size_t>(ib)], kind);
        const std::vector<int>& la = lons[static_cast<std::size_t>(ia)];
        const std::vector<int>& lb = lons[static_cast<std::size_t>(ib)];
        for (std::size_t j = 0; j < la.size(); ++j)
            if (la[j] > lb[j]) return false;
        if (kind == PosetKind::tamari) return true;
        for (std::size_t j = 0; j < la.size(); ++j) {
            if (la[j] == lb[j]) continue;
            for (std::size_t l = 0; l < j; ++l)
                if (la[l] > static_cast<int>(j) - static_cast<int>(l) - 1) return false;
        }
        return true;
    };
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total) if (parallel)
#else
    (void)parallel;
#endif
    for (int ia = 0; ia < m; ++ia) {
        std::uint64_t c = 0;
        for (int ib = 0; ib < m; ++ib)
            if (pair_leq(ia, ib)) ++c;
        total += c;
    }
    return total;
}

void check_scan_guard(int k, int guard_k) {
    if (k < 0) throw std::invalid_argument("count_intervals: k must be >= 0");
    if (k > guard_k)
        throw guard_error("pairwise interval scan is guarded at k <= " + std::to_string(guard_k) +
                          " (got k = " + std::to_string(k) + ")");
}

}  // namespace

std::uint64_t count_intervals(int k, PosetKind kind, int guard_k) {
    check_scan_guard(k, guard_k);
    return interval_scan(k, kind, true);
}

namespace serial {

std::uint64_t count_intervals(int k, PosetKind kind, int guard_k) {
    check_scan_guard(k, guard_k);
    return interval_scan(k, kind, false);
}

}  // namespace serial

}  // namespace catsort
