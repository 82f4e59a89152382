#include "catsort/textio.hpp"

#include <cctype>
#include <sstream>

namespace catsort {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::optional<int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        if (v > 1'000'000) return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

std::optional<Perm> parse_perm(std::string_view text) {
    std::vector<int> vals;
    if (text.find(',') == std::string_view::npos) {
        if (text.empty()) return Perm();
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') return std::nullopt;
            vals.push_back(c - '0');
        }
    } else {
        for (std::string_view part : split(text, ',')) {
            const auto v = parse_int(part);
            if (!v || *v < 1) return std::nullopt;
            vals.push_back(*v);
        }
    }
    try {
        return Perm(std::move(vals));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string format_perm(const Perm& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) os << ',';
        os << p.at(i);
    }
    return os.str();
}

std::optional<std::vector<Perm>> parse_pattern_set(std::string_view text) {
    std::vector<Perm> pats;
    if (text.empty()) return pats;
    for (std::string_view part : split(text, ';')) {
        auto p = parse_perm(part);
        if (!p || p->empty() || !p->is_normalized()) return std::nullopt;
        pats.push_back(std::move(*p));
    }
    return pats;
}

std::string format_pattern_set(std::span<const Perm> pats) {
    bool all_digits = true;
    for (const Perm& p : pats)
        for (int x : p.entries())
            if (x > 9) all_digits = false;
    std::ostringstream os;
    for (std::size_t i = 0; i < pats.size(); ++i) {
        if (i > 0) os << ';';
        if (all_digits) {
            for (int x : pats[i].entries()) os << x;  // bare word keeps CSV fields comma-free
        } else {
            os << format_perm(pats[i]);
        }
    }
    return os.str();
}

std::optional<DyckInterval> parse_path_interval(std::string_view text, PosetKind kind) {
    const auto parts = split(text, ';');
    if (parts.size() != 2) return std::nullopt;
    const auto lo = DyckPath::parse(parts[0]);
    const auto hi = DyckPath::parse(parts[1]);
    if (!lo || !hi || lo->semilength() != hi->semilength()) return std::nullopt;
    return DyckInterval{*lo, *hi, kind};
}

std::string format_path_interval(const DyckInterval& iv) {
    return iv.lower.str() + ";" + iv.upper.str();
}

std::optional<NCPartition> parse_nc_partition(std::string_view text) {
    if (text == "{}") return NCPartition();
    std::vector<std::vector<int>> blocks;
    int k = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{') return std::nullopt;
        const std::size_t close = text.find('}', pos);
        if (close == std::string_view::npos) return std::nullopt;
        std::vector<int> block;
        for (std::string_view part : split(text.substr(pos + 1, close - pos - 1), ',')) {
            const auto v = parse_int(part);
            if (!v || *v < 1) return std::nullopt;
            block.push_back(*v);
            k = std::max(k, *v);
        }
        if (block.empty()) return std::nullopt;
        blocks.push_back(std::move(block));
        pos = close + 1;
    }
    try {
        return NCPartition::make(std::move(blocks), k);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string format_nc_partition(const NCPartition& p) {
    if (p.ground() == 0) return "{}";
    std::ostringstream os;
    for (const auto& b : p.blocks()) {
        os << '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i > 0) os << ',';
            os << b[i];
        }
        os << '}';
    }
    return os.str();
}

std::optional<NCInterval> parse_nc_interval(std::string_view text) {
    const auto parts = split(text, '|');
    if (parts.size() != 2) return std::nullopt;
    auto rho = parse_nc_partition(parts[0]);
    auto kappa = parse_nc_partition(parts[1]);
    if (!rho || !kappa) return std::nullopt;
    if (rho->ground() != kappa->ground()) return std::nullopt;
    if (!nc_leq(*rho, *kappa)) return std::nullopt;
    return NCInterval{std::move(*rho), std::move(*kappa)};
}

std::string format_nc_interval(const NCInterval& iv) {
    return format_nc_partition(iv.rho) + "|" + format_nc_partition(iv.kappa);
}

std::string format_parking(const std::vector<int>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) os << ',';
        os << a[i];
    }
    return os.str();
}

}  // namespace catsort
