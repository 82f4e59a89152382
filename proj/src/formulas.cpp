#include "catsort/formulas.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace catsort {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("checked_add: overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("checked_mul: overflow");
    return r;
}

std::uint64_t binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned>(n - r + i);
        acc /= static_cast<unsigned>(i);  // exact at each step
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binomial: overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: k must be >= 0");
    const std::uint64_t b = binomial(2 * k, k);
    if (b % static_cast<std::uint64_t>(k + 1) != 0) throw std::logic_error("catalan: inexact division");
    return b / static_cast<std::uint64_t>(k + 1);
}

std::optional<Formula> parse_formula(std::string_view token) {
    if (token == "stanley") return Formula::stanley_intervals;
    if (token == "tamari") return Formula::tamari_intervals;
    if (token == "kreweras") return Formula::kreweras_intervals;
    if (token == "pallo") return Formula::pallo_intervals;
    if (token == "catalan") return Formula::catalan_count;
    return std::nullopt;
}

std::string_view formula_token(Formula f) {
    switch (f) {
        case Formula::stanley_intervals: return "stanley";
        case Formula::tamari_intervals: return "tamari";
        case Formula::kreweras_intervals: return "kreweras";
        case Formula::pallo_intervals: return "pallo";
        case Formula::catalan_count: return "catalan";
    }
    return "";
}

std::uint64_t closed_form(Formula f, int k) {
    if (k < 0) throw std::invalid_argument("closed_form: k must be >= 0");
    switch (f) {
        case Formula::stanley_intervals: {
            const std::uint64_t prod = checked_mul(catalan(k), catalan(k + 2));
            const std::uint64_t sq = checked_mul(catalan(k + 1), catalan(k + 1));
            if (prod < sq) throw std::logic_error("closed_form: negative interval count");
            return prod - sq;
        }
        case Formula::tamari_intervals: {
            const std::uint64_t num = checked_mul(2, binomial(4 * k + 1, k + 1));
            const std::uint64_t den = static_cast<std::uint64_t>(3 * k + 1) * static_cast<std::uint64_t>(3 * k + 2);
            if (num % den != 0) throw std::logic_error("closed_form: inexact division (tamari)");
            return num / den;
        }
        case Formula::kreweras_intervals: {
            const std::uint64_t num = binomial(3 * k, k);
            const std::uint64_t den = static_cast<std::uint64_t>(2 * k + 1);
            if (num % den != 0) throw std::logic_error("closed_form: inexact division (kreweras)");
            return num / den;
        }
        case Formula::pallo_intervals: {
            return catalan_of_x_catalan(k).back();
        }
        case Formula::catalan_count:
            return catalan(k);
    }
    throw std::logic_error("closed_form: bad tag");
}

std::vector<std::uint64_t> catalan_series(int order) {
    if (order < 0) throw std::invalid_argument("catalan_series: order must be >= 0");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(order) + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        std::uint64_t s = 0;
        for (int i = 0; i < n; ++i)
            s = checked_add(s, checked_mul(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(n - 1 - i)]));
        c[static_cast<std::size_t>(n)] = s;
    }
    return c;
}

std::vector<std::uint64_t> lassalle_numbers(int count) {
    if (count < 0) throw std::invalid_argument("lassalle_numbers: count must be >= 0");
    std::vector<std::uint64_t> a;
    if (count == 0) return a;
    a.push_back(1);
    for (int n = 1; n + 1 <= count; ++n) {
        __int128 acc = (n % 2 == 0 ? 1 : -1) * static_cast<__int128>(catalan(n + 1));
        for (int j = 1; j <= n; ++j) {
            const __int128 term = static_cast<__int128>(binomial(2 * n + 1, 2 * j)) *
                                  static_cast<__int128>(a[static_cast<std::size_t>(n - j)]) *
                                  static_cast<__int128>(catalan(j));
            acc += (j % 2 == 1 ? term : -term);
        }
        if (acc < 0 || acc > static_cast<__int128>(UINT64_MAX))
            throw std::overflow_error("lassalle_numbers: term out of range");
        a.push_back(static_cast<std::uint64_t>(acc));
    }
    return a;
}

namespace {

using Series = std::vector<std::uint64_t>;  // coefficients 0..order

Series mul_truncated(const Series& a, const Series& b, int order) {
    Series out(static_cast<std::size_t>(order) + 1, 0);
    for (int i = 0; i <= order; ++i) {
        if (i >= static_cast<int>(a.size()) || a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (j >= static_cast<int>(b.size())) break;
            out[static_cast<std::size_t>(i + j)] =
                checked_add(out[static_cast<std::size_t>(i + j)],
                            checked_mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

// Compose C(g) for a series g with zero constant term: sum_m C_m g^m.
Series compose_catalan(const Series& g, int order) {
    const Series cat = catalan_series(order);
    Series out(static_cast<std::size_t>(order) + 1, 0);
    Series g_pow(static_cast<std::size_t>(order) + 1, 0);
    g_pow[0] = 1;  // g^0
    for (int m = 0; m <= order; ++m) {
        for (int d = 0; d <= order; ++d)
            out[static_cast<std::size_t>(d)] =
                checked_add(out[static_cast<std::size_t>(d)],
                            checked_mul(cat[static_cast<std::size_t>(m)], g_pow[static_cast<std::size_t>(d)]));
        if (m < order) g_pow = mul_truncated(g_pow, g, order);
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> catalan_of_x_catalan(int order) {
    if (order < 0) throw std::invalid_argument("catalan_of_x_catalan: order must be >= 0");
    const Series cat = catalan_series(order);
    Series xc(static_cast<std::size_t>(order) + 1, 0);  // x * C(x)
    for (int d = 1; d <= order; ++d) xc[static_cast<std::size_t>(d)] = cat[static_cast<std::size_t>(d - 1)];
    return compose_catalan(xc, order);
}

bool nested_catalan_identity_holds(int order) {
    const Series b = catalan_of_x_catalan(order);  // B(x)
    Series bt(static_cast<std::size_t>(order) + 1, 0);  // B~(x) = x B(x^2)
    for (int d = 0; 2 * d + 1 <= order; ++d)
        bt[static_cast<std::size_t>(2 * d + 1)] = b[static_cast<std::size_t>(d)];
    const Series cat = catalan_series(order);
    Series c2(static_cast<std::size_t>(order) + 1, 0);  // C(x^2)
    for (int d = 0; 2 * d <= order; ++d) c2[static_cast<std::size_t>(2 * d)] = cat[static_cast<std::size_t>(d)];
    Series rhs = mul_truncated(mul_truncated(bt, bt, order), c2, order);
    // shift by one power of x and add the initial x term
    Series shifted(static_cast<std::size_t>(order) + 1, 0);
    for (int d = 0; d + 1 <= order; ++d) shifted[static_cast<std::size_t>(d + 1)] = rhs[static_cast<std::size_t>(d)];
    if (order >= 1) shifted[1] = checked_add(shifted[1], 1);
    return shifted == bt;
}

}  // namespace catsort
