#pragma once

// Closed forms and formal power series for the interval counts, in exact
// integer arithmetic. Divisions assert zero remainder; products and sums
// are overflow-checked, so a count that cannot be represented aborts
// loudly instead of wrapping.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace catsort {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(int n, int r);

std::uint64_t catalan(int k);

enum class Formula {
    stanley_intervals,   // C_k C_{k+2} - C_{k+1}^2
    tamari_intervals,    // 2 / ((3k+1)(3k+2)) * binom(4k+1, k+1)
    kreweras_intervals,  // 1 / (2k+1) * binom(3k, k)
    pallo_intervals,     // [x^k] C(xC(x))
    catalan_count,       // C_k
};

std::optional<Formula> parse_formula(std::string_view token);
std::string_view formula_token(Formula f);

std::uint64_t closed_form(Formula f, int k);

/// Catalan generating function coefficients C_0..C_order.
std::vector<std::uint64_t> catalan_series(int order);

/// First `count` terms a_1, a_2, ... of Lassalle's sequence, computed by
/// the alternating convolution recurrence
///   a_{n+1} = (-1)^n C_{n+1} + sum_{j=1}^{n} (-1)^{j+1} binom(2n+1, 2j) a_{n+1-j} C_j.
/// a_{k+1} counts the uniquely sorted permutations of length 2k+1, giving
/// an algebraic cross-check of the fertility census.
std::vector<std::uint64_t> lassalle_numbers(int count);

/// Coefficients of the composed series C(xC(x)) to the given order.
std::vector<std::uint64_t> catalan_of_x_catalan(int order);

/// Verifies, coefficientwise to the given order, that the odd-placed
/// embedding B~(x) = x * B(x^2) of B(x) = C(xC(x)) satisfies
/// B~ = x + x C(x^2) B~^2.
bool nested_catalan_identity_holds(int order);

}  // namespace catsort
