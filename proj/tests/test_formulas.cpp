#include <stdexcept>
#include <vector>

#include "catsort/formulas.hpp"
#include "doctest.h"

using namespace catsort;

TEST_CASE("catalan numbers by recurrence and closed form") {
    // recurrence oracle
    std::vector<std::uint64_t> rec{1};
    for (int n = 1; n <= 15; ++n) {
        std::uint64_t s = 0;
        for (int i = 0; i < n; ++i) s += rec[static_cast<std::size_t>(i)] * rec[static_cast<std::size_t>(n - 1 - i)];
        rec.push_back(s);
    }
    for (int k = 0; k <= 15; ++k) CHECK(catalan(k) == rec[static_cast<std::size_t>(k)]);
    CHECK(catalan_series(5) == std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42});
}

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 4) == 495);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(63, 31) > 0);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("closed forms") {
    CHECK(closed_form(Formula::stanley_intervals, 3) == 14);  // C_3 C_5 - C_4^2 = 210 - 196
    CHECK(closed_form(Formula::kreweras_intervals, 4) == 55);
    for (Formula f : {Formula::stanley_intervals, Formula::tamari_intervals,
                      Formula::kreweras_intervals, Formula::pallo_intervals, Formula::catalan_count})
        CHECK(closed_form(f, 0) == 1);
    CHECK(closed_form(Formula::tamari_intervals, 3) == 13);
    CHECK(closed_form(Formula::stanley_intervals, 5) == 594);
    CHECK(closed_form(Formula::catalan_count, 7) == 429);
}

TEST_CASE("series composition") {
    CHECK(catalan_of_x_catalan(4) == std::vector<std::uint64_t>{1, 1, 3, 11, 44});
    CHECK(catalan_of_x_catalan(7) ==
          std::vector<std::uint64_t>{1, 1, 3, 11, 44, 185, 804, 3579});
    CHECK(catalan_of_x_catalan(0) == std::vector<std::uint64_t>{1});
}

TEST_CASE("nested identity residual vanishes") {
    for (int order : {1, 5, 13}) CHECK(nested_catalan_identity_holds(order));
}

TEST_CASE("convolution recurrence values") {
    CHECK(lassalle_numbers(0).empty());
    CHECK(lassalle_numbers(6) == std::vector<std::uint64_t>{1, 1, 5, 56, 1092, 32670});
}

TEST_CASE("checked arithmetic traps overflow") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(1u << 31, 2) == (1ull << 32));
    CHECK_THROWS_AS(checked_mul(UINT64_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), std::overflow_error);
}

TEST_CASE("formula tokens") {
    CHECK(parse_formula("stanley") == Formula::stanley_intervals);
    CHECK(parse_formula("pallo") == Formula::pallo_intervals);
    CHECK_FALSE(parse_formula("bogus").has_value());
    CHECK(formula_token(Formula::kreweras_intervals) == "kreweras");
}
