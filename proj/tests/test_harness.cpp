#include <cstdio>
#include <filesystem>

#include "catsort/harness.hpp"
#include "catsort/textio.hpp"
#include "catsort/verify.hpp"
#include "doctest.h"

using namespace catsort;

TEST_CASE("sequence computation") {
    const auto empty = compute_sequence({}, 2);
    REQUIRE(empty.size() == 3);
    CHECK(empty[0].count == 1);
    CHECK(empty[1].count == 1);
    CHECK(empty[2].count == 5);
    CHECK(empty[2].k == 2);
    CHECK(empty[2].provenance == "enumerated");

    const auto p123 = *parse_pattern_set("123");
    const auto rec123 = compute_sequence(p123, 4);
    CHECK(rec123[2].count == 0);
    CHECK(rec123[3].count == 0);
    CHECK(rec123[4].count == 0);

    const auto pinned = compute_sequence(*parse_pattern_set("231;4123"), 3);
    CHECK(pinned[0].count == 1);
    CHECK(pinned[1].count == 1);
    CHECK(pinned[2].count == 3);
    CHECK(pinned[3].count == 10);
    CHECK(pinned[3].klass == "231;4123");

    CHECK_THROWS_AS(compute_sequence({}, 6), guard_error);
    CHECK(compute_sequence({}, 4, 6).size() == 5);  // raised guard
}

TEST_CASE("sequence csv roundtrip") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "catsort_test_seq.csv";
    const auto recs = compute_sequence(*parse_pattern_set("321"), 3);
    write_sequence_csv(tmp.string(), recs);
    const auto back = read_sequence_csv(tmp.string());
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].klass == recs[i].klass);
        CHECK(back[i].k == recs[i].k);
        CHECK(back[i].count == recs[i].count);
    }
    fs::remove(tmp);
    CHECK(sequence_file_name(*parse_pattern_set("231;4123")) == "u_231_4123.csv");
}

TEST_CASE("verify runs the named suites") {
    VerifyOptions opt;
    opt.max_k = 3;
    const auto results = run_suite("posets", opt);
    CHECK(!results.empty());
    CHECK(all_passed(results));
    CHECK_THROWS_AS(run_suite("bogus", opt), std::invalid_argument);
    VerifyOptions zero;
    zero.max_k = 0;
    CHECK(all_passed(run_suite("lemmas", zero)));
    CHECK(all_passed(run_suite("bijections", zero)));
}
