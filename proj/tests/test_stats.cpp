#include <doctest.h>

#include <cmath>

#include "rugbypi/error.hpp"
#include "rugbypi/numeric.hpp"
#include "rugbypi/stats.hpp"

using namespace rugbypi;

TEST_CASE("descriptive statistics on a small sample") {
    const auto d = descriptive({1, 2, 3, 4});
    CHECK(d.n == 4);
    CHECK(d.mean == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(d.median == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(d.min == 1.0);
    CHECK(d.max == 4.0);
    REQUIRE(d.stddev.has_value());
    CHECK(d.stddev.value() == doctest::Approx(1.2909944487358056).epsilon(1e-12));
}

TEST_CASE("descriptive handles odd length and unsorted input") {
    const auto d = descriptive({9, 1, 5});
    CHECK(d.median == 5.0);
    CHECK(d.min == 1.0);
    CHECK(d.max == 9.0);
}

TEST_CASE("descriptive on a single value has no standard deviation") {
    const auto d = descriptive({5});
    CHECK(d.n == 1);
    CHECK(d.mean == 5.0);
    CHECK(d.median == 5.0);
    CHECK_FALSE(d.stddev.has_value());
}

TEST_CASE("descriptive rejects an empty sample") {
    CHECK_THROWS_AS(descriptive({}), Error);
}

TEST_CASE("paired Cohen's d equals mean difference over sd of differences") {
    // diffs {1, 3}: mean 2, sd sqrt(2) -> d = sqrt(2)
    CHECK(cohens_d_paired({1, 3}, {0, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // symmetric diffs cancel
    CHECK(cohens_d_paired({1, -1}, {0, 0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(cohens_d_paired({1, 2}, {0}), Error);
    CHECK_THROWS_AS(cohens_d_paired({1}, {0}), Error);
    // constant differences have no spread to scale by
    try {
        cohens_d_paired({2, 3, 4}, {1, 2, 3});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateSample);
    }
}

TEST_CASE("significance stars at the published thresholds") {
    CHECK(significance_stars(0.0099) == "***");
    CHECK(significance_stars(0.01) == "***");
    CHECK(significance_stars(0.0107) == "**");
    CHECK(significance_stars(0.05) == "**");
    CHECK(significance_stars(0.0623) == "*");
    CHECK(significance_stars(0.10) == "*");
    CHECK(significance_stars(0.1134) == "");
    CHECK(significance_stars(1.0) == "");
}

TEST_CASE("effect size labels with boundary values") {
    CHECK(effect_label(0.005) == "negligible");
    CHECK(effect_label(0.01) == "very small");
    CHECK(effect_label(0.1) == "very small");
    CHECK(effect_label(0.2) == "small");
    CHECK(effect_label(0.35) == "small");
    CHECK(effect_label(0.5) == "medium");
    CHECK(effect_label(0.65) == "medium");
    CHECK(effect_label(0.8) == "large");
    CHECK(effect_label(1.0) == "large");
    CHECK(effect_label(1.2) == "very large");
    CHECK(effect_label(1.5) == "very large");
    CHECK(effect_label(2.0) == "huge");
    CHECK(effect_label(3.7) == "huge");
}

TEST_CASE("effect size r = |z| / sqrt(n)") {
    const auto e = effect_size_r(2.4534987303147355, 8);
    CHECK(e.r == doctest::Approx(2.4534987303147355 / std::sqrt(8.0)).epsilon(1e-14));
    CHECK(format_fixed(e.r, 2) == "0.87");
    CHECK(e.label == "large");
    const auto big = effect_size_r(5.295286290561094, 37);
    CHECK(big.r == doctest::Approx(5.295286290561094 / std::sqrt(37.0)).epsilon(1e-14));
    CHECK(format_fixed(big.r, 2) == "0.87");
    CHECK(big.label == "large");
    // sign of z does not matter
    CHECK(effect_size_r(-2.0, 4).r == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(effect_size_r(-2.0, 4).label == "large");
    CHECK_THROWS_AS(effect_size_r(1.0, 0), Error);
}
