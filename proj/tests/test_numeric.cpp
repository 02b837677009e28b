#include <doctest.h>

#include <cmath>

#include "rugbypi/error.hpp"
#include "rugbypi/numeric.hpp"

using namespace rugbypi;

TEST_CASE("normal_cdf matches known values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
    CHECK(normal_cdf(-1.959963984540054) == doctest::Approx(0.025).epsilon(1e-12));
    CHECK(normal_cdf(5.0) == doctest::Approx(0.9999997133484281).epsilon(1e-12));
    // symmetry
    for (double z : {0.1, 0.7, 1.3, 2.9, 4.2})
        CHECK(normal_cdf(z) + normal_cdf(-z) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("normal_quantile inverts normal_cdf") {
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(normal_quantile(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-12));
    for (double p : {1e-8, 1e-4, 0.01, 0.2, 0.5, 0.77, 0.999, 1.0 - 1e-9}) {
        const double z = normal_quantile(p);
        CHECK(normal_cdf(z) == doctest::Approx(p).epsilon(1e-10));
    }
    CHECK_THROWS_AS(normal_quantile(0.0), Error);
    CHECK_THROWS_AS(normal_quantile(1.0), Error);
    CHECK_THROWS_AS(normal_quantile(-0.2), Error);
}

TEST_CASE("log2_binomial matches exact small cases") {
    CHECK(log2_binomial(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log2_binomial(5, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(log2_binomial(5, 5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(log2_binomial(10, 5) == doctest::Approx(std::log2(252.0)).epsilon(1e-12));
    CHECK(log2_binomial(37, 2) == doctest::Approx(std::log2(666.0)).epsilon(1e-12));
    // symmetry C(n,k) == C(n,n-k)
    CHECK(log2_binomial(90, 17) == doctest::Approx(log2_binomial(90, 73)).epsilon(1e-12));
}

TEST_CASE("format_trimmed drops trailing zeros but keeps precision") {
    CHECK(format_trimmed(343.0) == "343");
    CHECK(format_trimmed(0.933) == "0.933");
    CHECK(format_trimmed(0.074534) == "0.074534");
    CHECK(format_trimmed(55.0) == "55");
    CHECK(format_trimmed(0.39) == "0.39");
    CHECK(format_trimmed(2.5) == "2.5");
    CHECK(format_trimmed(-1.25) == "-1.25");
    CHECK(format_trimmed(0.0) == "0");
    CHECK(format_trimmed(-0.0) == "0");
    CHECK(format_trimmed(4.1953125) == "4.195312"); // six decimals, half-to-even
}

TEST_CASE("format_fixed pins decimal places") {
    CHECK(format_fixed(0.014147403886021512, 4) == "0.0141");
    CHECK(format_fixed(1.1883356016934765e-07, 4) == "0.0000");
    CHECK(format_fixed(0.8675, 2) == "0.87");
    CHECK(format_fixed(2.0, 3) == "2.000");
}
