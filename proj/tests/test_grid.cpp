#include <doctest.h>

#include <cmath>
#include "ssgbeam/grid.hpp"

using namespace ssgbeam;

TEST_CASE("five point grid on unit interval") {
    Grid g = make_grid(5, 1.0);
    REQUIRE(g.n_points == 5);
    const double s2 = std::sqrt(2.0) / 2.0;
    CHECK(g[0] == 0.0);
    CHECK(g[1] == doctest::Approx(0.5 * (1.0 - s2)).epsilon(1e-12));
    CHECK(g[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(g[3] == doctest::Approx(0.5 * (1.0 + s2)).epsilon(1e-12));
    CHECK(g[4] == 1.0);
}

TEST_CASE("sizing and length preconditions") {
    CHECK_THROWS_AS(make_grid(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(9, -1.0), std::invalid_argument);
}

TEST_CASE("grid invariants across sizes") {
    for (int n : {5, 6, 9, 15, 21}) {
        Grid g = make_grid(n, 2.5);
        CHECK(g[0] == 0.0);
        CHECK(g[n - 1] == 2.5);
        for (int i = 0; i + 1 < n; ++i) CHECK(g[i] < g[i + 1]);
        for (int i = 0; i < n; ++i)
            CHECK(g[i] + g[n - 1 - i] == doctest::Approx(2.5).epsilon(1e-14));
        if (n % 2 == 1) CHECK(g[(n - 1) / 2] == doctest::Approx(1.25).epsilon(1e-14));
    }
}

TEST_CASE("grid scales linearly with length") {
    Grid unit = make_grid(13, 1.0);
    Grid scaled = make_grid(13, 7.0);
    for (int i = 0; i < 13; ++i) {
        if (unit[i] == 0.0)
            CHECK(scaled[i] == 0.0);
        else
            CHECK(scaled[i] / (7.0 * unit[i]) == doctest::Approx(1.0).epsilon(1e-15));
    }
}
