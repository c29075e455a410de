#include "hitchin/companion.hpp"
#include "hitchin/degrees.hpp"
#include "hitchin/errors.hpp"
#include "hitchin/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hitchin;

TEST_CASE("plan for blocks (2,1,4)") {
    const auto plan = build_plan({2, 1, 4});
    REQUIRE(plan.size() == 7);
    CHECK(plan.s.front() == std::pair<int, int>{3, 1});
    CHECK(plan.m == gl_m_sequence({2, 1, 4}));
    CHECK(plan.eps.size() == 6);
    // every cell is visited once
    std::vector<bool> seen(7, false);
    for (const auto& c : plan.s) {
        const auto k = plan.coordinate(c);
        REQUIRE(k < 7);
        CHECK(!seen[k]);
        seen[k] = true;
    }
}

TEST_CASE("companion identity against the principal-minor oracle") {
    std::mt19937_64 rng(21);
    for (const auto& blocks : std::vector<std::vector<int>>{{3, 1}, {1, 2, 1}, {2, 2}, {1, 1, 1}}) {
        const auto plan = build_plan(blocks);
        const std::size_t n = plan.size();
        std::vector<Series> f;
        for (std::size_t j = 0; j < n; ++j) {
            f.push_back(oracle::random_series(rng, 0, 3, 4).truncated(Series::kExact));
        }
        const SeriesMatrix tA = shifted(companion_matrix(plan, f), 1);
        const auto c = oracle::char_poly_by_minors(tA, n);
        for (std::size_t j = 1; j <= n; ++j) {
            CAPTURE(j);
            CHECK(c[j - 1] == f[j - 1].shifted(plan.m[j - 1]));
        }
    }
}

TEST_CASE("the trace-free witness hits each minimum") {
    const auto plan = build_plan({3, 1});
    const SeriesMatrix A = sl_companion_witness(plan, {-1, -1, -1});
    const auto c = char_poly_coeffs(A);
    CHECK(c[0].is_zero());
    for (std::size_t j = 1; j < c.size(); ++j) {
        CHECK(c[j].valuation() == Valuation::exactly(-1));
    }
    CHECK(low_bound(A) >= -1);
    CHECK_THROWS_AS(sl_companion_witness(plan, {-2, -1, -1}), PreconditionError);
    CHECK_THROWS_AS(sl_companion_witness(plan, {-1, -1}), PreconditionError);
}

TEST_CASE("invalid companion input") {
    CHECK_THROWS_AS(build_plan({}), PreconditionError);
    CHECK_THROWS_AS(build_plan({2, 0}), PreconditionError);
    const auto plan = build_plan({1, 1});
    CHECK_THROWS_AS(companion_matrix(plan, {Series(1)}), PreconditionError);
    CHECK_THROWS_AS(companion_matrix(plan, {Series::parse("t^-1"), Series(0)}), PreconditionError);
}
