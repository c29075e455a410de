#include "hitchin/errors.hpp"
#include "hitchin/hitchin.hpp"
#include "hitchin/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace hitchin;

namespace {

std::shared_ptr<const LieRealization> algebra(LieType t, int rank) {
    return std::make_shared<const LieRealization>(build_algebra(t, rank));
}

CampaignConfig small(int trials, unsigned threads = 1) {
    CampaignConfig c;
    c.trials = trials;
    c.seed = 5;
    c.threads = threads;
    return c;
}

}  // namespace

TEST_CASE("generator names") {
    CHECK(generator_names(build_algebra(LieType::D, 4)) == std::vector<std::string>{"c2", "c4", "c6", "p4"});
    CHECK(generator_names(build_algebra(LieType::G2, 2)) == std::vector<std::string>{"c2", "c6"});
}

TEST_CASE("chi on sl_2 is minus the determinant") {
    const auto g = build_algebra(LieType::A, 1);
    const SeriesMatrix x = series_matrix_from_text("t, t^-1; 3, -t");
    const auto image = chi(g, x);
    REQUIRE(image.values.size() == 1);
    CHECK(image.values[0] == Series::parse("-3*t^-1 - t^2"));
    CHECK(image.valuations()[0] == Valuation::exactly(-1));
}

TEST_CASE("chi agrees with the minor expansion and the Pfaffian in type D") {
    const auto g = algebra(LieType::D, 3);
    const auto P = parabolic_from_marked_roots(g, {1});
    const SeriesMatrix x = sample_pperp(P, 4, 9, 3);
    const auto image = chi(*g, x);
    const auto c = oracle::char_poly_by_minors(x, 6);
    CHECK(image.values[0] == c[1]);
    CHECK(image.values[1] == c[3]);
    const Series pf = image.values[2];
    CHECK(c[5] == Series(pfaffian_sign(*g)) * pf * pf);
}

TEST_CASE("membership is enforced") {
    const auto g = build_algebra(LieType::C, 2);
    SeriesMatrix x(4, 4);
    x(0, 0) = Series(1);
    CHECK_THROWS_AS(chi(g, x), StructuralError);
    CHECK_THROWS_AS(chi(g, SeriesMatrix(3, 3)), StructuralError);
    CHECK_NOTHROW(chi(g, x, false));
}

TEST_CASE("weighted action scales by t^(k d_i)") {
    const auto g = build_algebra(LieType::A, 2);
    const auto w = weighted_action(g, {Series(1), Series(1)}, 1);
    CHECK(w[0] == Series::monomial(Rational(1), 2));
    CHECK(w[1] == Series::monomial(Rational(1), 3));
    CHECK_THROWS_AS(weighted_action(g, {Series(1)}, 1), PreconditionError);
}

TEST_CASE("sl_4 (3,1) campaign passes and reaches each bound") {
    const auto P = parabolic_from_blocks(algebra(LieType::A, 3), BlockData{{3, 1}, 0});
    const auto rep = verify_inclusion(P, small(60));
    CHECK(rep.ok());
    CHECK(rep.mode == "box");
    CHECK(rep.passes == 60);
    for (const auto& c : rep.per_coordinate) {
        CHECK(c.min_val_observed == -1);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("bounds above the predicted minima are caught") {
    const auto P = parabolic_from_blocks(algebra(LieType::A, 3), BlockData{{3, 1}, 0});
    const auto rep = verify_inclusion(P, small(30), std::vector<int>{0, 0, 0});
    CHECK(!rep.ok());
    CHECK(!rep.failures.empty());
    CHECK(rep.per_coordinate[0].status == "fail");
    CHECK(!rep.failures[0].phi.empty());
    CHECK_THROWS_AS(verify_inclusion(P, small(1), std::vector<int>{0}), PreconditionError);
}

TEST_CASE("reports do not depend on the thread count") {
    const auto P = g2_parabolic(algebra(LieType::G2, 2), G2Parabolic::Borel);
    const auto a = verify_inclusion(P, small(24, 1));
    const auto b = verify_inclusion(P, small(24, 4));
    CHECK(a.passes == b.passes);
    REQUIRE(a.per_coordinate.size() == b.per_coordinate.size());
    for (std::size_t i = 0; i < a.per_coordinate.size(); ++i) {
        CHECK(a.per_coordinate[i].min_val_observed == b.per_coordinate[i].min_val_observed);
    }
}

TEST_CASE("bad type-D campaigns use the Newton description") {
    const auto P = parabolic_from_marked_roots(algebra(LieType::D, 5), {4, 5});
    const auto rep = verify_inclusion(P, small(8));
    CHECK(rep.mode == "newton");
    REQUIRE(rep.delta.has_value());
    CHECK(rep.delta->parts == std::vector<int>{3, 3, 2, 2});
    CHECK(rep.ok());
    CHECK(rep.square_checks == 8);
    CHECK(rep.pfaffian_vertex_checks == 8);
    CHECK_THROWS_AS(verify_inclusion(P, small(1), std::vector<int>{0, 0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("witness search") {
    const auto sl4 = parabolic_from_blocks(algebra(LieType::A, 3), BlockData{{3, 1}, 0});
    const auto w = witness_search(sl4, std::nullopt, small(0), 10);
    CHECK(w.method == "companion");
    CHECK(w.all_found());
    REQUIRE(w.phi.has_value());
    const auto higher = witness_search(sl4, std::vector<int>{0, 2, -1}, small(0), 10);
    CHECK(higher.all_found());
    CHECK_THROWS_AS(witness_search(sl4, std::vector<int>{-2, -1, -1}, small(0), 10), PreconditionError);

    const auto line = g2_parabolic(algebra(LieType::G2, 2), G2Parabolic::Line);
    const auto r = witness_search(line, std::nullopt, small(0), 200);
    CHECK(r.method == "random");
    CHECK(r.all_found());

    const auto bad = parabolic_from_marked_roots(algebra(LieType::D, 5), {4, 5});
    CHECK_THROWS_AS(witness_search(bad, std::nullopt, small(0), 10), UnsupportedCase);
}

TEST_CASE("tr(A^4) can have a deeper pole than every c_j") {
    const auto P = parabolic_from_blocks(algebra(LieType::A, 3), BlockData{{3, 1}, 0});
    const auto r = trace_power_check(P, 1, 1000);
    CHECK(r.found);
    CHECK(r.val_trace_a4 == -2);
    for (const auto& v : r.val_c) {
        CHECK((!v || *v >= -1));
    }
    const auto other = parabolic_from_blocks(algebra(LieType::A, 3), BlockData{{2, 2}, 0});
    CHECK_THROWS_AS(trace_power_check(other, 1, 10), PreconditionError);
}

TEST_CASE("default precision and threads") {
    CHECK(default_precision(build_algebra(LieType::A, 3)) == 12);
    CHECK(default_precision(build_algebra(LieType::G2, 2)) == 16);
    setenv("HITCHIN_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    unsetenv("HITCHIN_THREADS");
    CHECK(default_threads() >= 1);
}
