#include "hitchin/errors.hpp"
#include "hitchin/linalg.hpp"
#include "hitchin/polynomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hitchin;

TEST_CASE("characteristic polynomial matches the principal-minor expansion") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int i = 0; i < 10; ++i) {
            const QMatrix m = oracle::random_matrix(n, rng, 5);
            const auto c = char_poly_coeffs(m);
            const auto expect = oracle::char_poly_by_minors(m, n);
            CHECK(c == expect);
            CHECK(c.back() == (n % 2 == 0 ? determinant(m) : -determinant(m)));
        }
    }
}

TEST_CASE("characteristic polynomial over truncated series") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        SeriesMatrix m(4, 4);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                m(r, c) = oracle::random_series(rng, r > c ? 0 : -1, 5, 3);
            }
        }
        const auto c = char_poly_coeffs(m);
        const auto expect = oracle::char_poly_by_minors(m, 4);
        for (std::size_t k = 0; k < 4; ++k) {
            CAPTURE(k);
            CHECK(c[k] == expect[k]);
        }
        const auto partial = char_poly_coeffs(m, 2);
        CHECK(partial.size() == 2);
        CHECK(partial[1] == c[1]);
    }
}

TEST_CASE("determinant agrees with Leibniz over the rationals") {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 6; ++n) {
        const QMatrix m = oracle::random_matrix(n, rng, 4);
        CHECK(determinant(m) == oracle::leibniz_det(m));
    }
}

TEST_CASE("pfaffian agrees with row expansion and squares to the determinant") {
    std::mt19937_64 rng(9);
    for (std::size_t n = 0; n <= 8; n += 2) {
        const QMatrix m = oracle::random_skew(n, rng, 4);
        const Rational pf = pfaffian(m);
        CHECK(pf == oracle::naive_pfaffian(m));
        CHECK(pf * pf == determinant(m));
    }
    QMatrix odd = oracle::random_skew(3, rng, 4);
    CHECK_THROWS_AS(pfaffian(odd), StructuralError);
    QMatrix not_skew(2, 2);
    not_skew(0, 1) = Rational(1);
    CHECK_THROWS_AS(pfaffian(not_skew), StructuralError);
}

TEST_CASE("pfaffian of the standard block form") {
    QMatrix m(4, 4);
    m(0, 1) = Rational(1);
    m(1, 0) = Rational(-1);
    m(2, 3) = Rational(1);
    m(3, 2) = Rational(-1);
    CHECK(pfaffian(m) == Rational(1));
}

TEST_CASE("polarization restricts to the diagonal") {
    std::mt19937_64 rng(13);
    const QMatrix x = oracle::random_matrix(4, rng, 3);
    const auto c = char_poly_coeffs(x);
    for (std::size_t j = 1; j <= 4; ++j) {
        CHECK(polarized_invariant(j, std::vector<QMatrix>(j, x)) == c[j - 1]);
    }
}

TEST_CASE("polarization is symmetric and multilinear") {
    std::mt19937_64 rng(17);
    const QMatrix a = oracle::random_matrix(3, rng, 3);
    const QMatrix b = oracle::random_matrix(3, rng, 3);
    const QMatrix c = oracle::random_matrix(3, rng, 3);
    const Rational abc = polarized_invariant(3, std::vector<QMatrix>{a, b, c});
    CHECK(abc == polarized_invariant(3, std::vector<QMatrix>{c, a, b}));
    QMatrix a2 = a;
    a2.scale(Rational(2));
    const Rational lin = polarized_invariant(3, std::vector<QMatrix>{a + a2, b, c});
    CHECK(lin == Rational(3) * abc);
}

TEST_CASE("rank, nullspace and inverse") {
    QMatrix m(3, 3);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(2);
    m(1, 0) = Rational(2);
    m(1, 1) = Rational(4);
    m(2, 2) = Rational(1);
    CHECK(rank(m) == 2);
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == Rational(-2) * ns[0][1]);
    CHECK_THROWS_AS(inverse(m), StructuralError);
    m(1, 1) = Rational(5);
    CHECK(inverse(m) * m == QMatrix::identity(3));
}

TEST_CASE("span solver finds coordinates") {
    const std::vector<QMatrix> basis{elementary(2, 0, 1), elementary(2, 0, 0) - elementary(2, 1, 1)};
    const SpanSolver s(basis);
    CHECK(s.rank() == 2);
    QMatrix x = elementary(2, 0, 1);
    x.scale(Rational(3));
    x += elementary(2, 0, 0) - elementary(2, 1, 1);
    const auto coords = s.coordinates(x);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Rational(3));
    CHECK((*coords)[1] == Rational(1));
    CHECK(!s.contains(elementary(2, 1, 0)));
}

TEST_CASE("restrict_span keeps the allowed pattern") {
    std::vector<QMatrix> basis;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            basis.push_back(elementary(3, i, j));
        }
    }
    const auto upper = restrict_span(basis, [](std::size_t i, std::size_t j) { return i <= j; });
    CHECK(upper.size() == 6);
}

TEST_CASE("polynomial gcd and squareness") {
    const QPoly x1(std::vector<Rational>{Rational(-1), Rational(1)});
    const QPoly x2(std::vector<Rational>{Rational(2), Rational(1)});
    const QPoly sq = x1 * x1 * x2 * x2;
    CHECK(is_square(sq));
    CHECK(!is_square(sq * x1));
    CHECK(is_square(QPoly(std::vector<Rational>{Rational(-3)})));
    CHECK(gcd(sq, x1 * x2 * x2 * x2) == (x1 * x2 * x2).monic());
    const auto dec = squarefree_decomposition(sq * x1);
    REQUIRE(dec.size() == 3);
    CHECK(dec[1] == x2.monic());
    CHECK(dec[2] == x1.monic());
    const auto [q, r] = divmod(sq, x1);
    CHECK(r.is_zero());
    CHECK(q * x1 == sq);
}
