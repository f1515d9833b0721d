#include <random>

#include "doctest.h"
#include "findom/laurent.hpp"
#include "findom/localized.hpp"
#include "findom/upoly.hpp"
#include "test_util.hpp"

using namespace findom;
using findom::test::P;

TEST_CASE("scalar arithmetic is canonical") {
    FieldScope q(FieldSpec::rational());
    Scalar a(mpz_class(6), mpz_class(-4));
    CHECK(a.to_string() == "-3/2");
    CHECK((a * Scalar(2) / Scalar(-3)).is_one());
    CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError);

    FieldScope p(FieldSpec::prime(7));
    CHECK(Scalar(10) == Scalar(3));
    CHECK(Scalar(-1).to_string() == "-1");
    CHECK((Scalar(3) * Scalar(5)).is_one());
    CHECK_THROWS(FieldSpec::prime(9));
}

TEST_CASE("laurent arithmetic examples") {
    FieldScope q(FieldSpec::rational());
    CHECK(P("(1-x1)*(1+x1+x1^2)", 1) == P("1-x1^3", 1));
    CHECK(P("x2*x2^-1", 2).is_one());
    LaurentPoly f = P("1-x1*x2", 2);
    CHECK((f - f).is_zero());
    CHECK((f - f).size() == 0);
    CHECK(P("x1^-2", 1).to_string() == "x1^-2");
    CHECK(P("2/3*x1 + x2^0", 2).to_string() == "1 + 2/3*x1");
    CHECK(f.to_string() == "1 - x1*x2");
    CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), DimensionError);
}

TEST_CASE("laurent slicing") {
    FieldScope q(FieldSpec::rational());
    auto s = P("1-x1*x2", 2).slice(1);
    REQUIRE(s.size() == 2);
    CHECK(s.at(0) == P("1", 2));
    CHECK(s.at(1) == P("-x1", 2));
    auto t = P("1-x1", 2).slice(1);
    REQUIRE(t.size() == 1);
    CHECK(t.at(0) == P("1-x1", 2));
    CHECK(LaurentPoly(1).slice(0).empty());
}

TEST_CASE("exact division") {
    FieldScope q(FieldSpec::rational());
    auto quo = P("1-x1^3", 1).try_divide(P("1+x1+x1^2", 1));
    REQUIRE(quo);
    CHECK(*quo == P("1-x1", 1));
    CHECK_FALSE(P("1-x1-x2", 2).try_divide(P("1-x1", 2)));
    auto q2 = P("(1-x1*x2)*(x1^-1+x2)", 2).try_divide(P("x1^-1+x2", 2));
    REQUIRE(q2);
    CHECK(*q2 == P("1-x1*x2", 2));
    CHECK_THROWS_AS(P("1", 1).try_divide(LaurentPoly(1)), ArithmeticError);
}

TEST_CASE("direction units") {
    FieldScope q(FieldSpec::rational());
    CHECK(is_direction_unit(P("1-x1", 2), Direction(2, 0, Sign::Plus)));
    CHECK(is_direction_unit(P("1-x1*x2", 2), Direction(2, 1, Sign::Plus)));
    CHECK_FALSE(is_direction_unit(P("1-x1*x2", 2), Direction(2, 0, Sign::Plus)));
    CHECK(is_direction_unit(P("1-x1", 2), Direction(2, 0, Sign::Minus)));
    CHECK_FALSE(is_direction_unit(P("1-x1-x2", 2), Direction(2, 0, Sign::Plus)));
    CHECK_FALSE(is_direction_unit(LaurentPoly(2), Direction(2, 0, Sign::Plus)));
    // Inner coefficient must be a monomial at the extreme degree.
    CHECK_FALSE(is_direction_unit(P("1-x1+x2", 2), Direction(2, 1, Sign::Plus)));
    CHECK(is_direction_unit(P("x1+x2-x1^2*x2", 2), Direction(2, 1, Sign::Plus)));
    CHECK_FALSE(is_direction_unit(P("x1-x1^2+x2", 2), Direction(2, 1, Sign::Plus)));
    CHECK(is_direction_unit(P("1-x1-x2", 2), Direction(2, 1, Sign::Minus)));
}

TEST_CASE("localized arithmetic") {
    FieldScope q(FieldSpec::rational());
    Direction d(2, 0, Sign::Plus);
    LocalizedElement a(P("1-x1", 2));
    LocalizedElement inv = a.inverse(d);
    CHECK(inv.num().is_one());
    CHECK(inv.denominator() == P("1-x1", 2));
    CHECK((inv * a).is_one());
    CHECK(inv * a == LocalizedElement(P("1", 2)));
    CHECK_THROWS_AS(LocalizedElement(P("1-x1*x2", 2)).inverse(d), NotAUnitError);

    LocalizedElement b(P("x2", 2), P("1-x1", 2), d);
    LocalizedElement c(P("1", 2), P("(1-x1)^2", 2), d);
    LocalizedElement s = b + c;
    CHECK(s * LocalizedElement(P("(1-x1)^2", 2)) == LocalizedElement(P("x2*(1-x1)+1", 2)));
    CHECK((b - b).is_zero());
}

TEST_CASE("novikov expansions") {
    FieldScope q(FieldSpec::rational());
    Direction plus(1, 0, Sign::Plus), minus(1, 0, Sign::Minus);
    LocalizedElement g(P("1", 1), P("1-x1", 1), plus);
    CHECK(novikov_expand(g, plus, 3).to_string() == "1 + x1 + x1^2 + x1^3 + O(x1^4)");
    CHECK(novikov_expand(LocalizedElement(P("1-x1", 1)), plus, 5).to_string() == "1 - x1 + O(x1^6)");

    // Over R((x^-1)): 1/(1-x) = -x^-1 (1 + x^-1 + ...).
    TruncatedSeries s = novikov_expand(g, minus, 4);
    LaurentPoly sum(1);
    for (const auto& [k, c] : s.slices) sum += c * LaurentPoly::variable(1, 0, k);
    CHECK(sum == P("-x1^-1-x1^-2-x1^-3-x1^-4", 1));
    // Multiply back: (1-x) * sum = 1 up to the truncation term.
    CHECK(P("1-x1", 1) * sum == P("1 - x1^-4", 1));
}

TEST_CASE("ring axioms on random triples") {
    FieldScope fp(FieldSpec::prime(kDefaultPrime));
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        auto a = test::random_poly(rng, 2, 4, 2), b = test::random_poly(rng, 2, 4, 2),
             c = test::random_poly(rng, 2, 4, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(test::dense_product(a, b) == a * b);
        if (!b.is_zero()) {
            auto quo = (a * b).try_divide(b);
            REQUIRE(quo);
            CHECK(*quo == a);
        }
        // Slices reassemble.
        LaurentPoly r(2);
        for (const auto& [k, s] : a.slice(1)) r += s * LaurentPoly::variable(2, 1, k);
        CHECK(r == a);
    }
}

TEST_CASE("direction units are closed under products") {
    FieldScope fp(FieldSpec::prime(kDefaultPrime));
    std::mt19937_64 rng(12);
    for (int it = 0; it < 200; ++it) {
        auto f = test::random_poly(rng, 2, 3, 2), g = test::random_poly(rng, 2, 3, 2);
        if (f.is_zero() || g.is_zero()) continue;
        for (std::size_t pos = 0; pos < 2; ++pos)
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                Direction d(2, pos, s);
                CHECK(is_direction_unit(f * g, d) == (is_direction_unit(f, d) && is_direction_unit(g, d)));
            }
    }
}

TEST_CASE("localized inverses and expansion products") {
    FieldScope fp(FieldSpec::prime(kDefaultPrime));
    std::mt19937_64 rng(13);
    Direction d(1, 0, Sign::Plus);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 60; ++it) {
        auto f = test::random_poly(rng, 1, 3, 2), g = test::random_poly(rng, 1, 3, 2);
        if (f.is_zero() || g.is_zero()) continue;
        LocalizedElement a(f), b(g);
        CHECK((a * a.inverse(d)).is_one());
        LocalizedElement ai = a.inverse(d), bi = b.inverse(d);
        // Truncated product of expansions agrees with the expansion of the
        // product through a common order.
        const int n = 6;
        auto sa = novikov_expand(ai, d, n + 6), sb = novikov_expand(bi, d, n + 6);
        auto sab = novikov_expand(ai * bi, d, n);
        LaurentPoly pa(1), pb(1), pab(1);
        for (const auto& [k, c] : sa.slices) pa += c * LaurentPoly::variable(1, 0, k);
        for (const auto& [k, c] : sb.slices) pb += c * LaurentPoly::variable(1, 0, k);
        for (const auto& [k, c] : sab.slices) pab += c * LaurentPoly::variable(1, 0, k);
        LaurentPoly full = pa * pb, prod(1);
        for (const auto& t : full.terms())
            if (t.mono[0] <= n) prod += LaurentPoly::monomial(t.mono, t.coeff);
        CHECK(prod == pab);
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("univariate polynomials and rational functions") {
    FieldScope q(FieldSpec::rational());
    Poly<Scalar> a(std::vector<Scalar>{1, -2, 1});  // (1-t)^2
    Poly<Scalar> b(std::vector<Scalar>{-1, 1});
    CHECK(gcd(a, b) == b);
    RationalFunction r(a, b);
    CHECK(r.den() == Poly<Scalar>(Scalar(1)));
    CHECK(r.num() == Poly<Scalar>(std::vector<Scalar>{-1, 1}));
    RationalFunction inv = RationalFunction(1) / r;
    CHECK((inv * r) == RationalFunction(1));
    CHECK_THROWS(RationalFunction(1) / RationalFunction(0));
    ULaurent<Scalar> u = to_ulaurent(P("x1^-1 - x1^2", 1));
    CHECK(u.low() == -1);
    CHECK(u.span() == 3);
    CHECK(from_ulaurent(u) == P("x1^-1 - x1^2", 1));
}
