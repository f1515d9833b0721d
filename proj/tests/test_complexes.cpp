#include "doctest.h"
#include "findom/complex.hpp"
#include "findom/constructions.hpp"
#include "findom/corpus.hpp"
#include "findom/homology.hpp"
#include "test_util.hpp"

using namespace findom;
using findom::test::P;

namespace {

MatrixLP M(std::size_t n, std::initializer_list<std::initializer_list<const char*>> rows) {
    const std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    MatrixLP m = zero_matrix(r, c, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* e : row) m(i, j++) = P(e, n);
        ++i;
    }
    return m;
}

BasedComplex two_term(std::size_t n, const char* d, int lo = 0) {
    BasedComplex c = make_complex(n, lo, {1, 1});
    c.set_d(lo + 1, M(n, {{d}}));
    return c;
}

}  // namespace

TEST_CASE("validate") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    CHECK(validate(example_square(2)).ok);
    BasedComplex bad = make_complex(1, 0, {1, 1, 1});
    bad.set_d(1, M(1, {{"x1"}}));
    bad.set_d(2, M(1, {{"x1"}}));
    const ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.degree == 1);
    CHECK(rep.entry == P("x1^2", 1));
    CHECK(validate(make_complex(2, 0, {})).ok);
    CHECK(validate(make_complex(2, -3, {0, 0, 0})).ok);
}

TEST_CASE("suspension") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex c = two_term(1, "1 - x1");
    CHECK(suspend(c, 0) == c);
    CHECK(suspend(suspend(c, 1), -1) == c);
    const BasedComplex s = suspend(c, 1);
    CHECK(s.lo() == 1);
    CHECK(s.hi() == 2);
    CHECK(s.d(2) == M(1, {{"-1 + x1"}}));
    CHECK(suspend(c, 2).d(3) == c.d(1));

    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        const BasedComplex x = random_complex(rng, 2, 4, 3, 4);
        const int k = rng.range(-3, 3);
        CHECK(suspend(suspend(x, k), -k) == x);
        CHECK(validate(suspend(x, k)).ok);
    }
}

TEST_CASE("totalization of small grids") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    // Single column p = 0 is returned unchanged.
    const BasedComplex col = example_square(2);
    TwofoldComplex one(2, 0, 0, col.lo(), col.hi());
    for (int q = col.lo(); q <= col.hi(); ++q) one.set_rank(0, q, col.rank(q));
    for (int q = col.lo() + 1; q <= col.hi(); ++q) one.set_dv(0, q, col.d(q));
    CHECK(totalize(one) == col);

    // The square: horizontal 1 - x1x2, vertical 1 - x1, all modules rank 1.
    TwofoldComplex sq(2, 0, 1, 0, 1);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) sq.set_rank(p, q, 1);
    for (int q = 0; q <= 1; ++q) sq.set_dh(1, q, M(2, {{"1 - x1*x2"}}));
    for (int p = 0; p <= 1; ++p) sq.set_dv(p, 1, M(2, {{"1 - x1"}}));
    REQUIRE(sq.is_valid());
    const BasedComplex tot = totalize(sq);
    CHECK(tot.rank(0) == 1);
    CHECK(tot.rank(1) == 2);
    CHECK(tot.rank(2) == 1);
    // Tot_1 = D_{1,0} ⊕ D_{0,1}; the p = 1 vertical block carries the sign.
    CHECK(tot.d(1) == M(2, {{"1 - x1*x2", "1 - x1"}}));
    CHECK(tot.d(2) == M(2, {{"-(1 - x1)"}, {"1 - x1*x2"}}));
    CHECK(tot == example_square(2));
}

TEST_CASE("totalization of a 2x2 grid by hand") {
    FieldScope fs(FieldSpec::rational());
    // D_{p,q} = R for p, q in {0, 1}; dh = a, dv = b with ab = ba.
    TwofoldComplex d(1, 0, 1, 0, 1);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) d.set_rank(p, q, 1);
    d.set_dh(1, 0, M(1, {{"x1"}}));
    d.set_dh(1, 1, M(1, {{"x1"}}));
    d.set_dv(0, 1, M(1, {{"1 + x1"}}));
    d.set_dv(1, 1, M(1, {{"1 + x1"}}));
    const BasedComplex t = totalize(d);
    // d_2 = (-(1+x), x)^T, d_1 = (x, 1+x): d_1 d_2 = -x(1+x) + (1+x)x = 0.
    CHECK(t.d(2) == M(1, {{"-1 - x1"}, {"x1"}}));
    CHECK(t.d(1) == M(1, {{"x1", "1 + x1"}}));
    CHECK((t.d(1) * t.d(2)).is_zero());
}

TEST_CASE("totalize output is a complex on random commuting grids") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        const int plo = rng.range(-1, 1), qlo = rng.range(-1, 1);
        const TwofoldComplex d = random_twofold(rng, n, plo, plo + rng.range(0, 2), qlo, qlo + rng.range(0, 2), 2);
        REQUIRE(d.is_valid());
        CHECK(validate(totalize(d)).ok);
    }
}

TEST_CASE("direct sums, chain maps and homotopies") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex a = example_square(2), b = two_term(2, "1 - x2", 1);
    const BasedComplex s = direct_sum(a, b);
    CHECK(s.rank(1) == 3);
    CHECK(s.rank(2) == 2);
    CHECK(validate(s).ok);
    CHECK(is_chain_map(ChainMap::identity(a)));
    const ChainMap h = ChainMap::scalar(a, P("1 + x1", 2));
    CHECK(is_chain_map(h));
    CHECK(is_homotopy(ChainHomotopy::zero(a, a), h, h));

    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const BasedComplex c = random_complex(rng, 1, 3, 3, 3);
        const ChainMap g = ChainMap::scalar(c, random_poly(rng, 1, 2, 1));
        const ChainHomotopy A = random_homotopy(rng, c, c, 2, 1);
        const ChainMap hh = add_boundary(g, A);
        CHECK(is_chain_map(hh));
        CHECK(is_homotopy(A, hh, g));
        if (!A.maps.empty() && !(hh == g)) CHECK_FALSE(is_homotopy(ChainHomotopy::zero(c, c), hh, g));
    }
    // A non-chain map.
    ChainMap bad = ChainMap::identity(a);
    bad.set(0, M(2, {{"2"}}));
    CHECK_FALSE(is_chain_map(bad));
}

TEST_CASE("direct sum homology is the degreewise sum") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(77);
    for (int t = 0; t < 30; ++t) {
        Profile p;
        p.degrees = 3;
        p.max_rank = 3;
        const BasedComplex a = random_known(rng.next(), p).complex, b = random_known(rng.next(), p).complex;
        const HomologyReport ha = homology_pid(a), hb = homology_pid(b), hs = homology_pid(direct_sum(a, b));
        for (const auto& d : hs.degrees) {
            const DegreeHomology* x = ha.at(d.degree);
            const DegreeHomology* y = hb.at(d.degree);
            const std::size_t fr = (x ? x->free_rank : 0) + (y ? y->free_rank : 0);
            CHECK(d.free_rank == fr);
            if (d.dim_f && x && y && x->dim_f && y->dim_f) CHECK(*d.dim_f == *x->dim_f + *y->dim_f);
        }
    }
}

TEST_CASE("base change") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex sq = example_square(2);
    const std::vector<LaurentPoly> id = {P("x1", 2), P("x2", 2)};
    CHECK(base_change(sq, id, 2) == sq);
    const std::vector<LaurentPoly> kill_x2 = {P("x1", 1), P("1", 1)};
    const BasedComplex one = base_change(sq, kill_x2, 1);
    CHECK(nvars_of(one) == 1);
    CHECK(one.d(1) == M(1, {{"1 - x1", "1 - x1"}}));
    CHECK(validate(one).ok);
    const std::vector<LaurentPoly> non_unit = {P("1 + x1", 2), P("x2", 2)};
    CHECK_THROWS_AS(base_change(sq, non_unit, 2), ArithmeticError);
    const std::vector<std::size_t> swap = {1, 0};
    CHECK(permute_vars(permute_vars(sq, swap), swap) == sq);
    CHECK(validate(extend_vars(sq, 3)).ok);
}
