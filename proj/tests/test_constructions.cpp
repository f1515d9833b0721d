#include "doctest.h"
#include "findom/constructions.hpp"
#include "findom/corpus.hpp"
#include "findom/detector.hpp"
#include "findom/homology.hpp"
#include "findom/novikov.hpp"
#include "test_util.hpp"

using namespace findom;
using findom::test::P;

namespace {

BasedComplex two_term(std::size_t n, const LaurentPoly& d, int lo = 0) {
    BasedComplex c = make_complex(n, lo, {1, 1});
    MatrixLP m = zero_matrix(1, 1, n);
    m(0, 0) = d;
    c.set_d(lo + 1, m);
    return c;
}

MatrixLP one_by_one(const LaurentPoly& p) {
    MatrixLP m = zero_matrix(1, 1, p.nvars());
    m(0, 0) = p;
    return m;
}

// Self-map of an n = 0 complex plus the complex, for torus suites.
struct SelfMap {
    BasedComplex c;
    ChainMap h;
};

SelfMap random_self_map(Rng& rng) {
    BasedComplex c = random_field_complex(rng, 3, 3);
    ChainMap h = random_field_chain_map(rng, c, c);
    return {c, h};
}

bool maps_equal_identity(const ChainMap& f) { return f == ChainMap::identity(f.source); }

}  // namespace

TEST_CASE("cone examples") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex c = two_term(1, P("1 + x1", 1));
    CHECK(is_acyclic(cone(ChainMap::identity(c))).quasi_iso);

    Rng rng(4);
    const BasedComplex b = random_complex(rng, 1, 3, 2, 3);
    CHECK(cone(ChainMap::zero(c, b)) == direct_sum(suspend(c, 1), b));

    const BasedComplex r = make_complex(2, 0, {1});
    const BasedComplex k = cone(ChainMap::scalar(r, P("1 - x1", 2)));
    CHECK(k.lo() == 0);
    CHECK(k.rank(0) == 1);
    CHECK(k.rank(1) == 1);
    CHECK(k.d(1) == one_by_one(P("1 - x1", 2)));
}

TEST_CASE("cone sign convention by blocks") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const BasedComplex c = random_field_complex(rng, 3, 2), b = random_field_complex(rng, 3, 2);
        const ChainMap f = random_field_chain_map(rng, c, b);
        const BasedComplex k = cone(f);
        CHECK(validate(k).ok);
        for (int deg = k.lo() + 1; deg <= k.hi(); ++deg) {
            const MatrixLP d = k.d(deg);
            const std::size_t c1 = c.rank(deg - 1), c2 = c.rank(deg - 2);
            // d(c, b) = (-dc, f c + db)
            CHECK(d.block(0, 0, c2, c1) == -c.d(deg - 1));
            CHECK(d.block(c2, 0, b.rank(deg - 1), c1) == f.at(deg - 1));
            CHECK(d.block(c2, c1, b.rank(deg - 1), b.rank(deg)) == b.d(deg));
            CHECK(d.block(0, c1, c2, b.rank(deg)).is_zero());
        }
    }
}

TEST_CASE("constructions always produce complexes") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(31337);
    for (int t = 0; t < 200; ++t) {
        const SelfMap s = random_self_map(rng);
        CHECK(validate(cone(s.h)).ok);
        CHECK(validate(mapping_torus(s.h)).ok);
        CHECK(validate(gamma(s.h, ChainMap::identity(s.c))).ok);
        CHECK(validate(attach_elementary(s.c, rng.range(-1, 3), static_cast<std::size_t>(rng.range(0, 2))).result).ok);
        const BasedComplex x = random_complex(rng, 2, 3, 2, 3);
        CHECK(validate(cone(ChainMap::scalar(x, random_poly(rng, 2, 2, 1)))).ok);
    }
}

TEST_CASE("cone to cokernel") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        const BasedComplex c = random_complex(rng, 1, 3, 2, 3), b = random_complex(rng, 1, 3, 2, 3);
        const BasedComplex s = direct_sum(c, b);
        // Inclusion of the first summand.
        ChainMap inc = ChainMap::zero(c, s);
        for (int k = s.lo(); k <= s.hi(); ++k) {
            MatrixLP m = zero_matrix(s.rank(k), c.rank(k), 1);
            if (!m.empty()) m.set_block(0, 0, identity_matrix(c.rank(k), 1));
            inc.set(k, m);
        }
        REQUIRE(is_chain_map(inc));
        const CokerComparison cc = cone_vs_coker(inc);
        CHECK(is_chain_map(cc.projection));
        CHECK(validate(cc.coker).ok);
        CHECK(cc.verdict.quasi_iso);
        CHECK(cc.verdict.exact);
        for (int k = s.lo(); k <= s.hi(); ++k) CHECK(cc.coker.rank(k) == b.rank(k));
    }
    const BasedComplex r = make_complex(1, 0, {1});
    CHECK_THROWS_AS(cone_vs_coker(ChainMap::zero(r, r)), ConstructionError);
    CHECK_NOTHROW(cone_vs_coker(ChainMap::zero(make_complex(1, 0, {0}), r)));
    CHECK_THROWS_AS(cone_vs_coker(ChainMap::scalar(r, P("1 - x1", 1))), ConstructionError);
}

TEST_CASE("double cone equals the totalization") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const ComposableTriple tr = random_triple(rng, static_cast<std::size_t>(rng.range(1, 2)), 2);
        REQUIRE(is_chain_map(tr.f));
        REQUIRE(is_chain_map(tr.g));
        const DoubleCone dc = double_cone(tr.f, tr.g);
        CHECK(dc.equal);
        CHECK(dc.iterated == dc.total);
        CHECK(validate(dc.total).ok);
    }
    // f = g = 0: both sides are C[2] ⊕ B[1] ⊕ A.
    const BasedComplex c = two_term(1, P("1 - x1", 1)), b = example_square(1), a = make_complex(1, 0, {2});
    const DoubleCone z = double_cone(ChainMap::zero(c, b), ChainMap::zero(b, a));
    CHECK(z.equal);
    CHECK(z.total == direct_sum(suspend(c, 2), direct_sum(suspend(b, 1), a)));
    // g f != 0 is refused.
    const BasedComplex r = make_complex(1, 0, {1});
    CHECK_THROWS_AS(double_cone(ChainMap::identity(r), ChainMap::identity(r)), ConstructionError);
}

TEST_CASE("split short exact sequences give quasi-isomorphisms") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(99);
    for (int t = 0; t < 30; ++t) {
        const ShortExact ses = random_split_ses(rng, 1, 2);
        REQUIRE(is_chain_map(ses.f));
        REQUIRE(is_chain_map(ses.g));
        const ChainMap gf = compose(ses.g, ses.f);
        CHECK(gf == ChainMap::zero(ses.f.source, ses.g.target));
        const ChainMap mu = double_cone_map(ses.f, ses.g);
        CHECK(is_chain_map(mu));
        const QuasiIsoVerdict v = is_quasi_iso(mu);
        CHECK(v.exact);
        CHECK(v.quasi_iso);
    }
}

TEST_CASE("gamma fixtures") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        const BasedComplex z = random_complex(rng, 1, 3, 2, 3);
        const BasedComplex zero = make_complex(1, z.lo(), {});
        CHECK(trimmed(gamma(ChainMap::zero(z, zero), ChainMap::zero(zero, zero))) == trimmed(z));
        CHECK(trimmed(gamma(ChainMap::zero(zero, zero), ChainMap::zero(z, zero))) == trimmed(z));
        const ChainMap id = ChainMap::identity(z);
        const ChainMap diag = gamma_diagonal(z);
        CHECK(is_chain_map(diag));
        CHECK(diag.target == gamma(id, id));
        const QuasiIsoVerdict v = is_quasi_iso(diag);
        CHECK(v.exact);
        CHECK(v.quasi_iso);
    }
    const BasedComplex e = make_complex(1, 0, {});
    CHECK(gamma(ChainMap::zero(e, e), ChainMap::zero(e, e)).is_zero_complex());
    const BasedComplex r = make_complex(1, 0, {1}), r2 = make_complex(1, 0, {2});
    CHECK_THROWS_AS(gamma(ChainMap::zero(r, r), ChainMap::zero(r, r2)), ConstructionError);
}

TEST_CASE("mapping torus examples") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex f = make_complex(0, 0, {1});
    const BasedComplex t1 = mapping_torus(ChainMap::identity(f));
    CHECK(nvars_of(t1) == 1);
    CHECK(t1.d(1) == one_by_one(P("1 - x1", 1)));
    const BasedComplex t0 = mapping_torus(ChainMap::zero(f, f));
    CHECK(t0.d(1) == one_by_one(P("-x1", 1)));
    const Decision d = acyclicity_decide(t0, Direction(1, 0, Sign::Plus));
    CHECK(d.verdict == Verdict::Acyclic);
    REQUIRE(d.contraction);
    CHECK(d.contraction->at(0)(0, 0) == LocalizedElement(P("-x1^-1", 1)));
    CHECK(is_acyclic(t0).quasi_iso);

    const BasedComplex c = make_complex(0, 0, {2, 3});
    const BasedComplex t = mapping_torus(ChainMap::zero(c, c));
    CHECK(t.lo() == 0);
    CHECK(t.rank(0) == 2);
    CHECK(t.rank(1) == 5);
    CHECK(t.rank(2) == 3);
}

TEST_CASE("torus maps are functorial") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(41);
    for (int t = 0; t < 30; ++t) {
        const SelfMap s = random_self_map(rng);
        CHECK(maps_equal_identity(torus_map(ChainMap::identity(s.c), s.h, s.h)));
        // Powers of h commute with h.
        const ChainMap a = s.h, b = compose(s.h, s.h);
        const ChainMap as = torus_map(a, s.h, s.h), bs = torus_map(b, s.h, s.h);
        CHECK(is_chain_map(as));
        CHECK(compose(bs, as) == torus_map(compose(b, a), s.h, s.h));
        // An isomorphism alpha = 2 id induces a quasi-isomorphism.
        const ChainMap two = ChainMap::scalar(s.c, LaurentPoly(0, Scalar(2)));
        const QuasiIsoVerdict v = is_quasi_iso(torus_map(two, s.h, s.h));
        CHECK(v.exact);
        CHECK(v.quasi_iso);
    }
    const SelfMap s = random_self_map(rng);
    const ChainMap bad = ChainMap::scalar(s.c, LaurentPoly(0, Scalar(2)));
    if (!(compose(s.h, bad) == compose(bad, s.h))) {
        CHECK_THROWS_AS(torus_map(ChainMap::identity(s.c), s.h, bad), ConstructionError);
    }
}

TEST_CASE("torus self homotopy") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex f = make_complex(0, 0, {1});
    for (const ChainMap& h : {ChainMap::identity(f), ChainMap::zero(f, f)}) {
        const ChainHomotopy s = torus_self_homotopy(h);
        CHECK(is_homotopy(s, torus_self_map(h), torus_variable(h)));
        // 2x2 block check: T(h)_1 = C_0, T(h)_0 = C_0, d = h - x, s_0 = 1.
        CHECK(s.at(0) == one_by_one(P("1", 1)));
    }
    Rng rng(55);
    for (int t = 0; t < 60; ++t) {
        const SelfMap sm = random_self_map(rng);
        CHECK(is_homotopy(torus_self_homotopy(sm.h), torus_self_map(sm.h), torus_variable(sm.h)));
    }
}

TEST_CASE("homotopic maps have isomorphic tori") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(66);
    for (int t = 0; t < 40; ++t) {
        const SelfMap s = random_self_map(rng);
        const TorusIso same = torus_homotopy_iso(ChainHomotopy::zero(s.c, s.c), s.h, s.h);
        CHECK(maps_equal_identity(same.forward));
        const ChainHomotopy a = random_homotopy(rng, s.c, s.c, 1, 0);
        const ChainMap g = s.h - add_boundary(ChainMap::zero(s.c, s.c), a);  // h - g = dA + Ad
        REQUIRE(is_homotopy(a, s.h, g));
        const TorusIso iso = torus_homotopy_iso(a, s.h, g);
        CHECK(is_chain_map(iso.forward));
        CHECK(is_chain_map(iso.backward));
        CHECK(maps_equal_identity(compose(iso.backward, iso.forward)));
        CHECK(maps_equal_identity(compose(iso.forward, iso.backward)));
        CHECK(is_homotopy(torus_self_homotopy(g), torus_self_map(g), torus_variable(g)));
    }
    const SelfMap s = random_self_map(rng);
    const ChainHomotopy a = random_homotopy(rng, s.c, s.c, 1, 0);
    if (!is_homotopy(a, s.h, s.h)) CHECK_THROWS_AS(torus_homotopy_iso(a, s.h, s.h), ConstructionError);
}

TEST_CASE("mather trick") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(1);
    const BasedComplex c = random_field_complex(rng, 3, 2);
    const ChainMap id = ChainMap::identity(c);
    const MatherMaps m = mather(id, id);
    CHECK(maps_equal_identity(m.f_star));
    CHECK(maps_equal_identity(m.g_star));
    CHECK(m.composition_ok);

    const ChainMap two = ChainMap::scalar(c, LaurentPoly(0, Scalar(2)));
    const ChainMap half = ChainMap::scalar(c, LaurentPoly(0, Scalar(1) / Scalar(2)));
    const MatherMaps inv = mather(two, half);
    CHECK(maps_equal_identity(compose(inv.g_star, inv.f_star)));
    CHECK(maps_equal_identity(compose(inv.f_star, inv.g_star)));

    for (int t = 0; t < 30; ++t) {
        const BasedComplex x = random_field_complex(rng, 3, 2), y = random_field_complex(rng, 3, 2);
        const ChainMap f = random_field_chain_map(rng, x, y), g = random_field_chain_map(rng, y, x);
        const MatherMaps mm = mather(f, g);
        CHECK(mm.composition_ok);
        CHECK(compose(mm.g_star, mm.f_star) == torus_self_map(compose(g, f)));
        const QuasiIsoVerdict v = is_quasi_iso(mm.f_star);
        CHECK(v.exact);
        CHECK(v.quasi_iso);
    }
}

TEST_CASE("attaching elementary complexes") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex sq = example_square(2);
    CHECK(attach_elementary(sq, 0, 0).result == sq);
    const Stabilization st = attach_elementary(sq, 1, 2);
    CHECK(st.result.rank(1) == sq.rank(1) + 2);
    CHECK(st.result.rank(2) == sq.rank(2) + 2);
    CHECK(validate(st.result).ok);
    CHECK(is_chain_map(st.inclusion));
    CHECK(is_chain_map(st.projection));
    CHECK(maps_equal_identity(compose(st.projection, st.inclusion)));
    CHECK(is_homotopy(st.homotopy, ChainMap::identity(st.result), compose(st.inclusion, st.projection)));
    for (std::size_t j = 0; j < 2; ++j)
        for (Sign sg : {Sign::Plus, Sign::Minus}) {
            const Direction d(2, j, sg);
            CHECK(acyclicity_decide(st.result, d).verdict == acyclicity_decide(sq, d).verdict);
        }

    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const KnownInstance inst = random_known(rng.next(), Profile{});
        const Stabilization s = attach_elementary(inst.complex, rng.range(0, 3), 1);
        const HomologyReport a = homology_pid(inst.complex), b = homology_pid(s.result);
        for (const auto& d : b.degrees) {
            const DegreeHomology* x = a.at(d.degree);
            CHECK(d.free_rank == (x ? x->free_rank : 0));
            CHECK(d.torsion == (x ? x->torsion : std::vector<LaurentPoly>{}));
        }
    }
}

TEST_CASE("exact sequence elements") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const std::vector<LaurentPoly> m = {P("1 + x1", 1), P("x1^-1", 1)};
    Tensor b = Tensor::zero(2);
    b.add(3, m);
    const auto e = ses_epsilon(b);
    CHECK(e[0] == P("(1 + x1)*x1^3", 1));
    CHECK(e[1] == P("x1^2", 1));

    // b1 = m ⊗ x - m x ⊗ 1 has preimage -(m ⊗ 1).
    Tensor b1 = Tensor::zero(2);
    b1.add(1, m);
    b1.add(0, {-(m[0] * P("x1", 1)), -(m[1] * P("x1", 1))});
    const SesDiagnostics d = ses_elements(b1);
    CHECK(d.in_kernel);
    CHECK(d.verified);
    Tensor expect = Tensor::zero(2);
    expect.add(0, {-m[0], -m[1]});
    CHECK(d.preimage == expect);
    CHECK(ses_delta(d.preimage) == b1);

    CHECK_FALSE(ses_elements(b).in_kernel);
}

TEST_CASE("exact sequence properties") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(17);
    const LaurentPoly x = P("x1", 1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rank = static_cast<std::size_t>(rng.range(1, 3));
        Tensor b = Tensor::zero(rank);
        const int parts = rng.range(0, 4);
        for (int p = 0; p < parts; ++p) {
            std::vector<LaurentPoly> m;
            for (std::size_t i = 0; i < rank; ++i) m.push_back(random_poly(rng, 1, 2, 2));
            b.add(rng.range(-6, 6), m);
        }
        // ε ∘ δ = 0.
        for (const auto& v : ses_epsilon(ses_delta(b))) CHECK(v.is_zero());
        // Every kernel element m ⊗ t^k - m x^k ⊗ 1 lifts.
        std::vector<LaurentPoly> m;
        for (std::size_t i = 0; i < rank; ++i) m.push_back(random_poly(rng, 1, 2, 2));
        const int k = rng.range(-6, 6);
        Tensor kern = Tensor::zero(rank);
        kern.add(k, m);
        std::vector<LaurentPoly> shifted;
        for (const auto& v : m) shifted.push_back(-(v * (k >= 0 ? x.pow(static_cast<unsigned>(k)) : P("x1^-1", 1).pow(static_cast<unsigned>(-k)))));
        kern.add(0, shifted);
        const SesDiagnostics d = ses_elements(kern);
        CHECK(d.in_kernel);
        CHECK(d.verified);
        CHECK(ses_delta(d.preimage) == kern);
    }
}
