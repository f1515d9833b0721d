#include "doctest.h"
#include "findom/corpus.hpp"
#include "findom/homology.hpp"
#include "findom/io.hpp"
#include "test_util.hpp"

using namespace findom;
using findom::test::P;

namespace {

std::size_t span_of(const LaurentPoly& p) { return static_cast<std::size_t>(p.max_degree(0) - p.min_degree(0)); }

}  // namespace

TEST_CASE("canonical squares") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    for (std::size_t n = 1; n <= 4; ++n) {
        const BasedComplex c = example_square(n);
        CHECK(validate(c).ok);
        CHECK(nvars_of(c) == n);
        CHECK(c.total_rank() == (std::size_t{1} << n));
        const GenericRanks g = generic_ranks(c);
        CHECK_FALSE(g.first_nonzero());
    }
    CHECK(example_square(1).d(1).rows() == 1);
    CHECK(example_square(1).d(1)(0, 0) == P("1 - x1", 1));
}

TEST_CASE("profiles") {
    for (const std::string& name : profile_names()) {
        const std::size_t n = name == "mixed2" ? 2 : 1;
        const Profile p = profile_by_name(name, n);
        CHECK(p.nvars == n);
    }
    CHECK_THROWS_AS(profile_by_name("nope"), std::invalid_argument);
    CHECK_THROWS_AS(profile_by_name("torsion", 2), std::invalid_argument);
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CHECK(random_known(seed, profile_by_name("acyclic")).truth.acyclic);
        CHECK_FALSE(random_known(seed, profile_by_name("free")).truth.finitely_dominated);
        const KnownInstance t = random_known(seed, profile_by_name("torsion"));
        CHECK(t.truth.finitely_dominated);
        CHECK_FALSE(t.truth.acyclic);
    }
}

TEST_CASE("generation is deterministic and bounded") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Profile p;
        const KnownInstance a = random_known(seed, p), b = random_known(seed, p);
        CHECK(a.complex == b.complex);
        CHECK(write_complex_string(a.complex) == write_complex_string(b.complex));
        CHECK(validate(a.complex).ok);
        CHECK(a.complex.lo() == p.lo);
        for (int k = a.complex.lo(); k <= a.complex.hi(); ++k) CHECK(a.complex.rank(k) <= p.max_rank);
    }
    CHECK_FALSE(random_known(1, Profile{}).complex == random_known(2, Profile{}).complex);
}

TEST_CASE("ground truth matches both homology engines") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const KnownInstance inst = random_known(seed, Profile{});
        const GroundTruth& t = inst.truth;
        const HomologyReport pid = homology_pid(inst.complex);
        const GenericRanks g = generic_ranks(inst.complex);
        bool acyclic = true, fd = true;
        for (int k = inst.complex.lo(); k <= inst.complex.hi(); ++k) {
            const std::size_t i = static_cast<std::size_t>(k - t.lo);
            const DegreeHomology* h = pid.at(k);
            const std::size_t free = h ? h->free_rank : 0;
            CHECK(free == t.free_rank[i]);
            CHECK(g.homology(k) == t.free_rank[i]);
            const std::vector<LaurentPoly> tors = h ? h->torsion : std::vector<LaurentPoly>{};
            // Coprime summands merge into one invariant factor, so compare dimensions.
            std::size_t dim = 0, expect = 0;
            for (const auto& p : tors) dim += span_of(p);
            for (const auto& p : t.torsion[i]) expect += span_of(p);
            CHECK(dim == expect);
            if (free) fd = false;
            if (free || !tors.empty()) acyclic = false;
        }
        CHECK(acyclic == t.acyclic);
        CHECK(fd == t.finitely_dominated);
    }
}

TEST_CASE("random field maps are chain maps") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    Rng rng(5150);
    int nonzero = 0;
    for (int t = 0; t < 50; ++t) {
        const BasedComplex c = random_field_complex(rng, 3, 3), d = random_field_complex(rng, 3, 3);
        CHECK(nvars_of(c) == 0);
        const ChainMap f = random_field_chain_map(rng, c, d);
        CHECK(is_chain_map(f));
        if (!(f == ChainMap::zero(c, d))) ++nonzero;
    }
    CHECK(nonzero > 25);
}
