#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "findom/complex.hpp"
#include "findom/constructions.hpp"

namespace findom {

/// Iterated cone K_1 = Cone(1 - x1), K_i = Cone((1 - x1...x_i) * id on
/// K_{i-1}); for n = 2 the totalized square of (1 - x1x2) and (1 - x1).
BasedComplex example_square(std::size_t n);

/// Deterministic generator: std::mt19937_64 plus explicit modular
/// reduction, so draws do not depend on the standard library's
/// distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi].
    int range(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(next() % span);
    }
    bool chance(int percent) { return range(0, 99) < percent; }

   private:
    std::mt19937_64 engine_;
};

/// Random Laurent polynomial: `terms` attempts, exponents in [-span, span],
/// coefficients in [-3, 3].
LaurentPoly random_poly(Rng& rng, std::size_t nvars, int terms, int span);
/// Random polynomial in the nonnegative range [0, span] with a nonzero
/// constant term and at least two terms (a non-unit of F[x^±] for n = 1).
LaurentPoly random_nonunit(Rng& rng, std::size_t nvars, int span);

struct Profile {
    std::string name = "default";
    std::size_t nvars = 1;
    int lo = 0;
    int degrees = 5;            // number of degrees lo .. lo+degrees-1
    std::size_t max_rank = 6;   // per degree
    int elementary = -1;        // -1: drawn per seed
    int free_summands = -1;
    int torsion_summands = -1;  // only for nvars == 1
    int twists = -1;            // -1: twice the total rank
    int twist_terms = 2;
    int twist_span = 1;
};

/// Named profiles: default, acyclic, free, torsion, mixed2.
Profile profile_by_name(const std::string& name, std::size_t nvars = 1);
std::vector<std::string> profile_names();

struct GroundTruth {
    int lo = 0;
    /// Rank of the free part of H_k (zero-differential summands).
    std::vector<std::size_t> free_rank;
    /// Nonunit torsion presentations d = [p] per degree (n = 1 only).
    std::vector<std::vector<LaurentPoly>> torsion;
    bool acyclic = true;
    bool finitely_dominated = true;
};

struct KnownInstance {
    BasedComplex complex;
    GroundTruth truth;
};

/// Direct sum of elementary (d = 1), zero-differential and (n = 1) torsion
/// summands, conjugated by elementary basis changes.
KnownInstance random_known(std::uint64_t seed, const Profile& profile);

/// Random bounded complex over F (n = 0) with ranks <= max_rank.
BasedComplex random_field_complex(Rng& rng, int degrees, std::size_t max_rank);
/// Random chain map C -> D over F (n = 0), solving the chain-map equations.
ChainMap random_field_chain_map(Rng& rng, const BasedComplex& c, const BasedComplex& d);
/// Random degree +1 map C -> D.
ChainHomotopy random_homotopy(Rng& rng, const BasedComplex& c, const BasedComplex& d, int terms, int span);

/// Conjugates degree k by P = 1 + p e_i e_j^T.
BasedComplex twist(const BasedComplex& c, int k, std::size_t i, std::size_t j, const LaurentPoly& p);

/// Random valid twofold complex: X ⊗ Y of two random complexes, then each
/// cell conjugated by random elementary automorphisms.
TwofoldComplex random_twofold(Rng& rng, std::size_t nvars, int p_lo, int p_hi, int q_lo, int q_hi,
                              std::size_t max_rank);

/// f : C -> B, g : B -> A with g f = 0 (columns 2, 1, 0 of a random grid).
struct ComposableTriple {
    ChainMap f, g;
};
ComposableTriple random_triple(Rng& rng, std::size_t nvars, std::size_t max_rank);

/// Degreewise split 0 -> C -> B -> A -> 0 with a random gluing and a random
/// basis change of B.
struct ShortExact {
    ChainMap f, g;
};
ShortExact random_split_ses(Rng& rng, std::size_t nvars, std::size_t max_rank);

/// Random acyclic-or-not complex over R_n used as building block.
BasedComplex random_complex(Rng& rng, std::size_t nvars, int degrees, std::size_t max_rank, int twists);

/// Kronecker product of matrices.
MatrixLP kronecker(const MatrixLP& a, const MatrixLP& b);

}  // namespace findom
