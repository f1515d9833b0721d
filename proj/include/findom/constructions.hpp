#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "findom/complex.hpp"
#include "findom/homology.hpp"

namespace findom {

/// Precondition failure of a construction (non-commuting square, map not
/// injective, ...).
class ConstructionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Cone(f)_k = C_{k-1} ⊕ B_k with d(c, b) = (-∂c, f(c) + ∂b).
BasedComplex cone(const ChainMap& f);

struct CokerComparison {
    BasedComplex coker;
    ChainMap projection;  // Cone(f) -> coker(f)
    QuasiIsoVerdict verdict;
};

/// Natural map Cone(f) -> coker(f) for a split injection f. Throws
/// ConstructionError if f is not injective or has no monomial-pivot
/// complement.
CokerComparison cone_vs_coker(const ChainMap& f);

struct DoubleCone {
    BasedComplex iterated;  // Cone(C[1] -> Cone(g))
    BasedComplex total;     // Tot of the three-column twofold complex
    bool equal = false;
};

/// f : C -> B, g : B -> A with g f = 0.
DoubleCone double_cone(const ChainMap& f, const ChainMap& g);
/// The three-column twofold complex C -> B -> A in columns p = 2, 1, 0.
TwofoldComplex three_column(const ChainMap& f, const ChainMap& g);
/// The chain map C[1] -> Cone(g), c -> (f c, 0).
ChainMap double_cone_map(const ChainMap& f, const ChainMap& g);

/// Γ(Z⁻ → Z ← Z⁺) = Cone(Z⁺ ⊕ Z⁻ → Z)[-1], the map being (g⁺, -g⁻).
BasedComplex gamma(const ChainMap& g_minus, const ChainMap& g_plus);
/// Comparison C -> Γ(C = C = C), c -> (c, c, 0).
ChainMap gamma_diagonal(const BasedComplex& c);

/// T(h) = Cone(h ⊗ 1 - 1 ⊗ x) over R_n[x^±], x the appended variable.
BasedComplex mapping_torus(const ChainMap& h);
/// Multiplication by the torus variable on T(h).
ChainMap torus_variable(const ChainMap& h);
/// α_* : T(f) -> T(g) for a commuting square α f = g α.
ChainMap torus_map(const ChainMap& alpha, const ChainMap& f, const ChainMap& g);
/// h_* = torus_map(h, h, h).
ChainMap torus_self_map(const ChainMap& h);
/// The homotopy (pr_2, 0) between h_* and multiplication by x.
ChainHomotopy torus_self_homotopy(const ChainMap& h);

struct TorusIso {
    ChainMap forward;   // T(h) -> T(g)
    ChainMap backward;  // T(g) -> T(h)
};

/// For ∂A + A∂ = h - g: the isomorphism [[1, 0], [A, 1]] and its inverse.
TorusIso torus_homotopy_iso(const ChainHomotopy& a, const ChainMap& h, const ChainMap& g);

struct MatherMaps {
    ChainMap f_star;  // T(gf) -> T(fg)
    ChainMap g_star;  // T(fg) -> T(gf)
    bool composition_ok = false;  // g_* f_* == (gf)_*
};

MatherMaps mather(const ChainMap& f, const ChainMap& g);

struct Stabilization {
    BasedComplex result;  // C ⊕ (F^r --id--> F^r) in degrees k+1, k
    ChainMap inclusion, projection;
    ChainHomotopy homotopy;  // id - inclusion∘projection = dH + Hd
};

Stabilization attach_elementary(const BasedComplex& c, int k, std::size_t r);

/// Finitely supported element Σ m_k ⊗ t^k of M ⊗_F F[t^±] for a free
/// module M = F[x^±]^rank; t stands for the second tensor factor.
struct Tensor {
    std::size_t rank = 0;
    std::map<int, std::vector<LaurentPoly>> parts;

    static Tensor zero(std::size_t rank);
    void add(int k, const std::vector<LaurentPoly>& m);
    bool operator==(const Tensor& o) const;
};

/// ε(m ⊗ p) = m p.
std::vector<LaurentPoly> ses_epsilon(const Tensor& b);
/// (x ⊗ 1 - 1 ⊗ x)(m ⊗ t^k) = x m ⊗ t^k - m ⊗ t^{k+1}.
Tensor ses_delta(const Tensor& b);

struct SesDiagnostics {
    bool in_kernel = false;
    Tensor preimage;
    bool verified = false;  // delta(preimage) == input
};

/// Splits a kernel element into the summands m_k ⊗ t^k - m_k x^k ⊗ 1 and
/// lifts each by the explicit telescoping formula.
SesDiagnostics ses_elements(const Tensor& b);

}  // namespace findom
