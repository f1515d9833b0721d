#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findom/complex.hpp"
#include "findom/snf.hpp"

namespace findom {

/// Rank over the fraction field F(x_1..x_n), by fraction-free Bareiss
/// elimination with exact division.
std::size_t generic_rank(const MatrixLP& m);

struct GenericRanks {
    int lo = 0;
    std::vector<std::size_t> d_rank;         // rank of d_k, k = lo..hi
    std::vector<std::size_t> homology_rank;  // rank C_k - rank d_k - rank d_{k+1}
    std::size_t rank_of_d(int k) const;
    std::size_t homology(int k) const;
    /// First degree with nonzero generic homology.
    std::optional<int> first_nonzero() const;
};

GenericRanks generic_ranks(const BasedComplex& c);

/// SNF of a matrix over F[x^±] (one variable). Invariant factors are
/// returned as polynomials: monic with lowest exponent 0.
struct SNFResult {
    MatrixLP u, u_inv, d, v, v_inv;  // u * d * v == input
    std::vector<LaurentPoly> factors;
    std::size_t rank() const { return factors.size(); }
};

SNFResult snf(const MatrixLP& m);

Matrix<ULaurent<Scalar>> to_dense(const MatrixLP& m);
MatrixLP from_dense(const Matrix<ULaurent<Scalar>>& m);

enum class HomologyEngine { Field, PID, Generic };
std::string to_string(HomologyEngine e);

struct DegreeHomology {
    int degree = 0;
    std::size_t free_rank = 0;
    std::vector<LaurentPoly> torsion;  // nonunit invariant factors (PID engine)
    /// dim_F H_k; empty when infinite.
    std::optional<std::size_t> dim_f;
};

struct HomologyReport {
    HomologyEngine engine = HomologyEngine::Field;
    std::vector<DegreeHomology> degrees;
    bool is_zero() const;
    const DegreeHomology* at(int k) const;
    std::string to_string(std::span<const std::string> names = {}) const;
};

/// n = 1: H_k = F[x^±]^{r_k} ⊕ ⊕ F[x^±]/(e_i).
HomologyReport homology_pid(const BasedComplex& c);
/// n = 0: Betti numbers over F.
HomologyReport homology_field(const BasedComplex& c);
/// Betti numbers over the fraction field (any n).
HomologyReport homology_generic(const BasedComplex& c);

/// Whether v lies in the column span of m over F[x^±]; on success the
/// preimage w with m * w == v.
std::optional<std::vector<LaurentPoly>> solve_in_image(const MatrixLP& m, const std::vector<LaurentPoly>& v);

struct QuasiIsoVerdict {
    bool quasi_iso = false;
    /// False when the answer rests only on ranks over the fraction field.
    bool exact = true;
    HomologyEngine engine = HomologyEngine::Field;
};

/// Acyclicity of a complex with the strongest engine for its variable count.
QuasiIsoVerdict is_acyclic(const BasedComplex& c);
/// Decides via acyclicity of cone(f).
QuasiIsoVerdict is_quasi_iso(const ChainMap& f);

/// Reduction of a based complex over R_n cancelling pairs along monomial
/// (unit) entries; the result is chain homotopy equivalent.
BasedComplex monomial_reduction(const BasedComplex& c);

/// Action of x on a finite-dimensional H_k with its characteristic
/// polynomial det(f - t*id).
struct CharPolyResult {
    Matrix<Scalar> action;   // x acting on the F-basis x^a u_i
    Poly<Scalar> char_poly;  // in t
    bool cayley_hamilton = false;  // p(f) == 0
    bool annihilates = false;      // p(x) * u_i is a boundary for every generator u_i
    std::vector<std::vector<LaurentPoly>> generators;  // cycles u_i
};

CharPolyResult char_poly_action(const BasedComplex& c, int k);

}  // namespace findom
