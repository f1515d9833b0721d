#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findom/complex.hpp"
#include "findom/localized.hpp"

namespace findom {

using MatrixLoc = Matrix<LocalizedElement>;
using LocComplex = Complex<LocalizedElement>;

enum class Verdict { Acyclic, NotAcyclic, Inconclusive };
std::string to_string(Verdict v);

/// s_k : C_k -> C_{k+1} for k = lo .. hi, with d s + s d = id.
struct Contraction {
    int lo = 0;
    std::vector<MatrixLoc> s;

    int hi() const { return lo + static_cast<int>(s.size()) - 1; }
    const MatrixLoc& at(int k) const { return s.at(static_cast<std::size_t>(k - lo)); }
};

struct Decision {
    Direction direction{1, 0, Sign::Plus};
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Contraction> contraction;  // Acyclic
    int witness_degree = 0;                  // NotAcyclic: degree with nonzero generic homology
    std::size_t witness_rank = 0;
    std::optional<LocComplex> stuck;         // Inconclusive: reduced complex without unit entries
    std::size_t pivots = 0;

    /// One line: direction, verdict and payload summary.
    std::string summary() const;
};

/// The entries of C read as fractions with denominator 1.
LocComplex novikov_complex(const BasedComplex& c, const Direction& d);

/// Generic-rank prescreen, then unit-pivot reduction over the localization
/// at direction units (pivot of least support, ties by degree, row, column).
Decision acyclicity_decide(const BasedComplex& c, const Direction& d);

/// d s + s d == id in every degree, with every denominator factor a unit
/// for d. Throws DimensionError when the shapes do not fit C.
bool verify_contraction(const BasedComplex& c, const Direction& d, const Contraction& s);

}  // namespace findom
