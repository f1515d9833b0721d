#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findom/complex.hpp"
#include "findom/homology.hpp"
#include "findom/novikov.hpp"

namespace findom {

enum class FDVerdict { FinitelyDominated, NotFinitelyDominated, Inconclusive };
std::string to_string(FDVerdict v);

/// All Acyclic -> FinitelyDominated; any NotAcyclic -> NotFinitelyDominated.
FDVerdict aggregate(const std::vector<Decision>& decisions);

/// Acyclicity of C ⊗ F(z_j) for one j (field criterion).
struct FieldCheck {
    std::size_t var = 0;  // 0-based z_j
    Verdict verdict = Verdict::Inconclusive;
    HomologyEngine engine = HomologyEngine::Generic;
    std::string method;   // "generic-rank", "snf", "reduction"
    int witness_degree = 0;
};

struct FDReport {
    FDVerdict verdict = FDVerdict::Inconclusive;
    std::string method;                // "ranicki", "novikov", "all-orders", "field"
    std::vector<std::size_t> ordering;  // 0-based
    std::vector<Decision> decisions;
    std::vector<FieldCheck> field_checks;
    /// Homology-side verdict (n = 1: every H_k has free rank 0).
    std::optional<FDVerdict> oracle;
    /// Novikov and oracle verdicts are both conclusive and differ, or some
    /// ordering certifies while another refutes.
    bool defect = false;
    /// all-orders mode: one report per ordering, in lexicographic order.
    std::vector<FDReport> per_ordering;

    /// Structured text with a fixed field order.
    std::string to_string() const;
};

/// Both directions (1,+), (1,-) plus the SNF finite-dimensionality check.
FDReport ranicki_1var(const BasedComplex& c);
/// For j = n .. 1 under the ordering, directions (j,+) and (j,-).
FDReport findom_main(const BasedComplex& c, const std::vector<std::size_t>& ordering);
FDReport findom_main(const BasedComplex& c);
/// Runs findom_main over every ordering (n <= max_vars).
FDReport findom_all_orders(const BasedComplex& c, std::size_t max_vars = 4);
/// Acyclicity of every C ⊗_{F[z_j^±]} F(z_j).
FDReport field_findom(const BasedComplex& c);

/// Worker count for concurrent decisions: FINDOM_THREADS if set, else the
/// hardware concurrency.
unsigned default_threads();

}  // namespace findom
