#include "findom/homology.hpp"

#include <algorithm>
#include <sstream>

#include "findom/constructions.hpp"
#include "findom/reduction.hpp"

namespace findom {

std::size_t generic_rank(const MatrixLP& m) {
    if (m.empty()) return 0;
    MatrixLP a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t n = m.zero().nvars();
    LaurentPoly prev(n, Scalar(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Smallest nonzero entry in the column as pivot (controls growth).
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a(i, c).is_zero() && (piv == rows || a(i, c).size() < a(piv, c).size())) piv = i;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        const LaurentPoly p = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const LaurentPoly q = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentPoly v = p * a(i, j);
                if (!q.is_zero() && !a(r, j).is_zero()) v -= q * a(r, j);
                if (v.is_zero() || prev.is_one()) {
                    a(i, j) = std::move(v);
                    continue;
                }
                auto quo = v.try_divide(prev);
                if (!quo) throw ArithmeticError("fraction-free elimination lost exactness");
                a(i, j) = std::move(*quo);
            }
            a(i, c) = LaurentPoly(n);
        }
        prev = p;
        ++r;
    }
    return r;
}

std::size_t GenericRanks::rank_of_d(int k) const {
    if (k < lo || k >= lo + static_cast<int>(d_rank.size())) return 0;
    return d_rank[static_cast<std::size_t>(k - lo)];
}

std::size_t GenericRanks::homology(int k) const {
    if (k < lo || k >= lo + static_cast<int>(homology_rank.size())) return 0;
    return homology_rank[static_cast<std::size_t>(k - lo)];
}

std::optional<int> GenericRanks::first_nonzero() const {
    for (std::size_t i = 0; i < homology_rank.size(); ++i)
        if (homology_rank[i] != 0) return lo + static_cast<int>(i);
    return std::nullopt;
}

GenericRanks generic_ranks(const BasedComplex& c) {
    GenericRanks g;
    g.lo = c.lo();
    for (int k = c.lo(); k <= c.hi(); ++k) g.d_rank.push_back(generic_rank(c.d(k)));
    for (int k = c.lo(); k <= c.hi(); ++k)
        g.homology_rank.push_back(c.rank(k) - g.rank_of_d(k) - g.rank_of_d(k + 1));
    return g;
}

// ---------------------------------------------------------------------------

Matrix<ULaurent<Scalar>> to_dense(const MatrixLP& m) {
    if (m.zero().nvars() != 1) throw DimensionError("one-variable Laurent matrix required");
    return m.map([](const LaurentPoly& f) { return to_ulaurent(f); });
}

MatrixLP from_dense(const Matrix<ULaurent<Scalar>>& m) {
    MatrixLP out = zero_matrix(m.rows(), m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = from_ulaurent(m(i, j));
    return out;
}

SNFResult snf(const MatrixLP& m) {
    if (m.zero().nvars() != 1) throw DimensionError("snf requires exactly one variable");
    SnfData<Scalar> s = smith_form(to_dense(m));
    SNFResult r{from_dense(s.u), from_dense(s.u_inv), from_dense(s.d), from_dense(s.v), from_dense(s.v_inv), {}};
    for (const auto& e : s.factors) r.factors.push_back(from_ulaurent(e));
    return r;
}

std::string to_string(HomologyEngine e) {
    switch (e) {
        case HomologyEngine::Field: return "field";
        case HomologyEngine::PID: return "pid";
        case HomologyEngine::Generic: return "generic";
    }
    return "?";
}

bool HomologyReport::is_zero() const {
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const DegreeHomology& d) { return d.free_rank == 0 && d.torsion.empty(); });
}

const DegreeHomology* HomologyReport::at(int k) const {
    for (const auto& d : degrees)
        if (d.degree == k) return &d;
    return nullptr;
}

std::string HomologyReport::to_string(std::span<const std::string> names) const {
    std::ostringstream os;
    os << "engine " << findom::to_string(engine) << "\n";
    for (const auto& d : degrees) {
        os << "H" << d.degree << ": free " << d.free_rank;
        if (engine == HomologyEngine::PID) {
            os << " torsion [";
            for (std::size_t i = 0; i < d.torsion.size(); ++i)
                os << (i ? ", " : "") << d.torsion[i].to_string(names);
            os << "] dimF " << (d.dim_f ? std::to_string(*d.dim_f) : "inf");
        }
        os << "\n";
    }
    return os.str();
}

HomologyReport homology_pid(const BasedComplex& c) {
    if (nvars_of(c) != 1) throw DimensionError("homology_pid requires exactly one variable");
    HomologyReport rep;
    rep.engine = HomologyEngine::PID;
    std::vector<SNFResult> forms;
    for (int k = c.lo(); k <= c.hi() + 1; ++k) forms.push_back(snf(c.d(k)));
    auto form = [&](int k) -> const SNFResult& { return forms[static_cast<std::size_t>(k - c.lo())]; };
    for (int k = c.lo(); k <= c.hi(); ++k) {
        DegreeHomology h;
        h.degree = k;
        h.free_rank = c.rank(k) - form(k).rank() - form(k + 1).rank();
        std::size_t dim = 0;
        for (const auto& e : form(k + 1).factors) {
            if (e.is_one()) continue;
            h.torsion.push_back(e);
            dim += static_cast<std::size_t>(e.max_degree(0));
        }
        if (h.free_rank == 0) h.dim_f = dim;
        rep.degrees.push_back(std::move(h));
    }
    return rep;
}

namespace {

HomologyReport betti_report(const BasedComplex& c, HomologyEngine engine) {
    HomologyReport rep;
    rep.engine = engine;
    GenericRanks g = generic_ranks(c);
    for (int k = c.lo(); k <= c.hi(); ++k) {
        DegreeHomology h;
        h.degree = k;
        h.free_rank = g.homology(k);
        if (engine == HomologyEngine::Field) h.dim_f = h.free_rank;
        rep.degrees.push_back(std::move(h));
    }
    return rep;
}

}  // namespace

HomologyReport homology_field(const BasedComplex& c) {
    if (nvars_of(c) != 0) throw DimensionError("homology_field requires a complex over the base field");
    return betti_report(c, HomologyEngine::Field);
}

HomologyReport homology_generic(const BasedComplex& c) { return betti_report(c, HomologyEngine::Generic); }

std::optional<std::vector<LaurentPoly>> solve_in_image(const MatrixLP& m, const std::vector<LaurentPoly>& v) {
    if (v.size() != m.rows()) throw DimensionError("vector length does not match the matrix");
    // m = U D V, so m w = v iff D (V w) = U^-1 v.
    SNFResult s = snf(m);
    MatrixLP col = zero_matrix(v.size(), 1, 1);
    for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
    MatrixLP y = s.u_inv * col;
    MatrixLP z = zero_matrix(m.cols(), 1, 1);
    for (std::size_t i = 0; i < y.rows(); ++i) {
        if (i >= s.rank()) {
            if (!y(i, 0).is_zero()) return std::nullopt;
            continue;
        }
        auto q = y(i, 0).try_divide(s.factors[i]);
        if (!q) return std::nullopt;
        z(i, 0) = *q;
    }
    MatrixLP w = s.v_inv * z;
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < w.rows(); ++i) out.push_back(w(i, 0));
    return out;
}

// ---------------------------------------------------------------------------

BasedComplex monomial_reduction(const BasedComplex& c) {
    const std::size_t n = nvars_of(c);
    auto red = reduce_units(
        c, LaurentPoly(n, Scalar(1)), [](const LaurentPoly& e) { return e.is_monomial(); },
        [](const LaurentPoly& e) {
            const Term& t = e.lex_trailing();
            return LaurentPoly::monomial(t.mono.inverse(), t.coeff.inverse());
        },
        [](const LaurentPoly& e) { return e.size(); }, false);
    return red.reduced;
}

QuasiIsoVerdict is_acyclic(const BasedComplex& c) {
    const std::size_t n = nvars_of(c);
    if (n == 0) return {homology_field(c).is_zero(), true, HomologyEngine::Field};
    if (n == 1) return {homology_pid(c).is_zero(), true, HomologyEngine::PID};
    GenericRanks g = generic_ranks(c);
    if (g.first_nonzero()) return {false, true, HomologyEngine::Generic};
    // Generic exactness is necessary; a complete monomial-pivot reduction
    // proves contractibility over R_n itself.
    if (monomial_reduction(c).is_zero_complex()) return {true, true, HomologyEngine::Generic};
    return {true, false, HomologyEngine::Generic};
}

QuasiIsoVerdict is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f)); }

// ---------------------------------------------------------------------------

CharPolyResult char_poly_action(const BasedComplex& c, int k) {
    if (nvars_of(c) != 1) throw DimensionError("char_poly_action requires exactly one variable");
    HomologyReport rep = homology_pid(c);
    const DegreeHomology* hk = rep.at(k);
    if (hk && hk->free_rank != 0) throw ArithmeticError("H_" + std::to_string(k) + " is infinite-dimensional over F");

    CharPolyResult out;
    out.char_poly = Poly<Scalar>(Scalar(1));
    if (!hk || hk->torsion.empty()) {
        out.action = Matrix<Scalar>(0, 0, Scalar(0));
        out.cayley_hamilton = true;
        out.annihilates = true;
        return out;
    }
    const MatrixLP dk1 = c.d(k + 1), dk = c.d(k);
    SNFResult s = snf(dk1);

    // Generators u_i = U e_i for the nonunit factors; companion blocks for x.
    std::vector<std::pair<std::size_t, Poly<Scalar>>> blocks;
    std::size_t dim = 0;
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (s.factors[i].is_one()) continue;
        Poly<Scalar> e = to_ulaurent(s.factors[i]).body();
        blocks.emplace_back(i, e);
        dim += static_cast<std::size_t>(e.degree());
    }
    out.action = Matrix<Scalar>(dim, dim, Scalar(0));
    std::size_t off = 0;
    for (const auto& [i, e] : blocks) {
        const std::size_t m = static_cast<std::size_t>(e.degree());
        // Basis x^a u_i, a = 0..m-1; x * x^{m-1} u_i = -sum e_a x^a u_i.
        for (std::size_t a = 0; a + 1 < m; ++a) out.action(off + a + 1, off + a) = Scalar(1);
        for (std::size_t a = 0; a < m; ++a) out.action(off + a, off + m - 1) = -e.coeff(static_cast<int>(a));
        // det(C - t) for a companion block of the monic e is (-1)^m e(t).
        out.char_poly = out.char_poly * (m % 2 ? -e : e);
        off += m;
    }

    // Cayley-Hamilton: Horner evaluation of p at the action matrix.
    const Matrix<Scalar> id = Matrix<Scalar>::identity(dim, Scalar(0), Scalar(1));
    Matrix<Scalar> acc(dim, dim, Scalar(0));
    const auto& pc = out.char_poly.coeffs();
    for (auto it = pc.rbegin(); it != pc.rend(); ++it) acc = acc * out.action + id.scaled(*it);
    out.cayley_hamilton = acc.is_zero();

    // p(x) u_i = d_{k+1} V^-1 (q e_i) with q = p / e_i.
    LaurentPoly px = from_ulaurent(ULaurent<Scalar>(0, out.char_poly));
    out.annihilates = true;
    for (const auto& [i, e] : blocks) {
        MatrixLP ui = s.u.block(0, i, s.u.rows(), 1);
        std::vector<LaurentPoly> gen;
        for (std::size_t r = 0; r < ui.rows(); ++r) gen.push_back(ui(r, 0));
        out.generators.push_back(gen);
        if (!(dk * ui).is_zero()) out.annihilates = false;
        auto q = px.try_divide(s.factors[i]);
        if (!q) {
            out.annihilates = false;
            continue;
        }
        MatrixLP qe = zero_matrix(dk1.cols(), 1, 1);
        qe(i, 0) = *q;
        if (!(dk1 * (s.v_inv * qe) == ui.scaled(px))) out.annihilates = false;
    }
    return out;
}

}  // namespace findom
