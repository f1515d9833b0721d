#pragma once

#include <random>
#include <vector>
#include <string>

#include "findom/laurent.hpp"
#include "findom/matrix.hpp"
#include "findom/parse.hpp"

namespace findom::test {

inline LaurentPoly P(const std::string& s, std::size_t nvars) { return parse_poly(s, nvars); }

/// Random Laurent polynomial with up to `terms` terms, exponents in
/// [-span, span].
inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, int span) {
    std::uniform_int_distribution<int> nt(0, terms), ex(-span, span), co(-5, 5);
    std::vector<Term> ts;
    const int k = nt(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m.set(i, ex(rng));
        ts.push_back({m, Scalar(co(rng))});
    }
    return LaurentPoly::from_terms(nvars, std::move(ts));
}

/// Schoolbook product through a dense exponent grid (independent of the
/// sparse multiplication kernel).
inline LaurentPoly dense_product(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t n = a.nvars();
    if (a.is_zero() || b.is_zero()) return LaurentPoly(n);
    std::vector<int> lo(n), width(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = a.min_degree(i) + b.min_degree(i);
        width[i] = a.max_degree(i) + b.max_degree(i) - lo[i] + 1;
    }
    std::size_t cells = 1;
    for (int w : width) cells *= static_cast<std::size_t>(w);
    std::vector<Scalar> grid(cells, Scalar(0));
    auto index = [&](const Monomial& m) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx = idx * static_cast<std::size_t>(width[i]) + static_cast<std::size_t>(m[i] - lo[i]);
        return idx;
    };
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m.set(i, s.mono[i] + t.mono[i]);
            grid[index(m)] += s.coeff * t.coeff;
        }
    std::vector<Term> out;
    for (std::size_t idx = 0; idx < cells; ++idx) {
        if (grid[idx].is_zero()) continue;
        Monomial m(n);
        std::size_t r = idx;
        for (std::size_t i = n; i-- > 0;) {
            m.set(i, static_cast<int>(r % static_cast<std::size_t>(width[i])) + lo[i]);
            r /= static_cast<std::size_t>(width[i]);
        }
        out.push_back({m, grid[idx]});
    }
    return LaurentPoly::from_terms(n, std::move(out));
}

/// Laplace expansion; fine for the small sizes used in tests.
inline LaurentPoly det_laplace(const MatrixLP& m) {
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(m.zero().nvars(), Scalar(1));
    if (n == 1) return m(0, 0);
    LaurentPoly acc(m.zero().nvars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        const LaurentPoly term = m(0, j) * det_laplace(m.without(0, j));
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

/// Row echelon rank over the field.
inline std::size_t scalar_rank(std::vector<std::vector<Scalar>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c].is_zero()) continue;
            const Scalar f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Constant entries of an n = 0 matrix.
inline std::vector<std::vector<Scalar>> constants(const MatrixLP& m) {
    std::vector<std::vector<Scalar>> out(m.rows(), std::vector<Scalar>(m.cols(), Scalar(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).constant_term();
    return out;
}

/// Columns spanning the kernel of an n = 0 matrix.
inline MatrixLP kernel_basis(const MatrixLP& m) {
    auto a = constants(m);
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const Scalar inv = a[r][c].inverse();
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Scalar f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    MatrixLP out = zero_matrix(cols, basis.size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < cols; ++i) out(i, j) = LaurentPoly(0, basis[j][i]);
    return out;
}

/// [a | b] side by side.
inline MatrixLP hconcat(const MatrixLP& a, const MatrixLP& b) {
    MatrixLP m = zero_matrix(a.rows(), a.cols() + b.cols(), a.zero().nvars());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

}  // namespace findom::test
