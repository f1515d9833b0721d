#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "findom/complex.hpp"

namespace findom {

/// Result of cancelling basis pairs along unit entries. With tracking on,
/// (f, g, h) is a strong deformation retraction of the input onto
/// `reduced`: f g = id and id - g f = d h + h d.
template <class T>
struct Reduction {
    Complex<T> reduced;
    std::size_t pivots = 0;
    bool tracked = false;
    int lo = 0;
    std::vector<Matrix<T>> f;  // f_k : C_k -> reduced_k
    std::vector<Matrix<T>> g;  // g_k : reduced_k -> C_k
    std::vector<Matrix<T>> h;  // h_k : C_k -> C_{k+1}

    const Matrix<T>& h_at(int k) const { return h[static_cast<std::size_t>(k - lo)]; }
};

struct PivotChoice {
    int degree;
    std::size_t row, col, cost;
};

/// Repeatedly picks the unit entry of minimal cost (ties by degree, row,
/// column) and eliminates it by the Gaussian update of the adjacent
/// differentials.
///   is_unit(x) -> bool, inverse(x) -> T, cost(x) -> size_t.
template <class T, class IsUnit, class Inverse, class Cost>
Reduction<T> reduce_units(const Complex<T>& c, const T& one, IsUnit&& is_unit, Inverse&& inverse, Cost&& cost,
                          bool track) {
    Reduction<T> out;
    out.reduced = c;
    out.tracked = track;
    out.lo = c.lo();
    Complex<T>& cur = out.reduced;
    const T& zero = c.zero();
    if (track) {
        for (int k = c.lo(); k <= c.hi(); ++k) {
            out.f.push_back(Matrix<T>::identity(c.rank(k), zero, one));
            out.g.push_back(Matrix<T>::identity(c.rank(k), zero, one));
            out.h.emplace_back(c.rank(k + 1), c.rank(k), zero);
        }
    }
    auto idx = [&](int k) { return static_cast<std::size_t>(k - c.lo()); };

    for (;;) {
        std::optional<PivotChoice> best;
        for (int k = cur.lo() + 1; k <= cur.hi(); ++k) {
            const Matrix<T>& m = cur.d_ref(k);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    const T& e = m(i, j);
                    if (e.is_zero()) continue;
                    const std::size_t w = cost(e);
                    if (best && w >= best->cost) continue;
                    if (!is_unit(e)) continue;
                    best = PivotChoice{k, i, j, w};
                }
        }
        if (!best) break;
        const int k = best->degree;
        const std::size_t r = best->row, col = best->col;
        const Matrix<T> dk = cur.d(k);
        const T uinv = inverse(dk(r, col));

        // d_k' = delta - gamma u^-1 beta.
        Matrix<T> beta_scaled(1, dk.cols(), zero);  // u^-1 * row r
        for (std::size_t j = 0; j < dk.cols(); ++j)
            if (!dk(r, j).is_zero()) beta_scaled(0, j) = uinv * dk(r, j);
        Matrix<T> nd(dk.rows() - 1, dk.cols() - 1, zero);
        for (std::size_t i = 0, ni = 0; i < dk.rows(); ++i) {
            if (i == r) continue;
            const T& gamma = dk(i, col);
            for (std::size_t j = 0, nj = 0; j < dk.cols(); ++j) {
                if (j == col) continue;
                nd(ni, nj) = gamma.is_zero() || beta_scaled(0, j).is_zero() ? dk(i, j)
                                                                             : dk(i, j) - gamma * beta_scaled(0, j);
                ++nj;
            }
            ++ni;
        }

        if (track) {
            Matrix<T>& gk = out.g[idx(k)];
            Matrix<T>& fk1 = out.f[idx(k - 1)];
            // h_{k-1} += g_k[:, col] * u^-1 * f_{k-1}[r, :].
            Matrix<T>& hk1 = out.h[idx(k - 1)];
            for (std::size_t i = 0; i < gk.rows(); ++i) {
                if (gk(i, col).is_zero()) continue;
                const T left = gk(i, col) * uinv;
                for (std::size_t j = 0; j < fk1.cols(); ++j)
                    if (!fk1(r, j).is_zero()) hk1(i, j) += left * fk1(r, j);
            }
            // f_{k-1}: rows i != r become f[i,:] - gamma_i u^-1 f[r,:].
            Matrix<T> nf(fk1.rows() - 1, fk1.cols(), zero);
            for (std::size_t i = 0, ni = 0; i < fk1.rows(); ++i) {
                if (i == r) continue;
                const T& gamma = dk(i, col);
                T factor = gamma.is_zero() ? zero : gamma * uinv;
                for (std::size_t j = 0; j < fk1.cols(); ++j)
                    nf(ni, j) = factor.is_zero() || fk1(r, j).is_zero() ? fk1(i, j) : fk1(i, j) - factor * fk1(r, j);
                ++ni;
            }
            fk1 = std::move(nf);
            // f_k: drop row col.
            Matrix<T>& fk = out.f[idx(k)];
            fk = fk.without(col, fk.cols());
            // g_k: columns j != col become g[:,j] - g[:,col] u^-1 beta_j.
            Matrix<T> ng(gk.rows(), gk.cols() - 1, zero);
            for (std::size_t i = 0; i < gk.rows(); ++i)
                for (std::size_t j = 0, nj = 0; j < gk.cols(); ++j) {
                    if (j == col) continue;
                    ng(i, nj++) = gk(i, col).is_zero() || beta_scaled(0, j).is_zero()
                                      ? gk(i, j)
                                      : gk(i, j) - gk(i, col) * beta_scaled(0, j);
                }
            gk = std::move(ng);
            Matrix<T>& gk1 = out.g[idx(k - 1)];
            gk1 = gk1.without(gk1.rows(), r);
        }

        // Rebuild the complex with the two basis elements removed.
        Matrix<T> up = cur.d(k + 1).without(col, cur.rank(k + 1));
        Matrix<T> down = cur.d(k - 1).without(cur.rank(k - 2), r);
        std::vector<std::size_t> ranks;
        for (int l = cur.lo(); l <= cur.hi(); ++l) ranks.push_back(cur.rank(l));
        ranks[static_cast<std::size_t>(k - cur.lo())] -= 1;
        ranks[static_cast<std::size_t>(k - 1 - cur.lo())] -= 1;
        Complex<T> next(zero, cur.lo(), ranks);
        for (int l = cur.lo() + 1; l <= cur.hi(); ++l) {
            if (l == k)
                next.set_d(l, std::move(nd));
            else if (l == k + 1)
                next.set_d(l, std::move(up));
            else if (l == k - 1)
                next.set_d(l, std::move(down));
            else
                next.set_d(l, cur.d(l));
        }
        cur = std::move(next);
        ++out.pivots;
    }
    return out;
}

}  // namespace findom
