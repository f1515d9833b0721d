#pragma once

#include <cstddef>
#include <vector>

#include "findom/matrix.hpp"
#include "findom/upoly.hpp"

namespace findom {

/// Smith normal form over the Euclidean ring K[x^±] for a field K:
/// U * D * V == M with U, V invertible and D diagonal, the nonzero
/// diagonal entries canonical (monic, lowest exponent 0) and each
/// dividing the next.
template <class K>
struct SnfData {
    using E = ULaurent<K>;
    Matrix<E> u, u_inv, d, v, v_inv;
    std::size_t rank = 0;
    std::vector<E> factors;  // the first `rank` diagonal entries
};

namespace detail {

template <class K>
class SnfRunner {
    using E = ULaurent<K>;
    using M = Matrix<E>;

   public:
    explicit SnfRunner(const M& m)
        : a_(m),
          l_(M::identity(m.rows(), E(), E(K(1)))),
          l_inv_(l_),
          r_(M::identity(m.cols(), E(), E(K(1)))),
          r_inv_(r_) {}

    SnfData<K> run() {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!place_pivot(t)) break;
            for (;;) {
                if (!clear_column(t)) continue;
                if (!clear_row(t)) continue;
                if (!fix_divisibility(t)) continue;
                break;
            }
            // Normalize the pivot to its canonical associate.
            E unit = a_(t, t).unit_part();
            scale_row(t, unit.inverse_unit());
        }
        SnfData<K> out;
        out.rank = t;
        for (std::size_t i = 0; i < t; ++i) out.factors.push_back(a_(i, i));
        // M = L^-1 D R^-1.
        out.u = l_inv_;
        out.u_inv = l_;
        out.v = r_inv_;
        out.v_inv = r_;
        out.d = a_;
        return out;
    }

   private:
    // Moves the nonzero entry of minimal span in the trailing block to
    // (t, t); ties are broken row-major. Returns false if the block is zero.
    bool place_pivot(std::size_t t) {
        bool found = false;
        std::size_t bi = 0, bj = 0;
        int best = 0;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const E& e = a_(i, j);
                if (e.is_zero()) continue;
                if (!found || e.span() < best) {
                    found = true;
                    best = e.span();
                    bi = i;
                    bj = j;
                }
            }
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Reduces column t below the pivot; returns false when a remainder
    // produced a better pivot (which has then been moved into place).
    bool clear_column(std::size_t t) {
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
            if (a_(i, t).is_zero()) continue;
            auto [q, r] = a_(i, t).divmod(a_(t, t));
            add_row(i, t, -q);
            if (!r.is_zero()) {
                swap_rows(t, i);
                return false;
            }
        }
        return true;
    }

    bool clear_row(std::size_t t) {
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            if (a_(t, j).is_zero()) continue;
            auto [q, r] = a_(t, j).divmod(a_(t, t));
            add_col(j, t, -q);
            if (!r.is_zero()) {
                swap_cols(t, j);
                return false;
            }
        }
        return true;
    }

    // Ensures the pivot divides the whole trailing block. On failure a
    // row is added to row t, which re-opens the column clearing.
    bool fix_divisibility(std::size_t t) {
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (!a_(t, t).divides(a_(i, j))) {
                    add_row(t, i, E(K(1)));
                    return false;
                }
        return true;
    }

    // row_i += c * row_k.
    void add_row(std::size_t i, std::size_t k, const E& c) {
        if (c.is_zero()) return;
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) += c * a_(k, j);
        for (std::size_t j = 0; j < l_.cols(); ++j) l_(i, j) += c * l_(k, j);
        // L_inv <- L_inv * E^-1, E^-1 subtracts c * column i from column k.
        for (std::size_t r = 0; r < l_inv_.rows(); ++r) l_inv_(r, k) -= l_inv_(r, i) * c;
    }
    // col_j += c * col_k.
    void add_col(std::size_t j, std::size_t k, const E& c) {
        if (c.is_zero()) return;
        for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, j) += a_(i, k) * c;
        for (std::size_t i = 0; i < r_.rows(); ++i) r_(i, j) += r_(i, k) * c;
        for (std::size_t s = 0; s < r_inv_.cols(); ++s) r_inv_(k, s) -= c * r_inv_(j, s);
    }
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
        for (std::size_t j = 0; j < l_.cols(); ++j) std::swap(l_(i, j), l_(k, j));
        for (std::size_t r = 0; r < l_inv_.rows(); ++r) std::swap(l_inv_(r, i), l_inv_(r, k));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
        for (std::size_t i = 0; i < r_.rows(); ++i) std::swap(r_(i, j), r_(i, k));
        for (std::size_t s = 0; s < r_inv_.cols(); ++s) std::swap(r_inv_(j, s), r_inv_(k, s));
    }
    void scale_row(std::size_t i, const E& unit) {
        const E back = unit.inverse_unit();
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) *= unit;
        for (std::size_t j = 0; j < l_.cols(); ++j) l_(i, j) *= unit;
        for (std::size_t r = 0; r < l_inv_.rows(); ++r) l_inv_(r, i) *= back;
    }

    M a_, l_, l_inv_, r_, r_inv_;  // l_ * m * r_ == a_
};

}  // namespace detail

template <class K>
SnfData<K> smith_form(const Matrix<ULaurent<K>>& m) {
    return detail::SnfRunner<K>(m).run();
}

}  // namespace findom
