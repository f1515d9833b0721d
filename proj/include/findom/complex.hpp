#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findom/matrix.hpp"

namespace findom {

/// Bounded complex of based free modules. d(k) maps degree k to degree
/// k-1 and acts on coordinate columns: rows index the degree-(k-1) basis,
/// columns the degree-k basis.
template <class T>
class Complex {
   public:
    Complex() = default;
    /// Ranks for degrees lo, lo+1, ...; all differentials start at zero.
    Complex(const T& zero, int lo, std::vector<std::size_t> ranks)
        : zero_(zero), lo_(lo), ranks_(std::move(ranks)) {
        for (int k = lo_; k <= hi() + 1; ++k) d_.emplace_back(rank(k - 1), rank(k), zero_);
    }

    const T& zero() const { return zero_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    bool in_range(int k) const { return k >= lo_ && k <= hi(); }
    std::size_t rank(int k) const { return in_range(k) ? ranks_[static_cast<std::size_t>(k - lo_)] : 0; }
    std::size_t total_rank() const {
        std::size_t s = 0;
        for (auto r : ranks_) s += r;
        return s;
    }
    bool is_zero_complex() const { return total_rank() == 0; }

    /// d_k : C_k -> C_{k-1}; zero outside the stored range.
    Matrix<T> d(int k) const {
        if (k >= lo_ && k <= hi() + 1) return d_[static_cast<std::size_t>(k - lo_)];
        return Matrix<T>(rank(k - 1), rank(k), zero_);
    }
    const Matrix<T>& d_ref(int k) const { return d_.at(static_cast<std::size_t>(k - lo_)); }
    Matrix<T>& d_mut(int k) { return d_.at(static_cast<std::size_t>(k - lo_)); }
    void set_d(int k, Matrix<T> m) {
        if (m.rows() != rank(k - 1) || m.cols() != rank(k))
            throw DimensionError("differential d_" + std::to_string(k) + " must be " +
                                 std::to_string(rank(k - 1)) + "x" + std::to_string(rank(k)) +
                                 ", got " + m.shape());
        if (m.empty()) return;
        d_.at(static_cast<std::size_t>(k - lo_)) = std::move(m);
    }
    void set_rank(int k, std::size_t r) { ranks_.at(static_cast<std::size_t>(k - lo_)) = r; }

    /// Same modules and differentials in every degree (zero-rank padding
    /// outside the ranges is ignored).
    bool operator==(const Complex& o) const {
        const int a = std::min(lo_, o.lo_) - 1, b = std::max(hi(), o.hi()) + 1;
        for (int k = a; k <= b; ++k)
            if (rank(k) != o.rank(k)) return false;
        for (int k = a; k <= b; ++k)
            if (!(d(k) == o.d(k))) return false;
        return true;
    }

   private:
    T zero_{};
    int lo_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<Matrix<T>> d_;  // d_[i] = d_{lo+i}, i = 0 .. size
};

using BasedComplex = Complex<LaurentPoly>;

inline std::size_t nvars_of(const BasedComplex& c) { return c.zero().nvars(); }

BasedComplex make_complex(std::size_t nvars, int lo, std::vector<std::size_t> ranks);

/// First composite d_{k} d_{k+1} with a nonzero entry.
struct ValidationReport {
    bool ok = true;
    int degree = 0;  // k with d_k d_{k+1} != 0
    std::size_t row = 0, col = 0;
    LaurentPoly entry;
    std::string to_string() const;
};

ValidationReport validate(const BasedComplex& c);

template <class T>
std::optional<std::pair<int, std::pair<std::size_t, std::size_t>>> first_d2_violation(const Complex<T>& c) {
    for (int k = c.lo() + 1; k < c.hi(); ++k) {
        Matrix<T> comp = c.d(k) * c.d(k + 1);
        for (std::size_t i = 0; i < comp.rows(); ++i)
            for (std::size_t j = 0; j < comp.cols(); ++j)
                if (!comp(i, j).is_zero()) return std::make_pair(k, std::make_pair(i, j));
    }
    return std::nullopt;
}

/// C[k]_l = C_{l-k} with differential multiplied by (-1)^k.
BasedComplex suspend(const BasedComplex& c, int k);
BasedComplex direct_sum(const BasedComplex& a, const BasedComplex& b);
/// Drops zero-rank degrees at both ends (a zero complex keeps lo).
BasedComplex trimmed(const BasedComplex& c);

/// Degreewise maps f_k : source_k -> target_k (rows index target basis).
struct ChainMap {
    BasedComplex source, target;
    std::vector<MatrixLP> maps;  // degrees lo() .. hi() of the union range
    int lo = 0;

    static ChainMap zero(const BasedComplex& source, const BasedComplex& target);
    static ChainMap identity(const BasedComplex& c);
    /// p * id for a ring element p.
    static ChainMap scalar(const BasedComplex& c, const LaurentPoly& p);

    int hi() const { return lo + static_cast<int>(maps.size()) - 1; }
    MatrixLP at(int k) const;
    void set(int k, MatrixLP m);
};

/// Degree +1 maps A_k : source_k -> target_{k+1}.
struct ChainHomotopy {
    BasedComplex source, target;
    std::vector<MatrixLP> maps;
    int lo = 0;

    static ChainHomotopy zero(const BasedComplex& source, const BasedComplex& target);
    int hi() const { return lo + static_cast<int>(maps.size()) - 1; }
    MatrixLP at(int k) const;
    void set(int k, MatrixLP m);
};

bool is_chain_map(const ChainMap& f);
/// d A + A d == h - g in every degree.
bool is_homotopy(const ChainHomotopy& a, const ChainMap& h, const ChainMap& g);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g o f
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
bool operator==(const ChainMap& a, const ChainMap& b);
/// h + dA + Ad, the map homotopic to h via A.
ChainMap add_boundary(const ChainMap& h, const ChainHomotopy& a);

/// Twofold complex on a rectangle [p_lo, p_hi] x [q_lo, q_hi]; horizontal
/// dh(p,q): D_{p,q} -> D_{p-1,q}, vertical dv(p,q): D_{p,q} -> D_{p,q-1}.
class TwofoldComplex {
   public:
    TwofoldComplex(std::size_t nvars, int p_lo, int p_hi, int q_lo, int q_hi);

    std::size_t nvars() const { return nvars_; }
    int p_lo() const { return p_lo_; }
    int p_hi() const { return p_hi_; }
    int q_lo() const { return q_lo_; }
    int q_hi() const { return q_hi_; }
    std::size_t rank(int p, int q) const;
    void set_rank(int p, int q, std::size_t r);
    MatrixLP dh(int p, int q) const;
    MatrixLP dv(int p, int q) const;
    void set_dh(int p, int q, MatrixLP m);
    void set_dv(int p, int q, MatrixLP m);

    /// Column p as a complex in q.
    BasedComplex column(int p) const;
    /// Horizontal differential leaving column p as a chain map.
    ChainMap horizontal(int p) const;

    /// dh^2 = 0, dv^2 = 0, dh dv = dv dh.
    bool is_valid() const;

   private:
    std::size_t idx(int p, int q) const;
    bool inside(int p, int q) const {
        return p >= p_lo_ && p <= p_hi_ && q >= q_lo_ && q <= q_hi_;
    }
    std::size_t nvars_;
    int p_lo_, p_hi_, q_lo_, q_hi_;
    std::vector<std::size_t> ranks_;
    std::vector<MatrixLP> dh_, dv_;
};

/// Tot(D)_n = sum_{p+q=n} D_{p,q}, summands ordered by decreasing p;
/// differential dh + (-1)^p dv.
BasedComplex totalize(const TwofoldComplex& d);

/// Entrywise substitution x_i -> images[i] (monomial units of the target).
BasedComplex base_change(const BasedComplex& c, std::span<const LaurentPoly> images,
                         std::size_t target_nvars);
/// Same matrices over a ring with extra trailing variables.
BasedComplex extend_vars(const BasedComplex& c, std::size_t new_nvars);
ChainMap extend_vars(const ChainMap& f, std::size_t new_nvars);
/// Renumbers variables: variable i becomes perm[i].
BasedComplex permute_vars(const BasedComplex& c, std::span<const std::size_t> perm);
/// Conjugates the basis of degree k by a permutation (new basis i = old perm[i]).
BasedComplex permute_basis(const BasedComplex& c, int k, std::span<const std::size_t> perm);

}  // namespace findom
