#include "findom/complex.hpp"

#include <algorithm>

namespace findom {

BasedComplex make_complex(std::size_t nvars, int lo, std::vector<std::size_t> ranks) {
    return BasedComplex(LaurentPoly(nvars), lo, std::move(ranks));
}

std::string ValidationReport::to_string() const {
    if (ok) return "ok";
    return "d_" + std::to_string(degree) + " * d_" + std::to_string(degree + 1) + " has entry (" +
           std::to_string(row) + "," + std::to_string(col) + ") = " + entry.to_string();
}

ValidationReport validate(const BasedComplex& c) {
    ValidationReport r;
    if (auto v = first_d2_violation(c)) {
        r.ok = false;
        r.degree = v->first;
        r.row = v->second.first;
        r.col = v->second.second;
        r.entry = (c.d(v->first) * c.d(v->first + 1))(r.row, r.col);
    }
    return r;
}

BasedComplex suspend(const BasedComplex& c, int k) {
    std::vector<std::size_t> ranks;
    for (int l = c.lo(); l <= c.hi(); ++l) ranks.push_back(c.rank(l));
    BasedComplex out(c.zero(), c.lo() + k, ranks);
    const bool flip = (k % 2) != 0;
    for (int l = c.lo() + 1; l <= c.hi(); ++l) out.set_d(l + k, flip ? -c.d(l) : c.d(l));
    return out;
}

BasedComplex direct_sum(const BasedComplex& a, const BasedComplex& b) {
    if (nvars_of(a) != nvars_of(b)) throw DimensionError("direct sum of complexes over different rings");
    const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<std::size_t> ranks;
    for (int k = lo; k <= hi; ++k) ranks.push_back(a.rank(k) + b.rank(k));
    BasedComplex out(a.zero(), lo, ranks);
    const std::size_t n = nvars_of(a);
    for (int k = lo + 1; k <= hi; ++k)
        out.set_d(k, block2x2(a.d(k), zero_matrix(a.rank(k - 1), b.rank(k), n),
                              zero_matrix(b.rank(k - 1), a.rank(k), n), b.d(k)));
    return out;
}

BasedComplex trimmed(const BasedComplex& c) {
    int lo = c.lo(), hi = c.hi();
    while (lo <= hi && c.rank(lo) == 0) ++lo;
    while (hi >= lo && c.rank(hi) == 0) --hi;
    if (lo > hi) return BasedComplex(c.zero(), c.lo(), {});
    std::vector<std::size_t> ranks;
    for (int k = lo; k <= hi; ++k) ranks.push_back(c.rank(k));
    BasedComplex out(c.zero(), lo, ranks);
    for (int k = lo + 1; k <= hi; ++k) out.set_d(k, c.d(k));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<int, int> union_range(const BasedComplex& a, const BasedComplex& b) {
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

template <class M>
MatrixLP at_impl(const M& m, int k, std::size_t rows, std::size_t cols) {
    const std::size_t n = nvars_of(m.source);
    if (k < m.lo || k > m.hi()) return zero_matrix(rows, cols, n);
    return m.maps[static_cast<std::size_t>(k - m.lo)];
}

template <class M>
void set_impl(M& m, int k, MatrixLP x, std::size_t rows, std::size_t cols) {
    if (x.rows() != rows || x.cols() != cols)
        throw DimensionError("map component in degree " + std::to_string(k) + " must be " +
                             std::to_string(rows) + "x" + std::to_string(cols) + ", got " + x.shape());
    if (k < m.lo || k > m.hi()) {
        if (x.empty()) return;
        throw DimensionError("map component outside the supported degree range");
    }
    m.maps[static_cast<std::size_t>(k - m.lo)] = std::move(x);
}

}  // namespace

ChainMap ChainMap::zero(const BasedComplex& source, const BasedComplex& target) {
    if (nvars_of(source) != nvars_of(target)) throw DimensionError("chain map between different rings");
    ChainMap f{source, target, {}, 0};
    auto [lo, hi] = union_range(source, target);
    f.lo = lo;
    for (int k = lo; k <= hi; ++k) f.maps.push_back(zero_matrix(target.rank(k), source.rank(k), nvars_of(source)));
    return f;
}

ChainMap ChainMap::identity(const BasedComplex& c) { return scalar(c, LaurentPoly(nvars_of(c), Scalar(1))); }

ChainMap ChainMap::scalar(const BasedComplex& c, const LaurentPoly& p) {
    ChainMap f = zero(c, c);
    for (int k = c.lo(); k <= c.hi(); ++k) {
        MatrixLP m = zero_matrix(c.rank(k), c.rank(k), nvars_of(c));
        for (std::size_t i = 0; i < c.rank(k); ++i) m(i, i) = p;
        f.set(k, std::move(m));
    }
    return f;
}

MatrixLP ChainMap::at(int k) const { return at_impl(*this, k, target.rank(k), source.rank(k)); }
void ChainMap::set(int k, MatrixLP m) { set_impl(*this, k, std::move(m), target.rank(k), source.rank(k)); }

ChainHomotopy ChainHomotopy::zero(const BasedComplex& source, const BasedComplex& target) {
    ChainHomotopy a{source, target, {}, 0};
    auto [lo, hi] = union_range(source, target);
    a.lo = lo - 1;
    for (int k = lo - 1; k <= hi; ++k)
        a.maps.push_back(zero_matrix(target.rank(k + 1), source.rank(k), nvars_of(source)));
    return a;
}

MatrixLP ChainHomotopy::at(int k) const { return at_impl(*this, k, target.rank(k + 1), source.rank(k)); }
void ChainHomotopy::set(int k, MatrixLP m) {
    set_impl(*this, k, std::move(m), target.rank(k + 1), source.rank(k));
}

bool is_chain_map(const ChainMap& f) {
    auto [lo, hi] = union_range(f.source, f.target);
    for (int k = lo; k <= hi + 1; ++k)
        if (!(f.at(k - 1) * f.source.d(k) == f.target.d(k) * f.at(k))) return false;
    return true;
}

bool is_homotopy(const ChainHomotopy& a, const ChainMap& h, const ChainMap& g) {
    if (!(h.source == a.source) || !(h.target == a.target) || !(g.source == a.source) ||
        !(g.target == a.target))
        return false;
    auto [lo, hi] = union_range(a.source, a.target);
    for (int k = lo; k <= hi; ++k) {
        MatrixLP lhs = a.target.d(k + 1) * a.at(k) + a.at(k - 1) * a.source.d(k);
        if (!(lhs == h.at(k) - g.at(k))) return false;
    }
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target == g.source)) throw DimensionError("composition of non-composable chain maps");
    ChainMap r = ChainMap::zero(f.source, g.target);
    for (int k = r.lo; k <= r.hi(); ++k) r.set(k, g.at(k) * f.at(k));
    return r;
}

namespace {
ChainMap combine(const ChainMap& a, const ChainMap& b, bool subtract) {
    if (!(a.source == b.source) || !(a.target == b.target))
        throw DimensionError("chain maps with different source or target");
    ChainMap r = ChainMap::zero(a.source, a.target);
    for (int k = r.lo; k <= r.hi(); ++k) r.set(k, subtract ? a.at(k) - b.at(k) : a.at(k) + b.at(k));
    return r;
}
}  // namespace

ChainMap operator+(const ChainMap& a, const ChainMap& b) { return combine(a, b, false); }
ChainMap operator-(const ChainMap& a, const ChainMap& b) { return combine(a, b, true); }

bool operator==(const ChainMap& a, const ChainMap& b) {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    auto [lo, hi] = union_range(a.source, a.target);
    for (int k = lo; k <= hi; ++k)
        if (!(a.at(k) == b.at(k))) return false;
    return true;
}

ChainMap add_boundary(const ChainMap& h, const ChainHomotopy& a) {
    ChainMap r = h;
    for (int k = r.lo; k <= r.hi(); ++k)
        r.set(k, h.at(k) + a.target.d(k + 1) * a.at(k) + a.at(k - 1) * a.source.d(k));
    return r;
}

// ---------------------------------------------------------------------------

TwofoldComplex::TwofoldComplex(std::size_t nvars, int p_lo, int p_hi, int q_lo, int q_hi)
    : nvars_(nvars), p_lo_(p_lo), p_hi_(p_hi), q_lo_(q_lo), q_hi_(q_hi) {
    if (p_hi < p_lo || q_hi < q_lo) throw DimensionError("empty twofold rectangle");
    const std::size_t cells = static_cast<std::size_t>(p_hi - p_lo + 1) * static_cast<std::size_t>(q_hi - q_lo + 1);
    ranks_.assign(cells, 0);
    dh_.assign(cells, zero_matrix(0, 0, nvars));
    dv_.assign(cells, zero_matrix(0, 0, nvars));
}

std::size_t TwofoldComplex::idx(int p, int q) const {
    return static_cast<std::size_t>(p - p_lo_) * static_cast<std::size_t>(q_hi_ - q_lo_ + 1) +
           static_cast<std::size_t>(q - q_lo_);
}

std::size_t TwofoldComplex::rank(int p, int q) const { return inside(p, q) ? ranks_[idx(p, q)] : 0; }

void TwofoldComplex::set_rank(int p, int q, std::size_t r) {
    if (!inside(p, q)) throw DimensionError("cell outside the twofold rectangle");
    ranks_[idx(p, q)] = r;
    dh_[idx(p, q)] = zero_matrix(rank(p - 1, q), r, nvars_);
    dv_[idx(p, q)] = zero_matrix(rank(p, q - 1), r, nvars_);
    if (inside(p + 1, q)) dh_[idx(p + 1, q)] = zero_matrix(r, rank(p + 1, q), nvars_);
    if (inside(p, q + 1)) dv_[idx(p, q + 1)] = zero_matrix(r, rank(p, q + 1), nvars_);
}

MatrixLP TwofoldComplex::dh(int p, int q) const {
    if (!inside(p, q) || !inside(p - 1, q)) return zero_matrix(rank(p - 1, q), rank(p, q), nvars_);
    return dh_[idx(p, q)];
}

MatrixLP TwofoldComplex::dv(int p, int q) const {
    if (!inside(p, q) || !inside(p, q - 1)) return zero_matrix(rank(p, q - 1), rank(p, q), nvars_);
    return dv_[idx(p, q)];
}

void TwofoldComplex::set_dh(int p, int q, MatrixLP m) {
    if (m.rows() != rank(p - 1, q) || m.cols() != rank(p, q)) throw DimensionError("dh shape mismatch");
    if (m.empty()) return;
    dh_[idx(p, q)] = std::move(m);
}

void TwofoldComplex::set_dv(int p, int q, MatrixLP m) {
    if (m.rows() != rank(p, q - 1) || m.cols() != rank(p, q)) throw DimensionError("dv shape mismatch");
    if (m.empty()) return;
    dv_[idx(p, q)] = std::move(m);
}

BasedComplex TwofoldComplex::column(int p) const {
    std::vector<std::size_t> ranks;
    for (int q = q_lo_; q <= q_hi_; ++q) ranks.push_back(rank(p, q));
    BasedComplex c(LaurentPoly(nvars_), q_lo_, ranks);
    for (int q = q_lo_ + 1; q <= q_hi_; ++q) c.set_d(q, dv(p, q));
    return c;
}

ChainMap TwofoldComplex::horizontal(int p) const {
    ChainMap f = ChainMap::zero(column(p), column(p - 1));
    for (int q = q_lo_; q <= q_hi_; ++q) f.set(q, dh(p, q));
    return f;
}

bool TwofoldComplex::is_valid() const {
    for (int p = p_lo_; p <= p_hi_ + 1; ++p)
        for (int q = q_lo_; q <= q_hi_ + 1; ++q) {
            if (!(dh(p - 1, q) * dh(p, q)).is_zero()) return false;
            if (!(dv(p, q - 1) * dv(p, q)).is_zero()) return false;
            if (!(dh(p, q - 1) * dv(p, q) == dv(p - 1, q) * dh(p, q))) return false;
        }
    return true;
}

BasedComplex totalize(const TwofoldComplex& d) {
    const int lo = d.p_lo() + d.q_lo(), hi = d.p_hi() + d.q_hi();
    // Offsets of each summand D_{p, n-p} inside Tot_n, decreasing p.
    auto offset = [&](int n, int p) {
        std::size_t off = 0;
        for (int pp = d.p_hi(); pp > p; --pp) off += d.rank(pp, n - pp);
        return off;
    };
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) {
        std::size_t r = 0;
        for (int p = d.p_lo(); p <= d.p_hi(); ++p) r += d.rank(p, n - p);
        ranks.push_back(r);
    }
    BasedComplex tot(LaurentPoly(d.nvars()), lo, ranks);
    for (int n = lo + 1; n <= hi; ++n) {
        MatrixLP m = zero_matrix(tot.rank(n - 1), tot.rank(n), d.nvars());
        for (int p = d.p_lo(); p <= d.p_hi(); ++p) {
            const int q = n - p;
            if (d.rank(p, q) == 0) continue;
            const std::size_t col = offset(n, p);
            if (d.rank(p - 1, q) > 0) m.set_block(offset(n - 1, p - 1), col, d.dh(p, q));
            if (d.rank(p, q - 1) > 0) {
                MatrixLP v = d.dv(p, q);
                m.set_block(offset(n - 1, p), col, (p % 2 != 0) ? -v : v);
            }
        }
        tot.set_d(n, std::move(m));
    }
    return tot;
}

// ---------------------------------------------------------------------------

BasedComplex base_change(const BasedComplex& c, std::span<const LaurentPoly> images,
                         std::size_t target_nvars) {
    std::vector<std::size_t> ranks;
    for (int k = c.lo(); k <= c.hi(); ++k) ranks.push_back(c.rank(k));
    BasedComplex out(LaurentPoly(target_nvars), c.lo(), ranks);
    for (int k = c.lo() + 1; k <= c.hi(); ++k)
        out.set_d(k, c.d(k).map([&](const LaurentPoly& f) { return f.substitute(images, target_nvars); }));
    return out;
}

BasedComplex extend_vars(const BasedComplex& c, std::size_t new_nvars) {
    std::vector<std::size_t> ranks;
    for (int k = c.lo(); k <= c.hi(); ++k) ranks.push_back(c.rank(k));
    BasedComplex out(LaurentPoly(new_nvars), c.lo(), ranks);
    for (int k = c.lo() + 1; k <= c.hi(); ++k)
        out.set_d(k, c.d(k).map([&](const LaurentPoly& f) { return f.extended(new_nvars); }));
    return out;
}

ChainMap extend_vars(const ChainMap& f, std::size_t new_nvars) {
    ChainMap r = ChainMap::zero(extend_vars(f.source, new_nvars), extend_vars(f.target, new_nvars));
    for (int k = r.lo; k <= r.hi(); ++k)
        r.set(k, f.at(k).map([&](const LaurentPoly& p) { return p.extended(new_nvars); }));
    return r;
}

BasedComplex permute_vars(const BasedComplex& c, std::span<const std::size_t> perm) {
    BasedComplex out = c;
    for (int k = c.lo() + 1; k <= c.hi(); ++k)
        out.set_d(k, c.d(k).map([&](const LaurentPoly& f) { return f.permuted(perm); }));
    return out;
}

BasedComplex permute_basis(const BasedComplex& c, int k, std::span<const std::size_t> perm) {
    if (perm.size() != c.rank(k)) throw DimensionError("basis permutation length mismatch");
    BasedComplex out = c;
    const std::size_t n = nvars_of(c);
    MatrixLP p = zero_matrix(c.rank(k), c.rank(k), n);  // column i of P is e_{perm[i]}
    for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = LaurentPoly(n, Scalar(1));
    if (c.in_range(k + 1) && c.in_range(k)) out.set_d(k + 1, p.transposed() * c.d(k + 1));
    if (c.in_range(k) && c.in_range(k - 1)) out.set_d(k, c.d(k) * p);
    return out;
}

}  // namespace findom
