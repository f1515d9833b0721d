#include "findom/constructions.hpp"

namespace findom {

namespace {

LaurentPoly one(std::size_t n) { return LaurentPoly(n, Scalar(1)); }

}  // namespace

BasedComplex cone(const ChainMap& f) {
    const BasedComplex &c = f.source, &b = f.target;
    const std::size_t n = nvars_of(c);
    const int lo = std::min(c.lo() + 1, b.lo()), hi = std::max(c.hi() + 1, b.hi());
    std::vector<std::size_t> ranks;
    for (int k = lo; k <= hi; ++k) ranks.push_back(c.rank(k - 1) + b.rank(k));
    BasedComplex out(c.zero(), lo, ranks);
    for (int k = lo + 1; k <= hi; ++k)
        out.set_d(k, block2x2(-c.d(k - 1), zero_matrix(c.rank(k - 2), b.rank(k), n), f.at(k - 1), b.d(k)));
    return out;
}

// ---------------------------------------------------------------------------

CokerComparison cone_vs_coker(const ChainMap& f) {
    const BasedComplex &c = f.source, &b = f.target;
    const std::size_t n = nvars_of(c);
    const int lo = b.lo(), hi = b.hi();
    for (int k = c.lo(); k <= c.hi(); ++k)
        if (generic_rank(f.at(k)) != c.rank(k))
            throw ConstructionError("map is not injective in degree " + std::to_string(k));

    // Per degree: pivot rows P with f[P,:] invertible, complement rows Q,
    // projection pi = [I on Q, -f_Q f_P^-1 on P].
    std::vector<MatrixLP> pis, incs;
    std::vector<std::size_t> coker_ranks;
    for (int k = lo; k <= hi; ++k) {
        MatrixLP a = f.at(k);
        const std::size_t rows = a.rows(), cols = a.cols();
        MatrixLP t = identity_matrix(cols, n);  // a_original * t == a
        std::vector<std::size_t> pivot_row(cols, rows);
        std::vector<bool> used(rows, false);
        for (std::size_t j = 0; j < cols; ++j) {
            std::size_t piv = rows;
            for (std::size_t i = 0; i < rows && piv == rows; ++i)
                if (!used[i] && a(i, j).is_monomial()) piv = i;
            if (piv == rows)
                throw ConstructionError("cokernel in degree " + std::to_string(k) +
                                        " has no monomial-pivot complement");
            used[piv] = true;
            pivot_row[j] = piv;
            const Term& lead = a(piv, j).lex_trailing();
            const LaurentPoly inv = LaurentPoly::monomial(lead.mono.inverse(), lead.coeff.inverse());
            for (std::size_t l = 0; l < cols; ++l) {
                if (l == j || a(piv, l).is_zero()) continue;
                const LaurentPoly factor = inv * a(piv, l);
                for (std::size_t i = 0; i < rows; ++i) a(i, l) -= a(i, j) * factor;
                for (std::size_t i = 0; i < cols; ++i) t(i, l) -= t(i, j) * factor;
            }
        }
        // f_P^-1 = t * a_P^-1 where a_P is a permuted monomial diagonal.
        MatrixLP fp_inv = zero_matrix(cols, cols, n);  // columns indexed by pivot order j
        for (std::size_t j = 0; j < cols; ++j) {
            const Term& lead = a(pivot_row[j], j).lex_trailing();
            const LaurentPoly inv = LaurentPoly::monomial(lead.mono.inverse(), lead.coeff.inverse());
            for (std::size_t i = 0; i < cols; ++i) fp_inv(i, j) = t(i, j) * inv;
        }
        std::vector<std::size_t> q;
        for (std::size_t i = 0; i < rows; ++i)
            if (!used[i]) q.push_back(i);
        const MatrixLP orig = f.at(k);
        MatrixLP pi = zero_matrix(q.size(), rows, n), inc = zero_matrix(rows, q.size(), n);
        for (std::size_t r = 0; r < q.size(); ++r) {
            pi(r, q[r]) = one(n);
            inc(q[r], r) = one(n);
            // -f_Q f_P^-1 restricted to pivot rows: entry for pivot row of column j.
            for (std::size_t j = 0; j < cols; ++j) {
                LaurentPoly s(n);
                for (std::size_t l = 0; l < cols; ++l) s += orig(q[r], l) * fp_inv(l, j);
                pi(r, pivot_row[j]) = -s;
            }
        }
        coker_ranks.push_back(q.size());
        pis.push_back(std::move(pi));
        incs.push_back(std::move(inc));
    }
    auto at = [&](std::vector<MatrixLP>& v, int k) -> MatrixLP& { return v[static_cast<std::size_t>(k - lo)]; };

    BasedComplex coker(c.zero(), lo, coker_ranks);
    for (int k = lo + 1; k <= hi; ++k) coker.set_d(k, at(pis, k - 1) * b.d(k) * at(incs, k));

    BasedComplex cn = cone(f);
    ChainMap proj = ChainMap::zero(cn, coker);
    for (int k = proj.lo; k <= proj.hi(); ++k) {
        if (coker.rank(k) == 0 || cn.rank(k) == 0) continue;
        MatrixLP m = zero_matrix(coker.rank(k), cn.rank(k), n);
        m.set_block(0, c.rank(k - 1), at(pis, k));
        proj.set(k, std::move(m));
    }
    if (!is_chain_map(proj)) throw ConstructionError("cokernel projection is not a chain map");
    return {coker, proj, is_quasi_iso(proj)};
}

// ---------------------------------------------------------------------------

TwofoldComplex three_column(const ChainMap& f, const ChainMap& g) {
    const BasedComplex &c = f.source, &b = f.target, &a = g.target;
    const std::size_t n = nvars_of(c);
    const int qlo = std::min({c.lo(), b.lo(), a.lo()}), qhi = std::max({c.hi(), b.hi(), a.hi()});
    TwofoldComplex d(n, 0, 2, qlo, qhi);
    const BasedComplex* cols[3] = {&a, &b, &c};
    for (int p = 0; p <= 2; ++p)
        for (int q = qlo; q <= qhi; ++q) d.set_rank(p, q, cols[p]->rank(q));
    for (int p = 0; p <= 2; ++p)
        for (int q = qlo + 1; q <= qhi; ++q) d.set_dv(p, q, cols[p]->d(q));
    for (int q = qlo; q <= qhi; ++q) {
        d.set_dh(1, q, g.at(q));
        d.set_dh(2, q, f.at(q));
    }
    return d;
}

ChainMap double_cone_map(const ChainMap& f, const ChainMap& g) {
    const BasedComplex shifted = suspend(f.source, 1);
    const BasedComplex cg = cone(g);
    const std::size_t n = nvars_of(shifted);
    ChainMap phi = ChainMap::zero(shifted, cg);
    for (int k = phi.lo; k <= phi.hi(); ++k) {
        MatrixLP m = zero_matrix(cg.rank(k), shifted.rank(k), n);
        if (!m.empty()) m.set_block(0, 0, f.at(k - 1));
        phi.set(k, std::move(m));
    }
    return phi;
}

DoubleCone double_cone(const ChainMap& f, const ChainMap& g) {
    if (!(f.target == g.source)) throw ConstructionError("maps are not composable");
    if (!(compose(g, f) == ChainMap::zero(f.source, g.target)))
        throw ConstructionError("g o f is not zero");
    DoubleCone out;
    out.iterated = cone(double_cone_map(f, g));
    out.total = totalize(three_column(f, g));
    out.equal = out.iterated == out.total;
    return out;
}

// ---------------------------------------------------------------------------

BasedComplex gamma(const ChainMap& g_minus, const ChainMap& g_plus) {
    if (!(g_minus.target == g_plus.target)) throw ConstructionError("Γ needs a common target");
    const BasedComplex& z = g_plus.target;
    const BasedComplex sum = direct_sum(g_plus.source, g_minus.source);
    const std::size_t n = nvars_of(z);
    ChainMap diff = ChainMap::zero(sum, z);
    for (int k = diff.lo; k <= diff.hi(); ++k) {
        MatrixLP m = zero_matrix(z.rank(k), sum.rank(k), n);
        if (!m.empty()) {
            m.set_block(0, 0, g_plus.at(k));
            m.set_block(0, g_plus.source.rank(k), -g_minus.at(k));
        }
        diff.set(k, std::move(m));
    }
    return suspend(cone(diff), -1);
}

ChainMap gamma_diagonal(const BasedComplex& c) {
    const ChainMap id = ChainMap::identity(c);
    const BasedComplex g = gamma(id, id);
    const std::size_t n = nvars_of(c);
    ChainMap iota = ChainMap::zero(c, g);
    for (int k = iota.lo; k <= iota.hi(); ++k) {
        MatrixLP m = zero_matrix(g.rank(k), c.rank(k), n);
        if (!m.empty()) {
            m.set_block(0, 0, identity_matrix(c.rank(k), n));
            m.set_block(c.rank(k), 0, identity_matrix(c.rank(k), n));
        }
        iota.set(k, std::move(m));
    }
    return iota;
}

// ---------------------------------------------------------------------------

namespace {

void check_self_map(const ChainMap& h) {
    if (!(h.source == h.target)) throw ConstructionError("mapping torus needs a self map");
}

LaurentPoly torus_var(std::size_t n_new) { return LaurentPoly::variable(n_new, n_new - 1); }

}  // namespace

BasedComplex mapping_torus(const ChainMap& h) {
    check_self_map(h);
    const std::size_t n = nvars_of(h.source) + 1;
    ChainMap ext = extend_vars(h, n);
    return cone(ext - ChainMap::scalar(ext.source, torus_var(n)));
}

ChainMap torus_variable(const ChainMap& h) {
    const BasedComplex t = mapping_torus(h);
    return ChainMap::scalar(t, torus_var(nvars_of(t)));
}

ChainMap torus_map(const ChainMap& alpha, const ChainMap& f, const ChainMap& g) {
    check_self_map(f);
    check_self_map(g);
    if (!(alpha.source == f.source) || !(alpha.target == g.source))
        throw ConstructionError("square has mismatched complexes");
    if (!(compose(alpha, f) == compose(g, alpha))) throw ConstructionError("square does not commute");
    const std::size_t n = nvars_of(f.source) + 1;
    const BasedComplex tf = mapping_torus(f), tg = mapping_torus(g);
    const ChainMap a = extend_vars(alpha, n);
    ChainMap out = ChainMap::zero(tf, tg);
    for (int k = out.lo; k <= out.hi(); ++k) {
        MatrixLP m = block2x2(a.at(k - 1), zero_matrix(a.target.rank(k - 1), a.source.rank(k), n),
                              zero_matrix(a.target.rank(k), a.source.rank(k - 1), n), a.at(k));
        out.set(k, std::move(m));
    }
    return out;
}

ChainMap torus_self_map(const ChainMap& h) { return torus_map(h, h, h); }

ChainHomotopy torus_self_homotopy(const ChainMap& h) {
    const BasedComplex t = mapping_torus(h);
    const BasedComplex& c = h.source;
    const std::size_t n = nvars_of(t);
    ChainHomotopy s = ChainHomotopy::zero(t, t);
    // s(c', c) = (c, 0) : C_{k-1} ⊕ C_k -> C_k ⊕ C_{k+1}.
    for (int k = s.lo; k <= s.hi(); ++k) {
        MatrixLP m = zero_matrix(t.rank(k + 1), t.rank(k), n);
        if (!m.empty() && c.rank(k) > 0) m.set_block(0, c.rank(k - 1), identity_matrix(c.rank(k), n));
        s.set(k, std::move(m));
    }
    return s;
}

TorusIso torus_homotopy_iso(const ChainHomotopy& a, const ChainMap& h, const ChainMap& g) {
    if (!is_homotopy(a, h, g)) throw ConstructionError("A is not a homotopy from h to g");
    check_self_map(h);
    const std::size_t n = nvars_of(h.source) + 1;
    const BasedComplex th = mapping_torus(h), tg = mapping_torus(g);
    const BasedComplex& c = h.source;
    TorusIso out{ChainMap::zero(th, tg), ChainMap::zero(tg, th)};
    for (int k = out.forward.lo; k <= out.forward.hi(); ++k) {
        const MatrixLP ak = a.at(k - 1).map([n](const LaurentPoly& p) { return p.extended(n); });
        const MatrixLP i1 = identity_matrix(c.rank(k - 1), n), i2 = identity_matrix(c.rank(k), n);
        const MatrixLP z = zero_matrix(c.rank(k - 1), c.rank(k), n);
        out.forward.set(k, block2x2(i1, z, ak, i2));
        out.backward.set(k, block2x2(i1, z, -ak, i2));
    }
    return out;
}

MatherMaps mather(const ChainMap& f, const ChainMap& g) {
    const ChainMap gf = compose(g, f), fg = compose(f, g);
    MatherMaps out{torus_map(f, gf, fg), torus_map(g, fg, gf), false};
    out.composition_ok = compose(out.g_star, out.f_star) == torus_map(gf, gf, gf);
    return out;
}

// ---------------------------------------------------------------------------

Stabilization attach_elementary(const BasedComplex& c, int k, std::size_t r) {
    const std::size_t n = nvars_of(c);
    BasedComplex e(c.zero(), k, {r, r});
    if (r > 0) e.set_d(k + 1, identity_matrix(r, n));
    BasedComplex sum = r > 0 ? direct_sum(c, e) : c;
    Stabilization out{sum, ChainMap::zero(c, sum), ChainMap::zero(sum, c), ChainHomotopy::zero(sum, sum)};
    for (int l = out.inclusion.lo; l <= out.inclusion.hi(); ++l) {
        MatrixLP inc = zero_matrix(sum.rank(l), c.rank(l), n);
        if (!inc.empty()) inc.set_block(0, 0, identity_matrix(c.rank(l), n));
        out.inclusion.set(l, inc);
        out.projection.set(l, inc.transposed());
    }
    if (r > 0) {
        MatrixLP hm = zero_matrix(sum.rank(k + 1), sum.rank(k), n);
        hm.set_block(c.rank(k + 1), c.rank(k), identity_matrix(r, n));
        out.homotopy.set(k, std::move(hm));
    }
    return out;
}

// ---------------------------------------------------------------------------

Tensor Tensor::zero(std::size_t rank) { return Tensor{rank, {}}; }

void Tensor::add(int k, const std::vector<LaurentPoly>& m) {
    if (m.size() != rank) throw DimensionError("tensor component has the wrong rank");
    auto it = parts.find(k);
    if (it == parts.end()) {
        it = parts.emplace(k, m).first;
    } else {
        for (std::size_t i = 0; i < rank; ++i) it->second[i] += m[i];
    }
    bool all_zero = true;
    for (const auto& e : it->second) all_zero = all_zero && e.is_zero();
    if (all_zero) parts.erase(it);
}

bool Tensor::operator==(const Tensor& o) const { return rank == o.rank && parts == o.parts; }

namespace {

std::vector<LaurentPoly> times_x_power(const std::vector<LaurentPoly>& m, int e) {
    std::vector<LaurentPoly> r;
    for (const auto& p : m) r.push_back(p * LaurentPoly::variable(p.nvars(), 0, e));
    return r;
}

std::vector<LaurentPoly> negated(std::vector<LaurentPoly> m) {
    for (auto& p : m) p = -p;
    return m;
}

}  // namespace

std::vector<LaurentPoly> ses_epsilon(const Tensor& b) {
    std::vector<LaurentPoly> out(b.rank, LaurentPoly(1));
    for (const auto& [k, m] : b.parts) {
        auto s = times_x_power(m, k);
        for (std::size_t i = 0; i < b.rank; ++i) out[i] += s[i];
    }
    return out;
}

Tensor ses_delta(const Tensor& b) {
    Tensor out = Tensor::zero(b.rank);
    for (const auto& [k, m] : b.parts) {
        out.add(k, times_x_power(m, 1));
        out.add(k + 1, negated(m));
    }
    return out;
}

SesDiagnostics ses_elements(const Tensor& b) {
    SesDiagnostics out;
    out.preimage = Tensor::zero(b.rank);
    const auto eps = ses_epsilon(b);
    out.in_kernel = true;
    for (const auto& e : eps) out.in_kernel = out.in_kernel && e.is_zero();
    if (!out.in_kernel) return out;
    // b = Σ b_k with b_k = m_k ⊗ t^k - m_k x^k ⊗ 1, because ε(b) ⊗ 1 = 0.
    for (const auto& [k, m] : b.parts) {
        if (k > 0) {
            // -(m x^{k-1} ⊗ 1 + m x^{k-2} ⊗ t + ... + m ⊗ t^{k-1})
            for (int i = 0; i < k; ++i) out.preimage.add(i, negated(times_x_power(m, k - 1 - i)));
        } else if (k < 0) {
            const int kk = -k;
            // m x^{-k} ⊗ t^{-1} + m x^{-(k-1)} ⊗ t^{-2} + ... + m x^{-1} ⊗ t^{-k}
            for (int i = 1; i <= kk; ++i) out.preimage.add(-i, times_x_power(m, -(kk + 1 - i)));
        }
    }
    out.verified = ses_delta(out.preimage) == b;
    return out;
}

}  // namespace findom
