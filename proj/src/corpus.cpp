#include "findom/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace findom {

BasedComplex example_square(std::size_t n) {
    if (n < 1) throw DimensionError("example_square needs n >= 1");
    if (n > kMaxVars) throw DimensionError("too many variables");
    BasedComplex k(LaurentPoly(n), 0, {1});
    for (std::size_t i = 1; i <= n; ++i) {
        // 1 - x1 x2 ... x_i
        Monomial m(n);
        for (std::size_t v = 0; v < i; ++v) m.set(v, 1);
        LaurentPoly p = LaurentPoly(n, Scalar(1)) - LaurentPoly::monomial(m);
        k = cone(ChainMap::scalar(k, p));
    }
    return k;
}

// ---------------------------------------------------------------------------

LaurentPoly random_poly(Rng& rng, std::size_t nvars, int terms, int span) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m.set(i, rng.range(-span, span));
        ts.push_back({m, Scalar(rng.range(-3, 3))});
    }
    return LaurentPoly::from_terms(nvars, std::move(ts));
}

LaurentPoly random_nonunit(Rng& rng, std::size_t nvars, int span) {
    for (;;) {
        std::vector<Term> ts;
        ts.push_back({Monomial(nvars), Scalar(rng.range(1, 3) * (rng.chance(50) ? 1 : -1))});
        const int extra = rng.range(1, 2);
        for (int t = 0; t < extra; ++t) {
            Monomial m(nvars);
            for (std::size_t i = 0; i < nvars; ++i) m.set(i, rng.range(0, span));
            ts.push_back({m, Scalar(rng.range(-3, 3))});
        }
        LaurentPoly p = LaurentPoly::from_terms(nvars, std::move(ts));
        if (p.size() >= 2) return p;
    }
}

namespace {

LaurentPoly random_unit(Rng& rng, std::size_t nvars) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, rng.range(-1, 1));
    int c = rng.range(1, 3);
    if (rng.chance(50)) c = -c;
    return LaurentPoly::monomial(m, Scalar(c));
}

LaurentPoly nonzero_poly(Rng& rng, std::size_t nvars, int terms, int span) {
    for (;;) {
        LaurentPoly p = random_poly(rng, nvars, terms, span);
        if (!p.is_zero()) return p;
    }
}

struct Piece {
    enum Kind { Elementary, Free, Torsion } kind;
    int degree;  // top degree (Free: the only degree)
    LaurentPoly d;
};

}  // namespace

Profile profile_by_name(const std::string& name, std::size_t nvars) {
    Profile p;
    p.name = name;
    p.nvars = nvars;
    if (name == "default") return p;
    if (name == "acyclic") {
        p.free_summands = 0;
        p.torsion_summands = 0;
        return p;
    }
    if (name == "free") {
        p.free_summands = 1;
        p.torsion_summands = 0;
        return p;
    }
    if (name == "torsion") {
        if (nvars != 1) throw std::invalid_argument("profile 'torsion' needs one variable");
        p.free_summands = 0;
        p.torsion_summands = 2;
        return p;
    }
    if (name == "mixed2") {
        p.nvars = std::max<std::size_t>(nvars, 2);
        p.degrees = 4;
        p.max_rank = 4;
        p.torsion_summands = 0;
        return p;
    }
    throw std::invalid_argument("unknown profile '" + name + "'");
}

std::vector<std::string> profile_names() { return {"default", "acyclic", "free", "torsion", "mixed2"}; }

BasedComplex twist(const BasedComplex& c, int k, std::size_t i, std::size_t j, const LaurentPoly& p) {
    const std::size_t n = nvars_of(c);
    MatrixLP pm = identity_matrix(c.rank(k), n), pinv = identity_matrix(c.rank(k), n);
    pm(i, j) += p;
    pinv(i, j) -= p;
    BasedComplex out = c;
    if (c.in_range(k - 1)) out.set_d(k, c.d(k) * pinv);
    if (c.in_range(k + 1)) out.set_d(k + 1, pm * c.d(k + 1));
    return out;
}

namespace {

BasedComplex assemble(std::size_t n, int lo, int degrees, const std::vector<Piece>& pieces) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(degrees), 0);
    auto slot = [&](int k) -> std::size_t& { return ranks[static_cast<std::size_t>(k - lo)]; };
    for (const auto& pc : pieces) {
        slot(pc.degree) += 1;
        if (pc.kind != Piece::Free) slot(pc.degree - 1) += 1;
    }
    BasedComplex c(LaurentPoly(n), lo, ranks);
    std::vector<std::size_t> used(static_cast<std::size_t>(degrees), 0);
    auto take = [&](int k) { return used[static_cast<std::size_t>(k - lo)]++; };
    std::vector<MatrixLP> d;
    for (int k = lo; k < lo + degrees; ++k) d.push_back(c.d(k));
    for (const auto& pc : pieces) {
        if (pc.kind == Piece::Free) {
            take(pc.degree);
            continue;
        }
        const std::size_t col = take(pc.degree), row = take(pc.degree - 1);
        d[static_cast<std::size_t>(pc.degree - lo)](row, col) = pc.d;
    }
    for (int k = lo + 1; k < lo + degrees; ++k) c.set_d(k, d[static_cast<std::size_t>(k - lo)]);
    return c;
}

BasedComplex apply_twists(Rng& rng, BasedComplex c, int twists, int terms, int span) {
    const std::size_t n = nvars_of(c);
    std::vector<int> eligible;
    for (int k = c.lo(); k <= c.hi(); ++k)
        if (c.rank(k) >= 2) eligible.push_back(k);
    if (eligible.empty()) return c;
    for (int t = 0; t < twists; ++t) {
        const int k = eligible[static_cast<std::size_t>(rng.range(0, static_cast<int>(eligible.size()) - 1))];
        const int r = static_cast<int>(c.rank(k));
        const auto i = static_cast<std::size_t>(rng.range(0, r - 1));
        auto j = static_cast<std::size_t>(rng.range(0, r - 2));
        if (j >= i) ++j;
        c = twist(c, k, i, j, nonzero_poly(rng, n, terms, span));
    }
    return c;
}

}  // namespace

KnownInstance random_known(std::uint64_t seed, const Profile& profile) {
    if (profile.degrees < 1) throw std::invalid_argument("profile needs at least one degree");
    if (profile.torsion_summands > 0 && profile.nvars != 1)
        throw std::invalid_argument("torsion summands need exactly one variable");
    Rng rng(seed);
    const std::size_t n = profile.nvars;
    const int lo = profile.lo, hi = profile.lo + profile.degrees - 1;
    const int n_elem = profile.elementary >= 0 ? profile.elementary : rng.range(1, 5);
    const int n_free = profile.free_summands >= 0 ? profile.free_summands : (rng.chance(40) ? rng.range(1, 2) : 0);
    const int n_tors = profile.torsion_summands >= 0 ? profile.torsion_summands : (n == 1 ? rng.range(0, 2) : 0);

    std::vector<std::size_t> load(static_cast<std::size_t>(profile.degrees), 0);
    auto fits = [&](int k, std::size_t extra) { return load[static_cast<std::size_t>(k - lo)] + extra <= profile.max_rank; };
    std::vector<Piece> pieces;
    auto place_pair = [&](Piece::Kind kind, LaurentPoly d) {
        if (hi == lo) return false;
        for (int attempt = 0; attempt < 8; ++attempt) {
            const int k = rng.range(lo + 1, hi);
            if (!fits(k, 1) || !fits(k - 1, 1)) continue;
            load[static_cast<std::size_t>(k - lo)] += 1;
            load[static_cast<std::size_t>(k - 1 - lo)] += 1;
            pieces.push_back({kind, k, std::move(d)});
            return true;
        }
        return false;
    };
    for (int e = 0; e < n_elem; ++e) place_pair(Piece::Elementary, random_unit(rng, n));
    for (int t = 0; t < n_tors; ++t) place_pair(Piece::Torsion, random_nonunit(rng, n, 2));
    for (int f = 0; f < n_free; ++f) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            const int k = rng.range(lo, hi);
            if (!fits(k, 1)) continue;
            load[static_cast<std::size_t>(k - lo)] += 1;
            pieces.push_back({Piece::Free, k, LaurentPoly(n)});
            break;
        }
    }

    KnownInstance out;
    BasedComplex c = assemble(n, lo, profile.degrees, pieces);
    const int twists = profile.twists >= 0 ? profile.twists : 2 * static_cast<int>(c.total_rank());
    out.complex = apply_twists(rng, c, twists, profile.twist_terms, profile.twist_span);

    GroundTruth& t = out.truth;
    t.lo = lo;
    t.free_rank.assign(static_cast<std::size_t>(profile.degrees), 0);
    t.torsion.assign(static_cast<std::size_t>(profile.degrees), {});
    for (const auto& pc : pieces) {
        if (pc.kind == Piece::Free) {
            t.free_rank[static_cast<std::size_t>(pc.degree - lo)] += 1;
            t.acyclic = false;
            t.finitely_dominated = false;
        } else if (pc.kind == Piece::Torsion) {
            t.torsion[static_cast<std::size_t>(pc.degree - 1 - lo)].push_back(pc.d);
            t.acyclic = false;
        }
    }
    return out;
}

BasedComplex random_complex(Rng& rng, std::size_t nvars, int degrees, std::size_t max_rank, int twists) {
    Profile p;
    p.nvars = nvars;
    p.degrees = degrees;
    p.max_rank = max_rank;
    p.torsion_summands = 0;
    p.twists = twists;
    p.twist_terms = nvars == 0 ? 1 : 2;
    return random_known(rng.next(), p).complex;
}

BasedComplex random_field_complex(Rng& rng, int degrees, std::size_t max_rank) {
    return random_complex(rng, 0, degrees, max_rank, 6);
}

// ---------------------------------------------------------------------------

namespace {

/// Nullspace basis of a dense matrix over F (rows = equations).
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
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
    for (std::size_t fcol = 0; fcol < cols; ++fcol) {
        if (is_pivot[fcol]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[fcol] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fcol];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

ChainMap random_field_chain_map(Rng& rng, const BasedComplex& c, const BasedComplex& d) {
    if (nvars_of(c) != 0 || nvars_of(d) != 0) throw DimensionError("field chain maps need n = 0");
    ChainMap f = ChainMap::zero(c, d);
    // Unknowns: entries of f_k, k = lo..hi.
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (int k = f.lo; k <= f.hi(); ++k) {
        offset.push_back(total);
        total += d.rank(k) * c.rank(k);
    }
    auto var = [&](int k, std::size_t i, std::size_t j) {
        return offset[static_cast<std::size_t>(k - f.lo)] + i * c.rank(k) + j;
    };
    std::vector<std::vector<Scalar>> eqs;
    // f_{k-1} dC_k - dD_k f_k = 0, entry (i, j) in D_{k-1} x C_k.
    for (int k = f.lo + 1; k <= f.hi(); ++k) {
        const MatrixLP dc = c.d(k), dd = d.d(k);
        for (std::size_t i = 0; i < d.rank(k - 1); ++i)
            for (std::size_t j = 0; j < c.rank(k); ++j) {
                std::vector<Scalar> row(total, Scalar(0));
                for (std::size_t l = 0; l < c.rank(k - 1); ++l) row[var(k - 1, i, l)] += dc(l, j).constant_term();
                for (std::size_t l = 0; l < d.rank(k); ++l) row[var(k, l, j)] -= dd(i, l).constant_term();
                eqs.push_back(std::move(row));
            }
    }
    const auto basis = nullspace(std::move(eqs), total);
    std::vector<Scalar> sol(total, Scalar(0));
    for (const auto& v : basis) {
        const Scalar w(rng.range(-3, 3));
        for (std::size_t i = 0; i < total; ++i) sol[i] += w * v[i];
    }
    for (int k = f.lo; k <= f.hi(); ++k) {
        MatrixLP m = zero_matrix(d.rank(k), c.rank(k), 0);
        for (std::size_t i = 0; i < d.rank(k); ++i)
            for (std::size_t j = 0; j < c.rank(k); ++j) m(i, j) = LaurentPoly(0, sol[var(k, i, j)]);
        f.set(k, std::move(m));
    }
    return f;
}

ChainHomotopy random_homotopy(Rng& rng, const BasedComplex& c, const BasedComplex& d, int terms, int span) {
    ChainHomotopy a = ChainHomotopy::zero(c, d);
    const std::size_t n = nvars_of(c);
    for (int k = a.lo; k <= a.hi(); ++k) {
        MatrixLP m = zero_matrix(d.rank(k + 1), c.rank(k), n);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = random_poly(rng, n, terms, span);
        a.set(k, std::move(m));
    }
    return a;
}

// ---------------------------------------------------------------------------

MatrixLP kronecker(const MatrixLP& a, const MatrixLP& b) {
    const std::size_t n = a.zero().nvars();
    MatrixLP out = zero_matrix(a.rows() * b.rows(), a.cols() * b.cols(), n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

TwofoldComplex random_twofold(Rng& rng, std::size_t nvars, int p_lo, int p_hi, int q_lo, int q_hi,
                              std::size_t max_rank) {
    auto shifted = [&](int lo, int hi) {
        BasedComplex x = random_complex(rng, nvars, hi - lo + 1, max_rank, 4);
        return suspend(x, lo);  // even shifts keep signs; odd ones flip, both valid
    };
    const BasedComplex x = shifted(p_lo, p_hi), y = shifted(q_lo, q_hi);
    TwofoldComplex d(nvars, p_lo, p_hi, q_lo, q_hi);
    for (int p = p_lo; p <= p_hi; ++p)
        for (int q = q_lo; q <= q_hi; ++q) d.set_rank(p, q, x.rank(p) * y.rank(q));
    // Cellwise automorphisms P_{p,q} = 1 + c e_i e_j^T.
    std::vector<std::vector<std::pair<MatrixLP, MatrixLP>>> aut;
    for (int p = p_lo; p <= p_hi; ++p) {
        aut.emplace_back();
        for (int q = q_lo; q <= q_hi; ++q) {
            const std::size_t r = d.rank(p, q);
            MatrixLP pm = identity_matrix(r, nvars), pinv = identity_matrix(r, nvars);
            if (r >= 2) {
                const auto i = static_cast<std::size_t>(rng.range(0, static_cast<int>(r) - 1));
                auto j = static_cast<std::size_t>(rng.range(0, static_cast<int>(r) - 2));
                if (j >= i) ++j;
                const LaurentPoly c = nonzero_poly(rng, nvars, 2, 1);
                pm(i, j) += c;
                pinv(i, j) -= c;
            }
            aut.back().emplace_back(std::move(pm), std::move(pinv));
        }
    }
    auto cell = [&](int p, int q) -> const std::pair<MatrixLP, MatrixLP>& {
        return aut[static_cast<std::size_t>(p - p_lo)][static_cast<std::size_t>(q - q_lo)];
    };
    for (int p = p_lo; p <= p_hi; ++p)
        for (int q = q_lo; q <= q_hi; ++q) {
            if (p > p_lo)
                d.set_dh(p, q, cell(p - 1, q).first *
                                   kronecker(x.d(p), identity_matrix(y.rank(q), nvars)) * cell(p, q).second);
            if (q > q_lo)
                d.set_dv(p, q, cell(p, q - 1).first *
                                   kronecker(identity_matrix(x.rank(p), nvars), y.d(q)) * cell(p, q).second);
        }
    return d;
}

ComposableTriple random_triple(Rng& rng, std::size_t nvars, std::size_t max_rank) {
    TwofoldComplex d = random_twofold(rng, nvars, 0, 2, 0, 2, max_rank);
    return {d.horizontal(2), d.horizontal(1)};
}

ShortExact random_split_ses(Rng& rng, std::size_t nvars, std::size_t max_rank) {
    const BasedComplex c = random_complex(rng, nvars, 3, max_rank, 3);
    const BasedComplex a = random_complex(rng, nvars, 3, max_rank, 3);
    const int lo = std::min(c.lo(), a.lo()), hi = std::max(c.hi(), a.hi());
    std::vector<std::size_t> ranks;
    for (int k = lo; k <= hi; ++k) ranks.push_back(c.rank(k) + a.rank(k));
    BasedComplex b(c.zero(), lo, ranks);
    // Gluing phi_k = dC psi_k - psi_{k-1} dA : A_k -> C_{k-1}.
    std::vector<MatrixLP> psi;
    for (int k = lo; k <= hi; ++k) {
        MatrixLP m = zero_matrix(c.rank(k), a.rank(k), nvars);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = random_poly(rng, nvars, 1, 1);
        psi.push_back(std::move(m));
    }
    auto psi_at = [&](int k) { return psi[static_cast<std::size_t>(k - lo)]; };
    for (int k = lo + 1; k <= hi; ++k) {
        const MatrixLP phi = c.d(k) * psi_at(k) - psi_at(k - 1) * a.d(k);
        b.set_d(k, block2x2(c.d(k), phi, zero_matrix(a.rank(k - 1), c.rank(k), nvars), a.d(k)));
    }
    // Random basis change of B in each degree: d' = P d P^-1.
    std::vector<MatrixLP> pm, pinv;
    for (int k = lo; k <= hi; ++k) {
        const std::size_t r = b.rank(k);
        MatrixLP p = identity_matrix(r, nvars), q = identity_matrix(r, nvars);
        for (int t = 0; t < 2 && r >= 2; ++t) {
            const auto i = static_cast<std::size_t>(rng.range(0, static_cast<int>(r) - 1));
            auto j = static_cast<std::size_t>(rng.range(0, static_cast<int>(r) - 2));
            if (j >= i) ++j;
            MatrixLP e = identity_matrix(r, nvars), einv = identity_matrix(r, nvars);
            const LaurentPoly c0 = nonzero_poly(rng, nvars, 1, 1);
            e(i, j) += c0;
            einv(i, j) -= c0;
            p = e * p;
            q = q * einv;
        }
        pm.push_back(std::move(p));
        pinv.push_back(std::move(q));
    }
    auto at = [&](std::vector<MatrixLP>& v, int k) -> const MatrixLP& { return v[static_cast<std::size_t>(k - lo)]; };
    BasedComplex b2 = b;
    for (int k = lo + 1; k <= hi; ++k) b2.set_d(k, at(pm, k - 1) * b.d(k) * at(pinv, k));
    ChainMap f = ChainMap::zero(c, b2), g = ChainMap::zero(b2, a);
    for (int k = lo; k <= hi; ++k) {
        MatrixLP inc = zero_matrix(b.rank(k), c.rank(k), nvars);
        if (!inc.empty()) inc.set_block(0, 0, identity_matrix(c.rank(k), nvars));
        MatrixLP pr = zero_matrix(a.rank(k), b.rank(k), nvars);
        if (!pr.empty()) pr.set_block(0, c.rank(k), identity_matrix(a.rank(k), nvars));
        f.set(k, at(pm, k) * inc);
        g.set(k, pr * at(pinv, k));
    }
    return {f, g};
}

}  // namespace findom
