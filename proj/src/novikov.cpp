#include "findom/novikov.hpp"

#include <sstream>

#include "findom/homology.hpp"
#include "findom/reduction.hpp"

namespace findom {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Acyclic: return "Acyclic";
        case Verdict::NotAcyclic: return "NotAcyclic";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string Decision::summary() const {
    std::ostringstream os;
    os << direction.to_string() << " " << to_string(verdict);
    switch (verdict) {
        case Verdict::Acyclic: os << " pivots=" << pivots; break;
        case Verdict::NotAcyclic:
            os << " degree=" << witness_degree << " generic_rank=" << witness_rank;
            break;
        case Verdict::Inconclusive: {
            os << " pivots=" << pivots << " stuck_ranks=(";
            if (stuck)
                for (int k = stuck->lo(); k <= stuck->hi(); ++k) os << (k > stuck->lo() ? "," : "") << stuck->rank(k);
            os << ")";
            break;
        }
    }
    return os.str();
}

LocComplex novikov_complex(const BasedComplex& c, const Direction& d) {
    const std::size_t n = nvars_of(c);
    if (d.nvars() != n) throw DimensionError("direction and complex have different variable counts");
    std::vector<std::size_t> ranks;
    for (int k = c.lo(); k <= c.hi(); ++k) ranks.push_back(c.rank(k));
    LocComplex out(LocalizedElement(n), c.lo(), ranks);
    for (int k = c.lo() + 1; k <= c.hi(); ++k)
        out.set_d(k, c.d(k).map([](const LaurentPoly& p) { return LocalizedElement(p); }));
    return out;
}

Decision acyclicity_decide(const BasedComplex& c, const Direction& d) {
    Decision out;
    out.direction = d;
    const std::size_t n = nvars_of(c);
    if (d.nvars() != n) throw DimensionError("direction and complex have different variable counts");

    const GenericRanks g = generic_ranks(c);
    if (auto k = g.first_nonzero()) {
        out.verdict = Verdict::NotAcyclic;
        out.witness_degree = *k;
        out.witness_rank = g.homology(*k);
        return out;
    }

    const LocComplex lc = novikov_complex(c, d);
    auto red = reduce_units(
        lc, LocalizedElement(LaurentPoly(n, Scalar(1))),
        [&](const LocalizedElement& e) { return is_direction_unit(e.num(), d); },
        [&](const LocalizedElement& e) { return e.inverse(d); },
        [](const LocalizedElement& e) { return e.support_size(); }, true);
    out.pivots = red.pivots;
    if (red.reduced.is_zero_complex()) {
        out.verdict = Verdict::Acyclic;
        Contraction s;
        s.lo = c.lo();
        s.s = std::move(red.h);
        out.contraction = std::move(s);
    } else {
        out.verdict = Verdict::Inconclusive;
        out.stuck = std::move(red.reduced);
    }
    return out;
}

bool verify_contraction(const BasedComplex& c, const Direction& d, const Contraction& s) {
    const std::size_t n = nvars_of(c);
    const LocalizedElement zero(n), one(LaurentPoly(n, Scalar(1)));
    auto s_at = [&](int k) {
        if (k >= s.lo && k <= s.hi()) return s.at(k);
        return MatrixLoc(c.rank(k + 1), c.rank(k), zero);
    };
    for (int k = s.lo; k <= s.hi(); ++k) {
        const MatrixLoc& m = s.at(k);
        if (m.rows() != c.rank(k + 1) || m.cols() != c.rank(k))
            throw DimensionError("contraction s_" + std::to_string(k) + " must be " +
                                 std::to_string(c.rank(k + 1)) + "x" + std::to_string(c.rank(k)) + ", got " +
                                 m.shape());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m(i, j).nvars() != n) throw DimensionError("contraction entry over the wrong ring");
                for (const auto& f : m(i, j).factors())
                    if (!is_direction_unit(f.poly, d)) return false;
            }
    }
    const LocComplex lc = novikov_complex(c, d);
    for (int k = c.lo(); k <= c.hi(); ++k) {
        const std::size_t r = c.rank(k);
        if (r == 0) continue;
        MatrixLoc lhs = lc.d(k + 1) * s_at(k);
        if (k > c.lo()) lhs += s_at(k - 1) * lc.d(k);
        const MatrixLoc id = MatrixLoc::identity(r, zero, one);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (!(lhs(i, j) == id(i, j))) return false;
    }
    return true;
}

}  // namespace findom
