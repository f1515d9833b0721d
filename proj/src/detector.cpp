#include "findom/detector.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "findom/reduction.hpp"
#include "findom/snf.hpp"

namespace findom {

std::string to_string(FDVerdict v) {
    switch (v) {
        case FDVerdict::FinitelyDominated: return "FinitelyDominated";
        case FDVerdict::NotFinitelyDominated: return "NotFinitelyDominated";
        case FDVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

FDVerdict aggregate(const std::vector<Decision>& decisions) {
    bool all = true;
    for (const auto& d : decisions) {
        if (d.verdict == Verdict::NotAcyclic) return FDVerdict::NotFinitelyDominated;
        if (d.verdict != Verdict::Acyclic) all = false;
    }
    return all ? FDVerdict::FinitelyDominated : FDVerdict::Inconclusive;
}

unsigned default_threads() {
    if (const char* env = std::getenv("FINDOM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const auto n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string join_order(const std::vector<std::size_t>& order) {
    std::ostringstream os;
    for (std::size_t i = 0; i < order.size(); ++i) os << (i ? "," : "") << order[i] + 1;
    return os.str();
}

void check_ordering(const std::vector<std::size_t>& ordering, std::size_t n) {
    if (ordering.size() != n) throw DimensionError("ordering must list all " + std::to_string(n) + " variables");
    std::vector<bool> seen(n, false);
    for (auto v : ordering) {
        if (v >= n || seen[v]) throw DimensionError("ordering is not a permutation");
        seen[v] = true;
    }
}

// The Novikov ring of a direction depends only on the inner variable set,
// the active variable and the sign; decisions are shared across orderings.
using DirectionKey = std::tuple<unsigned, std::size_t, int>;

DirectionKey key_of(const Direction& d) {
    unsigned inner = 0;
    for (std::size_t i = 0; i < d.position(); ++i) inner |= 1u << d.order()[i];
    return {inner, d.active(), d.sign() == Sign::Plus ? 1 : -1};
}

std::vector<Direction> directions_for(const std::vector<std::size_t>& ordering) {
    std::vector<Direction> out;
    for (std::size_t j = ordering.size(); j-- > 0;) {
        out.emplace_back(ordering, j, Sign::Plus);
        out.emplace_back(ordering, j, Sign::Minus);
    }
    return out;
}

// Decides each distinct direction once, concurrently.
std::vector<std::vector<Decision>> decide_all(const BasedComplex& c,
                                              const std::vector<std::vector<Direction>>& groups) {
    std::map<DirectionKey, std::size_t> index;
    std::vector<Direction> unique;
    for (const auto& g : groups)
        for (const auto& d : g)
            if (index.emplace(key_of(d), unique.size()).second) unique.push_back(d);
    std::vector<Decision> results(unique.size());
    parallel_for(unique.size(), default_threads(),
                 [&](std::size_t i) { results[i] = acyclicity_decide(c, unique[i]); });
    std::vector<std::vector<Decision>> out;
    for (const auto& g : groups) {
        out.emplace_back();
        for (const auto& d : g) {
            Decision dec = results[index.at(key_of(d))];
            dec.direction = d;
            out.back().push_back(std::move(dec));
        }
    }
    return out;
}

FDVerdict snf_oracle(const BasedComplex& c) {
    const HomologyReport h = homology_pid(c);
    for (const auto& deg : h.degrees)
        if (deg.free_rank != 0) return FDVerdict::NotFinitelyDominated;
    return FDVerdict::FinitelyDominated;
}

}  // namespace

FDReport ranicki_1var(const BasedComplex& c) {
    if (nvars_of(c) != 1) throw DimensionError("ranicki_1var requires exactly one variable");
    FDReport r;
    r.method = "ranicki";
    r.ordering = {0};
    r.decisions = decide_all(c, {directions_for({0})}).front();
    r.verdict = aggregate(r.decisions);
    r.oracle = snf_oracle(c);
    r.defect = r.verdict != FDVerdict::Inconclusive && r.verdict != *r.oracle;
    return r;
}

FDReport findom_main(const BasedComplex& c, const std::vector<std::size_t>& ordering) {
    const std::size_t n = nvars_of(c);
    check_ordering(ordering, n);
    if (n == 1) return ranicki_1var(c);
    FDReport r;
    r.method = "novikov";
    r.ordering = ordering;
    if (n == 0) {
        r.verdict = FDVerdict::FinitelyDominated;
        return r;
    }
    r.decisions = decide_all(c, {directions_for(ordering)}).front();
    r.verdict = aggregate(r.decisions);
    return r;
}

FDReport findom_main(const BasedComplex& c) {
    std::vector<std::size_t> id(nvars_of(c));
    std::iota(id.begin(), id.end(), 0);
    return findom_main(c, id);
}

FDReport findom_all_orders(const BasedComplex& c, std::size_t max_vars) {
    const std::size_t n = nvars_of(c);
    if (n > max_vars)
        throw DimensionError("all-orders mode is limited to " + std::to_string(max_vars) + " variables");
    if (n <= 1) return findom_main(c);
    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do orders.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<Direction>> groups;
    for (const auto& o : orders) groups.push_back(directions_for(o));
    auto decided = decide_all(c, groups);

    FDReport r;
    r.method = "all-orders";
    bool any_fd = false, any_nfd = false;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        FDReport sub;
        sub.method = "novikov";
        sub.ordering = orders[i];
        sub.decisions = std::move(decided[i]);
        sub.verdict = aggregate(sub.decisions);
        if (sub.verdict == FDVerdict::FinitelyDominated && !any_fd) {
            any_fd = true;
            r.ordering = sub.ordering;
            r.decisions = sub.decisions;
        }
        if (sub.verdict == FDVerdict::NotFinitelyDominated) any_nfd = true;
        r.per_ordering.push_back(std::move(sub));
    }
    if (any_nfd) {
        r.verdict = FDVerdict::NotFinitelyDominated;
        r.defect = any_fd;
    } else {
        r.verdict = any_fd ? FDVerdict::FinitelyDominated : FDVerdict::Inconclusive;
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

using RF = ULaurent<RationalFunction>;

// p(z, w) as a Laurent polynomial in w over F(z).
RF to_rational_laurent(const LaurentPoly& p, std::size_t zvar, std::size_t wvar) {
    std::map<int, std::map<int, Scalar>> by_w;  // w-degree -> z-degree -> coeff
    for (const auto& t : p.terms()) by_w[t.mono[wvar]][t.mono[zvar]] += t.coeff;
    RF out;
    for (const auto& [w, zs] : by_w) {
        const int zlo = zs.begin()->first, zhi = zs.rbegin()->first;
        std::vector<Scalar> cs(static_cast<std::size_t>(zhi - zlo) + 1, Scalar(0));
        for (const auto& [z, c] : zs) cs[static_cast<std::size_t>(z - zlo)] = c;
        Poly<Scalar> num(std::move(cs)), den = Poly<Scalar>::monomial(0);
        if (zlo > 0)
            num = num * Poly<Scalar>::monomial(zlo);
        else if (zlo < 0)
            den = Poly<Scalar>::monomial(-zlo);
        out = out + RF::monomial(w, RationalFunction(num, den));
    }
    return out;
}

FieldCheck check_generic(const BasedComplex& c, std::size_t var) {
    FieldCheck fc;
    fc.var = var;
    fc.engine = HomologyEngine::Generic;
    fc.method = "generic-rank";
    const GenericRanks g = generic_ranks(c);
    if (auto k = g.first_nonzero()) {
        fc.verdict = Verdict::NotAcyclic;
        fc.witness_degree = *k;
    } else {
        fc.verdict = Verdict::Acyclic;
    }
    return fc;
}

FieldCheck check_snf(const BasedComplex& c, std::size_t zvar) {
    FieldCheck fc;
    fc.var = zvar;
    fc.engine = HomologyEngine::PID;
    fc.method = "snf";
    const std::size_t wvar = 1 - zvar;
    std::map<int, SnfData<RationalFunction>> forms;
    for (int k = c.lo() + 1; k <= c.hi(); ++k) {
        const MatrixLP d = c.d(k);
        if (d.empty()) continue;
        forms.emplace(k, smith_form(d.map([&](const LaurentPoly& p) { return to_rational_laurent(p, zvar, wvar); })));
    }
    auto rank_of = [&](int k) -> std::size_t {
        auto it = forms.find(k);
        return it == forms.end() ? 0 : it->second.rank;
    };
    fc.verdict = Verdict::Acyclic;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        bool zero = c.rank(k) == rank_of(k) + rank_of(k + 1);
        if (zero && forms.count(k + 1))
            for (const auto& e : forms.at(k + 1).factors)
                if (e.span() != 0) zero = false;
        if (!zero) {
            fc.verdict = Verdict::NotAcyclic;
            fc.witness_degree = k;
            break;
        }
    }
    return fc;
}

// Over F(z)[others^±] the units are F(z)^× times monomials in the others.
FieldCheck check_reduction(const BasedComplex& c, std::size_t zvar) {
    FieldCheck fc = check_generic(c, zvar);
    fc.method = "reduction";
    if (fc.verdict == Verdict::NotAcyclic) return fc;
    const std::size_t n = nvars_of(c);
    auto outer_monomial = [&](const LaurentPoly& p) -> std::optional<Monomial> {
        std::optional<Monomial> m;
        for (const auto& t : p.terms()) {
            Monomial o = t.mono;
            o.set(zvar, 0);
            if (m && !(*m == o)) return std::nullopt;
            m = o;
        }
        return m;
    };
    std::vector<std::size_t> ranks;
    for (int k = c.lo(); k <= c.hi(); ++k) ranks.push_back(c.rank(k));
    LocComplex lc(LocalizedElement(n), c.lo(), ranks);
    for (int k = c.lo() + 1; k <= c.hi(); ++k)
        lc.set_d(k, c.d(k).map([](const LaurentPoly& p) { return LocalizedElement(p); }));
    auto red = reduce_units(
        lc, LocalizedElement(LaurentPoly(n, Scalar(1))),
        [&](const LocalizedElement& e) { return outer_monomial(e.num()).has_value(); },
        [&](const LocalizedElement& e) {
            const Monomial m = *outer_monomial(e.num());
            const LaurentPoly q = e.num().shifted(m.inverse());  // only z_j remains
            return LocalizedElement(e.denominator().shifted(m.inverse()), {UnitFactor{q, 1}});
        },
        [](const LocalizedElement& e) { return e.support_size(); }, false);
    fc.verdict = red.reduced.is_zero_complex() ? Verdict::Acyclic : Verdict::Inconclusive;
    return fc;
}

}  // namespace

FDReport field_findom(const BasedComplex& c) {
    const std::size_t n = nvars_of(c);
    FDReport r;
    r.method = "field";
    r.ordering.resize(n);
    std::iota(r.ordering.begin(), r.ordering.end(), 0);
    r.field_checks.resize(n);
    parallel_for(n, default_threads(), [&](std::size_t j) {
        if (n == 1)
            r.field_checks[j] = check_generic(c, j);
        else if (n == 2)
            r.field_checks[j] = check_snf(c, j);
        else
            r.field_checks[j] = check_reduction(c, j);
    });
    bool all = true, refuted = false;
    for (const auto& fc : r.field_checks) {
        if (fc.verdict == Verdict::NotAcyclic) refuted = true;
        if (fc.verdict != Verdict::Acyclic) all = false;
    }
    r.verdict = refuted ? FDVerdict::NotFinitelyDominated
                        : (all ? FDVerdict::FinitelyDominated : FDVerdict::Inconclusive);
    return r;
}

// ---------------------------------------------------------------------------

std::string FDReport::to_string() const {
    std::ostringstream os;
    os << "verdict: " << findom::to_string(verdict) << "\n";
    os << "method: " << method << "\n";
    if (!ordering.empty()) os << "ordering: " << join_order(ordering) << "\n";
    for (const auto& d : decisions) os << "decision " << d.summary() << "\n";
    for (const auto& f : field_checks)
        os << "field z" << f.var + 1 << ": " << findom::to_string(f.verdict) << " (" << f.method
           << (f.verdict == Verdict::NotAcyclic ? ", degree " + std::to_string(f.witness_degree) : "") << ")\n";
    for (const auto& sub : per_ordering)
        os << "order " << join_order(sub.ordering) << ": " << findom::to_string(sub.verdict) << "\n";
    if (oracle) os << "oracle: " << findom::to_string(*oracle) << "\n";
    os << "defect: " << (defect ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace findom
