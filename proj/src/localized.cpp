#include "findom/localized.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

#include "findom/upoly.hpp"

namespace findom {

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Direction::Direction(std::size_t nvars, std::size_t position, Sign sign)
    : Direction(identity_order(nvars), position, sign) {}

Direction::Direction(std::vector<std::size_t> order, std::size_t position, Sign sign)
    : order_(std::move(order)), rank_(order_.size(), SIZE_MAX), position_(position), sign_(sign) {
    if (position_ >= order_.size()) throw DimensionError("direction index out of range");
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (order_[i] >= order_.size() || rank_[order_[i]] != SIZE_MAX)
            throw DimensionError("variable ordering is not a permutation");
        rank_[order_[i]] = i;
    }
}

std::string Direction::to_string() const {
    std::ostringstream os;
    os << "(" << position_ + 1 << "," << (sign_ == Sign::Plus ? '+' : '-') << ")";
    if (order_ != identity_order(order_.size())) {
        os << " order ";
        for (std::size_t i = 0; i < order_.size(); ++i) os << (i ? "," : "") << order_[i] + 1;
    }
    return os.str();
}

namespace {

// Terms sharing the extreme x_j-degree, or nullptr when the outer support
// is not a single monomial.
const Term* extreme_term(const LaurentPoly& f, const Direction& d, std::size_t* count) {
    *count = 0;
    if (f.is_zero()) return nullptr;
    if (f.nvars() != d.nvars()) throw DimensionError("direction and polynomial ring differ");
    const Monomial& first = f.terms().front().mono;
    for (const auto& t : f.terms())
        for (std::size_t v = 0; v < f.nvars(); ++v)
            if (d.is_outer(v) && t.mono[v] != first[v]) return nullptr;
    const std::size_t a = d.active();
    const bool plus = d.sign() == Sign::Plus;
    const int k0 = plus ? f.min_degree(a) : f.max_degree(a);
    const Term* found = nullptr;
    for (const auto& t : f.terms())
        if (t.mono[a] == k0) {
            ++*count;
            found = &t;
        }
    return found;
}

}  // namespace

bool is_direction_unit(const LaurentPoly& f, const Direction& d) {
    std::size_t count;
    return extreme_term(f, d, &count) != nullptr && count == 1;
}

Term direction_leading_term(const LaurentPoly& f, const Direction& d) {
    std::size_t count;
    const Term* t = extreme_term(f, d, &count);
    if (t == nullptr || count != 1)
        throw NotAUnitError(f.to_string() + " is not a unit for direction " + d.to_string());
    return *t;
}

std::pair<Term, LaurentPoly> normalize_factor(const LaurentPoly& f) {
    if (f.is_zero()) throw ArithmeticError("zero denominator factor");
    Term lead = f.lex_trailing();
    LaurentPoly hat = f.shifted(lead.mono.inverse()).scaled(lead.coeff.inverse());
    return {lead, hat};
}

namespace {

int scalar_cmp(const Scalar& a, const Scalar& b) {
    if (field().is_prime()) return a.residue() < b.residue() ? -1 : (a.residue() > b.residue() ? 1 : 0);
    return cmp(a.rational(), b.rational());
}

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& s = a.terms()[i];
        const auto& t = b.terms()[i];
        if (auto c = s.mono <=> t.mono; c != 0) return c < 0;
        if (int c = scalar_cmp(s.coeff, t.coeff); c != 0) return c < 0;
    }
    return false;
}

void sort_merge(std::vector<UnitFactor>& fs) {
    std::sort(fs.begin(), fs.end(),
              [](const UnitFactor& a, const UnitFactor& b) { return poly_less(a.poly, b.poly); });
    std::vector<UnitFactor> out;
    for (auto& f : fs) {
        if (f.mult == 0) continue;
        if (!out.empty() && out.back().poly == f.poly)
            out.back().mult += f.mult;
        else
            out.push_back(std::move(f));
    }
    fs = std::move(out);
}

LaurentPoly expand(const std::vector<UnitFactor>& fs, std::size_t nvars) {
    LaurentPoly r(nvars, Scalar(1));
    for (const auto& f : fs) r *= f.poly.pow(static_cast<unsigned>(f.mult));
    return r;
}

}  // namespace

LocalizedElement::LocalizedElement(LaurentPoly num, const LaurentPoly& den, const Direction& d)
    : num_(std::move(num)) {
    if (den.nvars() != num_.nvars()) throw DimensionError("numerator and denominator rings differ");
    if (!is_direction_unit(den, d))
        throw NotAUnitError("denominator " + den.to_string() + " is not a unit for direction " +
                            d.to_string());
    auto [lead, hat] = normalize_factor(den);
    num_ = num_.shifted(lead.mono.inverse()).scaled(lead.coeff.inverse());
    if (!hat.is_one()) den_.push_back({std::move(hat), 1});
    reduce();
}

LocalizedElement::LocalizedElement(LaurentPoly num, std::vector<UnitFactor> factors)
    : num_(std::move(num)) {
    for (auto& f : factors) {
        if (f.mult < 0) throw ArithmeticError("negative factor multiplicity");
        auto [lead, hat] = normalize_factor(f.poly);
        for (int k = 0; k < f.mult; ++k)
            num_ = num_.shifted(lead.mono.inverse()).scaled(lead.coeff.inverse());
        if (!hat.is_one()) den_.push_back({std::move(hat), f.mult});
    }
    sort_merge(den_);
    reduce();
}

LaurentPoly LocalizedElement::denominator() const { return expand(den_, nvars()); }

std::size_t LocalizedElement::support_size() const {
    std::size_t s = num_.size();
    for (const auto& f : den_) s += f.poly.size() * static_cast<std::size_t>(f.mult);
    return s;
}

void LocalizedElement::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    if (den_.empty()) return;
    if (nvars() == 1) {
        // Univariate: full gcd reduction into a single normalized factor.
        ULaurent<Scalar> n = to_ulaurent(num_), d = to_ulaurent(denominator());
        Poly<Scalar> g = gcd(n.body(), d.body());
        ULaurent<Scalar> dn(d.low(), d.body().divmod(g).first);
        ULaurent<Scalar> nn(n.low(), n.body().divmod(g).first);
        auto [lead, hat] = normalize_factor(from_ulaurent(dn));
        num_ = from_ulaurent(nn).shifted(lead.mono.inverse()).scaled(lead.coeff.inverse());
        den_.clear();
        if (!hat.is_one()) den_.push_back({std::move(hat), 1});
        return;
    }
    for (auto& f : den_) {
        while (f.mult > 0) {
            auto q = num_.try_divide(f.poly);
            if (!q) break;
            num_ = std::move(*q);
            --f.mult;
        }
    }
    std::erase_if(den_, [](const UnitFactor& f) { return f.mult == 0; });
}

LocalizedElement LocalizedElement::operator-() const {
    LocalizedElement r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("variable-count mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        LocalizedElement r;
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        r.reduce();
        return r;
    }
    // Common denominator: factorwise maximum multiplicity.
    std::vector<UnitFactor> common;
    std::size_t i = 0, j = 0;
    std::vector<UnitFactor> extra_a, extra_b;
    while (i < a.den_.size() || j < b.den_.size()) {
        if (j == b.den_.size() || (i < a.den_.size() && poly_less(a.den_[i].poly, b.den_[j].poly))) {
            common.push_back(a.den_[i]);
            extra_b.push_back(a.den_[i]);
            ++i;
        } else if (i == a.den_.size() || poly_less(b.den_[j].poly, a.den_[i].poly)) {
            common.push_back(b.den_[j]);
            extra_a.push_back(b.den_[j]);
            ++j;
        } else {
            const int ma = a.den_[i].mult, mb = b.den_[j].mult;
            common.push_back({a.den_[i].poly, std::max(ma, mb)});
            if (mb > ma) extra_a.push_back({a.den_[i].poly, mb - ma});
            if (ma > mb) extra_b.push_back({a.den_[i].poly, ma - mb});
            ++i;
            ++j;
        }
    }
    LocalizedElement r;
    r.num_ = a.num_ * expand(extra_a, a.nvars()) + b.num_ * expand(extra_b, a.nvars());
    r.den_ = std::move(common);
    r.reduce();
    return r;
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) { return a + (-b); }

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("variable-count mismatch");
    LocalizedElement r;
    r.num_ = a.num_ * b.num_;
    if (r.num_.is_zero()) return r;
    r.den_ = a.den_;
    r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
    sort_merge(r.den_);
    r.reduce();
    return r;
}

bool LocalizedElement::operator==(const LocalizedElement& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return (*this - o).is_zero();
}

LocalizedElement LocalizedElement::inverse(const Direction& d) const {
    if (!is_direction_unit(num_, d))
        throw NotAUnitError("numerator " + num_.to_string() + " is not a unit for direction " +
                            d.to_string());
    auto [lead, hat] = normalize_factor(num_);
    LocalizedElement r;
    r.num_ = denominator().shifted(lead.mono.inverse()).scaled(lead.coeff.inverse());
    if (!hat.is_one()) r.den_.push_back({std::move(hat), 1});
    r.reduce();
    return r;
}

std::string LocalizedElement::to_string(std::span<const std::string> names) const {
    if (den_.empty()) return num_.to_string(names);
    std::ostringstream os;
    os << "(" << num_.to_string(names) << ")/[";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i) os << "*";
        os << "(" << den_[i].poly.to_string(names) << ")";
        if (den_[i].mult != 1) os << "^" << den_[i].mult;
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Truncated expansions. Minus directions are handled by mirroring x_j.

namespace {

using Series = std::map<int, LaurentPoly>;  // x_j-degree -> coefficient free of x_j

LaurentPoly mirror(const LaurentPoly& f, std::size_t var) {
    std::vector<Term> ts = f.terms();
    for (auto& t : ts) t.mono.set(var, -t.mono[var]);
    return LaurentPoly::from_terms(f.nvars(), std::move(ts));
}

int valuation(const LaurentPoly& f, std::size_t var) { return f.min_degree(var); }

// Expansion of 1/f through x_j-degree `upto`, for f a Plus-direction unit.
Series inverse_series(const LaurentPoly& f, const Direction& d, int upto) {
    const std::size_t v = d.active();
    Term lead = direction_leading_term(f, d);
    const int k0 = lead.mono[v];
    Monomial rest = lead.mono;
    rest.set(v, 0);
    // g = f / lead = 1 + (terms of positive x_j-degree)
    LaurentPoly g = f.shifted(lead.mono.inverse()).scaled(lead.coeff.inverse());
    Series gs = g.slice(v);
    const int n = upto + k0;  // need b_0 .. b_n
    std::vector<LaurentPoly> b;
    if (n >= 0) b.emplace_back(f.nvars(), Scalar(1));
    for (int i = 1; i <= n; ++i) {
        LaurentPoly acc(f.nvars());
        for (const auto& [deg, c] : gs) {
            if (deg <= 0 || deg > i) continue;
            acc -= c * b[static_cast<std::size_t>(i - deg)];
        }
        b.push_back(std::move(acc));
    }
    Series out;
    const Scalar inv = lead.coeff.inverse();
    const Monomial rest_inv = rest.inverse();
    for (int i = 0; i <= n; ++i) {
        if (b[static_cast<std::size_t>(i)].is_zero()) continue;
        out[i - k0] = b[static_cast<std::size_t>(i)].shifted(rest_inv).scaled(inv);
    }
    return out;
}

Series multiply(const Series& a, const Series& b, int upto, std::size_t nvars) {
    Series out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            if (i + j > upto) continue;
            auto [it, fresh] = out.try_emplace(i + j, nvars);
            it->second += x * y;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

TruncatedSeries novikov_expand(const LocalizedElement& a, const Direction& d, int order) {
    const std::size_t v = d.active();
    const bool minus = d.sign() == Sign::Minus;
    const Direction plus(d.order(), d.position(), Sign::Plus);
    auto fix = [&](const LaurentPoly& f) { return minus ? mirror(f, v) : f; };

    TruncatedSeries out{v, d.sign(), order, {}};
    if (a.is_zero()) return out;
    const LaurentPoly num = fix(a.num());
    struct Piece {
        LaurentPoly poly;
        int val;
    };
    std::vector<Piece> inv_pieces;
    int total = valuation(num, v);
    for (const auto& f : a.factors()) {
        LaurentPoly p = fix(f.poly);
        if (!is_direction_unit(p, plus))
            throw NotAUnitError("denominator factor is not a unit for direction " + d.to_string());
        const int val = -direction_leading_term(p, plus).mono[v];
        for (int k = 0; k < f.mult; ++k) {
            inv_pieces.push_back({p, val});
            total += val;
        }
    }
    // Partial products are truncated against the valuation still to come.
    int remaining = total - valuation(num, v);
    Series acc;
    for (const auto& [k, c] : num.slice(v))
        if (k <= order - remaining) acc.emplace(k, c);
    for (const auto& piece : inv_pieces) {
        Series s = inverse_series(piece.poly, plus, order - (total - piece.val));
        remaining -= piece.val;
        acc = multiply(acc, s, order - remaining, a.nvars());
    }
    for (const auto& [k, c] : acc) {
        if (k > order) continue;
        out.slices.emplace_back(minus ? -k : k, minus ? mirror(c, v) : c);
    }
    return out;
}

std::string TruncatedSeries::to_string(std::span<const std::string> names) const {
    std::vector<std::string> fallback;
    if (names.size() <= var) {
        fallback = default_var_names(var + 1);
        names = fallback;
    }
    std::ostringstream os;
    for (const auto& [k, c] : slices) {
        std::string piece = (c * LaurentPoly::variable(c.nvars(), var, k)).to_string(names);
        if (os.tellp() == 0)
            os << piece;
        else if (piece.front() == '-')
            os << " - " << piece.substr(1);
        else
            os << " + " << piece;
    }
    if (os.tellp() != 0) os << " + ";
    const int next = sign == Sign::Plus ? order + 1 : -(order + 1);
    os << "O(" << names[var] << "^" << next << ")";
    return os.str();
}

}  // namespace findom
