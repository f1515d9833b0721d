#include "findom/laurent.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>

namespace findom {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("exponent overflow");
    return r;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw DimensionError("too many variables");
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (int e : exps) e_[i++] = e;
}

bool Monomial::is_one() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = checked_add(e_[i], o.e_[i]);
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        if (e_[i] == INT32_MIN) throw ArithmeticError("exponent overflow");
        r.e_[i] = -e_[i];
    }
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        std::int32_t v;
        if (__builtin_mul_overflow(e_[i], k, &v)) throw ArithmeticError("exponent overflow");
        r.e_[i] = v;
    }
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != o.e_[i]) return e_[i] <=> o.e_[i];
    return n_ <=> o.n_;
}

bool Monomial::operator==(const Monomial& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------

void LaurentPoly::check_nvars(std::size_t n) {
    if (n > kMaxVars)
        throw DimensionError("at most " + std::to_string(kMaxVars) + " variables are supported");
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("variable-count mismatch: " + std::to_string(nvars_) + " vs " +
                             std::to_string(o.nvars_));
}

LaurentPoly::LaurentPoly(std::size_t nvars, const Scalar& c) : nvars_(nvars) {
    check_nvars(nvars);
    if (!c.is_zero()) terms_.push_back({Monomial(nvars), c});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Scalar& c) {
    LaurentPoly f(m.size());
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, int exp) {
    if (i >= nvars) throw DimensionError("variable index out of range");
    Monomial m(nvars);
    m.set(i, exp);
    return monomial(m);
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    LaurentPoly f(nvars);
    for (const auto& t : terms)
        if (t.mono.size() != nvars) throw DimensionError("monomial length mismatch");
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        Term acc = terms_[i];
        std::size_t j = i + 1;
        for (; j < terms_.size() && terms_[j].mono == acc.mono; ++j) acc.coeff += terms_[j].coeff;
        if (!acc.coeff.is_zero()) terms_[out++] = std::move(acc);
        i = j;
    }
    terms_.resize(out);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Scalar LaurentPoly::constant_term() const { return coefficient(Monomial(nvars_)); }

Scalar LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.mono < x; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Scalar(0);
}

int LaurentPoly::min_degree(std::size_t var) const {
    int r = INT_MAX;
    for (const auto& t : terms_) r = std::min(r, t.mono[var]);
    return r;
}

int LaurentPoly::max_degree(std::size_t var) const {
    int r = INT_MIN;
    for (const auto& t : terms_) r = std::max(r, t.mono[var]);
    return r;
}

bool LaurentPoly::free_of(std::size_t var) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [var](const Term& t) { return t.mono[var] == 0; });
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.cbegin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->mono < a->mono) {
            merged.push_back(*b++);
        } else {
            Scalar c = a->coeff + b->coeff;
            if (!c.is_zero()) merged.push_back({a->mono, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.nvars_);
    if (b.is_monomial()) return a.shifted(b.terms_[0].mono).scaled(b.terms_[0].coeff);
    if (a.is_monomial()) return b.shifted(a.terms_[0].mono).scaled(a.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    LaurentPoly r(a.nvars_);
    r.terms_ = std::move(prod);
    r.normalize();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return LaurentPoly(nvars_);
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    if (m.size() != nvars_) throw DimensionError("monomial length mismatch");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;  // order preserving
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(nvars_, Scalar(1)), base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff))
            return false;
    return true;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& g) const {
    check_same(g);
    if (g.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (is_zero()) return LaurentPoly(nvars_);
    if (g.is_monomial()) {
        return shifted(g.terms_[0].mono.inverse()).scaled(g.terms_[0].coeff.inverse());
    }
    // Any exact quotient has exponents inside this box, which bounds the
    // lex-descending sequence of quotient terms.
    std::array<int, kMaxVars> lo{}, hi{};
    for (std::size_t i = 0; i < nvars_; ++i) {
        lo[i] = min_degree(i) - g.min_degree(i);
        hi[i] = max_degree(i) - g.max_degree(i);
        if (lo[i] > hi[i]) return std::nullopt;
    }
    const Term& lead_g = g.lex_leading();
    const Scalar inv_lead = lead_g.coeff.inverse();
    const Monomial inv_mono = lead_g.mono.inverse();
    std::vector<Term> quotient;
    LaurentPoly rem = *this;
    while (!rem.is_zero()) {
        const Term& lt = rem.lex_leading();
        Monomial m = lt.mono * inv_mono;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] < lo[i] || m[i] > hi[i]) return std::nullopt;
        Scalar c = lt.coeff * inv_lead;
        quotient.push_back({m, c});
        rem -= g.shifted(m).scaled(c);
    }
    return from_terms(nvars_, std::move(quotient));
}

std::map<int, LaurentPoly> LaurentPoly::slice(std::size_t var) const {
    if (var >= nvars_) throw DimensionError("variable index out of range");
    std::map<int, std::vector<Term>> parts;
    for (const auto& t : terms_) {
        Term s = t;
        s.mono.set(var, 0);
        parts[t.mono[var]].push_back(std::move(s));
    }
    std::map<int, LaurentPoly> out;
    for (auto& [k, ts] : parts) out.emplace(k, from_terms(nvars_, std::move(ts)));
    return out;
}

LaurentPoly LaurentPoly::extended(std::size_t new_nvars) const {
    if (new_nvars < nvars_) throw DimensionError("cannot shrink variable count");
    LaurentPoly r(new_nvars);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(new_nvars);
        for (std::size_t i = 0; i < nvars_; ++i) m.set(i, t.mono[i]);
        r.terms_.push_back({m, t.coeff});
    }
    return r;  // trailing zero exponents keep lex order
}

LaurentPoly LaurentPoly::substitute(std::span<const LaurentPoly> images,
                                    std::size_t target_nvars) const {
    if (images.size() != nvars_) throw DimensionError("one image per variable required");
    for (const auto& im : images) {
        if (im.nvars() != target_nvars) throw DimensionError("image lives in the wrong ring");
        if (!im.is_monomial())
            throw ArithmeticError("substitution image " + im.to_string() +
                                  " is not a unit of the target ring");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target_nvars);
        Scalar c = t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i) {
            const int e = t.mono[i];
            if (e == 0) continue;
            const Term& im = images[i].terms()[0];
            m = m * im.mono.pow(e);
            Scalar base = e > 0 ? im.coeff : im.coeff.inverse();
            for (int k = 0; k < std::abs(e); ++k) c *= base;
        }
        out.push_back({m, c});
    }
    return from_terms(target_nvars, std::move(out));
}

LaurentPoly LaurentPoly::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != nvars_) throw DimensionError("permutation length mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) m.set(perm[i], t.mono[i]);
        out.push_back({m, t.coeff});
    }
    return from_terms(nvars_, std::move(out));
}

std::vector<std::string> default_var_names(std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

std::string LaurentPoly::to_string(std::span<const std::string> names) const {
    std::vector<std::string> fallback;
    if (names.size() < nvars_) {
        fallback = default_var_names(nvars_);
        names = fallback;
    }
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (!c.is_one() || t.mono.is_one()) {
            os << c.to_string();
            wrote = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            const int e = t.mono[i];
            if (e == 0) continue;
            if (wrote) os << '*';
            os << names[i];
            if (e != 1) os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

}  // namespace findom
