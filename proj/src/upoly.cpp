#include "findom/upoly.hpp"

namespace findom {

RationalFunction::RationalFunction(Poly<Scalar> num, Poly<Scalar> den) {
    if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly<Scalar>();
        den_ = Poly<Scalar>(Scalar(1));
        return;
    }
    Poly<Scalar> g = gcd(num, den);
    num = num.divmod(g).first;
    den = den.divmod(g).first;
    Scalar lc = den.lead();
    num_ = num.scaled(lc.inverse());
    den_ = den.scaled(lc.inverse());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

ULaurent<Scalar> to_ulaurent(const LaurentPoly& f, std::size_t var) {
    if (f.is_zero()) return {};
    const int lo = f.min_degree(var);
    std::vector<Scalar> c(static_cast<std::size_t>(f.max_degree(var) - lo) + 1, Scalar(0));
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (i != var && t.mono[i] != 0)
                throw DimensionError("polynomial involves more than one variable");
        c[static_cast<std::size_t>(t.mono[var] - lo)] = t.coeff;
    }
    return ULaurent<Scalar>(lo, Poly<Scalar>(std::move(c)));
}

LaurentPoly from_ulaurent(const ULaurent<Scalar>& f, std::size_t nvars, std::size_t var) {
    std::vector<Term> terms;
    const auto& c = f.body().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        Monomial m(nvars);
        m.set(var, f.low() + static_cast<int>(i));
        terms.push_back({m, c[i]});
    }
    return LaurentPoly::from_terms(nvars, std::move(terms));
}

}  // namespace findom
