#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "findom/laurent.hpp"
#include "findom/scalar.hpp"

namespace findom {

/// Dense univariate polynomial over an exact field K. K needs K(int),
/// the field operations, is_zero() and to_string().
template <class K>
class Poly {
   public:
    Poly() = default;
    explicit Poly(K c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly monomial(int deg, K c = K(1)) {
        std::vector<K> v(static_cast<std::size_t>(deg) + 1, K(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : K(0); }
    const K& lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const K& k) const {
        if (k.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Euclidean division; throws on division by zero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
        Poly q, r = *this;
        if (r.degree() < d.degree()) return {q, r};
        std::vector<K> qc(static_cast<std::size_t>(r.degree() - d.degree()) + 1, K(0));
        const K inv = K(1) / d.lead();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int shift = r.degree() - d.degree();
            K c = r.lead() * inv;
            for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] -= c * d.c_[i];
            qc[shift] = c;
            r.trim();
        }
        return {Poly(std::move(qc)), r};
    }

    Poly monic() const { return is_zero() ? Poly() : scaled(K(1) / lead()); }

    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    K eval(const K& t) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs = c_[i].to_string();
            if (i == 0) {
                os << cs;
                continue;
            }
            if (cs != "1") os << "(" << cs << ")*";
            os << var;
            if (i > 1) os << '^' << i;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Univariate Laurent polynomial x^low * body over K with body(0) != 0
/// (or zero). The span deg(body) is the Euclidean function of K[x^±].
template <class K>
class ULaurent {
   public:
    ULaurent() = default;
    explicit ULaurent(K c) : body_(std::move(c)) {}
    ULaurent(int low, Poly<K> body) : low_(low), body_(std::move(body)) { canon(); }

    static ULaurent monomial(int e, K c = K(1)) { return ULaurent(e, Poly<K>(std::move(c))); }

    bool is_zero() const { return body_.is_zero(); }
    /// Units of K[x^±] are nonzero scalar multiples of monomials.
    bool is_unit() const { return !body_.is_zero() && body_.degree() == 0; }
    int span() const { return body_.degree(); }
    int low() const { return low_; }
    const Poly<K>& body() const { return body_; }

    ULaurent operator-() const { return ULaurent(low_, -body_); }
    friend ULaurent operator+(const ULaurent& a, const ULaurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int lo = std::min(a.low_, b.low_);
        return ULaurent(lo, a.raised(a.low_ - lo) + b.raised(b.low_ - lo));
    }
    friend ULaurent operator-(const ULaurent& a, const ULaurent& b) { return a + (-b); }
    friend ULaurent operator*(const ULaurent& a, const ULaurent& b) {
        if (a.is_zero() || b.is_zero()) return ULaurent();
        return ULaurent(a.low_ + b.low_, a.body_ * b.body_);
    }
    ULaurent& operator+=(const ULaurent& o) { return *this = *this + o; }
    ULaurent& operator-=(const ULaurent& o) { return *this = *this - o; }
    ULaurent& operator*=(const ULaurent& o) { return *this = *this * o; }
    bool operator==(const ULaurent& o) const {
        return body_ == o.body_ && (is_zero() || low_ == o.low_);
    }

    ULaurent inverse_unit() const {
        if (!is_unit()) throw ArithmeticError("not a unit of the Laurent ring");
        return monomial(-low_, K(1) / body_.lead());
    }

    /// a = q*b + r with span(r) < span(b).
    std::pair<ULaurent, ULaurent> divmod(const ULaurent& b) const {
        if (b.is_zero()) throw ArithmeticError("division by zero");
        auto [q, r] = body_.divmod(b.body_);
        return {ULaurent(low_ - b.low_, q), ULaurent(low_, r)};
    }
    bool divides(const ULaurent& a) const { return is_zero() ? a.is_zero() : a.divmod(*this).second.is_zero(); }

    /// Canonical associate: monic, lowest exponent 0. Returns the unit u
    /// with *this = u * canonical().
    ULaurent canonical() const { return is_zero() ? ULaurent() : ULaurent(0, body_.monic()); }
    ULaurent unit_part() const { return is_zero() ? ULaurent(K(1)) : monomial(low_, body_.lead()); }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        os << "(" << body_.to_string(var) << ")";
        if (low_ != 0) os << "*" << var << "^" << low_;
        return os.str();
    }

   private:
    Poly<K> raised(int k) const {
        if (k == 0) return body_;
        return body_ * Poly<K>::monomial(k);
    }
    void canon() {
        if (body_.is_zero()) {
            low_ = 0;
            return;
        }
        int z = 0;
        while (body_.coeff(z).is_zero()) ++z;
        if (z > 0) {
            std::vector<K> c(body_.coeffs().begin() + z, body_.coeffs().end());
            body_ = Poly<K>(std::move(c));
            low_ += z;
        }
    }

    int low_ = 0;
    Poly<K> body_;
};

/// Element of F(z): num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
   public:
    RationalFunction() : RationalFunction(0) {}
    RationalFunction(int c) : num_(Scalar(c)), den_(Scalar(1)) {}  // NOLINT
    explicit RationalFunction(const Scalar& c) : num_(c), den_(Scalar(1)) {}
    RationalFunction(Poly<Scalar> num, Poly<Scalar> den);

    const Poly<Scalar>& num() const { return num_; }
    const Poly<Scalar>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string(const std::string& var = "z") const;

   private:
    Poly<Scalar> num_, den_;
};

/// Conversions between n = 1 LaurentPoly and the dense representation.
ULaurent<Scalar> to_ulaurent(const LaurentPoly& f, std::size_t var = 0);
LaurentPoly from_ulaurent(const ULaurent<Scalar>& f, std::size_t nvars = 1, std::size_t var = 0);

}  // namespace findom
