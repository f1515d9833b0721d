#include "findom/scalar.hpp"

#include <ostream>

namespace findom {

namespace {

FieldSpec g_field = FieldSpec::rational();

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime_number(p))
        throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                    std::to_string(p));
    return {Kind::Prime, p};
}

std::string FieldSpec::to_string() const {
    return is_prime() ? "Fp " + std::to_string(p) : std::string("Q");
}

void set_field(const FieldSpec& spec) { g_field = spec; }
const FieldSpec& field() { return g_field; }

Scalar::Scalar(long v) {
    if (g_field.is_prime()) {
        long p = static_cast<long>(g_field.p);
        long m = v % p;
        r_ = static_cast<std::uint64_t>(m < 0 ? m + p : m);
    } else {
        q_ = v;
    }
}

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    if (g_field.is_prime()) {
        std::uint64_t d = reduce_mpz(den, g_field.p);
        if (d == 0) throw ArithmeticError("denominator vanishes in " + g_field.to_string());
        r_ = reduce_mpz(num, g_field.p) * mod_pow(d, g_field.p - 2, g_field.p) % g_field.p;
    } else {
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
}

Scalar::Scalar(const mpq_class& q) : Scalar(q.get_num(), q.get_den()) {}

bool Scalar::is_zero() const { return g_field.is_prime() ? r_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return g_field.is_prime() ? r_ == 1 : q_ == 1; }

int Scalar::sign() const {
    if (g_field.is_prime()) {
        if (r_ == 0) return 0;
        return r_ <= g_field.p / 2 ? 1 : -1;
    }
    return sgn(q_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (g_field.is_prime())
        s.r_ = r_ == 0 ? 0 : g_field.p - r_;
    else
        s.q_ = -q_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (g_field.is_prime()) {
        r_ += o.r_;
        if (r_ >= g_field.p) r_ -= g_field.p;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (g_field.is_prime())
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + g_field.p - o.r_;
    else
        q_ -= o.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (g_field.is_prime())
        r_ = r_ * o.r_ % g_field.p;
    else
        q_ *= o.q_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero scalar");
    Scalar s = *this;
    if (g_field.is_prime())
        s.r_ = mod_pow(r_, g_field.p - 2, g_field.p);
    else
        s.q_ = 1 / q_;
    return s;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    return g_field.is_prime() ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::to_string() const {
    if (g_field.is_prime()) {
        if (sign() >= 0) return std::to_string(r_);
        return "-" + std::to_string(g_field.p - r_);
    }
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace findom
