#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace findom {

/// The coefficient field shared by every value in a session: either the
/// rationals or a prime field F_p with p < 2^31.
struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint64_t p = 0;

    static FieldSpec rational() { return {Kind::Rational, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool is_prime() const { return kind == Kind::Prime; }
    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;
};

inline constexpr std::uint64_t kDefaultPrime = 32003;

/// Session configuration. Set before any Scalar is created; switching
/// invalidates previously built values.
void set_field(const FieldSpec& spec);
const FieldSpec& field();

/// Restores the previous field on destruction (tests, bindings).
class FieldScope {
   public:
    explicit FieldScope(const FieldSpec& spec) : saved_(field()) { set_field(spec); }
    ~FieldScope() { set_field(saved_); }
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;

   private:
    FieldSpec saved_;
};

class ArithmeticError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// An element of the active coefficient field. Rationals are kept reduced
/// with positive denominator; residues live in [0, p).
class Scalar {
   public:
    Scalar() : Scalar(0L) {}
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
    Scalar(const mpz_class& num, const mpz_class& den);
    explicit Scalar(const mpq_class& q);

    bool is_zero() const;
    bool is_one() const;
    /// Rational: sign of the value. Prime field: sign of the balanced
    /// representative in (-p/2, p/2].
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const;

    /// Canonical text: "n", "-n" or "n/d"; prime-field values use the
    /// balanced representative.
    std::string to_string() const;
    /// Residue (prime field) or the reduced rational (rational field).
    std::uint64_t residue() const { return r_; }
    const mpq_class& rational() const { return q_; }

   private:
    mpq_class q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace findom
