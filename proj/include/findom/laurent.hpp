#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "findom/scalar.hpp"

namespace findom {

/// Hard limit on the number of Laurent variables of a ring.
inline constexpr std::size_t kMaxVars = 8;

class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Exponent vector x_1^{e_1} ... x_n^{e_n}; entries may be negative.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    Monomial(std::initializer_list<int> exps);

    std::size_t size() const { return n_; }
    int operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, int v) { e_[i] = v; }
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    /// Lexicographic, x_1 most significant.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const;

   private:
    std::array<std::int32_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse Laurent polynomial over the session field in a fixed number of
/// variables. Terms are kept sorted by ascending lex order with no zero
/// coefficients, so structural equality is value equality.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) { check_nvars(nvars); }
    LaurentPoly(std::size_t nvars, const Scalar& c);

    static LaurentPoly monomial(const Monomial& m, const Scalar& c = Scalar(1));
    static LaurentPoly variable(std::size_t nvars, std::size_t i, int exp = 1);
    /// Builds from arbitrary terms (unsorted, duplicates and zeros allowed).
    static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Single term c*x^e (a unit of the Laurent ring).
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;

    const Term& lex_leading() const { return terms_.back(); }
    const Term& lex_trailing() const { return terms_.front(); }
    int min_degree(std::size_t var) const;
    int max_degree(std::size_t var) const;
    /// True when no term involves x_var.
    bool free_of(std::size_t var) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly shifted(const Monomial& m) const;
    LaurentPoly pow(unsigned k) const;
    bool operator==(const LaurentPoly& o) const;

    /// Exact quotient f/g in the Laurent ring, or nullopt if g does not
    /// divide f. Throws on g = 0.
    std::optional<LaurentPoly> try_divide(const LaurentPoly& g) const;

    /// Coefficients of f as a polynomial in x_var: degree -> c_k with c_k
    /// free of x_var (same ambient variable count).
    std::map<int, LaurentPoly> slice(std::size_t var) const;

    /// Same polynomial viewed in a ring with more variables (trailing).
    LaurentPoly extended(std::size_t new_nvars) const;
    /// Substitution x_i -> images[i]; every image must be a monomial unit
    /// of the target ring.
    LaurentPoly substitute(std::span<const LaurentPoly> images, std::size_t target_nvars) const;
    /// Renumbers variables: variable i of the input becomes variable perm[i].
    LaurentPoly permuted(std::span<const std::size_t> perm) const;

    /// Canonical text in ascending lex order, e.g. "1 - x1*x2^-1"; names
    /// default to x1..xn.
    std::string to_string(std::span<const std::string> names = {}) const;

   private:
    static void check_nvars(std::size_t n);
    void check_same(const LaurentPoly& o) const;
    void normalize();

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

std::vector<std::string> default_var_names(std::size_t nvars);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace findom
