#pragma once

#include <string>
#include <utility>
#include <vector>

#include "findom/laurent.hpp"

namespace findom {

enum class Sign { Plus, Minus };

/// Selects the Novikov ring R_{j-1}((x_j^{±1}))[x_{j+1}^{±1}, ..., x_n^{±1}]
/// under a renumbering of the variables. `order[i]` is the ring variable
/// that plays the role of x_{i+1}; `position` is j-1.
class Direction {
   public:
    Direction(std::size_t nvars, std::size_t position, Sign sign);
    Direction(std::vector<std::size_t> order, std::size_t position, Sign sign);

    std::size_t nvars() const { return order_.size(); }
    std::size_t position() const { return position_; }
    Sign sign() const { return sign_; }
    const std::vector<std::size_t>& order() const { return order_; }
    /// Ring variable index of x_j.
    std::size_t active() const { return order_[position_]; }
    bool is_inner(std::size_t var) const { return rank_[var] < position_; }
    bool is_outer(std::size_t var) const { return rank_[var] > position_; }

    /// "(j,+)" with 1-based position; the ordering is appended when it is
    /// not the identity.
    std::string to_string() const;
    bool operator==(const Direction&) const = default;

   private:
    std::vector<std::size_t> order_, rank_;
    std::size_t position_;
    Sign sign_;
};

std::vector<std::size_t> identity_order(std::size_t n);

/// True iff f is invertible in the Novikov ring of d: f is a single outer
/// monomial times g(x_1..x_j), and the coefficient of g at its extreme
/// x_j-degree (lowest for +, highest for -) is a scalar times a monomial.
bool is_direction_unit(const LaurentPoly& f, const Direction& d);

/// For a direction unit f, the extreme term c*x^m with f = c*x^m*(1 + t),
/// every term of t having x_j-degree of the correct sign.
Term direction_leading_term(const LaurentPoly& f, const Direction& d);

class NotAUnitError : public ArithmeticError {
   public:
    using ArithmeticError::ArithmeticError;
};

/// Denominator factor with multiplicity. Factors are normalized so their
/// lex-smallest term is the constant 1; scalar and monomial content lives
/// in the numerator.
struct UnitFactor {
    LaurentPoly poly;
    int mult = 1;
    bool operator==(const UnitFactor&) const = default;
};

/// Exact element num / prod(factors) of the localization of R_n at the
/// direction units. The denominator is kept factored.
class LocalizedElement {
   public:
    LocalizedElement() = default;
    explicit LocalizedElement(std::size_t nvars) : num_(nvars) {}
    explicit LocalizedElement(LaurentPoly num) : num_(std::move(num)) {}
    /// num / den; den must be a direction unit for d.
    LocalizedElement(LaurentPoly num, const LaurentPoly& den, const Direction& d);
    /// Trusted constructor; factors need not be normalized.
    LocalizedElement(LaurentPoly num, std::vector<UnitFactor> factors);

    std::size_t nvars() const { return num_.nvars(); }
    const LaurentPoly& num() const { return num_; }
    const std::vector<UnitFactor>& factors() const { return den_; }
    LaurentPoly denominator() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }
    bool is_polynomial() const { return den_.empty(); }
    /// Number of terms in numerator and denominator factors (pivot cost).
    std::size_t support_size() const;

    LocalizedElement operator-() const;
    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
    LocalizedElement& operator+=(const LocalizedElement& o) { return *this = *this + o; }
    LocalizedElement& operator-=(const LocalizedElement& o) { return *this = *this - o; }
    LocalizedElement& operator*=(const LocalizedElement& o) { return *this = *this * o; }
    /// Value equality (cross-multiplied).
    bool operator==(const LocalizedElement& o) const;

    /// Inverse in the localization; throws NotAUnitError unless the
    /// numerator is a direction unit for d.
    LocalizedElement inverse(const Direction& d) const;

    /// "num" or "(num)/[(f1)^2*(f2)]".
    std::string to_string(std::span<const std::string> names = {}) const;

   private:
    void reduce();
    LaurentPoly num_;
    std::vector<UnitFactor> den_;
};

/// Splits f = c*x^m * fhat with fhat's lex-smallest term equal to 1.
std::pair<Term, LaurentPoly> normalize_factor(const LaurentPoly& f);

/// Truncated Novikov expansion sum_k c_k x_j^k, k from the valuation up to
/// `order` (sign +) or from -order up to the top degree (sign -).
/// Diagnostic only.
struct TruncatedSeries {
    std::size_t var = 0;
    Sign sign = Sign::Plus;
    int order = 0;
    std::vector<std::pair<int, LaurentPoly>> slices;  // ascending in the expansion direction

    std::string to_string(std::span<const std::string> names = {}) const;
};

TruncatedSeries novikov_expand(const LocalizedElement& a, const Direction& d, int order);

}  // namespace findom
