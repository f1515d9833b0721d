#include "findom/parse.hpp"

#include <cctype>
#include <limits>

namespace findom {

namespace {

class Parser {
   public:
    Parser(std::string_view s, std::span<const std::string> vars) : s_(s), vars_(vars) {}

    LaurentPoly run() {
        LaurentPoly r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    std::size_t n() const { return vars_.size(); }

    LaurentPoly expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    LaurentPoly term() {
        LaurentPoly r = factor();
        while (eat('*')) r *= factor();
        return r;
    }

    mpz_class integer() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected integer");
        return mpz_class(std::string(s_.substr(start, i_ - start)));
    }

    int small_int(bool allow_negative) {
        skip();
        bool neg = false;
        if (allow_negative && eat('-')) neg = true;
        const std::size_t at = i_;
        mpz_class v = integer();
        if (neg) v = -v;
        if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min()) {
            i_ = at;
            fail("exponent overflow");
        }
        return static_cast<int>(v.get_si());
    }

    LaurentPoly factor() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            LaurentPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) {
                const int e = small_int(true);
                if (e < 0) {
                    if (!r.is_monomial()) fail("negative power of a non-monomial");
                    const Term& t = r.lex_trailing();
                    return LaurentPoly::monomial(t.mono.pow(e), pow_scalar(t.coeff.inverse(), -e));
                }
                return r.pow(static_cast<unsigned>(e));
            }
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            mpz_class den = 1;
            if (eat('/')) {
                const std::size_t at = i_;
                den = integer();
                if (den == 0) {
                    i_ = at;
                    fail("zero denominator");
                }
            }
            try {
                return LaurentPoly(n(), Scalar(num, den));
            } catch (const ArithmeticError& e) {
                fail(e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name(s_.substr(start, i_ - start));
            std::size_t v = n();
            for (std::size_t k = 0; k < n(); ++k)
                if (vars_[k] == name) v = k;
            if (v == n()) {
                i_ = start;
                fail("unknown variable '" + name + "'");
            }
            int e = 1;
            if (eat('^')) e = small_int(true);
            return LaurentPoly::variable(n(), v, e);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    static Scalar pow_scalar(Scalar b, int e) {
        Scalar r(1);
        for (int k = 0; k < e; ++k) r *= b;
        return r;
    }

    std::string_view s_;
    std::span<const std::string> vars_;
    std::size_t i_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::span<const std::string> vars) {
    return Parser(text, vars).run();
}

LaurentPoly parse_poly(std::string_view text, std::size_t nvars) {
    const auto names = default_var_names(nvars);
    return Parser(text, names).run();
}

}  // namespace findom
