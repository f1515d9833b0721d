#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "findom/laurent.hpp"

namespace findom {

/// Syntax or semantic error in textual input; `position` is a 0-based
/// character offset, or a line number for file-level errors.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
    /// File-level error; `position` holds the 1-based line number.
    static ParseError at_line(const std::string& msg, std::size_t line) { return ParseError(msg, line, 0); }
    std::size_t position() const { return position_; }

   private:
    ParseError(const std::string& msg, std::size_t line, int)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), position_(line) {}
    std::size_t position_;
};

/// Parses a Laurent polynomial expression over the declared variables.
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := coeff | var ['^' sint] | '(' expr ')' ['^' int]
///   coeff  := int ['/' int]
LaurentPoly parse_poly(std::string_view text, std::span<const std::string> vars);
/// Same with variables x1..xn.
LaurentPoly parse_poly(std::string_view text, std::size_t nvars);

}  // namespace findom
