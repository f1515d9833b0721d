#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "findom/complex.hpp"
#include "findom/novikov.hpp"
#include "findom/parse.hpp"
#include "findom/scalar.hpp"

namespace findom {

/// Text format, one header item per line, `#` starts a comment:
///
///   complex square2
///   field Fp 32003          # or: field Q
///   vars x1 x2
///   degrees 0..2
///   rank 0 1
///   rank 1 2
///   rank 2 1
///   d 1 { 1 - x1*x2, 1 - x1 }
///   d 2 { -1 + x1 ; 1 - x1*x2 }
///
/// `d k` maps degree k to k-1; rows are separated by `;`, entries by `,`,
/// and a block may span lines. Omitted differentials are zero.
struct ComplexFile {
    std::string name = "unnamed";
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    std::vector<std::string> vars;
    BasedComplex complex;
};

struct ReadOptions {
    bool validate = true;
    /// Used instead of the file's `field` line.
    std::optional<FieldSpec> field;
};

/// Reads a complex and makes its field the session field before parsing
/// entries. Errors are ParseError with a 1-based line number; d^2 != 0 is
/// reported with the offending composite entry.
ComplexFile read_complex(std::istream& in, const ReadOptions& opts = {});
ComplexFile read_complex_file(const std::string& path, const ReadOptions& opts = {});
ComplexFile read_complex_string(const std::string& text, const ReadOptions& opts = {});

/// x1 .. xn.
std::vector<std::string> default_vars(std::size_t n);

/// Writes the session field.
void write_complex(std::ostream& out, const BasedComplex& c, const std::string& name = "unnamed",
                   std::span<const std::string> vars = {});
std::string write_complex_string(const BasedComplex& c, const std::string& name = "unnamed",
                                 std::span<const std::string> vars = {});

/// Contraction certificate: same header conventions plus
///
///   certificate <name>
///   direction <j> <+|->
///   order 1,2
///   s <k> { (num)/[(f1)^2*(f2)], ... }
///
/// with s_k : degree k -> k+1.
struct CertificateFile {
    std::string name = "unnamed";
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    std::vector<std::string> vars;
    Direction direction{1, 0, Sign::Plus};
    std::vector<std::size_t> ranks;
    Contraction contraction;
};

void write_certificate(std::ostream& out, const BasedComplex& c, const Decision& d, const std::string& name = "unnamed",
                       std::span<const std::string> vars = {});
std::string write_certificate_string(const BasedComplex& c, const Decision& d, const std::string& name = "unnamed",
                                     std::span<const std::string> vars = {});
CertificateFile read_certificate(std::istream& in, const ReadOptions& opts = {});
CertificateFile read_certificate_file(const std::string& path, const ReadOptions& opts = {});
CertificateFile read_certificate_string(const std::string& text, const ReadOptions& opts = {});

/// "num" or "(num)/[(f1)^m1*(f2)]".
LocalizedElement parse_localized(std::string_view text, std::span<const std::string> vars);

/// "Q", "Fp:7" or "Fp 7".
FieldSpec parse_field(const std::string& text);
std::string field_line(const FieldSpec& f);

}  // namespace findom
