#include <sstream>

#include "doctest.h"
#include "findom/corpus.hpp"
#include "findom/detector.hpp"
#include "findom/io.hpp"
#include "test_util.hpp"

using namespace findom;
using findom::test::P;

namespace {

std::string fixture(const std::string& name) { return std::string(FINDOM_DATA_DIR) + "/" + name; }

// Prepends the header line, so body line k is file line k + 1.
std::string doc(const std::string& body) { return "complex t\n" + body; }

std::string parse_error(const std::string& body, const ReadOptions& opts = {}) {
    try {
        read_complex_string(doc(body), opts);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

const char* kSquare = R"(complex sq
field Fp 32003
vars a b
degrees 0..2
rank 0 1
rank 1 2
rank 2 1
# a block may span lines
d 1 { 1 - a*b,
      1 - a }
d 2 { -1 + a ;
      1 - a*b }
)";

}  // namespace

TEST_CASE("reading a complex") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const ComplexFile f = read_complex_string(kSquare);
    CHECK(f.name == "sq");
    CHECK(f.vars == std::vector<std::string>{"a", "b"});
    CHECK(f.field == FieldSpec::prime(32003));
    CHECK(f.complex == example_square(2));

    const ComplexFile q = read_complex_string(doc("field Q\nvars x\ndegrees -1..0\nrank -1 1\nrank 0 1\nd 0 { 1/2 - x }\n"));
    CHECK(field() == FieldSpec::rational());
    CHECK(q.complex.lo() == -1);
    CHECK(q.complex.d(0)(0, 0).to_string() == "1/2 - x1");
}

TEST_CASE("write then read is the identity") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const BasedComplex c = random_known(seed, seed % 2 ? Profile{} : profile_by_name("mixed2", 2)).complex;
        const std::string a = write_complex_string(c, "r" + std::to_string(seed));
        const ComplexFile f = read_complex_string(a);
        CHECK(f.complex == c);
        CHECK(f.name == "r" + std::to_string(seed));
        CHECK(write_complex_string(f.complex, f.name) == a);
    }
    FieldScope q(FieldSpec::rational());
    const BasedComplex c = read_complex_string(doc("field Q\nvars x\ndegrees 0..1\nrank 0 1\nrank 1 1\nd 1 { -3/7 + x^-2 }\n")).complex;
    CHECK(read_complex_string(write_complex_string(c)).complex == c);
}

TEST_CASE("reader errors") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    CHECK(parse_error("vars x\ndegrees 0..1\nrank 0 1\nrank 1 1\nd 1 { x\n").find("line") != std::string::npos);
    CHECK(parse_error("vars x\ndegrees 0..1\nbogus 3\n").find("line 4") == 0);
    CHECK(parse_error("vars x\ndegrees 1..0\n").find("line 3") == 0);
    CHECK(parse_error("vars x\ndegrees 0..1\nrank 5 1\n").find("line 4") == 0);
    CHECK(parse_error("vars x\ndegrees 0..1\nrank 0 1\nrank 1 1\nd 1 { y }\n").find("line 6") == 0);
    CHECK(parse_error("vars x\ndegrees 0..1\nrank 0 1\nrank 1 2\nd 1 { x }\n").find("line 6") == 0);
    CHECK(parse_error("field GF4\n").find("line 2") == 0);
    CHECK(parse_error("").find("vars") != std::string::npos);
    CHECK(parse_error("vars x\n").find("degrees") != std::string::npos);

    const std::string bad = "vars x1\ndegrees 0..2\nrank 0 1\nrank 1 1\nrank 2 1\nd 1 { x1 }\nd 2 { x1 }\n";
    const std::string msg = parse_error(bad);
    CHECK(msg.find("not a complex") != std::string::npos);
    CHECK(msg.find("d_1 * d_2") != std::string::npos);
    CHECK(msg.find("x1^2") != std::string::npos);
    ReadOptions lax;
    lax.validate = false;
    CHECK_FALSE(validate(read_complex_string(doc(bad), lax).complex).ok);
}

TEST_CASE("field selection") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    CHECK(parse_field("Q") == FieldSpec::rational());
    CHECK(parse_field("Fp:7") == FieldSpec::prime(7));
    CHECK(parse_field("Fp 7") == FieldSpec::prime(7));
    CHECK_THROWS(parse_field("Fp 8"));
    CHECK(field_line(FieldSpec::prime(7)) == "field Fp 7");
    CHECK(field_line(FieldSpec::rational()) == "field Q");

    ReadOptions o;
    o.field = FieldSpec::prime(5);
    const ComplexFile f = read_complex_string(doc("field Q\nvars x\ndegrees 0..1\nrank 0 1\nrank 1 1\nd 1 { 7 + x }\n"), o);
    CHECK(field() == FieldSpec::prime(5));
    CHECK(f.complex.d(1)(0, 0).to_string() == "2 + x1");
}

TEST_CASE("localized entries") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const std::vector<std::string> vars = {"x", "y"};
    const LocalizedElement e = parse_localized("(1 + y)/[(1 - x)^2*(1 + x*y)]", vars);
    CHECK(e.factors().size() == 2);
    CHECK(e.num() == P("1 + x2", 2));
    CHECK(parse_localized(e.to_string(vars), vars) == e);
    CHECK(parse_localized("x^-1", vars) == LocalizedElement(P("x1^-1", 2)));
    CHECK_THROWS_AS(parse_localized("(1)/[(1 - x", vars), ParseError);
}

TEST_CASE("certificates round trip and verify") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const BasedComplex sq = example_square(2);
    for (const Decision& d : findom_main(sq).decisions) {
        REQUIRE(d.contraction);
        const std::string text = write_certificate_string(sq, d, "sq");
        const CertificateFile cf = read_certificate_string(text);
        CHECK(cf.name == "sq");
        CHECK(cf.direction == d.direction);
        CHECK(cf.ranks == std::vector<std::size_t>{1, 2, 1});
        CHECK(verify_contraction(sq, cf.direction, cf.contraction));
        CHECK(write_certificate_string(sq, Decision{d.direction, d.verdict, cf.contraction}, "sq") == text);
    }
    const Decision swapped = acyclicity_decide(sq, Direction(std::vector<std::size_t>{1, 0}, 1, Sign::Minus));
    if (swapped.contraction) {
        const CertificateFile cf = read_certificate_string(write_certificate_string(sq, swapped));
        CHECK(cf.direction.order() == std::vector<std::size_t>{1, 0});
    }
    Decision open;
    CHECK_THROWS(write_certificate_string(sq, open));
}

TEST_CASE("data fixtures") {
    FieldScope fs(FieldSpec::prime(kDefaultPrime));
    const ComplexFile sq = read_complex_file(fixture("square2.cplx"));
    CHECK(sq.complex.rank(0) == 1);
    CHECK(sq.complex.rank(1) == 2);
    CHECK(sq.complex.rank(2) == 1);
    CHECK(sq.complex == example_square(2));
    CHECK(read_complex_file(fixture("free1.cplx")).vars == std::vector<std::string>{"x"});
    CHECK(read_complex_file(fixture("stuck.cplx")).complex.d(1)(0, 0) == P("1 - x1 - x2", 2));
    CHECK_THROWS_AS(read_complex_file(fixture("bad_d2.cplx")), ParseError);
    CHECK_THROWS(read_complex_file(fixture("missing.cplx")));
}
