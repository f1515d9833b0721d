#include "findom/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace findom {

std::vector<std::string> default_vars(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
    return v;
}

FieldSpec parse_field(const std::string& text) {
    std::string t = text;
    for (auto& ch : t)
        if (ch == ':') ch = ' ';
    std::istringstream is(t);
    std::string kind;
    is >> kind;
    if (kind == "Q") {
        std::string rest;
        if (is >> rest) throw std::invalid_argument("unexpected text after field Q");
        return FieldSpec::rational();
    }
    if (kind == "Fp") {
        std::uint64_t p = 0;
        if (!(is >> p)) throw std::invalid_argument("field Fp needs a prime");
        std::string rest;
        if (is >> rest) throw std::invalid_argument("unexpected text after field Fp " + std::to_string(p));
        return FieldSpec::prime(p);
    }
    throw std::invalid_argument("unknown field '" + text + "' (use Q or Fp:<p>)");
}

std::string field_line(const FieldSpec& f) {
    return f.is_prime() ? "field Fp " + std::to_string(f.p) : std::string("field Q");
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

struct Statement {
    std::size_t line;
    std::string keyword;
    std::string args;   // text after the keyword (and before '{')
    std::string block;  // inside { }, empty when absent
    bool has_block = false;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) { throw ParseError::at_line(msg, line); }

std::vector<Statement> statements(std::istream& in) {
    std::vector<Statement> out;
    std::string raw;
    std::size_t lineno = 0;
    Statement* open = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (open) {
            const auto close = line.find('}');
            if (close == std::string::npos) {
                open->block += " " + line;
                continue;
            }
            open->block += " " + line.substr(0, close);
            if (!trim(line.substr(close + 1)).empty()) fail(lineno, "text after '}'");
            open = nullptr;
            continue;
        }
        line = trim(line);
        if (line.empty()) continue;
        Statement st;
        st.line = lineno;
        const auto sp = line.find_first_of(" \t");
        st.keyword = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        const auto brace = rest.find('{');
        if (brace != std::string::npos) {
            st.has_block = true;
            st.args = trim(rest.substr(0, brace));
            std::string body = rest.substr(brace + 1);
            const auto close = body.find('}');
            out.push_back(std::move(st));
            if (close == std::string::npos) {
                out.back().block = body;
                open = &out.back();
            } else {
                out.back().block = body.substr(0, close);
                if (!trim(body.substr(close + 1)).empty()) fail(lineno, "text after '}'");
            }
            continue;
        }
        st.args = trim(rest);
        out.push_back(std::move(st));
    }
    if (open) fail(open->line, "unterminated '{' block");
    return out;
}

int parse_int(const std::string& s, std::size_t line, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size() || v < -1000000 || v > 1000000) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        fail(line, "bad " + what + " '" + s + "'");
    }
}

// Splits on `sep` outside parentheses and brackets.
std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

template <class T, class Parse>
Matrix<T> parse_block(const Statement& st, std::size_t rows, std::size_t cols, const T& zero, Parse&& parse) {
    Matrix<T> m(rows, cols, zero);
    const std::string body = trim(st.block);
    if (rows == 0 || cols == 0) {
        if (!body.empty()) fail(st.line, "block for a " + m.shape() + " matrix must be empty");
        return m;
    }
    const auto row_texts = split_top(body, ';');
    if (row_texts.size() != rows)
        fail(st.line, "expected " + std::to_string(rows) + " rows, found " + std::to_string(row_texts.size()));
    for (std::size_t i = 0; i < rows; ++i) {
        const auto entries = split_top(row_texts[i], ',');
        if (entries.size() != cols)
            fail(st.line, "row " + std::to_string(i + 1) + ": expected " + std::to_string(cols) + " entries, found " +
                              std::to_string(entries.size()));
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m(i, j) = parse(entries[j]);
            } catch (const ParseError& e) {
                fail(st.line, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what());
            }
        }
    }
    return m;
}

template <class T>
std::string format_block(const Matrix<T>& m, std::span<const std::string> vars) {
    std::ostringstream os;
    os << "{ ";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << " ; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j).to_string(vars);
        }
    }
    os << " }";
    return os.str();
}

// Shared header: name, field, vars, degrees, ranks.
struct Header {
    std::string name = "unnamed";
    std::optional<FieldSpec> field;
    std::optional<std::vector<std::string>> vars;
    std::optional<std::pair<int, int>> degrees;
    std::map<int, std::size_t> ranks;
};

bool header_item(const Statement& st, Header& h) {
    if (st.keyword == "field") {
        try {
            h.field = parse_field(st.args);
        } catch (const std::invalid_argument& e) {
            fail(st.line, e.what());
        }
        return true;
    }
    if (st.keyword == "vars") {
        std::istringstream is(st.args);
        std::vector<std::string> v;
        for (std::string s; is >> s;) {
            for (const auto& w : v)
                if (w == s) fail(st.line, "duplicate variable '" + s + "'");
            v.push_back(s);
        }
        if (v.size() > kMaxVars) fail(st.line, "at most " + std::to_string(kMaxVars) + " variables are supported");
        h.vars = std::move(v);
        return true;
    }
    if (st.keyword == "degrees") {
        const auto dots = st.args.find("..");
        if (dots == std::string::npos) fail(st.line, "degrees must read '<lo>..<hi>'");
        const int lo = parse_int(trim(st.args.substr(0, dots)), st.line, "degree");
        const int hi = parse_int(trim(st.args.substr(dots + 2)), st.line, "degree");
        if (hi < lo) fail(st.line, "empty degree range");
        h.degrees = {lo, hi};
        return true;
    }
    if (st.keyword == "rank") {
        std::istringstream is(st.args);
        std::string k, r, extra;
        if (!(is >> k >> r) || (is >> extra)) fail(st.line, "rank must read 'rank <k> <r>'");
        const int deg = parse_int(k, st.line, "degree");
        const int rk = parse_int(r, st.line, "rank");
        if (rk < 0) fail(st.line, "negative rank");
        if (!h.degrees) fail(st.line, "rank before degrees");
        if (deg < h.degrees->first || deg > h.degrees->second)
            fail(st.line, "rank for degree " + k + " outside the declared range");
        if (!h.ranks.emplace(deg, static_cast<std::size_t>(rk)).second) fail(st.line, "duplicate rank for degree " + k);
        return true;
    }
    return false;
}

void apply_field(const Header& h, const ReadOptions& opts, FieldSpec& out) {
    out = opts.field ? *opts.field : (h.field ? *h.field : field());
    set_field(out);
}

BasedComplex empty_complex(const Header& h, std::size_t nvars) {
    std::vector<std::size_t> ranks;
    for (int k = h.degrees->first; k <= h.degrees->second; ++k) {
        auto it = h.ranks.find(k);
        ranks.push_back(it == h.ranks.end() ? 0 : it->second);
    }
    return BasedComplex(LaurentPoly(nvars), h.degrees->first, ranks);
}

void require_header(const Header& h, std::size_t line) {
    if (!h.vars) fail(line, "missing 'vars' line");
    if (!h.degrees) fail(line, "missing 'degrees' line");
}

}  // namespace

ComplexFile read_complex(std::istream& in, const ReadOptions& opts) {
    const auto sts = statements(in);
    if (sts.empty() || sts.front().keyword != "complex") fail(sts.empty() ? 1 : sts.front().line, "expected 'complex <name>'");
    Header h;
    h.name = sts.front().args.empty() ? "unnamed" : sts.front().args;
    std::size_t i = 1;
    for (; i < sts.size() && sts[i].keyword != "d"; ++i)
        if (!header_item(sts[i], h)) fail(sts[i].line, "unknown header item '" + sts[i].keyword + "'");
    require_header(h, i < sts.size() ? sts[i].line : sts.back().line);

    ComplexFile out;
    out.name = h.name;
    out.vars = *h.vars;
    apply_field(h, opts, out.field);
    BasedComplex c = empty_complex(h, out.vars.size());
    std::map<int, bool> seen;
    for (; i < sts.size(); ++i) {
        const Statement& st = sts[i];
        if (st.keyword != "d") fail(st.line, "unexpected '" + st.keyword + "' after the differentials began");
        if (!st.has_block) fail(st.line, "expected 'd <k> { ... }'");
        const int k = parse_int(st.args, st.line, "degree");
        if (k <= c.lo() || k > c.hi()) fail(st.line, "d " + st.args + " outside the degree range");
        if (seen[k]) fail(st.line, "duplicate d " + st.args);
        seen[k] = true;
        c.set_d(k, parse_block(st, c.rank(k - 1), c.rank(k), LaurentPoly(out.vars.size()),
                               [&](const std::string& e) { return parse_poly(e, out.vars); }));
    }
    if (opts.validate) {
        const ValidationReport rep = validate(c);
        if (!rep.ok) fail(sts.back().line, "not a complex: " + rep.to_string());
    }
    out.complex = std::move(c);
    return out;
}

ComplexFile read_complex_file(const std::string& path, const ReadOptions& opts) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_complex(f, opts);
}

ComplexFile read_complex_string(const std::string& text, const ReadOptions& opts) {
    std::istringstream is(text);
    return read_complex(is, opts);
}

namespace {

std::vector<std::string> names_for(std::span<const std::string> vars, std::size_t n) {
    if (vars.empty()) return default_vars(n);
    if (vars.size() != n) throw DimensionError("variable names do not match the ring");
    return {vars.begin(), vars.end()};
}

void write_header(std::ostream& out, const BasedComplex& c, const std::vector<std::string>& names) {
    out << field_line(field()) << "\n";
    out << "vars";
    for (const auto& v : names) out << " " << v;
    out << "\n";
    out << "degrees " << c.lo() << ".." << c.hi() << "\n";
    for (int k = c.lo(); k <= c.hi(); ++k) out << "rank " << k << " " << c.rank(k) << "\n";
}

}  // namespace

void write_complex(std::ostream& out, const BasedComplex& c, const std::string& name,
                   std::span<const std::string> vars) {
    const auto names = names_for(vars, nvars_of(c));
    out << "complex " << name << "\n";
    write_header(out, c, names);
    for (int k = c.lo() + 1; k <= c.hi(); ++k) {
        const MatrixLP d = c.d(k);
        if (d.empty()) continue;
        out << "d " << k << " " << format_block(d, names) << "\n";
    }
}

std::string write_complex_string(const BasedComplex& c, const std::string& name, std::span<const std::string> vars) {
    std::ostringstream os;
    write_complex(os, c, name, vars);
    return os.str();
}

// ---------------------------------------------------------------------------

LocalizedElement parse_localized(std::string_view text, std::span<const std::string> vars) {
    const std::string t = trim(text);
    // The denominator list is the trailing "[...]" preceded by '/'.
    if (t.empty() || t.back() != ']') return LocalizedElement(parse_poly(t, vars));
    const auto open = t.rfind('[');
    if (open == std::string::npos) throw ParseError("unbalanced ']'", t.size() - 1);
    std::size_t slash = open;
    while (slash > 0 && std::isspace(static_cast<unsigned char>(t[slash - 1]))) --slash;
    if (slash == 0 || t[slash - 1] != '/') throw ParseError("expected '/' before '['", open);
    const LaurentPoly num = parse_poly(std::string_view(t).substr(0, slash - 1), vars);
    std::vector<UnitFactor> factors;
    for (const auto& item : split_top(std::string_view(t).substr(open + 1, t.size() - open - 2), '*')) {
        if (item.empty() || item.front() != '(') throw ParseError("denominator factors must be parenthesized", open);
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t i = 0; i < item.size(); ++i) {
            if (item[i] == '(') ++depth;
            if (item[i] == ')' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close == std::string::npos) throw ParseError("unbalanced '(' in denominator", open);
        UnitFactor f{parse_poly(std::string_view(item).substr(1, close - 1), vars), 1};
        const std::string rest = trim(std::string_view(item).substr(close + 1));
        if (!rest.empty()) {
            if (rest[0] != '^') throw ParseError("expected '^' after denominator factor", open);
            f.mult = parse_int(trim(rest.substr(1)), open, "multiplicity");
            if (f.mult < 1) throw ParseError("multiplicity must be positive", open);
        }
        if (f.poly.is_zero()) throw ParseError("zero denominator factor", open);
        factors.push_back(std::move(f));
    }
    return LocalizedElement(num, std::move(factors));
}

void write_certificate(std::ostream& out, const BasedComplex& c, const Decision& d, const std::string& name,
                       std::span<const std::string> vars) {
    if (d.verdict != Verdict::Acyclic || !d.contraction) throw std::invalid_argument("decision carries no certificate");
    const auto names = names_for(vars, nvars_of(c));
    out << "certificate " << name << "\n";
    write_header(out, c, names);
    out << "direction " << d.direction.position() + 1 << " " << (d.direction.sign() == Sign::Plus ? "+" : "-") << "\n";
    out << "order ";
    for (std::size_t i = 0; i < d.direction.order().size(); ++i) out << (i ? "," : "") << d.direction.order()[i] + 1;
    out << "\n";
    const Contraction& s = *d.contraction;
    for (int k = s.lo; k <= s.hi(); ++k) {
        const MatrixLoc& m = s.at(k);
        if (m.empty()) continue;
        out << "s " << k << " " << format_block(m, names) << "\n";
    }
}

std::string write_certificate_string(const BasedComplex& c, const Decision& d, const std::string& name,
                                     std::span<const std::string> vars) {
    std::ostringstream os;
    write_certificate(os, c, d, name, vars);
    return os.str();
}

CertificateFile read_certificate(std::istream& in, const ReadOptions& opts) {
    const auto sts = statements(in);
    if (sts.empty() || sts.front().keyword != "certificate")
        fail(sts.empty() ? 1 : sts.front().line, "expected 'certificate <name>'");
    Header h;
    h.name = sts.front().args.empty() ? "unnamed" : sts.front().args;
    std::optional<std::pair<std::size_t, Sign>> dir;
    std::optional<std::vector<std::size_t>> order;
    std::size_t i = 1;
    for (; i < sts.size() && sts[i].keyword != "s"; ++i) {
        const Statement& st = sts[i];
        if (header_item(st, h)) continue;
        if (st.keyword == "direction") {
            std::istringstream is(st.args);
            std::string j, sg, extra;
            if (!(is >> j >> sg) || (is >> extra) || (sg != "+" && sg != "-"))
                fail(st.line, "direction must read 'direction <j> <+|->'");
            const int jj = parse_int(j, st.line, "direction index");
            if (jj < 1) fail(st.line, "direction index must be positive");
            dir = {static_cast<std::size_t>(jj - 1), sg == "+" ? Sign::Plus : Sign::Minus};
        } else if (st.keyword == "order") {
            std::vector<std::size_t> o;
            for (const auto& p : split_top(st.args, ',')) {
                const int v = parse_int(p, st.line, "variable number");
                if (v < 1) fail(st.line, "variable numbers start at 1");
                o.push_back(static_cast<std::size_t>(v - 1));
            }
            order = std::move(o);
        } else {
            fail(st.line, "unknown header item '" + st.keyword + "'");
        }
    }
    const std::size_t last = i < sts.size() ? sts[i].line : sts.back().line;
    require_header(h, last);
    if (!dir) fail(last, "missing 'direction' line");

    CertificateFile out;
    out.name = h.name;
    out.vars = *h.vars;
    apply_field(h, opts, out.field);
    const std::size_t n = out.vars.size();
    std::vector<std::size_t> ord = order ? *order : identity_order(n);
    try {
        out.direction = Direction(ord, dir->first, dir->second);
    } catch (const DimensionError& e) {
        fail(last, e.what());
    }
    if (out.direction.nvars() != n) fail(last, "ordering does not match the variables");
    const BasedComplex shape = empty_complex(h, n);
    for (int k = shape.lo(); k <= shape.hi(); ++k) out.ranks.push_back(shape.rank(k));
    Contraction& s = out.contraction;
    s.lo = shape.lo();
    for (int k = shape.lo(); k <= shape.hi(); ++k)
        s.s.emplace_back(shape.rank(k + 1), shape.rank(k), LocalizedElement(n));
    std::map<int, bool> seen;
    for (; i < sts.size(); ++i) {
        const Statement& st = sts[i];
        if (st.keyword != "s" || !st.has_block) fail(st.line, "expected 's <k> { ... }'");
        const int k = parse_int(st.args, st.line, "degree");
        if (k < shape.lo() || k > shape.hi()) fail(st.line, "s " + st.args + " outside the degree range");
        if (seen[k]) fail(st.line, "duplicate s " + st.args);
        seen[k] = true;
        s.s[static_cast<std::size_t>(k - s.lo)] =
            parse_block(st, shape.rank(k + 1), shape.rank(k), LocalizedElement(n),
                        [&](const std::string& e) { return parse_localized(e, out.vars); });
    }
    return out;
}

CertificateFile read_certificate_file(const std::string& path, const ReadOptions& opts) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_certificate(f, opts);
}

CertificateFile read_certificate_string(const std::string& text, const ReadOptions& opts) {
    std::istringstream is(text);
    return read_certificate(is, opts);
}

}  // namespace findom
