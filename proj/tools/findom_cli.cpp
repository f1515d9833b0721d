#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "findom/constructions.hpp"
#include "findom/corpus.hpp"
#include "findom/detector.hpp"
#include "findom/homology.hpp"
#include "findom/io.hpp"
#include "findom/novikov.hpp"

using namespace findom;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

struct Globals {
    std::string field;
    bool no_validate = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ComplexFile load(const std::string& path, const Globals& g) {
    ReadOptions opts;
    opts.validate = !g.no_validate;
    if (!g.field.empty()) opts.field = parse_field(g.field);
    return read_complex_file(path, opts);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Acyclic: return kOk;
        case Verdict::NotAcyclic: return kNegative;
        case Verdict::Inconclusive: return kInconclusive;
    }
    return kInputError;
}

int exit_for(FDVerdict v) {
    switch (v) {
        case FDVerdict::FinitelyDominated: return kOk;
        case FDVerdict::NotFinitelyDominated: return kNegative;
        case FDVerdict::Inconclusive: return kInconclusive;
    }
    return kInputError;
}

std::vector<std::size_t> parse_order(const std::string& text, std::size_t n) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            const int v = std::stoi(item);
            if (v < 1) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v - 1));
        } catch (const std::exception&) {
            throw InputError("bad ordering entry '" + item + "'");
        }
    }
    if (out.size() != n) throw InputError("ordering must list all " + std::to_string(n) + " variables");
    return out;
}

LaurentPoly parse_expr(const std::string& text, const ComplexFile& f) { return parse_poly(text, f.vars); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite domination of based chain complexes over Laurent polynomial rings"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--field", g.field, "Coefficient field: Q or Fp:<p> (default: the file's, else Fp:32003)");
    app.add_flag("--no-validate", g.no_validate, "Skip the d^2 = 0 check on load");

    std::string file, out_path, expr, sign = "+", order, cert_path, cert_out, cert_dir, profile = "default";
    std::size_t var = 1, n = 2, nvars = 1;
    int char_poly = 0;
    bool char_poly_set = false, all_orders = false;
    std::uint64_t seed = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Check d^2 = 0");
    validate_cmd->add_option("file", file)->required();

    auto* homology_cmd = app.add_subcommand("homology", "Homology with the strongest engine for the ring");
    homology_cmd->add_option("file", file)->required();
    auto* cp_opt = homology_cmd->add_option("--char-poly", char_poly, "Characteristic polynomial of x on H_k (n = 1)");

    auto* cone_cmd = app.add_subcommand("cone", "Mapping cone of multiplication by an element");
    cone_cmd->add_option("file", file)->required();
    cone_cmd->add_option("--by", expr, "Ring element p; the map is p * id")->required();
    cone_cmd->add_option("-o,--output", out_path);

    auto* torus_cmd = app.add_subcommand("torus", "Mapping torus of multiplication by an element");
    torus_cmd->add_option("file", file)->required();
    torus_cmd->add_option("--by", expr, "Ring element p; the self-map is p * id")->required();
    torus_cmd->add_option("-o,--output", out_path);

    std::string minus_expr = "1", plus_expr = "1";
    auto* gamma_cmd = app.add_subcommand("gamma", "Gamma of C --p--> C <--q-- C");
    gamma_cmd->add_option("file", file)->required();
    gamma_cmd->add_option("--minus", minus_expr, "Left map p (default 1)");
    gamma_cmd->add_option("--plus", plus_expr, "Right map q (default 1)");
    gamma_cmd->add_option("-o,--output", out_path);

    auto* novikov_cmd = app.add_subcommand("novikov", "Acyclicity over one Novikov ring");
    novikov_cmd->add_option("file", file)->required();
    novikov_cmd->add_option("--var", var, "Position j (1-based)")->required();
    novikov_cmd->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    novikov_cmd->add_option("--order", order, "Variable ordering, e.g. 2,1");
    novikov_cmd->add_option("--cert-out", cert_out, "Write the contraction certificate");

    auto* findom_cmd = app.add_subcommand("findom", "Finite domination via Novikov acyclicity");
    findom_cmd->add_option("file", file)->required();
    auto* order_opt = findom_cmd->add_option("--order", order, "Variable ordering, e.g. 2,1");
    findom_cmd->add_flag("--all-orders", all_orders, "Try every ordering")->excludes(order_opt);
    findom_cmd->add_option("--cert-dir", cert_dir, "Write one certificate per Acyclic decision");

    auto* field_cmd = app.add_subcommand("field-check", "Field-coefficient criterion over F(z_j)");
    field_cmd->add_option("file", file)->required();

    auto* example_cmd = app.add_subcommand("example", "The square example and its iterated-cone generalization");
    example_cmd->add_option("--n", n, "Number of variables")->check(CLI::Range(1, static_cast<int>(kMaxVars)));
    example_cmd->add_option("-o,--output", out_path);

    auto* random_cmd = app.add_subcommand("random", "Random complex with known ground truth");
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--profile", profile)->check(CLI::IsMember(profile_names()));
    random_cmd->add_option("--nvars", nvars)->check(CLI::Range(1, static_cast<int>(kMaxVars)));
    random_cmd->add_option("-o,--output", out_path);

    auto* verify_cmd = app.add_subcommand("verify-cert", "Check a contraction certificate");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--cert", cert_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    char_poly_set = cp_opt->count() > 0;

    try {
        set_field(g.field.empty() ? FieldSpec::prime(kDefaultPrime) : parse_field(g.field));

        if (*validate_cmd) {
            Globals loose = g;
            loose.no_validate = true;
            const ComplexFile f = load(file, loose);
            const ValidationReport rep = validate(f.complex);
            std::cout << rep.to_string() << "\n";
            return rep.ok ? kOk : kNegative;
        }
        if (*example_cmd) {
            emit(write_complex_string(example_square(n), "square" + std::to_string(n)), out_path);
            return kOk;
        }
        if (*random_cmd) {
            const Profile p = profile_by_name(profile, nvars);
            const KnownInstance inst = random_known(seed, p);
            std::ostringstream os;
            os << "# profile " << p.name << " seed " << seed << "\n";
            os << "# truth acyclic " << (inst.truth.acyclic ? "yes" : "no") << " finitely_dominated "
               << (inst.truth.finitely_dominated ? "yes" : "no") << "\n";
            os << write_complex_string(inst.complex, "random_" + p.name + "_" + std::to_string(seed));
            emit(os.str(), out_path);
            return kOk;
        }

        const ComplexFile f = load(file, g);
        const BasedComplex& c = f.complex;
        const std::size_t nv = nvars_of(c);

        if (*homology_cmd) {
            if (char_poly_set) {
                const CharPolyResult r = char_poly_action(c, char_poly);
                std::cout << "char_poly " << r.char_poly.to_string("t") << "\n";
                std::cout << "cayley_hamilton " << (r.cayley_hamilton ? "yes" : "no") << "\n";
                std::cout << "annihilates " << (r.annihilates ? "yes" : "no") << "\n";
                return kOk;
            }
            const HomologyReport h = nv == 0 ? homology_field(c) : nv == 1 ? homology_pid(c) : homology_generic(c);
            std::cout << h.to_string(f.vars);
            return kOk;
        }
        if (*cone_cmd) {
            emit(write_complex_string(cone(ChainMap::scalar(c, parse_expr(expr, f))), "cone_" + f.name, f.vars),
                 out_path);
            return kOk;
        }
        if (*torus_cmd) {
            if (nv + 1 > kMaxVars) throw InputError("too many variables for a mapping torus");
            std::vector<std::string> names = f.vars;
            std::string t = "t";
            while (std::find(names.begin(), names.end(), t) != names.end()) t += "t";
            names.push_back(t);
            emit(write_complex_string(mapping_torus(ChainMap::scalar(c, parse_expr(expr, f))), "torus_" + f.name,
                                      names),
                 out_path);
            return kOk;
        }
        if (*gamma_cmd) {
            const BasedComplex gm =
                gamma(ChainMap::scalar(c, parse_expr(minus_expr, f)), ChainMap::scalar(c, parse_expr(plus_expr, f)));
            emit(write_complex_string(gm, "gamma_" + f.name, f.vars), out_path);
            return kOk;
        }
        if (*novikov_cmd) {
            if (var < 1 || var > nv) throw InputError("--var must lie in 1.." + std::to_string(nv));
            const std::vector<std::size_t> ord = order.empty() ? identity_order(nv) : parse_order(order, nv);
            const Direction d(ord, var - 1, sign == "+" ? Sign::Plus : Sign::Minus);
            const Decision dec = acyclicity_decide(c, d);
            std::cout << "decision " << dec.summary() << "\n";
            if (dec.contraction) {
                std::cout << "certificate " << (verify_contraction(c, d, *dec.contraction) ? "verified" : "FAILED")
                          << "\n";
                if (!cert_out.empty()) emit(write_certificate_string(c, dec, f.name, f.vars), cert_out);
            }
            return exit_for(dec.verdict);
        }
        if (*findom_cmd) {
            FDReport r;
            if (all_orders)
                r = findom_all_orders(c);
            else
                r = findom_main(c, order.empty() ? identity_order(nv) : parse_order(order, nv));
            std::cout << r.to_string();
            if (!cert_dir.empty()) {
                std::filesystem::create_directories(cert_dir);
                for (const auto& d : r.decisions) {
                    if (!d.contraction) continue;
                    const std::string path = cert_dir + "/" + f.name + "_" + std::to_string(d.direction.position() + 1) +
                                             (d.direction.sign() == Sign::Plus ? "p" : "m") + ".cert";
                    emit(write_certificate_string(c, d, f.name, f.vars), path);
                }
            }
            return exit_for(r.verdict);
        }
        if (*field_cmd) {
            const FDReport r = field_findom(c);
            std::cout << r.to_string();
            return exit_for(r.verdict);
        }
        if (*verify_cmd) {
            ReadOptions opts;
            opts.field = field();
            const CertificateFile cert = read_certificate_file(cert_path, opts);
            if (cert.vars.size() != nv) throw InputError("certificate and complex have different variable counts");
            bool ranks_match = static_cast<int>(cert.ranks.size()) == c.hi() - c.lo() + 1 && cert.contraction.lo == c.lo();
            for (int k = c.lo(); ranks_match && k <= c.hi(); ++k)
                ranks_match = cert.ranks[static_cast<std::size_t>(k - c.lo())] == c.rank(k);
            if (!ranks_match) throw InputError("certificate ranks do not match the complex");
            const bool ok = verify_contraction(c, cert.direction, cert.contraction);
            std::cout << "direction " << cert.direction.to_string() << "\n";
            std::cout << "certificate " << (ok ? "valid" : "invalid") << "\n";
            return ok ? kOk : kNegative;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
