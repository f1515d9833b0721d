#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "findom/constructions.hpp"
#include "findom/corpus.hpp"
#include "findom/detector.hpp"
#include "findom/homology.hpp"
#include "findom/io.hpp"

namespace py = pybind11;
using namespace findom;

namespace {

// Entries belong to the field they were read under; every call re-enters it.
// The session field is process-wide, so calls keep the GIL.
struct PyComplex {
    ComplexFile file;

    FieldScope scope() const { return FieldScope(file.field); }
};

PyComplex wrap(BasedComplex c, const std::string& name, std::vector<std::string> vars = {}) {
    PyComplex out;
    out.file.name = name;
    out.file.field = field();
    out.file.vars = vars.empty() ? default_vars(nvars_of(c)) : std::move(vars);
    out.file.complex = std::move(c);
    return out;
}

std::vector<std::size_t> ranks(const BasedComplex& c) {
    std::vector<std::size_t> r;
    for (int k = c.lo(); k <= c.hi(); ++k) r.push_back(c.rank(k));
    return r;
}

py::dict decision_dict(const Decision& d) {
    py::dict out;
    out["direction"] = d.direction.to_string();
    out["verdict"] = to_string(d.verdict);
    out["pivots"] = d.pivots;
    out["summary"] = d.summary();
    if (d.verdict == Verdict::NotAcyclic) {
        out["witness_degree"] = d.witness_degree;
        out["witness_rank"] = d.witness_rank;
    }
    return out;
}

py::dict report_dict(const FDReport& r) {
    py::dict out;
    out["verdict"] = to_string(r.verdict);
    out["method"] = r.method;
    std::vector<std::size_t> order;
    for (std::size_t v : r.ordering) order.push_back(v + 1);
    out["ordering"] = order;
    py::list decisions;
    for (const Decision& d : r.decisions) decisions.append(decision_dict(d));
    out["decisions"] = decisions;
    py::list fields;
    for (const FieldCheck& f : r.field_checks) {
        py::dict e;
        e["var"] = f.var + 1;
        e["verdict"] = to_string(f.verdict);
        e["method"] = f.method;
        fields.append(e);
    }
    out["field_checks"] = fields;
    out["oracle"] = r.oracle ? py::object(py::str(to_string(*r.oracle))) : py::object(py::none());
    out["defect"] = r.defect;
    out["text"] = r.to_string();
    return out;
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& order) {
    std::vector<std::size_t> out;
    for (std::size_t v : order) {
        if (v == 0) throw std::invalid_argument("orderings are 1-based");
        out.push_back(v - 1);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_findom, m) {
    m.doc() = "Finite domination of chain complexes over Laurent polynomial rings";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PyComplex>(m, "Complex")
        .def_property_readonly("name", [](const PyComplex& c) { return c.file.name; })
        .def_property_readonly("field", [](const PyComplex& c) { return field_line(c.file.field).substr(6); })
        .def_property_readonly("vars", [](const PyComplex& c) { return c.file.vars; })
        .def_property_readonly("lo", [](const PyComplex& c) { return c.file.complex.lo(); })
        .def_property_readonly("ranks", [](const PyComplex& c) { return ranks(c.file.complex); })
        .def("entry",
             [](const PyComplex& c, int k, std::size_t i, std::size_t j) {
                 auto s = c.scope();
                 return c.file.complex.d(k)(i, j).to_string(c.file.vars);
             },
             py::arg("k"), py::arg("row"), py::arg("col"))
        .def("is_valid",
             [](const PyComplex& c) {
                 auto s = c.scope();
                 return validate(c.file.complex).ok;
             })
        .def("to_text",
             [](const PyComplex& c) {
                 auto s = c.scope();
                 return write_complex_string(c.file.complex, c.file.name, c.file.vars);
             })
        .def("__repr__", [](const PyComplex& c) {
            std::string r = "<Complex " + c.file.name + " ranks";
            for (std::size_t x : ranks(c.file.complex)) r += " " + std::to_string(x);
            return r + ">";
        });

    m.def(
        "read_complex",
        [](const std::string& text, std::optional<std::string> field_override) {
            ReadOptions opts;
            if (field_override) opts.field = parse_field(*field_override);
            FieldScope keep(field());
            PyComplex out;
            out.file = read_complex_string(text, opts);
            out.file.field = field();
            return out;
        },
        py::arg("text"), py::arg("field") = py::none(), "Parse the text format.");

    m.def(
        "example_square",
        [](std::size_t n, const std::string& f) {
            FieldScope s(parse_field(f));
            return wrap(example_square(n), "square" + std::to_string(n));
        },
        py::arg("n") = 2, py::arg("field") = "Fp 32003");

    m.def(
        "random_complex",
        [](std::uint64_t seed, const std::string& profile, std::size_t nvars) {
            FieldScope s(FieldSpec::prime(kDefaultPrime));
            const KnownInstance inst = random_known(seed, profile_by_name(profile, nvars));
            py::dict truth;
            truth["acyclic"] = inst.truth.acyclic;
            truth["finitely_dominated"] = inst.truth.finitely_dominated;
            return py::make_tuple(wrap(inst.complex, "random_" + profile + "_" + std::to_string(seed)), truth);
        },
        py::arg("seed"), py::arg("profile") = "default", py::arg("nvars") = 1,
        "Seeded complex with known homology; returns (complex, truth).");

    m.def(
        "homology",
        [](const PyComplex& c) {
            auto s = c.scope();
            const BasedComplex& x = c.file.complex;
            const std::size_t n = nvars_of(x);
            const HomologyReport h = n == 0 ? homology_field(x) : n == 1 ? homology_pid(x) : homology_generic(x);
            py::list out;
            for (const DegreeHomology& d : h.degrees) {
                py::dict e;
                e["degree"] = d.degree;
                e["free_rank"] = d.free_rank;
                std::vector<std::string> tors;
                for (const auto& p : d.torsion) tors.push_back(p.to_string(c.file.vars));
                e["torsion"] = tors;
                e["dim_f"] = d.dim_f ? py::object(py::int_(*d.dim_f)) : py::object(py::none());
                out.append(e);
            }
            return out;
        },
        py::arg("complex"));

    m.def(
        "novikov",
        [](const PyComplex& c, std::size_t var, const std::string& sign, std::vector<std::size_t> order) {
            auto s = c.scope();
            const std::size_t n = nvars_of(c.file.complex);
            if (order.empty())
                for (std::size_t i = 1; i <= n; ++i) order.push_back(i);
            if (var == 0 || var > n) throw std::invalid_argument("var out of range");
            if (sign != "+" && sign != "-") throw std::invalid_argument("sign must be '+' or '-'");
            const Direction d(zero_based(order), var - 1, sign == "+" ? Sign::Plus : Sign::Minus);
            const Decision dec = acyclicity_decide(c.file.complex, d);
            py::dict out = decision_dict(dec);
            out["certified"] = dec.contraction.has_value() && verify_contraction(c.file.complex, d, *dec.contraction);
            return out;
        },
        py::arg("complex"), py::arg("var"), py::arg("sign") = "+", py::arg("order") = std::vector<std::size_t>{},
        "One directional acyclicity decision.");

    m.def(
        "findom",
        [](const PyComplex& c, std::vector<std::size_t> order, bool all_orders) {
            auto s = c.scope();
            if (all_orders) return report_dict(findom_all_orders(c.file.complex));
            if (!order.empty()) return report_dict(findom_main(c.file.complex, zero_based(order)));
            return report_dict(findom_main(c.file.complex));
        },
        py::arg("complex"), py::arg("order") = std::vector<std::size_t>{}, py::arg("all_orders") = false,
        "Novikov-route finite domination decision.");

    m.def(
        "field_check",
        [](const PyComplex& c) {
            auto s = c.scope();
            return report_dict(field_findom(c.file.complex));
        },
        py::arg("complex"), "Field-extension criterion.");

    m.def(
        "mapping_torus",
        [](const PyComplex& c, const std::string& by) {
            auto s = c.scope();
            const ChainMap h = ChainMap::scalar(c.file.complex, parse_poly(by, c.file.vars));
            std::vector<std::string> vars = c.file.vars;
            vars.push_back("t");
            return wrap(mapping_torus(h), "torus_" + c.file.name, vars);
        },
        py::arg("complex"), py::arg("by") = "1", "T(h) for h = multiplication by a ring element.");

    m.def(
        "cone",
        [](const PyComplex& c, const std::string& by) {
            auto s = c.scope();
            const ChainMap f = ChainMap::scalar(c.file.complex, parse_poly(by, c.file.vars));
            return wrap(cone(f), "cone_" + c.file.name, c.file.vars);
        },
        py::arg("complex"), py::arg("by"), "Cone of multiplication by a ring element.");
}
