// Python bindings. Elements cross the boundary as labels, never as indices.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pclatt/classify.hpp"
#include "pclatt/congruence.hpp"
#include "pclatt/deduction.hpp"
#include "pclatt/genlat.hpp"
#include "pclatt/implication.hpp"
#include "pclatt/io.hpp"
#include "pclatt/laws.hpp"
#include "pclatt/pseudo.hpp"
#include "pclatt/suite.hpp"

namespace py = pybind11;
using namespace pclatt;

namespace {

using Labels = std::vector<std::string>;

Labels labels_of(const FiniteLattice& L, const ElementSet& s) {
    Labels out;
    for (Element e : s.members()) out.push_back(L.label(e));
    return out;
}

ElementSet set_of(const FiniteLattice& L, const Labels& labels) {
    ElementSet s(L.size());
    for (const auto& l : labels) s.insert(L.index_of(l));
    return s;
}

DsKind kind_of(const std::string& name) {
    if (name == "first") return DsKind::First;
    if (name == "second") return DsKind::Second;
    throw LatticeError(ErrorKind::InvalidInput, "kind must be 'first' or 'second', got '" + name + "'");
}

py::object counterexample_obj(const FiniteLattice& L, const std::optional<Counterexample>& cx) {
    if (!cx) return py::none();
    py::dict assignment;
    for (const auto& [var, e] : cx->assignment) assignment[py::str(var)] = L.label(e);
    py::dict d;
    d["assignment"] = assignment;
    d["clause"] = cx->clause;
    d["lhs"] = cx->lhs ? py::object(py::str(L.label(*cx->lhs))) : py::none();
    d["rhs"] = cx->rhs ? py::object(py::str(L.label(*cx->rhs))) : py::none();
    return d;
}

py::dict verdict_obj(const FiniteLattice& L, const Verdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["hypothesis_met"] = v.hypothesis_met;
    d["counterexample"] = counterexample_obj(L, v.counterexample);
    return d;
}

py::dict table_obj(const FiniteLattice& L, const ImplTable& t) {
    py::dict rows;
    for (Element x = 0; x < L.size(); ++x) {
        py::dict row;
        for (Element y = 0; y < L.size(); ++y) row[py::str(L.label(y))] = L.label(t(x, y));
        rows[py::str(L.label(x))] = row;
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite pseudocomplemented lattices";

    // Leaked on purpose: the type must outlive the interpreter's module teardown.
    static auto* lattice_error = new py::exception<LatticeError>(m, "LatticeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const LatticeError& e) {
            auto type = py::reinterpret_borrow<py::object>(lattice_error->ptr());
            py::object exc = type(std::string(to_string(e.kind())) + ": " + e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    py::class_<FiniteLattice>(m, "Lattice")
        .def_static("parse", &parse_lattice, py::arg("text"))
        .def_static("fixture", &load_fixture, py::arg("name"))
        .def_static("load", &load_lattice, py::arg("source"))
        .def_static(
            "from_covers",
            [](const Labels& labels, const std::vector<std::pair<std::string, std::string>>& covers) {
                return build_lattice(labels, covers);
            },
            py::arg("labels"), py::arg("covers"))
        .def_property_readonly("size", &FiniteLattice::size)
        .def_property_readonly("labels", &FiniteLattice::labels)
        .def_property_readonly("bottom", [](const FiniteLattice& L) { return L.label(L.bottom()); })
        .def_property_readonly("top", [](const FiniteLattice& L) { return L.label(L.top()); })
        .def("covers",
             [](const FiniteLattice& L) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (auto [lo, hi] : L.covers()) out.emplace_back(L.label(lo), L.label(hi));
                 return out;
             })
        .def("leq", [](const FiniteLattice& L, const std::string& a,
                       const std::string& b) { return L.leq(L.index_of(a), L.index_of(b)); })
        .def("meet", [](const FiniteLattice& L, const std::string& a,
                        const std::string& b) { return L.label(L.meet(L.index_of(a), L.index_of(b))); })
        .def("join", [](const FiniteLattice& L, const std::string& a,
                        const std::string& b) { return L.label(L.join(L.index_of(a), L.index_of(b))); })
        .def("serialize", &serialize_lattice)
        .def("to_dot", &export_dot)
        .def("__len__", &FiniteLattice::size)
        .def("__eq__", [](const FiniteLattice& a, const FiniteLattice& b) { return a == b; })
        .def("__repr__", [](const FiniteLattice& L) {
            std::string out = "<Lattice";
            for (const auto& l : L.labels()) out += " " + l;
            return out + ">";
        });

    m.def(
        "pseudocomplement",
        [](const FiniteLattice& L) {
            auto star = pseudocomplement_table(L);
            py::dict d;
            for (Element x = 0; x < L.size(); ++x) d[py::str(L.label(x))] = L.label(star(x));
            return d;
        },
        py::arg("lattice"), "Map from each label to the label of its pseudocomplement.");
    m.def(
        "dense_elements",
        [](const FiniteLattice& L) { return labels_of(L, dense_elements(L, pseudocomplement_table(L))); },
        py::arg("lattice"));
    m.def(
        "classify",
        [](const FiniteLattice& L) {
            auto c = classify(L);
            py::dict d;
            d["pseudocomplemented"] = c.pseudocomplemented;
            d["distributive"] = c.distributive;
            d["stone_identity"] = c.stone_identity;
            d["stone"] = c.stone;
            d["brouwerian"] = c.brouwerian;
            return d;
        },
        py::arg("lattice"));
    m.def(
        "arrow_table", [](const FiniteLattice& L) { return table_obj(L, arrow_table(L, pseudocomplement_table(L))); },
        py::arg("lattice"), "x -> y := x* v y, as rows[x][y].");
    m.def(
        "darrow_table",
        [](const FiniteLattice& L) { return table_obj(L, darrow_table(L, pseudocomplement_table(L))); },
        py::arg("lattice"), "x => y := x* v y**, as rows[x][y].");

    m.def(
        "deductive_systems",
        [](const FiniteLattice& L, const std::string& kind) {
            std::vector<Labels> out;
            for (const auto& s : enumerate_deductive_systems(L, pseudocomplement_table(L), kind_of(kind)))
                out.push_back(labels_of(L, s));
            return out;
        },
        py::arg("lattice"), py::arg("kind") = "first");
    m.def(
        "is_deductive_system",
        [](const FiniteLattice& L, const Labels& A, const std::string& kind) {
            return verdict_obj(L, is_deductive_system(L, pseudocomplement_table(L), set_of(L, A), kind_of(kind)));
        },
        py::arg("lattice"), py::arg("members"), py::arg("kind") = "first");
    m.def(
        "ds_closure",
        [](const FiniteLattice& L, const Labels& seed, const std::string& kind) {
            return labels_of(L, ds_closure(L, pseudocomplement_table(L), set_of(L, seed), kind_of(kind)));
        },
        py::arg("lattice"), py::arg("seed"), py::arg("kind") = "first");
    m.def(
        "filters",
        [](const FiniteLattice& L) {
            std::vector<Labels> out;
            for (const auto& f : enumerate_filters(L)) out.push_back(labels_of(L, f));
            return out;
        },
        py::arg("lattice"));
    m.def(
        "is_filter", [](const FiniteLattice& L, const Labels& A) { return is_filter(L, set_of(L, A)).holds; },
        py::arg("lattice"), py::arg("members"));

    m.def(
        "theta",
        [](const FiniteLattice& L, const Labels& A) {
            auto rel = theta_of(L, pseudocomplement_table(L), set_of(L, A));
            std::vector<std::pair<std::string, std::string>> pairs;
            for (Element x = 0; x < L.size(); ++x)
                for (Element y = 0; y < L.size(); ++y)
                    if (rel.contains(x, y)) pairs.emplace_back(L.label(x), L.label(y));
            return pairs;
        },
        py::arg("lattice"), py::arg("A"), "Pairs (x, y) with x => y and y => x in A.");
    m.def(
        "theta_report",
        [](const FiniteLattice& L, const Labels& A) {
            auto r = check_theta_theorem(L, pseudocomplement_table(L), set_of(L, A));
            py::dict d;
            d["reflexive"] = r.reflexive;
            d["symmetric"] = r.symmetric;
            d["compatible_join"] = r.compatible_join;
            d["compatible_meet"] = r.compatible_meet;
            d["compatible_star"] = r.compatible_star;
            d["top_class"] = labels_of(L, r.top_class);
            d["top_class_matches"] = r.top_class_matches;
            d["meet_closed"] = r.meet_closed;
            d["transitive"] = r.transitive;
            d["passed"] = r.passed();
            return d;
        },
        py::arg("lattice"), py::arg("A"));
    m.def(
        "congruences",
        [](const FiniteLattice& L) {
            std::vector<std::vector<Labels>> out;
            for (const auto& p : enumerate_congruences(L, pseudocomplement_table(L))) {
                std::vector<Labels> blocks;
                for (const auto& b : p.blocks()) blocks.push_back(labels_of(L, b));
                out.push_back(std::move(blocks));
            }
            return out;
        },
        py::arg("lattice"));

    m.def(
        "laws",
        [] {
            std::vector<py::dict> out;
            for (const auto& law : law_registry()) {
                py::dict d;
                d["id"] = law.id;
                d["hypothesis"] = std::string(to_string(law.hypothesis));
                d["statement"] = law.statement;
                d["variables"] = law.variables;
                out.push_back(d);
            }
            return out;
        },
        "Registered laws with their hypothesis classes.");
    m.def(
        "check_law",
        [](const FiniteLattice& L, const std::string& id) {
            const auto& law = find_law(id);
            const auto cls = classify(L);
            std::optional<UnaryTable> star;
            if (cls.pseudocomplemented) star = pseudocomplement_table(L);
            return verdict_obj(L, check_law(LawContext(L, star), law, cls));
        },
        py::arg("lattice"), py::arg("law_id"));

    m.def(
        "generate",
        [](std::size_t n, bool dedup, const std::string& filter) {
            auto family = generate_all(n, dedup);
            if (!filter.empty()) family = filter_family(family, parse_class_filter(filter));
            return family.lattices;
        },
        py::arg("n"), py::arg("dedup") = true, py::arg("filter") = "");
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));

    auto options = [](std::size_t min_n, std::size_t max_n, bool include_fixtures, const Labels& laws) {
        SuiteOptions o;
        o.min_n = min_n;
        o.max_n = max_n;
        o.include_fixtures = include_fixtures;
        o.laws = laws;
        return o;
    };
    m.def(
        "run_suite",
        [options](std::size_t min_n, std::size_t max_n, bool include_fixtures, const Labels& laws) {
            auto report = run_suite(options(min_n, max_n, include_fixtures, laws));
            std::vector<py::dict> out;
            for (const auto& e : report.entries) {
                py::dict d;
                d["lattice"] = e.lattice;
                d["law"] = e.law;
                d["hypothesis_met"] = e.hypothesis_met;
                d["holds"] = e.holds;
                d["fatal"] = e.fatal();
                if (e.counterexample) {
                    py::dict cx;
                    py::dict assignment;
                    for (const auto& [var, label] : e.counterexample->assignment) assignment[py::str(var)] = label;
                    cx["assignment"] = assignment;
                    cx["clause"] = e.counterexample->clause;
                    cx["lhs"] = e.counterexample->lhs ? py::object(py::str(*e.counterexample->lhs)) : py::none();
                    cx["rhs"] = e.counterexample->rhs ? py::object(py::str(*e.counterexample->rhs)) : py::none();
                    d["counterexample"] = cx;
                } else {
                    d["counterexample"] = py::none();
                }
                out.push_back(d);
            }
            return out;
        },
        py::arg("min_n") = 2, py::arg("max_n") = 5, py::arg("include_fixtures") = true, py::arg("laws") = Labels{});
    m.def(
        "suite_json",
        [options](std::size_t min_n, std::size_t max_n, bool include_fixtures, const Labels& laws) {
            return suite_to_json(run_suite(options(min_n, max_n, include_fixtures, laws)));
        },
        py::arg("min_n") = 2, py::arg("max_n") = 5, py::arg("include_fixtures") = true, py::arg("laws") = Labels{});
}
