// Python bindings for the main operations. Structured data crosses the
// boundary as JSON strings; the ramseycat package parses them into dicts.

#include "ramseycat/engine.hpp"
#include "ramseycat/generators.hpp"
#include "ramseycat/io.hpp"
#include "ramseycat/structures.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace ramseycat;

namespace {

ArrowVariant variant_of(const std::string& name) {
    if (name == "embedding") return ArrowVariant::embedding;
    if (name == "structural") return ArrowVariant::structural;
    throw std::invalid_argument("variant must be \"embedding\" or \"structural\"");
}

ObjId object_of(const Category& cat, const std::string& name) {
    auto o = cat.object_by_name(name);
    if (!o) throw std::invalid_argument("unknown object \"" + name + "\"");
    return *o;
}

Category category_from_json(const std::string& text) {
    return Category::from_data(io::parse_category(io::Json::parse(text)));
}

ArrowQuery make_query(const Category& cat, const std::string& variant, const std::string& a,
                      const std::string& b, const std::string& c, unsigned k, unsigned t) {
    ArrowQuery q;
    q.variant = variant_of(variant);
    q.a = object_of(cat, a);
    q.b = object_of(cat, b);
    q.c = object_of(cat, c);
    q.k = k;
    q.t = t;
    return q;
}

} // namespace

PYBIND11_MODULE(_ramseycat, m) {
    m.doc() = "finite-category Ramsey engine";

    py::class_<Category>(m, "Category")
        .def("object_count", &Category::object_count)
        .def("morphism_count", &Category::morphism_count)
        .def("object_names",
             [](const Category& cat) {
                 std::vector<std::string> names;
                 for (ObjId o = 0; o < cat.object_count(); ++o)
                     names.push_back(cat.object_name(o));
                 return names;
             })
        .def("hom_size",
             [](const Category& cat, const std::string& a, const std::string& b) {
                 return cat.hom(object_of(cat, a), object_of(cat, b)).size();
             })
        .def("aut_size",
             [](const Category& cat, const std::string& a) {
                 return aut(cat, object_of(cat, a)).size();
             })
        .def("all_mono", &Category::all_mono)
        .def("complete", &Category::complete)
        .def("is_directed",
             [](const Category& cat) { return to_string(is_directed(cat).answer); })
        .def("has_amalgamation",
             [](const Category& cat) { return to_string(has_amalgamation(cat).answer); })
        .def("to_json", [](const Category& cat) {
            return io::category_json(cat.to_data()).dump(2);
        });

    m.def("category_from_json", &category_from_json, py::arg("text"),
          "Validate and index a category file given as a JSON string.");
    m.def("validate_category_json", [](const std::string& text) {
        LawReport r = validate_category(io::parse_category(io::Json::parse(text)));
        return io::law_report_json(r).dump(2);
    });
    m.def("chains", [](int max_size) { return chains_category(max_size).category; },
          py::arg("max_size"), "Finite chains up to the given size, with embeddings.");
    m.def("rigid_surjection_chains", &rigid_surjection_category, py::arg("max_size"));
    m.def("opposite", [](const Category& cat) { return opposite(cat); });
    m.def("product", [](const Category& a, const Category& b) { return product(a, b).category; });
    m.def("slice", [](const Category& cat, const std::string& x) {
        return slice(cat, object_of(cat, x)).category;
    });

    m.def(
        "check_arrow",
        [](const Category& cat, const std::string& variant, const std::string& a,
           const std::string& b, const std::string& c, unsigned k, unsigned t, bool symmetry,
           unsigned workers) {
            ArrowQuery q = make_query(cat, variant, a, b, c, k, t);
            ArrowOptions options;
            options.symmetry = symmetry;
            options.workers = workers;
            return io::arrow_verdict_json(cat, check_arrow(cat, q, options)).dump(2);
        },
        py::arg("category"), py::arg("variant"), py::arg("A"), py::arg("B"), py::arg("C"),
        py::arg("k"), py::arg("t"), py::arg("symmetry") = false, py::arg("workers") = 1);

    m.def(
        "check_arrow_oracle",
        [](const Category& cat, const std::string& variant, const std::string& a,
           const std::string& b, const std::string& c, unsigned k, unsigned t) {
            ArrowQuery q = make_query(cat, variant, a, b, c, k, t);
            return io::arrow_verdict_json(cat, check_arrow_oracle(cat, q)).dump(2);
        },
        py::arg("category"), py::arg("variant"), py::arg("A"), py::arg("B"), py::arg("C"),
        py::arg("k"), py::arg("t"));

    m.def(
        "degree_exact",
        [](const Category& cat, const std::string& a, const std::string& variant) {
            auto report = degree_exact_finite(cat, object_of(cat, a), variant_of(variant));
            io::Json j = io::degree_report_json(cat, report);
            j["A"] = a;
            return j.dump(2);
        },
        py::arg("category"), py::arg("A"), py::arg("variant") = "embedding");

    m.def(
        "verify_multiplicativity",
        [](const Category& c1, const Category& c2, const std::string& a1, const std::string& a2) {
            auto r = verify_multiplicativity(c1, c2, object_of(c1, a1), object_of(c2, a2));
            io::Json j;
            j["t1"] = r.t1.str();
            j["t2"] = r.t2.str();
            j["t_product"] = r.t_product.str();
            j["st1"] = r.st1.str();
            j["st2"] = r.st2.str();
            j["st_product"] = r.st_product.str();
            j["ok"] = r.ok;
            return j.dump(2);
        },
        py::arg("c1"), py::arg("c2"), py::arg("A1"), py::arg("A2"));

    m.def(
        "verify_aut_factor",
        [](const Category& cat, const std::string& a) {
            auto r = verify_aut_factor(cat, object_of(cat, a));
            io::Json j;
            j["t"] = r.t.str();
            j["t_structural"] = r.t_structural.str();
            j["aut"] = r.aut_size;
            j["ok"] = r.ok;
            return j.dump(2);
        },
        py::arg("category"), py::arg("A"));

    m.def("rigid_surjections_count",
          [](int n, int m) { return rigid_surjections(n, m).size(); });
    m.def("count_embeddings", [](const std::string& a_json, const std::string& b_json) {
        Structure a = io::parse_structure(io::Json::parse(a_json));
        Structure b = io::parse_structure(io::Json::parse(b_json));
        return enumerate_embeddings(a, b).size();
    });
    m.def("chain_structure_json",
          [](int n) { return io::structure_json(chain(n)).dump(2); });

    m.def("example_two_object_pair", []() { return examples::two_object_pair(); });
    m.def("example_aut2", []() { return examples::aut2_category(); });
    m.def("example_one_object", []() { return examples::one_object(); });
}
