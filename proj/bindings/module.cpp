// SPDX-License-Identifier: Apache-2.0
//
// Python bindings: exact McKay quivers, character tables, scalar extensions,
// determinant-twist embeddings, and regular quiver coverings.

#include "mckay/acceptance.hpp"
#include "mckay/covers.hpp"
#include "mckay/error.hpp"
#include "mckay/groupfile.hpp"
#include "mckay/presets.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

using mckay::Quiver;

/// Python-side handle; the underlying group object is immutable and shared.
struct PyGroup {
    mckay::GroupPtr ptr;
};

py::dict quiver_to_py(const Quiver& q) {
    py::dict d;
    d["degrees"] = q.degrees;
    d["arrows"] = q.arrows;
    if (q.nakayama) {
        d["nakayama"] = q.nakayama->images;
    } else {
        d["nakayama"] = py::none();
    }
    d["provenance"] = q.provenance;
    return d;
}

PyGroup group_from_rows(int conductor, int dimension,
                        const std::vector<std::vector<std::vector<std::string>>>& generators,
                        int max_order, const std::string& description) {
    std::ostringstream text;
    text << "conductor = " << conductor << "\n";
    text << "dimension = " << dimension << "\n";
    for (const auto& gen : generators) {
        text << "\n[[generator]]\nrows = [";
        for (std::size_t i = 0; i < gen.size(); ++i) {
            if (i > 0) text << ", ";
            text << "[";
            for (std::size_t j = 0; j < gen[i].size(); ++j) {
                if (j > 0) text << ", ";
                text << "\"" << gen[i][j] << "\"";
            }
            text << "]";
        }
        text << "]\n";
    }
    mckay::GroupFileData data = mckay::parse_group_text(text.str());
    return {mckay::enumerate_group(data.generators, max_order,
                                   description.empty() ? "custom" : description)};
}

py::dict covering_to_py(const mckay::CoveringMap& c, const mckay::CoverReport& rep) {
    py::dict d;
    d["pi"] = c.vertex_map;
    std::vector<std::vector<int>> deck;
    for (const auto& p : c.deck) deck.push_back(p.images);
    d["deck"] = deck;
    d["deck_order"] = c.deck_order;
    d["verified"] = rep.ok;
    d["violations"] = rep.violations;
    return d;
}

} // namespace

PYBIND11_MODULE(_mckay, m) {
    m.doc() = "exact McKay quivers of finite matrix groups over cyclotomic fields";

    py::register_exception<mckay::Error>(m, "McKayError");

    py::class_<PyGroup>(m, "Group", "finite matrix group over a cyclotomic field")
        .def_property_readonly("order", [](const PyGroup& g) { return g.ptr->order(); })
        .def_property_readonly("dimension", [](const PyGroup& g) { return g.ptr->dim(); })
        .def_property_readonly("conductor", [](const PyGroup& g) { return g.ptr->conductor(); })
        .def_property_readonly("exponent", [](const PyGroup& g) { return g.ptr->exponent(); })
        .def_property_readonly("class_count", [](const PyGroup& g) { return g.ptr->class_count(); })
        .def_property_readonly("description",
                               [](const PyGroup& g) { return g.ptr->description(); })
        .def_property_readonly("special_linear",
                               [](const PyGroup& g) { return g.ptr->in_special_linear(); })
        .def("__repr__", [](const PyGroup& g) {
            return "<Group " + g.ptr->description() + " of order " +
                   std::to_string(g.ptr->order()) + ">";
        });

    m.def("presets", [] {
        std::vector<py::dict> out;
        for (const mckay::PresetInfo& p : mckay::preset_catalog()) {
            py::dict d;
            d["name"] = p.name;
            d["parameterized"] = p.parameterized;
            d["summary"] = p.summary;
            out.push_back(d);
        }
        return out;
    });

    m.def(
        "preset",
        [](const std::string& name, int n, int max_order) {
            return PyGroup{mckay::build_preset(name, n, max_order)};
        },
        py::arg("name"), py::arg("n") = 0, py::arg("max_order") = 10000,
        "build a built-in group by name");

    m.def("group", &group_from_rows, py::arg("conductor"), py::arg("dimension"),
          py::arg("generators"), py::arg("max_order") = 10000, py::arg("description") = "",
          "enumerate the group generated by matrices of cyclotomic expression strings");

    m.def(
        "group_from_file",
        [](const std::string& path, int max_order) {
            mckay::GroupFileData data = mckay::parse_group_file(path);
            return PyGroup{mckay::enumerate_group(data.generators, max_order, path)};
        },
        py::arg("path"), py::arg("max_order") = 10000);

    m.def(
        "character_table",
        [](const PyGroup& g) {
            mckay::CharacterTable t = mckay::CharacterTable::compute(g.ptr);
            py::dict d;
            d["degrees"] = t.degrees;
            d["prime"] = t.prime;
            std::vector<std::vector<std::string>> values;
            for (const auto& row : t.rows) {
                std::vector<std::string> vals;
                for (const auto& v : row.values) vals.push_back(v.str());
                values.push_back(std::move(vals));
            }
            d["values"] = values;
            std::vector<int> class_sizes;
            for (const auto& members : g.ptr->classes().members) {
                class_sizes.push_back(static_cast<int>(members.size()));
            }
            d["class_sizes"] = class_sizes;
            return d;
        },
        py::arg("group"), "exact irreducible character table as strings");

    m.def(
        "quiver", [](const PyGroup& g) { return quiver_to_py(mckay::build_mckay(g.ptr)); },
        py::arg("group"), "McKay quiver: degrees, arrows, determinant twist");

    m.def(
        "quiver_with_twist_arrows",
        [](const PyGroup& g) {
            return quiver_to_py(mckay::add_nakayama_arrows(mckay::build_mckay(g.ptr)));
        },
        py::arg("group"), "McKay quiver with the determinant twist traded for extra arrows");

    m.def(
        "quiver_dot",
        [](const PyGroup& g) { return mckay::export_dot(mckay::build_mckay(g.ptr)); },
        py::arg("group"), "Graphviz rendering of the McKay quiver");

    m.def(
        "quiver_json",
        [](const PyGroup& g) { return mckay::export_json(mckay::build_mckay(g.ptr)); },
        py::arg("group"), "JSON rendering of the McKay quiver");

    m.def(
        "scalar_extend",
        [](const PyGroup& g, int k, int max_order) {
            return PyGroup{mckay::scalar_extend(g.ptr, k, max_order)};
        },
        py::arg("group"), py::arg("k"), py::arg("max_order") = 10000,
        "extend a special linear group by the scalar k-th roots of unity");

    m.def(
        "embed_special_linear",
        [](const PyGroup& g) { return PyGroup{mckay::embed_det_inverse(g.ptr).image}; },
        py::arg("group"),
        "image of g -> blockdiag(g, det(g)^-1) inside the special linear group");

    m.def(
        "strip_diagonal", [](const PyGroup& g) { return PyGroup{mckay::strip_diagonal(g.ptr)}; },
        py::arg("group"),
        "drop the trailing diagonal entries of a diagonal-corner special linear group");

    m.def(
        "covering",
        [](const PyGroup& ambient, const PyGroup& sub) {
            mckay::NormalEmbedding emb = mckay::embed_subgroup(ambient.ptr, sub.ptr);
            mckay::CharacterTable tg = mckay::CharacterTable::compute(emb.ambient);
            mckay::CharacterTable tl = mckay::CharacterTable::compute(emb.sub);
            mckay::CoveringMap c =
                mckay::build_covering(emb, tg, tl, mckay::build_mckay(tg), mckay::build_mckay(tl));
            return covering_to_py(c, mckay::verify_regular_covering(c));
        },
        py::arg("ambient"), py::arg("subgroup"),
        "regular covering of McKay quivers over a normal subgroup with cyclic quotient");

    m.def("self_check", [] {
        std::ostringstream log;
        bool ok = mckay::run_acceptance(log);
        return py::make_tuple(ok, log.str());
    });
}
