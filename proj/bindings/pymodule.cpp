#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tourney/catalog.hpp"
#include "tourney/landscape.hpp"
#include "tourney/orderings.hpp"
#include "tourney/search.hpp"
#include "tourney/structure.hpp"
#include "tourney/tournament.hpp"
#include "tourney/transitive.hpp"

namespace py = pybind11;
using namespace tourney;

namespace {

VertexSet to_set(const std::vector<int>& verts) {
    VertexSet s = 0;
    for (int v : verts) {
        if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range");
        s |= vbit(v);
    }
    return s;
}

std::vector<int> to_list(VertexSet s) {
    std::vector<int> verts;
    for (VertexSet m = s; m; m &= m - 1) verts.push_back(lowest_vertex(m));
    return verts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "tournament combinatorics: canonical forms, tr, galaxies, smooth structures";

    py::class_<Tournament>(m, "Tournament")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_arcs", &Tournament::from_arcs, py::arg("n"), py::arg("arcs"))
        .def_static("from_trn", [](const std::string& text) { return Tournament::from_trn(text); })
        .def_property_readonly("n", &Tournament::size)
        .def("arc", &Tournament::arc)
        .def("out_degree", &Tournament::out_degree)
        .def("in_degree", &Tournament::in_degree)
        .def("out_neighbors", [](const Tournament& t, int v) { return to_list(t.out_neighbors(v)); })
        .def("is_regular", &Tournament::is_regular)
        .def("complement", &Tournament::complement)
        .def("induced", [](const Tournament& t, const std::vector<int>& verts) {
            return t.induced(to_set(verts));
        })
        .def("relabel", &Tournament::relabel)
        .def("with_flipped", &Tournament::with_flipped)
        .def("to_trn", &Tournament::to_trn)
        .def("__eq__", [](const Tournament& a, const Tournament& b) { return a == b; })
        .def("__repr__", [](const Tournament& t) {
            return "<Tournament n=" + std::to_string(t.size()) + ">";
        });

    m.def("canonical_hex", [](const Tournament& t) { return canonical_form(t).hex(); });
    m.def("is_isomorphic", &is_isomorphic);
    m.def("contains", [](const Tournament& t, const Tournament& h) -> py::object {
        auto w = contains(t, h);
        if (!w) return py::none();
        return py::cast(to_list(*w));
    });
    m.def("is_free", [](const Tournament& t, const std::vector<Tournament>& forbidden) {
        return is_free(t, forbidden);
    });

    m.def("is_transitive", &is_transitive);
    m.def("tr", [](const Tournament& t) {
        TrResult r = tr(t);
        return py::make_tuple(r.size, to_list(r.witness));
    });
    m.def("check_ramsey_bound", [](int k) { return check_ramsey_bound(k).holds; });

    m.def("backward_arcs", [](const Tournament& t, const std::vector<int>& perm) {
        return backward_arcs(t, Ordering{perm});
    });
    m.def("is_galaxy_ordering", [](const Tournament& t, const std::vector<int>& perm) {
        return is_galaxy_ordering(t, Ordering{perm});
    });
    m.def("find_galaxy_ordering", [](const Tournament& t) -> py::object {
        auto theta = find_galaxy_ordering(t);
        if (!theta) return py::none();
        return py::cast(theta->perm);
    });

    m.def("is_homogeneous", [](const Tournament& t, const std::vector<int>& verts) {
        return is_homogeneous(t, to_set(verts));
    });
    m.def("nontrivial_homogeneous_sets", [](const Tournament& t) {
        std::vector<std::vector<int>> out;
        for (VertexSet s : nontrivial_homogeneous_sets(t)) out.push_back(to_list(s));
        return out;
    });
    m.def("is_prime", &is_prime);
    m.def("directed_density",
          [](const Tournament& t, const std::vector<int>& x, const std::vector<int>& y) {
              DensityValue d = directed_density(t, to_set(x), to_set(y));
              return py::make_tuple(d.arcs, d.pairs);
          });
    m.def("validate_smooth_structure", [](const Tournament& t, const std::string& spec_json) {
        return validate_smooth_structure(t, SmoothStructureSpec::from_json(spec_json)).to_json();
    });
    m.def("check_intersection_bound",
          [](const Tournament& t, const std::string& spec_json, int j, const std::vector<int>& sstar,
             const std::vector<int>& a) {
              auto rep = check_intersection_bound(t, SmoothStructureSpec::from_json(spec_json), j,
                                                  to_set(sstar), to_set(a));
              return py::make_tuple(rep.intersection_size, rep.bound.str(), rep.holds);
          });

    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : catalog()) ids.push_back(e.id);
        return ids;
    });
    m.def("named", [](const std::string& id) { return named(id); });
    m.def("verify_catalog_json", [] { return verify_catalog().to_json(); });

    m.def("enumerate_classes", &enumerate_classes);
    m.def("classify7_json", [](const Tournament& t) {
        auto rec = classify7(t);
        std::string match = rec.catalog_match.value_or("");
        return py::dict(
            py::arg("form") = rec.form.hex(), py::arg("is_galaxy") = rec.flags.is_galaxy,
            py::arg("in_H") = rec.flags.in_h, py::arg("in_R") = rec.flags.in_r,
            py::arg("in_S") = rec.flags.in_s,
            py::arg("nonprime_k6free") = rec.flags.nonprime_k6free,
            py::arg("residual") = rec.flags.residual, py::arg("catalog_match") = match);
    });
    m.def("run_landscape_json",
          [](bool include_records) { return landscape_json(run_landscape(), include_records); },
          py::arg("include_records") = false);

    m.def("local_search",
          [](int n, const std::vector<Tournament>& forbidden, std::uint64_t seed, int max_steps,
             int restarts) {
              SearchConfig cfg{n, forbidden, seed, max_steps, restarts};
              SearchResult r = local_search(cfg);
              return py::make_tuple(r.best, r.tr_value, r.free_certificate,
                                    search_result_json(r));
          },
          py::arg("n"), py::arg("forbidden"), py::arg("seed") = 0, py::arg("max_steps") = 1000,
          py::arg("restarts") = 1);
}
