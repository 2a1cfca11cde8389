#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meshforge/ade.hpp"
#include "meshforge/cli.hpp"
#include "meshforge/homology.hpp"
#include "meshforge/koszul.hpp"
#include "meshforge/quotient.hpp"
#include "meshforge/verify.hpp"

namespace py = pybind11;
using namespace meshforge;

namespace {

std::string gen_ade(const std::string& family, int index, int dim, const std::string& format) {
    if (family.size() != 1) throw InvalidDynkinIndex("family must be one of A, D, E");
    return export_translation_quiver(ade_translation_quiver(family[0], index, dim), format);
}

py::dict h0_dims(const std::string& family, int index, int dim, int L_max) {
    if (family.size() != 1) throw InvalidDynkinIndex("family must be one of A, D, E");
    FinDimAlgebra h = h0(dg_auslander(ade_translation_quiver(family[0], index, dim), L_max), L_max);
    py::dict blocks;
    for (const auto& [k, v] : h.block_dims())
        blocks[py::make_tuple(k.first, k.second)] = v;
    py::dict out;
    out["dim"] = h.dim();
    out["stabilized"] = h.stabilized;
    out["L_used"] = h.L_used;
    out["block_dims"] = blocks;
    return out;
}

py::dict ext_table_py(const std::string& quiver_json) {
    ExtTable t = ext_table(auslander_presentation(parse_quiver(quiver_json)));
    py::dict dims;
    for (const auto& [key, d] : t.dims) {
        auto [l, i, j] = key;
        dims[py::make_tuple(l, i, j)] = d;
    }
    py::dict out;
    out["d"] = t.d;
    out["pi"] = t.pi;
    out["dims"] = dims;
    out["duality"] = cy_duality_check(t);
    return out;
}

py::dict koszul_cohomology_py(const std::string& algebra_json, int W, int deg_hi) {
    AugmentedDgAlgebra a;
    try {
        a = AugmentedDgAlgebra::from_json(algebra_json);
    } catch (const Error&) {
        a = augment(FinDimAlgebra::from_json(algebra_json));
    }
    KoszulCohomology k = koszul_cohomology(koszul_dual(a, W), 0, deg_hi);
    py::dict dims;
    for (const auto& [key, d] : k.dims) {
        auto [n, i, j] = key;
        dims[py::make_tuple(n, i, j)] = d;
    }
    py::dict out;
    out["dims"] = dims;
    out["totals"] = k.totals;
    out["stabilized"] = k.stabilized;
    return out;
}

py::tuple run_cli(const std::vector<std::string>& argv) {
    std::string out, err;
    int code = run_command(argv, out, err);
    return py::make_tuple(code, out, err);
}

}  // namespace

PYBIND11_MODULE(_meshforge, m) {
    m.doc() = "translation quivers, dg Auslander algebras and their homological invariants";

    m.def("gen_ade", &gen_ade, py::arg("family"), py::arg("index"), py::arg("dim"),
          py::arg("format") = "json",
          "ADE translation quiver of the given parity class, as json/dot/tikz text");
    m.def("validate", [](const std::string& text) {
        ValidationReport rep = validate_translation_quiver(parse_quiver(text));
        std::vector<std::tuple<std::string, std::string, std::string>> v;
        for (const auto& x : rep.violations) v.push_back({x.rule, x.subject, x.message});
        return py::make_tuple(rep.ok, v);
    });
    m.def("canonical", [](const std::string& text) {
        return export_translation_quiver(canonical_form(parse_quiver(text)), "json");
    });
    m.def("h0_dims", &h0_dims, py::arg("family"), py::arg("index"), py::arg("dim"),
          py::arg("L_max") = 16);
    m.def("ext_table", &ext_table_py, py::arg("quiver_json"));
    m.def("koszul_cohomology", &koszul_cohomology_py, py::arg("algebra_json"), py::arg("W") = 12,
          py::arg("deg_hi") = 4);
    m.def("stable_algebra_json", [](const std::string& quiver_json, int L_max) {
        return stable_algebra(auslander_presentation(parse_quiver(quiver_json)), L_max).to_json();
    }, py::arg("quiver_json"), py::arg("L_max") = 16);
    m.def("fixture", [](const std::string& name) {
        if (name == "a1_dim0") return export_translation_quiver(full_fixture_a1_dim0(), "json");
        if (name == "conifold") return export_translation_quiver(full_fixture_conifold(), "json");
        if (name == "a1_dim2") return export_translation_quiver(full_fixture_a1_dim2(), "json");
        if (name.rfind("a", 0) == 0 && name.find("_dim0") != std::string::npos)
            return export_translation_quiver(
                full_fixture_a_dim0(std::stoi(name.substr(1, name.find('_') - 1))), "json");
        throw Error("unknown fixture '" + name + "'");
    });
    m.def("run_cli", &run_cli, py::arg("argv"), "run a meshforge CLI command in-process");

    py::register_exception<Error>(m, "MeshforgeError");
}
