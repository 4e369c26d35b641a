#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "proetale/cli.hpp"
#include "proetale/json_io.hpp"
#include "proetale/pi1.hpp"

namespace py = pybind11;
using namespace proetale;

namespace {

Group group_from_tables(const std::vector<std::vector<int>>& mul) { return group_from_table(mul); }

py::dict abelian_to_dict(const AbelianGroup& g) {
    py::dict d;
    py::list factors;
    for (const Int& t : g.torsion) factors.append(t.str());
    d["invariant_factors"] = factors;
    d["free_rank"] = g.free_rank;
    d["pretty"] = g.str();
    return d;
}

py::dict bg_info(const std::vector<std::vector<int>>& mul, int dim) {
    auto bg = classifying_space(group_from_tables(mul), dim);
    py::dict d;
    py::list levels;
    for (int n = 0; n <= dim; ++n) levels.append(bg.space.shape.level_size(n));
    d["levels"] = levels;
    d["nerve_iso_valid"] = validate_map(bg.space.shape, bg.nerve_shape, bg.iso).ok;
    return d;
}

py::dict cohomology_table(const std::vector<std::vector<int>>& mul, const std::string& coeff,
                          int pmax) {
    Group g = group_from_tables(mul);
    Coefficient a = Coefficient::parse(coeff);
    auto bg = classifying_space(g, pmax + 1);
    auto c = cochain_complex_of_shape(bg.space.shape, a, pmax);
    py::dict out;
    py::list rows;
    for (int p = 0; p <= pmax; ++p) {
        AbelianGroup h = cohomology(c, p);
        py::dict row = abelian_to_dict(h);
        row["p"] = p;
        row["oracle_match"] = (h == group_cohomology_oracle(g, a, p));
        rows.append(row);
    }
    out["coefficients"] = a.name;
    out["rows"] = rows;
    return out;
}

py::dict group_cohomology(const std::vector<std::vector<int>>& mul, const std::string& coeff,
                          int p) {
    return abelian_to_dict(
        group_cohomology_oracle(group_from_tables(mul), Coefficient::parse(coeff), p));
}

py::dict pi1_of_bg(const std::vector<std::vector<int>>& mul) {
    auto bg = classifying_space(group_from_tables(mul), 2);
    auto r = pi1_edge_path(bg.space.shape, 0);
    py::dict d;
    d["decided"] = r.decided;
    if (r.decided) {
        d["order"] = r.group.order;
        d["table"] = r.group.mul;
        d["isomorphic_to_input"] = groups_isomorphic(r.group, group_from_tables(mul));
    }
    return d;
}

py::dict components_of(const std::vector<std::string>& points,
                       const std::vector<std::pair<int, int>>& leq) {
    FiniteSpace x(points, leq);
    auto c = components(x);
    py::dict d;
    d["points"] = c.space.points();
    d["quotient"] = c.quotient.map;
    d["totally_disconnected"] = is_totally_disconnected(x);
    d["extremally_disconnected"] = is_extremally_disconnected(x);
    return d;
}

// generic JSON-in/JSON-out pass-through to the CLI machinery
py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-model engine for component spaces, hypercoverings and their cohomology";
    m.def("bg", &bg_info, py::arg("mul"), py::arg("dim") = 3,
          "classifying space level sizes and nerve certificate validity");
    m.def("cohomology", &cohomology_table, py::arg("mul"), py::arg("coeff") = "Z",
          py::arg("pmax") = 3, "cohomology table with the oracle comparison column");
    m.def("group_cohomology", &group_cohomology, py::arg("mul"), py::arg("coeff"), py::arg("p"),
          "bar-resolution group cohomology with trivial action");
    m.def("pi1_bg", &pi1_of_bg, py::arg("mul"),
          "edge-path group of the classifying space, with a table isomorphism check");
    m.def("components", &components_of, py::arg("points"), py::arg("leq"),
          "space of components of a finite space given by specialization pairs");
    m.def("run_cli", &run_cli, py::arg("args"),
          "run a CLI subcommand in-process; returns (exit_code, stdout, stderr)");
}
