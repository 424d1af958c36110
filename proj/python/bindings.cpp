#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sgsc/bounds.hpp"
#include "sgsc/config.hpp"
#include "sgsc/experiments.hpp"
#include "sgsc/multiindex.hpp"
#include "sgsc/orthopoly.hpp"
#include "sgsc/sc.hpp"
#include "sgsc/sparsity.hpp"

namespace py = pybind11;
using namespace sgsc;

namespace {

std::vector<std::vector<int>> as_lists(const MultiIndexSet& s) {
  std::vector<std::vector<int>> out;
  for (const auto& m : s) out.push_back(m.values());
  return out;
}

MultiIndex as_index(const std::vector<int>& v) { return MultiIndex(v); }

}  // namespace

PYBIND11_MODULE(_sgsc, m) {
  m.doc() = "Stochastic Galerkin and collocation FEM core";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("total_degree_set", [](std::size_t N, int p) { return as_lists(total_degree_set(N, p)); });
  m.def("tensor_product_set", [](std::size_t N, int p) { return as_lists(tensor_product_set(N, p)); });
  m.def("smolyak_set", [](std::size_t N, int p) { return as_lists(smolyak_set(N, p)); });

  m.def("legendre", py::overload_cast<int, double>(&legendre), py::arg("n"), py::arg("y"),
        "Orthonormal Legendre polynomial sqrt(2n+1) P_n(y).");
  m.def("gauss_rule", [](int n) {
    const auto& q = gauss_rule(n);
    return py::make_tuple(q.nodes, q.weights);
  });
  m.def("triple_product", &triple_product);

  m.def("binomial", &binomial);
  m.def("nnz_exact", [](std::size_t N, int p, const std::vector<int>& r) { return nnz_exact(N, p, as_index(r)); });
  m.def("nnz_bruteforce",
        [](std::size_t N, int p, const std::vector<int>& r) { return nnz_bruteforce(N, p, as_index(r)); });
  m.def("nnz_bound", [](std::size_t N, int p, const std::vector<int>& r) { return nnz_bound(N, p, as_index(r)); });
  m.def("mpr_bound", &mpr_bound);
  m.def("mpr_r_dependent_bound", &mpr_r_dependent_bound);
  m.def("closed_form_1d", &closed_form_1d);
  m.def("closed_form_linear", &closed_form_linear);

  m.def(
      "sparse_grid",
      [](std::size_t N, int L, const std::string& rule) {
        NodeFamily f;
        if (rule == "CC") f = NodeFamily::ClenshawCurtis;
        else if (rule == "GL") f = NodeFamily::GaussLegendre;
        else if (rule == "LJ") f = NodeFamily::Leja;
        else throw py::value_error("rule must be CC, GL or LJ");
        const auto g = build_grid(N, L, f);
        return py::make_tuple(g.points, g.weights);
      },
      py::arg("N"), py::arg("L"), py::arg("rule") = "CC");

  m.def(
      "work_bounds",
      [](const std::vector<double>& eps, const std::string& constants_toml, int rbar) {
        auto cfg = parse_bounds_config(constants_toml);
        std::vector<std::vector<double>> out;
        for (const auto& r : asymptotic_table(eps, cfg.constants, rbar))
          out.push_back({r.eps, r.w_affine, r.w_poly, r.w_transc, r.w_sc});
        return out;
      },
      py::arg("eps"), py::arg("constants_toml") = "", py::arg("rbar") = 1);

  m.def(
      "compare",
      [](const std::string& scenario_toml, int threads) {
        Experiment ex(parse_scenario(scenario_toml), threads);
        std::vector<ResultRow> rows;
        {
          py::gil_scoped_release release;
          rows = ex.run();
        }
        std::ostringstream os;
        write_results_csv(os, rows);
        return os.str();
      },
      py::arg("scenario_toml"), py::arg("threads") = 1,
      "Run a scenario given as TOML text and return the results CSV.");
}
