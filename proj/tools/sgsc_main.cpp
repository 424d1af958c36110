#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "sgsc/bounds.hpp"
#include "sgsc/coefficients.hpp"
#include "sgsc/config.hpp"
#include "sgsc/experiments.hpp"
#include "sgsc/sparsity.hpp"

using namespace sgsc;

namespace {

struct Globals {
  std::string config;
  std::string out;
  std::uint64_t seed = 1;
  int threads = 1;
  bool export_matrices = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Scenario require_scenario(const Globals& g) {
  if (g.config.empty()) throw ConfigError("--config <toml> is required for this subcommand");
  return load_scenario(g.config);
}

std::string matrix_prefix(const Globals& g) {
  return g.out.empty() || g.out == "-" ? std::string("sgsc") : std::filesystem::path(g.out).replace_extension().string();
}

int cmd_sparsity(const Globals& g, std::size_t N, int p, std::optional<int> r, bool r_eq_p, bool pattern) {
  Output out(g.out);
  if (pattern) {
    write_pattern_csv(out.stream(), N, p, r.value_or(p));
    return 0;
  }
  std::vector<SparsityRow> rows;
  if (r_eq_p) {
    for (int q = 0; q <= p; ++q) rows.push_back(sparsity_row(N, q, q));
  } else if (r) {
    rows.push_back(sparsity_row(N, p, *r));
  } else {
    for (int k = 0; k <= 2 * p; ++k) rows.push_back(sparsity_row(N, p, k));
  }
  write_sparsity_csv(out.stream(), rows);
  return 0;
}

int cmd_solve_sg(const Globals& g, const std::string& method, int p) {
  Experiment ex(require_scenario(g), g.threads);
  if (method != "SG-TD" && method != "SG-SM") throw ConfigError("--method must be SG-TD or SG-SM");
  const auto kind = method == "SG-SM" ? IndexSetKind::Smolyak : IndexSetKind::TotalDegree;
  const auto& s = ex.scenario();
  auto lambda_p = kind == IndexSetKind::Smolyak ? smolyak_set(s.N, p) : total_degree_set(s.N, p);
  auto lambda_r = ex.projection_set(kind, p);
  int r = 0;
  for (const auto& m : lambda_r) r = std::max(r, m.total());
  const auto coeff = project(ex.problem().a, ex.mesh(), lambda_r, default_quad_points(ex.problem().a, r));
  const auto sys = assemble_system(coeff, ex.mesh(), lambda_p);
  auto res = solve(sys, ex.load(), s.first_pass_tol, s.max_iter);
  Output out(g.out);
  write_sg_solution_csv(out.stream(), ex.mesh(), sys, res.u);
  if (g.export_matrices) {
    const auto prefix = matrix_prefix(g);
    for (std::size_t b = 0; b < sys.blocks().size(); ++b)
      write_matrix_market(prefix + "_A" + std::to_string(b) + ".mtx", sys.blocks()[b].A);
  }
  std::cerr << method << " p=" << p << " M_p=" << sys.num_stochastic() << " blocks=" << sys.total_blocks()
            << " dropped=" << sys.dropped() << " iterations=" << res.report.iterations
            << " cost_units=" << res.report.cost_units << '\n';
  return 0;
}

int cmd_solve_sc(const Globals& g, const std::string& rule, int L) {
  Experiment ex(require_scenario(g), g.threads);
  NodeFamily f;
  if (rule == "CC") f = NodeFamily::ClenshawCurtis;
  else if (rule == "GL") f = NodeFamily::GaussLegendre;
  else if (rule == "LJ") f = NodeFamily::Leja;
  else throw ConfigError("--rule must be CC, GL or LJ");
  auto run = ex.solve_sc(f, L, ex.scenario().first_pass_tol);
  Output out(g.out);
  write_grid_csv(out.stream(), run.grid);
  if (g.export_matrices) {
    StiffnessAssembler assembler(ex.mesh());
    const auto sampler = ex.problem().a.sampler(ex.mesh());
    std::vector<double> vals;
    sampler(std::vector<double>(run.grid.dim, 0.0), vals);
    write_matrix_market(matrix_prefix(g) + "_P0.mtx", assembler.assemble(vals));
  }
  std::cerr << run.row.method << " L=" << L << " points=" << run.row.sdof
            << " iterations=" << run.row.iterations << " cost_units=" << run.row.cost_units << '\n';
  return 0;
}

int cmd_compare(const Globals& g) {
  Experiment ex(require_scenario(g), g.threads);
  const auto rows = ex.run();
  Output out(g.out);
  write_results_csv(out.stream(), rows);
  int status = 0;
  for (const auto& r : rows)
    if (r.failed) {
      std::cerr << "failed: " << r.method << " order " << r.order << ": " << r.message << '\n';
      status = 1;
    }
  return status;
}

int cmd_bounds(const Globals& g) {
  BoundsConfig cfg;
  if (!g.config.empty()) cfg = load_bounds_config(g.config);
  else
    for (int k = 1; k <= 12; ++k) cfg.eps.push_back(std::pow(10.0, -k));
  Output out(g.out);
  write_bounds_csv(out.stream(), asymptotic_table(cfg.eps, cfg.constants, cfg.rbar));
  return 0;
}

CoefficientModel model_1d(const std::string& name) {
  if (name == "exp1d") return builtin_exp1d();
  if (name == "affine1d")
    return CoefficientModel::affine("affine1d", [](const Point&) { return 2.0; },
                                    {[](const Point&) { return 1.0; }}, 1.0, 3.0);
  throw ConfigError("--model must be exp1d or affine1d");
}

int cmd_ellipticity(const Globals& g, const std::string& name, int r_max, double delta) {
  Output out(g.out);
  if (!g.config.empty()) {
    const auto s = load_scenario(g.config);
    const auto prob = make_problem(s.model, s.N, s.rbar, s.Lc);
    const Mesh mesh(s.mesh_n);
    const auto rep = well_posed_order(prob.a, mesh.quadrature_points(), r_max, g.seed);
    write_ellipticity_csv(out.stream(), rep);
    std::cerr << "r_tilde=" << (rep.r_tilde ? std::to_string(*rep.r_tilde) : std::string("unresolved")) << '\n';
    return 0;
  }
  const auto model = model_1d(name);
  const std::vector<Point> pts{{0.5, 0.5}};
  const double d = delta > 0.0 ? delta : 0.5 * model.a_min();
  const ComplexGrid grid;
  out.stream() << "r,re,im,inside\n";
  write_region_csv(out.stream(), ellipticity_region_grid(model, d, grid, pts), -1);
  for (int r = 0; r <= r_max; ++r) {
    const auto proj = project(model, pts, total_degree_set(1, r), default_quad_points(model, r));
    write_region_csv(out.stream(), ellipticity_region_grid(proj, d, grid), r);
  }
  const auto rep = well_posed_order(model, pts, r_max, g.seed);
  std::cerr << "r_tilde=" << (rep.r_tilde ? std::to_string(*rep.r_tilde) : std::string("unresolved")) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic Galerkin and collocation FEM for random elliptic problems"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "Scenario or constants TOML file");
  app.add_option("--out", g.out, "Output CSV path (default stdout)");
  app.add_option("--seed", g.seed, "Seed for quasi-random sampling");
  app.add_option("--threads", g.threads, "Worker threads for collocation")->check(CLI::PositiveNumber);
  app.add_flag("--export-matrices", g.export_matrices, "Write assembled matrices in Matrix Market format");

  std::size_t N = 1;
  int p = 0, level = 0, r_max = 6;
  std::optional<int> r;
  bool r_eq_p = false, pattern = false;
  std::string method = "SG-TD", rule = "CC", model = "exp1d";
  double delta = 0.0;

  auto* sp = app.add_subcommand("sparsity", "Block sparsity counts and bounds");
  sp->add_option("--N", N, "Number of random variables")->required()->check(CLI::Range(1, 64));
  sp->add_option("--p", p, "Polynomial order")->required()->check(CLI::NonNegativeNumber);
  sp->add_option("--r", r, "Coefficient order")->check(CLI::NonNegativeNumber);
  sp->add_flag("--r-eq-p", r_eq_p, "Sweep p' = 0..p with r = p'");
  sp->add_flag("--pattern", pattern, "Emit the nonzero block pattern of K instead");

  auto* sg = app.add_subcommand("solve-sg", "Single stochastic Galerkin solve");
  sg->add_option("--method", method, "SG-TD or SG-SM");
  sg->add_option("--p", p, "Polynomial order")->required()->check(CLI::NonNegativeNumber);

  auto* sc = app.add_subcommand("solve-sc", "Single stochastic collocation solve");
  sc->add_option("--rule", rule, "CC, GL or LJ");
  sc->add_option("--L", level, "Sparse grid level")->required()->check(CLI::NonNegativeNumber);

  auto* cmp = app.add_subcommand("compare", "Run every method of a scenario against the reference");
  auto* bd = app.add_subcommand("bounds", "Asymptotic work bounds");

  auto* el = app.add_subcommand("ellipticity", "Ellipticity regions or well-posedness order");
  el->add_option("--model", model, "exp1d or affine1d");
  el->add_option("--r-max", r_max, "Largest projection order")->check(CLI::NonNegativeNumber);
  el->add_option("--delta", delta, "Ellipticity threshold (default a_min/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*sp) return cmd_sparsity(g, N, p, r, r_eq_p, pattern);
    if (*sg) return cmd_solve_sg(g, method, p);
    if (*sc) return cmd_solve_sc(g, rule, level);
    if (*cmp) return cmd_compare(g);
    if (*bd) return cmd_bounds(g);
    if (*el) return cmd_ellipticity(g, model, r_max, delta);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
