#include "sgsc/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sgsc/sparsity.hpp"

namespace sgsc {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr double kReferenceTol = 1e-12;

double second_pass_tol(double err, const Vector& ref) {
  const double scale = std::max(ref.lpNorm<Eigen::Infinity>(), 1e-300);
  return std::max(1e-13, err / scale / 10.0);
}

NodeFamily family_of(const std::string& m) {
  if (m == "SC-CC") return NodeFamily::ClenshawCurtis;
  if (m == "SC-GL") return NodeFamily::GaussLegendre;
  if (m == "SC-LJ") return NodeFamily::Leja;
  throw std::invalid_argument("unknown collocation method '" + m + "'");
}

}  // namespace

double linf(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("linf: size mismatch");
  return (a - b).lpNorm<Eigen::Infinity>();
}

Experiment::Experiment(Scenario s, int threads)
    : s_(std::move(s)),
      threads_(std::max(1, threads)),
      mesh_(s_.mesh_n),
      problem_(make_problem(s_.model, s_.N, s_.rbar, s_.Lc)),
      F_(assemble_load(mesh_, problem_.f)) {
  s_.validate();
}

const Vector& Experiment::reference() {
  if (!reference_) {
    auto run = solve_sc(NodeFamily::ClenshawCurtis, s_.reference_level, kReferenceTol);
    reference_ = std::move(run.mean);
  }
  return *reference_;
}

MultiIndexSet Experiment::projection_set(IndexSetKind kind, int p) const {
  const auto& a = problem_.a;
  switch (s_.projection.kind) {
    case ProjectionRule::Kind::Exact:
      if (a.degree() < 0) throw std::invalid_argument("exact projection of a transcendental model");
      return total_degree_set(s_.N, a.degree());
    case ProjectionRule::Kind::OrderEqualsP:
      return kind == IndexSetKind::Smolyak ? smolyak_set(s_.N, p) : total_degree_set(s_.N, p);
    case ProjectionRule::Kind::Fixed:
      return total_degree_set(s_.N, s_.projection.order);
  }
  return total_degree_set(s_.N, 0);
}

SGRun Experiment::solve_sg(IndexSetKind kind, int p, double tol) {
  const auto t0 = Clock::now();
  auto lambda_p = kind == IndexSetKind::Smolyak ? smolyak_set(s_.N, p) : total_degree_set(s_.N, p);
  auto lambda_r = projection_set(kind, p);
  int r = 0;
  for (const auto& m : lambda_r) r = std::max(r, m.total());
  const auto coeff = project(problem_.a, mesh_, lambda_r, default_quad_points(problem_.a, r));
  const auto sys = assemble_system(coeff, mesh_, lambda_p);
  auto res = solve(sys, F_, tol, s_.max_iter);
  SGRun out;
  out.row.method = kind == IndexSetKind::Smolyak ? "SG-SM" : "SG-TD";
  out.row.order = p;
  out.row.sdof = sys.num_stochastic();
  out.row.cost_units = res.report.cost_units;
  out.row.iterations = res.report.iterations;
  out.mean = mean_field(sys, res.u);
  out.u = std::move(res.u);
  out.retained_blocks = sys.total_blocks();
  out.dropped_fields = sys.dropped();
  out.row.seconds = since(t0);
  return out;
}

SCRun Experiment::solve_sc(NodeFamily rule, int L, double tol) {
  const auto t0 = Clock::now();
  SCRun out;
  out.grid = build_grid(s_.N, L, rule);
  auto res = collocate(problem_.a, F_, mesh_, out.grid, tol, s_.max_iter, threads_);
  out.row.method = "SC-" + to_string(rule);
  out.row.order = L;
  out.row.sdof = out.grid.size();
  out.row.cost_units = res.report.cost_units;
  out.row.iterations = res.report.total_iterations;
  out.mean = mean_field(res.solutions, out.grid.weights);
  out.solutions = std::move(res.solutions);
  out.row.seconds = since(t0);
  return out;
}

SGRun Experiment::run_sg(IndexSetKind kind, int p) {
  const Vector& ref = reference();
  auto first = solve_sg(kind, p, s_.first_pass_tol);
  const double err1 = linf(first.mean, ref);
  const double tol2 = second_pass_tol(err1, ref);
  if (tol2 <= s_.first_pass_tol) {
    first.row.error = err1;
    return first;
  }
  auto second = solve_sg(kind, p, tol2);
  second.row.error = linf(second.mean, ref);
  return second;
}

SCRun Experiment::run_sc(NodeFamily rule, int L) {
  const Vector& ref = reference();
  auto first = solve_sc(rule, L, s_.first_pass_tol);
  const double err1 = linf(first.mean, ref);
  const double tol2 = second_pass_tol(err1, ref);
  if (tol2 <= s_.first_pass_tol) {
    first.row.error = err1;
    return first;
  }
  auto second = solve_sc(rule, L, tol2);
  second.row.error = linf(second.mean, ref);
  return second;
}

std::vector<ResultRow> Experiment::run() {
  reference();
  std::vector<ResultRow> rows;
  for (const auto& m : s_.methods) {
    const bool sg = m.rfind("SG-", 0) == 0;
    const int lo = sg ? s_.order_min : s_.level_min;
    const int hi = sg ? s_.order_max : s_.level_max;
    for (int k = lo; k <= hi; ++k) {
      try {
        if (sg) {
          rows.push_back(run_sg(m == "SG-SM" ? IndexSetKind::Smolyak : IndexSetKind::TotalDegree, k).row);
        } else {
          rows.push_back(run_sc(family_of(m), k).row);
        }
      } catch (const std::exception& e) {
        ResultRow r;
        r.method = m;
        r.order = k;
        r.failed = true;
        r.message = e.what();
        rows.push_back(r);
      }
    }
  }
  return rows;
}

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << "method,order,sdof,error,cost_units,iterations,seconds\n";
  os << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.method << ',' << r.order << ',' << r.sdof << ',';
    if (r.failed) os << "nan";
    else os << r.error;
    os << ',' << static_cast<long long>(std::llround(r.cost_units)) << ',' << r.iterations << ','
       << std::setprecision(6) << r.seconds << std::setprecision(17) << '\n';
  }
}

std::vector<ResultRow> read_results_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("results CSV is empty");
  if (line != "method,order,sdof,error,cost_units,iterations,seconds")
    throw std::runtime_error("results CSV has an unexpected header: " + line);
  std::vector<ResultRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 7) throw std::runtime_error("results CSV row has " + std::to_string(f.size()) + " fields");
    ResultRow r;
    r.method = f[0];
    r.order = std::stoi(f[1]);
    r.sdof = std::stoul(f[2]);
    r.failed = f[3] == "nan";
    r.error = r.failed ? std::numeric_limits<double>::quiet_NaN() : std::stod(f[3]);
    r.cost_units = std::stod(f[4]);
    r.iterations = std::stol(f[5]);
    r.seconds = std::stod(f[6]);
    rows.push_back(r);
  }
  return rows;
}

double cost_at_error(const std::vector<ResultRow>& rows, const std::string& method, double target) {
  std::vector<const ResultRow*> curve;
  for (const auto& r : rows)
    if (r.method == method && !r.failed) curve.push_back(&r);
  std::sort(curve.begin(), curve.end(), [](auto* a, auto* b) { return a->order < b->order; });
  if (curve.empty()) return std::numeric_limits<double>::infinity();
  if (curve[0]->error <= target) return curve[0]->cost_units;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const auto& a = *curve[i - 1];
    const auto& b = *curve[i];
    if (b.error <= target && a.error > target) {
      const double t = (std::log(target) - std::log(a.error)) / (std::log(b.error) - std::log(a.error));
      const double ca = std::log(std::max(a.cost_units, 1.0)), cb = std::log(std::max(b.cost_units, 1.0));
      return std::exp(ca + t * (cb - ca));
    }
  }
  return std::numeric_limits<double>::infinity();
}

SparsityRow sparsity_row(std::size_t N, int p, int r) {
  SparsityRow row{N, p, r, 0, 0, 0, 0, 0};
  row.nnz_exact = nnz_shell(N, p, r);
  row.bound43 = nnz_bound_shell(N, p, r);
  row.mpr_total = mpr_total(N, p, total_degree_set(N, r));
  row.bound44 = mpr_bound(N, p, r);
  row.bound47 = mpr_r_dependent_bound(N, p, r);
  return row;
}

void write_sparsity_csv(std::ostream& os, const std::vector<SparsityRow>& rows) {
  os << "N,p,r,nnz_exact,bound43,mpr_total,bound44,bound47\n";
  for (const auto& r : rows)
    os << r.N << ',' << r.p << ',' << r.r << ',' << r.nnz_exact << ',' << r.bound43 << ','
       << r.mpr_total << ',' << r.bound44 << ',' << r.bound47 << '\n';
}

void write_pattern_csv(std::ostream& os, std::size_t N, int p, int r) {
  const auto lambda_p = total_degree_set(N, p);
  std::set<std::pair<std::size_t, std::size_t>> nz;
  for (const auto& ri : total_degree_set(N, r))
    for (const auto& ij : theta_pairs(lambda_p, ri)) nz.insert(ij);
  os << "M,row,col\n";
  for (const auto& [i, j] : nz) os << lambda_p.cardinality() << ',' << i << ',' << j << '\n';
}

void write_bounds_csv(std::ostream& os, const std::vector<AsymptoticRow>& rows) {
  os << "eps,W_affine,W_poly,W_transc,W_SC\n" << std::setprecision(17);
  for (const auto& r : rows)
    os << r.eps << ',' << r.w_affine << ',' << r.w_poly << ',' << r.w_transc << ',' << r.w_sc << '\n';
}

void write_region_csv(std::ostream& os, const RegionGrid& g, int r) {
  os << std::setprecision(17);
  for (int j = 0; j < g.grid.n_im; ++j)
    for (int i = 0; i < g.grid.n_re; ++i) {
      const auto z = g.grid.at(i, j);
      os << r << ',' << z.real() << ',' << z.imag() << ','
         << int(g.inside[std::size_t(j) * g.grid.n_re + i]) << '\n';
    }
}

void write_ellipticity_csv(std::ostream& os, const EllipticityReport& rep) {
  os << "r,min_ar,max_ar,sup_error,a_min,well_posed\n" << std::setprecision(17);
  for (const auto& row : rep.rows)
    os << row.r << ',' << row.min_ar << ',' << row.max_ar << ',' << row.sup_error << ',' << rep.a_min
       << ',' << int(rep.r_tilde && row.r >= *rep.r_tilde) << '\n';
}

void write_sg_solution_csv(std::ostream& os, const Mesh& mesh, const GalerkinSystem& sys,
                           const Vector& u) {
  os << "node,block,value\n" << std::setprecision(17);
  const std::size_t J = sys.block_size();
  for (std::size_t k = 0; k < sys.num_stochastic(); ++k)
    for (std::size_t j = 0; j < J; ++j)
      os << mesh.free_node(j) << ',' << k << ',' << u[Eigen::Index(k * J + j)] << '\n';
}

void write_grid_csv(std::ostream& os, const SparseGrid& grid) {
  for (std::size_t n = 0; n < grid.dim; ++n) os << 'y' << n + 1 << ',';
  os << "weight\n" << std::setprecision(17);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (double y : grid.points[k]) os << y << ',';
    os << grid.weights[k] << '\n';
  }
}

}  // namespace sgsc
