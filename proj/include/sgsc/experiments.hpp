#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sgsc/coefficients.hpp"
#include "sgsc/config.hpp"
#include "sgsc/fem.hpp"
#include "sgsc/multiindex.hpp"
#include "sgsc/sc.hpp"
#include "sgsc/sg.hpp"

namespace sgsc {

struct ResultRow {
  std::string method;
  int order = 0;
  std::size_t sdof = 0;
  double error = std::numeric_limits<double>::quiet_NaN();
  double cost_units = 0.0;
  long iterations = 0;
  double seconds = 0.0;
  bool failed = false;
  std::string message;
};

struct SGRun {
  ResultRow row;
  Vector u;
  Vector mean;
  std::size_t retained_blocks = 0;
  std::size_t dropped_fields = 0;
};

struct SCRun {
  ResultRow row;
  SparseGrid grid;
  std::vector<Vector> solutions;
  Vector mean;
};

/// One scenario: mesh, problem, load and a cached enriched reference.
class Experiment {
 public:
  explicit Experiment(Scenario s, int threads = 1);

  const Scenario& scenario() const { return s_; }
  const Mesh& mesh() const { return mesh_; }
  const Problem& problem() const { return problem_; }
  const Vector& load() const { return F_; }

  /// SC-CC mean at the reference level, solver tolerance 1e-12.
  const Vector& reference();

  /// Single SG solve at fixed tolerance without error evaluation.
  SGRun solve_sg(IndexSetKind kind, int p, double tol);
  SCRun solve_sc(NodeFamily rule, int L, double tol);

  /// Two-pass schedule: 1e-12 first, then error / 10 relative to the reference.
  SGRun run_sg(IndexSetKind kind, int p);
  SCRun run_sc(NodeFamily rule, int L);

  /// Every (method, order/level) cell; failures become failed rows.
  std::vector<ResultRow> run();

  /// Coefficient index set used by SG at order p.
  MultiIndexSet projection_set(IndexSetKind kind, int p) const;

 private:
  Scenario s_;
  int threads_;
  Mesh mesh_;
  Problem problem_;
  Vector F_;
  std::optional<Vector> reference_;
};

double linf(const Vector& a, const Vector& b);

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results_csv(std::istream& is);

/// Cost needed by a method to reach `target` error, by log-log interpolation of its
/// (error, cost) curve in order. +inf when the curve never reaches the target.
double cost_at_error(const std::vector<ResultRow>& rows, const std::string& method, double target);

struct SparsityRow {
  std::size_t N;
  int p, r;
  std::int64_t nnz_exact, bound43, mpr_total, bound44, bound47;
};
/// Shell sums over |r| = r of nnz and its per-index bound, plus cumulative totals.
SparsityRow sparsity_row(std::size_t N, int p, int r);
void write_sparsity_csv(std::ostream& os, const std::vector<SparsityRow>& rows);
/// Nonzero block pattern of K for Lambda_p = TD(N,p), Lambda_r = TD(N,r).
void write_pattern_csv(std::ostream& os, std::size_t N, int p, int r);

void write_bounds_csv(std::ostream& os, const std::vector<AsymptoticRow>& rows);

void write_region_csv(std::ostream& os, const RegionGrid& g, int r);
void write_ellipticity_csv(std::ostream& os, const EllipticityReport& rep);

/// Columns node,block,value with node the mesh node id; boundary nodes omitted.
void write_sg_solution_csv(std::ostream& os, const Mesh& mesh, const GalerkinSystem& sys,
                           const Vector& u);
void write_grid_csv(std::ostream& os, const SparseGrid& grid);

}  // namespace sgsc
