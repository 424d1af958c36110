#pragma once

#include <Eigen/Sparse>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgsc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using SpatialField = std::function<double(const Point&)>;

/// Uniform n x n right-triangle mesh of the unit square with homogeneous
/// Dirichlet data on the whole boundary.
class Mesh {
 public:
  explicit Mesh(int n);

  int n() const { return n_; }
  /// Longest edge length sqrt(2)/n.
  double h() const;
  double triangle_area() const { return 0.5 / (double(n_) * n_); }

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_triangles() const { return tris_.size(); }
  std::size_t num_free() const { return free_nodes_.size(); }

  const Point& node(std::size_t i) const { return nodes_[i]; }
  const std::array<int, 3>& triangle(std::size_t t) const { return tris_[t]; }
  bool is_boundary(std::size_t i) const { return free_index_[i] < 0; }
  /// -1 for boundary nodes.
  int free_index(std::size_t i) const { return free_index_[i]; }
  std::size_t free_node(std::size_t k) const { return free_nodes_[k]; }

  /// Edge-midpoint quadrature points, three per triangle in element order;
  /// point k of a triangle sits on the edge opposite local vertex k.
  const std::vector<Point>& quadrature_points() const { return qp_; }
  std::size_t num_quadrature_points() const { return qp_.size(); }

  std::vector<double> sample(const SpatialField& f) const;

 private:
  int n_;
  std::vector<Point> nodes_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<int> free_index_;
  std::vector<std::size_t> free_nodes_;
  std::vector<Point> qp_;
};

class AssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P1 stiffness assembly on the free nodes with a fixed sparsity pattern.
class StiffnessAssembler {
 public:
  explicit StiffnessAssembler(const Mesh& mesh);

  /// Coefficient values at the mesh quadrature points.
  SparseMatrix assemble(std::span<const double> qp_values) const;
  SparseMatrix assemble(const SpatialField& a) const;
  const SparseMatrix& pattern() const { return pattern_; }

 private:
  const Mesh* mesh_;
  SparseMatrix pattern_;
  std::vector<std::array<double, 9>> local_;
  std::vector<std::array<int, 9>> slot_;
};

Vector assemble_load(const Mesh& mesh, std::span<const double> qp_values);
Vector assemble_load(const Mesh& mesh, const SpatialField& f);

struct SolveReport {
  int iterations = 0;
  long matvecs = 0;
  long precond_applies = 0;
  double cost_units = 0.0;
  double relative_residual = 0.0;
  bool converged = false;
  std::vector<double> residual_history;
  std::vector<double> alpha;
  std::vector<double> beta;
};

/// y = A x together with the cost charged per application.
struct LinearOperator {
  std::function<void(const Vector&, Vector&)> apply;
  double cost_per_apply = 1.0;
};

LinearOperator matrix_operator(const SparseMatrix& A, double cost = 1.0);
LinearOperator identity_operator(double cost = 0.0);

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, SolveReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

/// Preconditioned CG from a zero initial guess; stops when ||r||/||b|| <= tol.
/// Throws SolverError when max_iter is reached first.
SolveReport pcg(const LinearOperator& A, const LinearOperator& M, const Vector& b, Vector& x,
                double tol, int max_iter);

/// lambda_max / lambda_min of the Lanczos matrix recovered from CG coefficients.
std::optional<double> ritz_condition(const SolveReport& report);
/// Extreme Ritz values {min, max}.
std::optional<std::array<double, 2>> ritz_extremes(const SolveReport& report);

/// Sparse Cholesky of an SPD matrix used as preconditioner.
class CholeskyFactor {
 public:
  explicit CholeskyFactor(const SparseMatrix& A);
  void solve(const Vector& r, Vector& z) const;
  LinearOperator as_operator(double cost = 1.0) const;

 private:
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt_;
};

/// Embed a free-node vector into all mesh nodes (zero on the boundary).
std::vector<double> to_nodal(const Mesh& mesh, const Vector& u);

double nodal_l2_error(const Mesh& mesh, const Vector& u, const SpatialField& exact);
double energy_error(const Mesh& mesh, const Vector& u,
                    const std::function<std::array<double, 2>(const Point&)>& grad_exact);

void write_matrix_market(const std::string& path, const SparseMatrix& A);

}  // namespace sgsc
