#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sgsc/coefficients.hpp"
#include "sgsc/fem.hpp"
#include "sgsc/multiindex.hpp"

namespace sgsc {

/// G_r restricted to Lambda_p, coordinate list.
struct StochasticMatrix {
  struct Entry {
    std::size_t row;
    std::size_t col;
    double value;
  };
  MultiIndex r;
  std::vector<Entry> entries;
  std::size_t size() const { return entries.size(); }
};

StochasticMatrix assemble_G(const MultiIndexSet& lambda_p, const MultiIndex& r);

/// K = sum_r G_r (x) A_r applied matrix-free.
class GalerkinSystem {
 public:
  struct Block {
    StochasticMatrix G;
    SparseMatrix A;
  };

  GalerkinSystem(MultiIndexSet lambda_p, std::vector<Block> blocks, std::size_t J,
                 std::size_t dropped);

  const MultiIndexSet& lambda_p() const { return lambda_p_; }
  std::size_t block_size() const { return J_; }
  std::size_t num_stochastic() const { return lambda_p_.cardinality(); }
  std::size_t size() const { return J_ * lambda_p_.cardinality(); }
  /// Retained M(p,r): stored G entries over all kept r.
  std::size_t total_blocks() const { return total_blocks_; }
  std::size_t dropped() const { return dropped_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// A_0, the mean stiffness matrix.
  const SparseMatrix& mean_matrix() const;

  void matvec(const Vector& v, Vector& out) const;
  /// (entry, A_r) applications since construction or reset.
  long applications() const { return applications_; }
  void reset_counter() const { applications_ = 0; }
  LinearOperator as_operator() const;

 private:
  MultiIndexSet lambda_p_;
  std::vector<Block> blocks_;
  // Entry order grouped by column for each block.
  std::vector<std::vector<std::size_t>> by_col_;
  std::size_t J_;
  std::size_t dropped_;
  std::size_t total_blocks_ = 0;
  std::size_t mean_index_ = 0;
  mutable long applications_ = 0;
};

/// Drops fields whose sup-norm is below drop_tol and blocks with empty G_r.
GalerkinSystem assemble_system(const ProjectedCoefficient& coeff, const Mesh& mesh,
                               const MultiIndexSet& lambda_p, double drop_tol = 1e-14);

/// Block-diagonal G_0 (x) A_0 with a Cholesky factor of A_0.
class MeanPreconditioner {
 public:
  explicit MeanPreconditioner(const GalerkinSystem& sys);
  void apply(const Vector& r, Vector& z) const;
  LinearOperator as_operator() const;

 private:
  CholeskyFactor chol_;
  std::size_t M_;
  std::size_t J_;
};

struct SGResult {
  Vector u;
  SolveReport report;
};

/// PCG with the mean preconditioner; right-hand side F on the zero block only.
SGResult solve(const GalerkinSystem& sys, const Vector& F, double tol, int max_iter = 2000);
/// Unpreconditioned CG, used to study conditioning.
SGResult solve_unpreconditioned(const GalerkinSystem& sys, const Vector& F, double tol,
                                int max_iter = 20000);

/// Zero-index block of an SG solution.
Vector mean_field(const GalerkinSystem& sys, const Vector& u);
/// Block k of an SG solution.
Vector block(const GalerkinSystem& sys, const Vector& u, std::size_t k);

/// (xi_r, Xi_r): extrema of Psi_r over the Gauss grid with p + ceil((r_n+1)/2) points per axis.
std::array<double, 2> eigen_bounds(int p, const MultiIndex& r);

struct TauBounds {
  double lower = 0.0;
  double upper = 0.0;
};
/// Eigenvalues of P^{-1} K lie in [1 - lower, 1 + upper].
TauBounds tau_bounds(const ProjectedCoefficient& coeff, int p, double a_min);

}  // namespace sgsc
