#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sgsc/coefficients.hpp"
#include "sgsc/fem.hpp"
#include "sgsc/multiindex.hpp"

namespace sgsc {

/// CC: doubling growth; GL and Leja: linear growth. All use g_TD levels.
enum class NodeFamily { ClenshawCurtis, GaussLegendre, Leja };

std::string to_string(NodeFamily f);
GrowthRule growth_of(NodeFamily f);
bool is_nested(NodeFamily f);
/// Univariate nodes at level l >= 1.
std::vector<double> univariate_nodes(NodeFamily f, int level);

/// Tensor grid with net combination coefficient.
struct CombinationTerm {
  MultiIndex levels;
  std::vector<int> counts;
  int coefficient = 0;
  /// Unique point id of each tensor point (first axis fastest).
  std::vector<std::size_t> point_ids;
};

struct SparseGrid {
  NodeFamily rule = NodeFamily::ClenshawCurtis;
  int level = 0;
  std::size_t dim = 0;
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
  std::vector<CombinationTerm> terms;

  std::size_t size() const { return points.size(); }
};

SparseGrid build_grid(std::size_t N, int L, NodeFamily rule);

/// Expectation weights recomputed from the combination terms.
std::vector<double> expectation_weights(const SparseGrid& grid);

/// Coefficient of each unique point in the sparse interpolant evaluated at y.
std::vector<double> interpolation_weights(const SparseGrid& grid, std::span<const double> y);

Vector interpolant_eval(const std::vector<Vector>& solutions, const SparseGrid& grid,
                        std::span<const double> y);

struct SCReport {
  std::vector<int> iterations;
  std::size_t num_points = 0;
  long total_iterations = 0;
  double cost_units = 0.0;
};

struct SCResult {
  std::vector<Vector> solutions;
  SCReport report;
};

/// One PCG solve per unique point with P_0 = A(0) factored once.
SCResult collocate(const CoefficientModel& model, const Vector& F, const Mesh& mesh,
                   const SparseGrid& grid, double tol, int max_iter = 2000, int threads = 1);

Vector mean_field(const std::vector<Vector>& solutions, const std::vector<double>& weights);

}  // namespace sgsc
