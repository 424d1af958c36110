#include "sgsc/sc.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sgsc/orthopoly.hpp"

namespace sgsc {

std::string to_string(NodeFamily f) {
  switch (f) {
    case NodeFamily::ClenshawCurtis: return "CC";
    case NodeFamily::GaussLegendre: return "GL";
    case NodeFamily::Leja: return "LJ";
  }
  return "?";
}

GrowthRule growth_of(NodeFamily f) {
  return f == NodeFamily::ClenshawCurtis ? GrowthRule::Doubling : GrowthRule::Linear;
}

bool is_nested(NodeFamily f) { return f != NodeFamily::GaussLegendre; }

std::vector<double> univariate_nodes(NodeFamily f, int level) {
  const int m = growth(growth_of(f), level);
  if (m < 1) throw std::invalid_argument("univariate_nodes: level must be >= 1");
  switch (f) {
    case NodeFamily::ClenshawCurtis: return clenshaw_curtis_nodes(m);
    case NodeFamily::GaussLegendre: return gauss_rule(m).nodes;
    case NodeFamily::Leja: return leja_nodes(m);
  }
  return {};
}

namespace {

struct Univariate {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const Univariate& univariate(NodeFamily f, int level) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Univariate> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(int(f), level);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Univariate u;
    u.nodes = univariate_nodes(f, level);
    u.weights = interpolatory_weights(u.nodes);
    it = cache.emplace(key, std::move(u)).first;
  }
  return it->second;
}

// Odometer over a tensor grid; idx[0] fastest.
template <class F>
void for_each_tensor(const std::vector<int>& counts, F&& f) {
  const std::size_t N = counts.size();
  std::vector<int> idx(N, 0);
  while (true) {
    f(idx);
    std::size_t n = 0;
    while (n < N && idx[n] == counts[n] - 1) idx[n++] = 0;
    if (n == N) return;
    ++idx[n];
  }
}

}  // namespace

SparseGrid build_grid(std::size_t N, int L, NodeFamily rule) {
  if (N < 1) throw std::invalid_argument("build_grid: N must be >= 1");
  if (L < 0) throw std::invalid_argument("build_grid: L must be >= 0");
  SparseGrid grid;
  grid.rule = rule;
  grid.level = L;
  grid.dim = N;
  const auto levels = admissible_levels(N, L, LevelFunction::TD);

  // Net coefficients of the difference-product expansion.
  std::map<std::vector<int>, int> coef;
  for (const auto& l : levels) {
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
      std::vector<int> t(l.values());
      int sign = 1;
      bool ok = true;
      for (std::size_t n = 0; n < N; ++n) {
        if (mask & (1u << n)) {
          --t[n];
          sign = -sign;
          if (t[n] < 1) ok = false;  // m(0) = 0 kills the term
        }
      }
      if (ok) coef[t] += sign;
    }
  }

  // Unique points in order of first appearance over admissible levels.
  const bool nested = is_nested(rule);
  std::map<std::vector<double>, std::size_t> exact_key;
  std::map<std::vector<long long>, std::size_t> round_key;
  auto point_id = [&](const std::vector<double>& y) {
    if (nested) {
      auto [it, inserted] = exact_key.emplace(y, grid.points.size());
      if (inserted) grid.points.push_back(y);
      return it->second;
    }
    std::vector<long long> k(N);
    for (std::size_t n = 0; n < N; ++n) k[n] = std::llround(y[n] * 1e14);
    auto [it, inserted] = round_key.emplace(std::move(k), grid.points.size());
    if (inserted) grid.points.push_back(y);
    return it->second;
  };
  auto tensor_ids = [&](const MultiIndex& l, std::vector<int>& counts) {
    std::vector<const Univariate*> u(N);
    counts.assign(N, 0);
    for (std::size_t n = 0; n < N; ++n) {
      u[n] = &univariate(rule, l[n]);
      counts[n] = int(u[n]->nodes.size());
    }
    std::vector<std::size_t> ids;
    std::vector<double> y(N);
    for_each_tensor(counts, [&](const std::vector<int>& idx) {
      for (std::size_t n = 0; n < N; ++n) y[n] = u[n]->nodes[idx[n]];
      ids.push_back(point_id(y));
    });
    return ids;
  };
  std::map<std::vector<int>, std::vector<std::size_t>> ids_of;
  std::map<std::vector<int>, std::vector<int>> counts_of;
  for (const auto& l : levels) {
    std::vector<int> counts;
    ids_of[l.values()] = tensor_ids(l, counts);
    counts_of[l.values()] = counts;
  }
  for (const auto& l : levels) {
    auto it = coef.find(l.values());
    if (it == coef.end() || it->second == 0) continue;
    grid.terms.push_back({l, counts_of[l.values()], it->second, ids_of[l.values()]});
  }
  grid.weights = expectation_weights(grid);
  return grid;
}

std::vector<double> expectation_weights(const SparseGrid& grid) {
  std::vector<double> w(grid.points.size(), 0.0);
  const std::size_t N = grid.dim;
  for (const auto& t : grid.terms) {
    std::vector<const Univariate*> u(N);
    for (std::size_t n = 0; n < N; ++n) u[n] = &univariate(grid.rule, t.levels[n]);
    std::size_t k = 0;
    for_each_tensor(t.counts, [&](const std::vector<int>& idx) {
      double v = t.coefficient;
      for (std::size_t n = 0; n < N; ++n) v *= u[n]->weights[idx[n]];
      w[t.point_ids[k++]] += v;
    });
  }
  return w;
}

std::vector<double> interpolation_weights(const SparseGrid& grid, std::span<const double> y) {
  const std::size_t N = grid.dim;
  if (y.size() != N) throw std::invalid_argument("interpolation_weights: dimension mismatch");
  for (double v : y)
    if (!(std::abs(v) <= 1.0 + 1e-12)) throw std::domain_error("interpolation point outside [-1,1]^N");
  std::vector<double> c(grid.points.size(), 0.0);
  for (const auto& t : grid.terms) {
    std::vector<std::vector<double>> l(N);
    for (std::size_t n = 0; n < N; ++n) l[n] = lagrange_basis(univariate(grid.rule, t.levels[n]).nodes, y[n]);
    std::size_t k = 0;
    for_each_tensor(t.counts, [&](const std::vector<int>& idx) {
      double v = t.coefficient;
      for (std::size_t n = 0; n < N; ++n) v *= l[n][idx[n]];
      c[t.point_ids[k++]] += v;
    });
  }
  return c;
}

Vector interpolant_eval(const std::vector<Vector>& solutions, const SparseGrid& grid,
                        std::span<const double> y) {
  if (solutions.size() != grid.size())
    throw std::invalid_argument("interpolant_eval: one solution per grid point required");
  auto c = interpolation_weights(grid, y);
  Vector out = Vector::Zero(solutions.empty() ? 0 : solutions[0].size());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0.0) out += c[k] * solutions[k];
  return out;
}

SCResult collocate(const CoefficientModel& model, const Vector& F, const Mesh& mesh,
                   const SparseGrid& grid, double tol, int max_iter, int threads) {
  if (grid.dim != model.dim()) throw std::invalid_argument("collocate: grid and model dimensions differ");
  if (std::size_t(F.size()) != mesh.num_free()) throw std::invalid_argument("collocate: load has wrong size");
  const std::size_t K = grid.size();
  StiffnessAssembler assembler(mesh);
  const auto sampler = model.sampler(mesh);
  std::vector<double> vals;
  sampler(std::vector<double>(grid.dim, 0.0), vals);
  const CholeskyFactor P0(assembler.assemble(vals));

  SCResult res;
  res.solutions.assign(K, Vector());
  res.report.iterations.assign(K, 0);
  std::vector<double> cost(K, 0.0);
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<double> a;
    for (std::size_t k = begin; k < end; ++k) {
      sampler(grid.points[k], a);
      SparseMatrix A = assembler.assemble(a);
      SolveReport rep;
      try {
        rep = pcg(matrix_operator(A, 1.0), P0.as_operator(1.0), F, res.solutions[k], tol, max_iter);
      } catch (const SolverError& e) {
        throw SolverError("collocation point " + std::to_string(k) + ": " + e.what(), e.report());
      }
      res.report.iterations[k] = rep.iterations;
      cost[k] = rep.cost_units;
    }
  };
  const std::size_t T = std::max(1, std::min(threads, int(K)));
  if (T <= 1) {
    work(0, K);
  } else {
    std::vector<std::exception_ptr> errs(T);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < T; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(K * t / T, K * (t + 1) / T);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  res.report.num_points = K;
  for (std::size_t k = 0; k < K; ++k) {
    res.report.total_iterations += res.report.iterations[k];
    res.report.cost_units += cost[k];
  }
  return res;
}

Vector mean_field(const std::vector<Vector>& solutions, const std::vector<double>& weights) {
  if (solutions.size() != weights.size() || solutions.empty())
    throw std::invalid_argument("mean_field: solutions and weights must align");
  Vector m = Vector::Zero(solutions[0].size());
  for (std::size_t k = 0; k < solutions.size(); ++k) m += weights[k] * solutions[k];
  return m;
}

}  // namespace sgsc
