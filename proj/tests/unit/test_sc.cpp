#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "sgsc/multiindex.hpp"
#include "sgsc/orthopoly.hpp"
#include "sgsc/sc.hpp"

using namespace sgsc;

namespace {

constexpr NodeFamily kRules[] = {NodeFamily::ClenshawCurtis, NodeFamily::GaussLegendre, NodeFamily::Leja};

double monomial(const std::vector<int>& nu, const std::vector<double>& y) {
  double v = 1.0;
  for (std::size_t n = 0; n < y.size(); ++n) v *= std::pow(y[n], nu[n]);
  return v;
}

// E[y^nu] under the uniform density on [-1,1]^N.
double monomial_mean(const std::vector<int>& nu) {
  double v = 1.0;
  for (int k : nu) v *= k % 2 ? 0.0 : 1.0 / (k + 1.0);
  return v;
}

// Every rule reproduces total degree L; each degree unit costs at most one level.
int exact_degree(NodeFamily, int L) { return L; }

}  // namespace

TEST_CASE("level zero is the origin with weight one") {
  for (auto f : kRules)
    for (std::size_t N = 1; N <= 4; ++N) {
      const auto g = build_grid(N, 0, f);
      REQUIRE(g.size() == 1);
      CHECK(g.points[0] == std::vector<double>(N, 0.0));
      CHECK(g.weights[0] == doctest::Approx(1.0));
    }
}

TEST_CASE("Clenshaw-Curtis grid sizes") {
  CHECK(build_grid(2, 1, NodeFamily::ClenshawCurtis).size() == 5);
  CHECK(build_grid(2, 2, NodeFamily::ClenshawCurtis).size() == 13);
  CHECK(build_grid(2, 3, NodeFamily::ClenshawCurtis).size() == 29);
  CHECK(build_grid(3, 2, NodeFamily::ClenshawCurtis).size() == 25);
  const auto g = build_grid(1, 1, NodeFamily::ClenshawCurtis);
  REQUIRE(g.size() == 3);
  std::vector<std::pair<double, double>> pw;
  for (std::size_t k = 0; k < 3; ++k) pw.push_back({g.points[k][0], g.weights[k]});
  std::sort(pw.begin(), pw.end());
  CHECK(pw[0].second == doctest::Approx(1.0 / 6));
  CHECK(pw[1].second == doctest::Approx(2.0 / 3));
  CHECK(pw[2].second == doctest::Approx(1.0 / 6));
}

TEST_CASE("Gauss grid in one dimension is the union of levels") {
  const auto g = build_grid(1, 3, NodeFamily::GaussLegendre);
  // 1 + 2 + 3 + 4 points with the origin shared by the 1- and 3-point rules.
  CHECK(g.size() == 9);
  const auto& q = gauss_rule(4);
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto it = std::find_if(q.nodes.begin(), q.nodes.end(), [&](double x) { return std::abs(x - g.points[k][0]) < 1e-15; });
    if (it != q.nodes.end()) CHECK(g.weights[k] == doctest::Approx(q.weights[std::size_t(it - q.nodes.begin())]));
    else CHECK(std::abs(g.weights[k]) < 1e-15);
  }
}

TEST_CASE("weights sum to one and integrate y^2") {
  for (auto f : kRules)
    for (std::size_t N = 1; N <= 3; ++N)
      for (int L = 0; L <= 4; ++L) {
        const auto g = build_grid(N, L, f);
        CHECK(std::abs(std::accumulate(g.weights.begin(), g.weights.end(), 0.0) - 1.0) < 1e-12);
        if (L >= 2)
          for (std::size_t n = 0; n < N; ++n) {
            double s = 0;
            for (std::size_t k = 0; k < g.size(); ++k) s += g.weights[k] * g.points[k][n] * g.points[k][n];
            CHECK(std::abs(s - 1.0 / 3.0) < 1e-10);
          }
      }
}

TEST_CASE("recomputed expectation weights are stable") {
  const auto g = build_grid(3, 3, NodeFamily::Leja);
  CHECK(expectation_weights(g) == g.weights);
}

TEST_CASE("nested rules give nested grids") {
  for (auto f : {NodeFamily::ClenshawCurtis, NodeFamily::Leja})
    for (std::size_t N = 1; N <= 3; ++N)
      for (int L = 0; L < 4; ++L) {
        const auto a = build_grid(N, L, f), b = build_grid(N, L + 1, f);
        std::set<std::vector<double>> fine(b.points.begin(), b.points.end());
        for (const auto& y : a.points) CHECK(fine.count(y) == 1);
      }
}

TEST_CASE("interpolation and quadrature reproduce exact monomials") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (auto f : kRules)
    for (std::size_t N = 1; N <= 3; ++N)
      for (int L = 0; L <= 3; ++L) {
        const auto g = build_grid(N, L, f);
        for (const auto& nu : total_degree_set(N, exact_degree(f, L))) {
          std::vector<Vector> data;
          for (const auto& y : g.points) data.push_back(Vector::Constant(1, monomial(nu.values(), y)));
          for (int t = 0; t < 5; ++t) {
            std::vector<double> y(N);
            for (auto& v : y) v = U(rng);
            CHECK(std::abs(interpolant_eval(data, g, y)[0] - monomial(nu.values(), y)) < 1e-10);
          }
          CHECK(std::abs(mean_field(data, g.weights)[0] - monomial_mean(nu.values())) < 1e-10);
        }
      }
}

TEST_CASE("interpolation property at nested grid points") {
  const auto g = build_grid(2, 3, NodeFamily::ClenshawCurtis);
  std::vector<Vector> data;
  for (std::size_t k = 0; k < g.size(); ++k) data.push_back(Vector::Constant(1, std::exp(g.points[k][0] - 2 * g.points[k][1])));
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(interpolant_eval(data, g, g.points[k])[0] - data[k][0]) < 1e-10);
}

TEST_CASE("expectation of the interpolant equals the weighted sum") {
  // Integrate the interpolant with a high-order tensor Gauss rule.
  const auto g = build_grid(2, 3, NodeFamily::Leja);
  std::vector<Vector> data;
  for (const auto& y : g.points) data.push_back(Vector::Constant(1, std::cos(y[0] + 0.5 * y[1]) + y[0] * y[1]));
  const auto& q = gauss_rule(12);
  double s = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      std::vector<double> y{q.nodes[i], q.nodes[j]};
      s += q.weights[i] * q.weights[j] * interpolant_eval(data, g, y)[0];
    }
  CHECK(std::abs(s - mean_field(data, g.weights)[0]) < 1e-10);
}

TEST_CASE("collocation on a deterministic model equals the FE solve") {
  Mesh mesh(6);
  auto model = CoefficientModel::affine(
      "det", [](const Point& x) { return 1.0 + x.y; }, {[](const Point&) { return 0.0; }, [](const Point&) { return 0.0; }},
      1.0, 2.0);
  const auto F = assemble_load(mesh, [](const Point&) { return 1.0; });
  Vector ref;
  CholeskyFactor(StiffnessAssembler(mesh).assemble([](const Point& x) { return 1.0 + x.y; })).solve(F, ref);
  for (int L : {0, 2}) {
    const auto g = build_grid(2, L, NodeFamily::ClenshawCurtis);
    const auto res = collocate(model, F, mesh, g, 1e-12);
    CHECK((mean_field(res.solutions, g.weights) - ref).norm() <= 1e-10 * ref.norm());
    for (int it : res.report.iterations) CHECK(it <= 1);
  }
}

TEST_CASE("collocation accounting and thread invariance") {
  Mesh mesh(6);
  const auto model = builtin_inclusion_affine(2);
  const auto F = assemble_load(mesh, [](const Point&) { return 1.0; });
  const auto g = build_grid(2, 3, NodeFamily::ClenshawCurtis);
  const auto a = collocate(model, F, mesh, g, 1e-10, 500, 1);
  const auto b = collocate(model, F, mesh, g, 1e-10, 500, 3);
  CHECK(a.report.num_points == g.size());
  CHECK(a.report.iterations == b.report.iterations);
  CHECK(a.report.total_iterations == std::accumulate(a.report.iterations.begin(), a.report.iterations.end(), 0L));
  CHECK(a.report.cost_units == 2.0 * double(a.report.total_iterations));
  // Origin solve uses the exact preconditioner.
  CHECK(a.report.iterations[0] == 1);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK((a.solutions[k] - b.solutions[k]).norm() == 0.0);
}

TEST_CASE("collocation errors name the failing point") {
  Mesh mesh(8);
  const auto model = builtin_inclusion_affine(2);
  const auto F = assemble_load(mesh, [](const Point&) { return 1.0; });
  const auto g = build_grid(2, 2, NodeFamily::ClenshawCurtis);
  try {
    collocate(model, F, mesh, g, 1e-12, 1);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(std::string(e.what()).find("collocation point") != std::string::npos);
  }
}
