#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "sgsc/fem.hpp"

using namespace sgsc;

namespace {

constexpr double pi = std::numbers::pi;

double u_exact(const Point& p) { return std::sin(pi * p.x) * std::sin(pi * p.y); }
double f_exact(const Point& p) { return 2.0 * pi * pi * u_exact(p); }
std::array<double, 2> grad_exact(const Point& p) {
  return {pi * std::cos(pi * p.x) * std::sin(pi * p.y), pi * std::sin(pi * p.x) * std::cos(pi * p.y)};
}

Vector solve_direct(const SparseMatrix& A, const Vector& b) {
  CholeskyFactor c(A);
  Vector x;
  c.solve(b, x);
  return x;
}

}  // namespace

TEST_CASE("mesh counts") {
  Mesh m(4);
  CHECK(m.num_nodes() == 25);
  CHECK(m.num_triangles() == 32);
  CHECK(m.num_free() == 9);
  CHECK(m.num_quadrature_points() == 96);
  CHECK(m.h() == doctest::Approx(std::sqrt(2.0) / 4));
  CHECK(m.is_boundary(0));
  CHECK_FALSE(m.is_boundary(6));
  CHECK(m.free_node(0) == 6);
  CHECK_THROWS_AS(Mesh(1), std::invalid_argument);
}

TEST_CASE("constant-coefficient stiffness is the five-point Laplacian") {
  Mesh m(5);
  StiffnessAssembler asmb(m);
  const auto A = asmb.assemble([](const Point&) { return 1.0; });
  Eigen::MatrixXd D(A);
  for (Eigen::Index i = 0; i < D.rows(); ++i) {
    CHECK(D(i, i) == doctest::Approx(4.0));
    for (Eigen::Index j = 0; j < D.cols(); ++j) CHECK(D(i, j) == doctest::Approx(D(j, i)));
  }
  // Interior neighbours couple with -1, diagonal neighbours with 0.
  CHECK(D(0, 1) == doctest::Approx(-1.0));
  CHECK(D(0, 4) == doctest::Approx(-1.0));
  CHECK(std::abs(D(0, 5)) < 1e-14);
}

TEST_CASE("stiffness is linear in the coefficient") {
  Mesh m(6);
  StiffnessAssembler asmb(m);
  auto a = m.sample([](const Point& p) { return 1.0 + p.x * p.y; });
  auto b = m.sample([](const Point& p) { return std::exp(p.x); });
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = 2.0 * a[i] - 0.5 * b[i];
  SparseMatrix lhs = asmb.assemble(c);
  SparseMatrix rhs = 2.0 * asmb.assemble(a) - 0.5 * asmb.assemble(b);
  CHECK((Eigen::MatrixXd(lhs) - Eigen::MatrixXd(rhs)).norm() < 1e-12);
}

TEST_CASE("assembly rejects non-finite coefficients") {
  Mesh m(3);
  StiffnessAssembler asmb(m);
  auto a = m.sample([](const Point&) { return 1.0; });
  a[5] = std::nan("");
  CHECK_THROWS_AS(asmb.assemble(a), AssemblyError);
}

TEST_CASE("manufactured solution convergence rates") {
  std::vector<double> l2, en;
  for (int n : {8, 16, 32, 64}) {
    Mesh m(n);
    StiffnessAssembler asmb(m);
    const auto A = asmb.assemble([](const Point&) { return 1.0; });
    const auto F = assemble_load(m, f_exact);
    const auto u = solve_direct(A, F);
    l2.push_back(nodal_l2_error(m, u, u_exact));
    en.push_back(energy_error(m, u, grad_exact));
  }
  for (std::size_t i = 1; i < l2.size(); ++i) {
    const double r2 = std::log2(l2[i - 1] / l2[i]);
    const double r1 = std::log2(en[i - 1] / en[i]);
    CHECK(r2 >= 1.8);
    CHECK(r2 <= 2.2);
    CHECK(r1 >= 0.9);
    CHECK(r1 <= 1.1);
  }
}

TEST_CASE("PCG agrees with the direct solve and accounts matvecs") {
  Mesh m(12);
  StiffnessAssembler asmb(m);
  const auto A = asmb.assemble([](const Point& p) { return 1.0 + 10.0 * p.x * p.x; });
  const auto F = assemble_load(m, [](const Point&) { return 1.0; });
  const auto ref = solve_direct(A, F);
  Vector x;
  const auto rep = pcg(matrix_operator(A, 1.0), identity_operator(), F, x, 1e-12, 1000);
  CHECK(rep.converged);
  CHECK((x - ref).norm() <= 1e-9 * ref.norm());
  CHECK(rep.matvecs == rep.iterations);
  CHECK(rep.precond_applies == rep.iterations);
  CHECK(rep.cost_units == doctest::Approx(double(rep.iterations)));
  CHECK(rep.relative_residual <= 1e-12);

  Vector y;
  CholeskyFactor P(A);
  const auto exact = pcg(matrix_operator(A, 1.0), P.as_operator(), F, y, 1e-12, 10);
  CHECK(exact.iterations <= 2);
}

TEST_CASE("PCG throws on iteration cap") {
  Mesh m(16);
  StiffnessAssembler asmb(m);
  const auto A = asmb.assemble([](const Point&) { return 1.0; });
  const auto F = assemble_load(m, [](const Point&) { return 1.0; });
  Vector x;
  CHECK_THROWS_AS(pcg(matrix_operator(A), identity_operator(), F, x, 1e-12, 3), SolverError);
}

TEST_CASE("Ritz extremes approach the spectrum") {
  Mesh m(8);
  StiffnessAssembler asmb(m);
  const auto A = asmb.assemble([](const Point&) { return 1.0; });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(A)};
  const double lmin = es.eigenvalues().minCoeff(), lmax = es.eigenvalues().maxCoeff();
  const auto F = assemble_load(m, [](const Point& p) { return 1.0 + p.x + 3 * p.y * p.y; });
  Vector x;
  const auto rep = pcg(matrix_operator(A), identity_operator(), F, x, 1e-14, 500);
  const auto ex = ritz_extremes(rep);
  REQUIRE(ex.has_value());
  CHECK((*ex)[0] >= lmin * (1 - 1e-8));
  CHECK((*ex)[1] <= lmax * (1 + 1e-8));
  CHECK((*ex)[1] >= 0.9 * lmax);
  CHECK(*ritz_condition(rep) > 1.0);

  SolveReport empty;
  CHECK_FALSE(ritz_extremes(empty).has_value());
}

TEST_CASE("nodal embedding zeroes the boundary") {
  Mesh m(4);
  Vector u = Vector::Ones(Eigen::Index(m.num_free()));
  const auto v = to_nodal(m, u);
  for (std::size_t i = 0; i < m.num_nodes(); ++i) CHECK(v[i] == (m.is_boundary(i) ? 0.0 : 1.0));
}
