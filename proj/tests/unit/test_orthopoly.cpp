#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgsc/orthopoly.hpp"

using namespace sgsc;

namespace {

// Golub-Welsch: eigen-decomposition of the Legendre Jacobi matrix.
void golub_welsch(int m, std::vector<double>& x, std::vector<double>& w) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k - 1, k) = J(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  x.resize(m);
  w.resize(m);
  for (int i = 0; i < m; ++i) {
    x[i] = es.eigenvalues()[i];
    const double v = es.eigenvectors()(0, i);
    w[i] = v * v;
  }
}

// Gaunt-type closed form for E[psi_a psi_b psi_c] under the uniform density on [-1,1].
double triple_closed_form(int a, int b, int c) {
  const int two_s = a + b + c;
  if (two_s % 2 != 0) return 0.0;
  if (a > b + c || b > a + c || c > a + b) return 0.0;
  const int s = two_s / 2;
  auto lf = [](int n) { return std::lgamma(n + 1.0); };
  const double log3j = lf(two_s - 2 * a) + lf(two_s - 2 * b) + lf(two_s - 2 * c) - lf(two_s + 1) +
                       2.0 * (lf(s) - lf(s - a) - lf(s - b) - lf(s - c));
  return std::sqrt((2.0 * a + 1) * (2.0 * b + 1) * (2.0 * c + 1)) * std::exp(log3j);
}

}  // namespace

TEST_CASE("orthonormal Legendre values") {
  CHECK(legendre(0, 0.3) == doctest::Approx(1.0));
  CHECK(legendre(1, 0.3) == doctest::Approx(std::sqrt(3.0) * 0.3));
  CHECK(legendre(2, 0.3) == doctest::Approx(std::sqrt(5.0) * 0.5 * (3 * 0.09 - 1)));
  CHECK(legendre(5, 1.0) == doctest::Approx(std::sqrt(11.0)));
  CHECK_THROWS_AS(legendre(2, 1.5), std::domain_error);
  const auto all = legendre_all(7, -0.4);
  for (int n = 0; n <= 7; ++n) CHECK(all[n] == doctest::Approx(legendre(n, -0.4)).epsilon(1e-14));
}

TEST_CASE("complex Legendre agrees on the real axis") {
  for (int n = 0; n <= 6; ++n) {
    auto z = legendre(n, std::complex<double>(0.7, 0.0));
    CHECK(z.real() == doctest::Approx(legendre(n, 0.7)));
    CHECK(z.imag() == doctest::Approx(0.0));
  }
}

TEST_CASE("Gauss rule matches Golub-Welsch") {
  for (int m : {1, 2, 3, 5, 8, 13, 21, 40, 64}) {
    std::vector<double> x, w;
    golub_welsch(m, x, w);
    const auto& q = gauss_rule(m);
    REQUIRE(q.size() == std::size_t(m));
    for (int i = 0; i < m; ++i) {
      CHECK(std::abs(q.nodes[i] - x[i]) < 1e-13);
      CHECK(std::abs(q.weights[i] - w[i]) < 1e-13);
    }
  }
}

TEST_CASE("Gauss rule integrates orthonormality exactly") {
  const auto& q = gauss_rule(12);
  CHECK(std::accumulate(q.weights.begin(), q.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (int a = 0; a <= 11; ++a)
    for (int b = 0; b <= 11; ++b) {
      double s = 0;
      for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * legendre(a, q.nodes[i]) * legendre(b, q.nodes[i]);
      CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("Clenshaw-Curtis nodes are nested under doubling") {
  CHECK(clenshaw_curtis_nodes(1) == std::vector<double>{0.0});
  const auto n3 = clenshaw_curtis_nodes(3);
  CHECK(n3[0] == 1.0);
  CHECK(std::abs(n3[1]) < 1e-16);
  CHECK(n3[2] == -1.0);
  for (int k = 2; k <= 6; ++k) {
    const int m = (1 << (k - 1)) + 1;
    const auto coarse = clenshaw_curtis_nodes(m);
    const auto fine = clenshaw_curtis_nodes(2 * m - 1);
    for (double x : coarse) CHECK(std::find(fine.begin(), fine.end(), x) != fine.end());
  }
}

TEST_CASE("Leja sequence") {
  const auto l = leja_nodes(12);
  REQUIRE(l.size() == 12);
  CHECK(l[0] == 0.0);
  CHECK(std::abs(l[1]) == 1.0);
  CHECK(l[2] == -l[1]);
  for (std::size_t i = 0; i < l.size(); ++i) {
    CHECK(std::abs(l[i]) <= 1.0);
    for (std::size_t j = 0; j < i; ++j) CHECK(l[i] != l[j]);
  }
  // Nested prefixes.
  const auto s = leja_nodes(5);
  for (int i = 0; i < 5; ++i) CHECK(s[i] == l[i]);
  // Greedy property on the prefix: each new point approximately maximizes the product.
  for (std::size_t k = 3; k < l.size(); ++k) {
    auto prod = [&](double y) {
      double p = 1.0;
      for (std::size_t j = 0; j < k; ++j) p *= std::abs(y - l[j]);
      return p;
    };
    const double best = prod(l[k]);
    for (int i = 0; i <= 2000; ++i) CHECK(prod(-1.0 + i / 1000.0) <= best * (1 + 1e-6));
  }
}

TEST_CASE("interpolatory weights reproduce Gauss weights") {
  const auto& q = gauss_rule(7);
  const auto w = interpolatory_weights(q.nodes);
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == doctest::Approx(q.weights[i]).epsilon(1e-12));
  const auto cc = interpolatory_weights(clenshaw_curtis_nodes(5));
  CHECK(std::accumulate(cc.begin(), cc.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Lagrange basis is a partition of unity with the delta property") {
  const auto nodes = leja_nodes(6);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto l = lagrange_basis(nodes, nodes[j]);
    for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i] == doctest::Approx(i == j ? 1.0 : 0.0));
  }
  const auto l = lagrange_basis(nodes, 0.123);
  CHECK(std::accumulate(l.begin(), l.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("triple products match the closed form") {
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int c = 0; c <= 10; ++c) {
        const double ref = triple_closed_form(a, b, c);
        CHECK(std::abs(triple_product(a, b, c) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
        CHECK(std::abs(triple_product_quadrature(a, b, c) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
      }
}

TEST_CASE("triple product symmetry and special values") {
  CHECK(triple_product(0, 3, 3) == doctest::Approx(1.0));
  CHECK(triple_product(0, 2, 3) == 0.0);
  CHECK(triple_product(1, 1, 2) == doctest::Approx(2.0 / std::sqrt(5.0)));
  CHECK(triple_product(2, 5, 3) == triple_product(5, 3, 2));
  CHECK_FALSE(triple_product_support(1, 1, 3));
  CHECK(triple_product_support(2, 2, 4));
}
