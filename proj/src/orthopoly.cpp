#include "sgsc/orthopoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace sgsc {

namespace {

template <class T>
T legendre_impl(int n, T y) {
  if (n < 0) throw std::invalid_argument("legendre: negative degree");
  T p0 = 1.0, p1 = y;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    T p2 = ((2.0 * k + 1.0) * y * p1 - double(k) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return std::sqrt(2.0 * n + 1.0) * p1;
}

void check_domain(double y) {
  if (!(std::abs(y) <= 1.0 + 1e-12))
    throw std::domain_error("legendre: argument outside [-1,1]");
}

}  // namespace

double legendre(int n, double y) {
  check_domain(y);
  return legendre_impl(n, y);
}

std::complex<double> legendre(int n, std::complex<double> z) {
  return legendre_impl(n, z);
}

std::vector<double> legendre_all(int nmax, double y) {
  check_domain(y);
  if (nmax < 0) throw std::invalid_argument("legendre_all: negative degree");
  std::vector<double> out(nmax + 1);
  double p0 = 1.0, p1 = y;
  out[0] = 1.0;
  for (int k = 1; k <= nmax; ++k) {
    out[k] = std::sqrt(2.0 * k + 1.0) * p1;
    double p2 = ((2.0 * k + 1.0) * y * p1 - double(k) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return out;
}

double legendre_multi(const MultiIndex& nu, const std::vector<double>& y) {
  if (nu.size() != y.size()) throw std::invalid_argument("legendre_multi: size mismatch");
  double v = 1.0;
  for (std::size_t n = 0; n < y.size(); ++n) v *= legendre(nu[n], y[n]);
  return v;
}

namespace {

QuadratureRule build_gauss(int m) {
  QuadratureRule q;
  q.nodes.resize(m);
  q.weights.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < m; ++k) {
        double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged node.
    {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < m; ++k) {
        double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
    }
    if (m % 2 == 1 && i == m / 2) x = 0.0;
    double w = 1.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[i] = x;
    q.nodes[m - 1 - i] = -x;
    q.weights[i] = q.weights[m - 1 - i] = w;
  }
  if (m == 1) {
    q.nodes = {0.0};
    q.weights = {1.0};
  }
  // Ascending nodes.
  std::reverse(q.nodes.begin(), q.nodes.end());
  std::reverse(q.weights.begin(), q.weights.end());
  return q;
}

}  // namespace

const QuadratureRule& gauss_rule(int m) {
  if (m < 1) throw std::invalid_argument("gauss_rule: m must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<QuadratureRule>(build_gauss(m));
  return *slot;
}

std::vector<double> clenshaw_curtis_nodes(int m) {
  if (m < 1) throw std::invalid_argument("clenshaw_curtis_nodes: m must be >= 1");
  if (m == 1) return {0.0};
  std::vector<double> x(m);
  for (int j = 0; j < m; ++j) {
    if (2 * j == m - 1) x[j] = 0.0;
    else if (2 * j < m - 1) x[j] = std::cos(std::numbers::pi * double(j) / double(m - 1));
    else x[j] = -x[m - 1 - j];
  }
  return x;
}

namespace {

double leja_objective(const std::vector<double>& pts, double y) {
  double v = 1.0;
  for (double p : pts) v *= std::abs(y - p);
  return v;
}

}  // namespace

std::vector<double> leja_nodes(int m) {
  if (m < 1) throw std::invalid_argument("leja_nodes: m must be >= 1");
  static std::mutex mu;
  static std::vector<double> seq{0.0};
  std::lock_guard lock(mu);
  constexpr int grid = 100001;
  const double h = 2.0 / (grid - 1);
  while (int(seq.size()) < m) {
    int best = 0;
    double best_v = -1.0;
    // Scan from +1 downwards so the first endpoint chosen is +1.
    for (int i = grid - 1; i >= 0; --i) {
      double y = -1.0 + h * i;
      double v = leja_objective(seq, y);
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    double y_best = -1.0 + h * best;
    double a = std::max(-1.0, y_best - h), b = std::min(1.0, y_best + h);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int it = 0; it < 80 && b - a > 1e-16; ++it) {
      if (leja_objective(seq, c) > leja_objective(seq, d)) {
        b = d;
      } else {
        a = c;
      }
      c = b - gr * (b - a);
      d = a + gr * (b - a);
    }
    double y_ref = 0.5 * (a + b);
    if (leja_objective(seq, y_ref) > best_v) y_best = y_ref;
    seq.push_back(y_best);
  }
  return {seq.begin(), seq.begin() + m};
}

std::vector<double> lagrange_basis(const std::vector<double>& nodes, double y) {
  const std::size_t m = nodes.size();
  std::vector<double> l(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    if (y == nodes[j]) {
      l[j] = 1.0;
      return l;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    double v = 1.0;
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) v *= (y - nodes[k]) / (nodes[j] - nodes[k]);
    l[j] = v;
  }
  return l;
}

std::vector<double> interpolatory_weights(const std::vector<double>& nodes) {
  const int m = int(nodes.size());
  if (m == 0) return {};
  const auto& g = gauss_rule(m / 2 + 1);
  std::vector<double> w(m, 0.0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto l = lagrange_basis(nodes, g.nodes[k]);
    for (int j = 0; j < m; ++j) w[j] += g.weights[k] * l[j];
  }
  return w;
}

bool triple_product_support(int a, int b, int c) {
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

double triple_product_quadrature(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("triple_product: negative degree");
  const auto& g = gauss_rule((a + b + c + 1) / 2 + 1);
  double s = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    double y = g.nodes[k];
    s += g.weights[k] * legendre_impl(a, y) * legendre_impl(b, y) * legendre_impl(c, y);
  }
  return s;
}

double triple_product(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("triple_product: negative degree");
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  if (!triple_product_support(key[0], key[1], key[2])) return 0.0;
  static std::mutex mu;
  static std::map<std::array<int, 3>, double> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  double v = triple_product_quadrature(key[0], key[1], key[2]);
  std::lock_guard lock(mu);
  memo.emplace(key, v);
  return v;
}

}  // namespace sgsc
