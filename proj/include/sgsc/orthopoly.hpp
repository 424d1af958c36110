#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sgsc/multiindex.hpp"

namespace sgsc {

/// Orthonormal Legendre polynomial psi_n = sqrt(2n+1) P_n for rho = 1/2 on [-1,1].
double legendre(int n, double y);
std::complex<double> legendre(int n, std::complex<double> z);
/// psi_0..psi_nmax at y.
std::vector<double> legendre_all(int nmax, double y);
/// prod_n psi_{nu_n}(y_n).
double legendre_multi(const MultiIndex& nu, const std::vector<double>& y);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  ///< sum to 1 (probability measure rho = 1/2)
  std::size_t size() const { return nodes.size(); }
};

/// m-point Gauss-Legendre rule, cached.
const QuadratureRule& gauss_rule(int m);

/// cos(pi (j-1)/(m-1)), j = 1..m; {0} for m = 1.
std::vector<double> clenshaw_curtis_nodes(int m);

/// First m points of the Leja sequence on [-1,1] starting at 0.
std::vector<double> leja_nodes(int m);

/// Interpolatory weights int l_j rho dy for the Lagrange basis on `nodes`.
std::vector<double> interpolatory_weights(const std::vector<double>& nodes);

/// Lagrange basis values l_j(y) on `nodes` (barycentric form).
std::vector<double> lagrange_basis(const std::vector<double>& nodes, double y);

/// E[psi_a psi_b psi_c], memoized; exact zero when parity or triangle fails.
double triple_product(int a, int b, int c);
/// Same integral evaluated by quadrature with no support shortcut.
double triple_product_quadrature(int a, int b, int c);
/// Parity and triangle conditions for a nonzero triple product.
bool triple_product_support(int a, int b, int c);

}  // namespace sgsc
