#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sgsc/multiindex.hpp"

namespace sgsc {

/// C(n,k) as int64; 0 if k < 0, n < 0 or k > n. Throws std::overflow_error.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Coefficients of prod_i (1 + t + ... + t^{r_i}); entry l is #S(r,l).
std::vector<std::int64_t> generating_poly(const MultiIndex& r);

/// c(r,l) for l in [ceil(|r|/2), |r|]; throws std::out_of_range otherwise.
std::int64_t c_coefficient(const MultiIndex& r, int l);

/// Exact nnz(G_r) for Lambda_p = TD(N,p).
std::int64_t nnz_exact(std::size_t N, int p, const MultiIndex& r);
/// Counts pairs (p,q) in TD(N,p)^2 satisfying the triple-product support law.
/// Limited to N <= 5, p <= 8.
std::int64_t nnz_bruteforce(std::size_t N, int p, const MultiIndex& r);

/// 2 min{2^|r|, C(N+ceil(|r|/2),N)} C(N+p-ceil(|r|/2),N).
std::int64_t nnz_bound(std::size_t N, int p, const MultiIndex& r);

/// Sum of nnz_exact over Lambda_r.
std::int64_t mpr_total(std::size_t N, int p, const MultiIndexSet& lambda_r);
/// Same sum over TD(N,r) restricted to |r| == shell.
std::int64_t nnz_shell(std::size_t N, int p, int shell);
std::int64_t nnz_bound_shell(std::size_t N, int p, int shell);

/// 2 sum_{j<=r} min{2^j, C(N+ceil(j/2),N)} C(N-1+j,N-1) C(N+p-ceil(j/2),N).
std::int64_t mpr_bound(std::size_t N, int p, int r);
/// 2 min{2^r, C(N+ceil(r/2),N)} C(N+p,N) C(N+r,N).
std::int64_t mpr_r_dependent_bound(std::size_t N, int p, int r);

/// One-dimensional closed form for nnz(G_r), r >= 0.
std::int64_t closed_form_1d(int p, int r);
/// nnz(G_{e_k}) = 2 C(N+p-1, p-1).
std::int64_t closed_form_linear(std::size_t N, int p);

/// prod_{k=ceil(r/2)+1}^{r} (N+k)/k.
double t_factor(std::size_t N, int r);

/// Index pairs (i,j) of lambda_p with (p_i,q_j) in Theta_r, row-major order.
std::vector<std::pair<std::size_t, std::size_t>> theta_pairs(const MultiIndexSet& lambda_p,
                                                             const MultiIndex& r);

}  // namespace sgsc
