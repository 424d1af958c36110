#include "sgsc/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sgsc {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sparsity: int64 overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sparsity: int64 overflow");
  return r;
}

int ceil_half(int x) { return (x + 1) / 2; }

std::int64_t pow2_capped(int j) {
  // min{2^j, B} only needs 2^j when it is small.
  if (j >= 62) return std::numeric_limits<std::int64_t>::max();
  return std::int64_t(1) << j;
}

void check_r(std::size_t N, int p, const MultiIndex& r) {
  if (r.size() != N) throw std::invalid_argument("multi-index r has wrong dimension");
  if (p < 0) throw std::invalid_argument("order p must be >= 0");
  for (int x : r)
    if (x < 0) throw std::invalid_argument("negative entry in r");
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("binomial: int64 overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::vector<std::int64_t> generating_poly(const MultiIndex& r) {
  std::vector<std::int64_t> c{1};
  for (int ri : r) {
    std::vector<std::int64_t> next(c.size() + ri, 0);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (int j = 0; j <= ri; ++j) next[a + j] = checked_add(next[a + j], c[a]);
    c = std::move(next);
  }
  return c;
}

std::int64_t c_coefficient(const MultiIndex& r, int l) {
  const int R = r.total();
  if (l < ceil_half(R) || l > R) throw std::out_of_range("c_coefficient: l outside [ceil(|r|/2), |r|]");
  std::int64_t s = generating_poly(r)[l];
  if (R % 2 == 0 && 2 * l == R) return s;
  return checked_mul(2, s);
}

std::int64_t nnz_exact(std::size_t N, int p, const MultiIndex& r) {
  check_r(N, p, r);
  const int R = r.total();
  const auto S = generating_poly(r);
  std::int64_t total = 0;
  for (int l = ceil_half(R); l <= R; ++l) {
    if (p - l < 0) break;
    std::int64_t c = (R % 2 == 0 && 2 * l == R) ? S[l] : checked_mul(2, S[l]);
    total = checked_add(total, checked_mul(c, binomial(std::int64_t(N) + p - l, p - l)));
  }
  return total;
}

std::int64_t nnz_bruteforce(std::size_t N, int p, const MultiIndex& r) {
  check_r(N, p, r);
  if (N > 5 || p > 8) throw std::invalid_argument("nnz_bruteforce: limited to N <= 5, p <= 8");
  const auto set = total_degree_set(N, p);
  std::int64_t count = 0;
  for (const auto& a : set) {
    for (const auto& b : set) {
      bool ok = true;
      for (std::size_t i = 0; i < N && ok; ++i) {
        int d = a[i] - b[i];
        ok = (d <= r[i] && -d <= r[i] && r[i] <= a[i] + b[i] && (a[i] + b[i] + r[i]) % 2 == 0);
      }
      count += ok;
    }
  }
  return count;
}

std::int64_t nnz_bound(std::size_t N, int p, const MultiIndex& r) {
  check_r(N, p, r);
  const int R = r.total(), h = ceil_half(R);
  std::int64_t m = std::min(pow2_capped(R), binomial(std::int64_t(N) + h, N));
  return checked_mul(2, checked_mul(m, binomial(std::int64_t(N) + p - h, N)));
}

std::int64_t mpr_total(std::size_t N, int p, const MultiIndexSet& lambda_r) {
  std::int64_t s = 0;
  for (const auto& r : lambda_r) s = checked_add(s, nnz_exact(N, p, r));
  return s;
}

std::int64_t nnz_shell(std::size_t N, int p, int shell) {
  std::int64_t s = 0;
  for (const auto& r : total_degree_set(N, shell))
    if (r.total() == shell) s = checked_add(s, nnz_exact(N, p, r));
  return s;
}

std::int64_t nnz_bound_shell(std::size_t N, int p, int shell) {
  std::int64_t s = 0;
  for (const auto& r : total_degree_set(N, shell))
    if (r.total() == shell) s = checked_add(s, nnz_bound(N, p, r));
  return s;
}

std::int64_t mpr_bound(std::size_t N, int p, int r) {
  if (N == 0 || p < 0 || r < 0) throw std::invalid_argument("mpr_bound: invalid arguments");
  const std::int64_t n = std::int64_t(N);
  std::int64_t s = 0;
  for (int j = 0; j <= r; ++j) {
    int h = ceil_half(j);
    std::int64_t m = std::min(pow2_capped(j), binomial(n + h, n));
    std::int64_t t = checked_mul(checked_mul(m, binomial(n - 1 + j, n - 1)), binomial(n + p - h, n));
    s = checked_add(s, t);
  }
  return checked_mul(2, s);
}

std::int64_t mpr_r_dependent_bound(std::size_t N, int p, int r) {
  if (N == 0 || p < 0 || r < 0) throw std::invalid_argument("mpr_r_dependent_bound: invalid arguments");
  const std::int64_t n = std::int64_t(N);
  std::int64_t m = std::min(pow2_capped(r), binomial(n + ceil_half(r), n));
  return checked_mul(2, checked_mul(checked_mul(m, binomial(n + p, n)), binomial(n + r, n)));
}

std::int64_t closed_form_1d(int p, int r) {
  if (p < 0 || r < 0) throw std::invalid_argument("closed_form_1d: negative argument");
  const std::int64_t P = p, R = r;
  if (r % 2 == 0) {
    const std::int64_t k = r / 2;
    if (r <= p) return (P - R + 1) * (R + 1) + k * k;
    if (r <= 2 * p) return (P - k + 1) * (P - k + 1);
    return 0;
  }
  const std::int64_t k = (r - 1) / 2;
  if (r <= p) return (P - R + 1) * (R + 1) + k * k + k;
  if (r <= 2 * p) return (P - k + 1) * (P - k);
  return 0;
}

std::int64_t closed_form_linear(std::size_t N, int p) {
  if (N == 0 || p < 0) throw std::invalid_argument("closed_form_linear: invalid arguments");
  return checked_mul(2, binomial(std::int64_t(N) + p - 1, p - 1));
}

double t_factor(std::size_t N, int r) {
  double t = 1.0;
  for (int k = ceil_half(r) + 1; k <= r; ++k) t *= double(N + k) / double(k);
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> theta_pairs(const MultiIndexSet& lambda_p,
                                                             const MultiIndex& r) {
  const std::size_t N = lambda_p.dim();
  if (r.size() != N) throw std::invalid_argument("theta_pairs: dimension mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<int> lo(N), cnt(N);
  MultiIndex q(N);
  for (std::size_t i = 0; i < lambda_p.cardinality(); ++i) {
    const auto& a = lambda_p[i];
    // Per coordinate, q_n runs over |a_n - r_n|, ..., a_n + r_n in steps of 2.
    for (std::size_t n = 0; n < N; ++n) {
      lo[n] = std::abs(a[n] - r[n]);
      cnt[n] = (a[n] + r[n] - lo[n]) / 2;
    }
    std::vector<int> k(N, 0);
    while (true) {
      for (std::size_t n = 0; n < N; ++n) q[n] = lo[n] + 2 * k[n];
      if (auto j = lambda_p.position(q)) out.emplace_back(i, *j);
      std::size_t n = 0;
      while (n < N && k[n] == cnt[n]) k[n++] = 0;
      if (n == N) break;
      ++k[n];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sgsc
