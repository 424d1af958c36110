#include "sgsc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sgsc/sparsity.hpp"

namespace sgsc {

void RateConstants::validate() const {
  const double v[] = {C_FEM, d, C1, C2, C3, C4, C5, C6, C7, alpha, beta, C8, C9, C10, C11, C_sc, r_sc};
  for (double x : v)
    if (!(x > 0.0)) throw std::invalid_argument("rate constants must be strictly positive");
  if (!(s > 0.0 && s <= 2.0)) throw std::invalid_argument("FEM rate s must lie in (0, 2]");
  if (!(kappa >= 1.0) || !(kappa_sc >= 1.0)) throw std::invalid_argument("condition numbers must be >= 1");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
}

RateFit fit_rates(const std::vector<std::pair<double, double>>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("fit_rates needs at least two rows");
  for (const auto& [o, e] : rows)
    if (!(e > 0.0)) throw std::invalid_argument("fit_rates: errors must be positive");
  const double n = double(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [o, e] : rows) {
    double y = std::log(e);
    sx += o;
    sy += y;
    sxx += o * o;
    sxy += o * y;
  }
  const double den = n * sxx - sx * sx;
  if (std::abs(den) < 1e-300) throw std::invalid_argument("fit_rates: orders must not all coincide");
  const double slope = (n * sxy - sx * sy) / den;
  const double icpt = (sy - slope * sx) / n;
  RateFit fit;
  fit.C = std::exp(icpt);
  fit.c = -slope;
  for (const auto& [o, e] : rows) {
    double r = std::log(e) - (icpt + slope * o);
    fit.residual += r * r;
  }
  fit.residual = std::sqrt(fit.residual / n);
  auto sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  bool monotone = true;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i].second < sorted[i - 1].second)) monotone = false;
  if (rows.size() < 3) {
    fit.warning = true;
    fit.message = "fewer than three rows";
  }
  if (!monotone) {
    fit.warning = true;
    fit.message = "errors are not strictly decreasing";
  }
  if (!(fit.c > 0.0)) {
    fit.warning = true;
    fit.message = "fitted rate is not positive";
  }
  return fit;
}

namespace {

// Logs are clamped at zero outside the asymptotic regime.
double log_plus(double x) { return std::log(std::max(x, 1.0)); }
double loglog_plus(double x) { return log_plus(log_plus(x)); }

double contraction(double kappa) {
  if (kappa <= 1.0) return std::numeric_limits<double>::infinity();
  const double s = std::sqrt(kappa);
  return std::log((s + 1.0) / (s - 1.0));
}

// PCG iteration factor, at least one iteration.
double k_factor(double num, double kappa) {
  return std::max(1.0, log_plus(num) / contraction(kappa));
}

double j_factor(double split, double eps, const RateConstants& c) {
  return c.C7 * std::pow(split * c.C_FEM / eps, c.d / c.s);
}

}  // namespace

OptimalParams optimal_params(double eps, const RateConstants& c, WorkVariant v, int rbar) {
  if (!(eps > 0.0)) throw std::invalid_argument("optimal_params: eps must be positive");
  c.validate();
  const double split = v == WorkVariant::Transcendental ? 4.0 : 3.0;
  OptimalParams o;
  o.h_max = std::pow(eps / (split * c.C_FEM), 1.0 / c.s);
  if (v != WorkVariant::Collocation) o.p_raw = std::log(split * c.C1 / eps) / c.C2;
  if (v == WorkVariant::Transcendental) o.r_raw = std::log(split * c.C5 / eps) / c.C4;
  else if (v != WorkVariant::Collocation) o.r_raw = rbar;
  const double kappa = v == WorkVariant::Collocation ? c.kappa_sc : c.kappa;
  o.k_raw = std::log(split * c.C6 / eps) / contraction(kappa);
  o.p_min = std::max(0, int(std::ceil(o.p_raw - 1e-12)));
  o.r_min = std::max(0, int(std::ceil(o.r_raw - 1e-12)));
  o.k_min = std::max(1, int(std::ceil(o.k_raw - 1e-12)));
  return o;
}

double work_bound(double eps, const RateConstants& c, WorkVariant v, int rbar) {
  if (!(eps > 0.0)) throw std::invalid_argument("work_bound: eps must be positive");
  c.validate();
  const double N = c.N;
  const double eN = std::exp(N);
  switch (v) {
    case WorkVariant::Affine: {
      const double l1 = log_plus(3.0 * c.C1 / eps) / (c.C2 * N);
      return j_factor(3.0, eps, c) * 2.0 * eN * (1.0 + N) * std::pow(1.0 + l1, N) *
             k_factor(3.0 * c.C6 / eps, c.kappa);
    }
    case WorkVariant::Poly: {
      if (rbar < 1) throw std::invalid_argument("work_bound: rbar must be >= 1");
      const double l1 = log_plus(3.0 * c.C1 / eps) / (c.C2 * N);
      double sum = 0.0;
      for (int j = 0; j <= rbar; ++j) {
        const int h = (j + 1) / 2;
        const double m = std::min(std::ldexp(1.0, j), double(binomial(c.N + h, c.N)));
        const double base = std::max(0.0, 1.0 - h / N + l1);
        sum += double(binomial(c.N - 1 + j, c.N - 1)) * m * std::pow(base, N);
      }
      return j_factor(3.0, eps, c) * k_factor(3.0 * c.C6 / eps, c.kappa) * eN *
             (std::pow(1.0 + l1, N) + 2.0 * sum);
    }
    case WorkVariant::Transcendental: {
      const double l1 = log_plus(4.0 * c.C1 / eps) / (c.C2 * N);
      const double l5 = log_plus(4.0 * c.C5 / eps) / (c.C4 * N);
      const double l5h = log_plus(4.0 * c.C5 / eps) / (2.0 * c.C4 * N);
      return j_factor(4.0, eps, c) * eN * std::pow(1.0 + l1, N) *
             (1.0 + 2.0 * std::exp(2.0 * N) * std::pow(1.0 + l5, N) * std::pow(1.0 + 1.0 / N + l5h, N)) *
             k_factor(4.0 * c.C6 / eps, c.kappa);
    }
    case WorkVariant::Collocation: {
      const double L = log_plus(3.0 * c.C_sc / eps);
      const double brace = log_plus(c.C10 / eps) + c.C11 + 2.0 * N * loglog_plus(L / (c.r_sc * N));
      const double iters = std::max(1.0, brace / contraction(c.kappa_sc));
      return 2.0 * j_factor(3.0, eps, c) * c.C8 * std::pow(L, N) *
             std::pow(c.C9 + loglog_plus(3.0 * c.C_sc / eps) / std::log(2.0), N - 1) * iters;
    }
  }
  return 0.0;
}

std::vector<AsymptoticRow> asymptotic_table(const std::vector<double>& eps, const RateConstants& c,
                                            int rbar) {
  std::vector<AsymptoticRow> rows;
  for (double e : eps) {
    rows.push_back({e, work_bound(e, c, WorkVariant::Affine), work_bound(e, c, WorkVariant::Poly, rbar),
                    work_bound(e, c, WorkVariant::Transcendental),
                    work_bound(e, c, WorkVariant::Collocation)});
  }
  return rows;
}

}  // namespace sgsc
