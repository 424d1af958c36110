#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sgsc {

/// Constants of the error and work estimates; every entry defaults to 1.
struct RateConstants {
  double C_FEM = 1.0;
  double s = 1.0;  ///< FEM rate in h
  double d = 2.0;  ///< spatial dimension
  double C1 = 1.0, C2 = 1.0;
  double C3 = 1.0, C4 = 1.0;
  double C5 = 1.0, C6 = 1.0;
  double C7 = 1.0;
  double alpha = 1.0, beta = 1.0;
  double kappa = 4.0;     ///< condition estimate of the preconditioned SG system
  double kappa_sc = 4.0;  ///< sup over y of the level-zero preconditioned condition number
  double C8 = 1.0, C9 = 1.0, C10 = 1.0, C11 = 1.0, C_sc = 1.0, r_sc = 1.0;
  int N = 4;

  void validate() const;
};

struct RateFit {
  double C = 0.0;
  double c = 0.0;
  double residual = 0.0;
  bool warning = false;
  std::string message;
};

/// Least squares for log(error) = log(C) - c * order.
RateFit fit_rates(const std::vector<std::pair<double, double>>& rows);

enum class WorkVariant { Affine, Poly, Transcendental, Collocation };

struct OptimalParams {
  double h_max = 0.0;
  double p_raw = 0.0, r_raw = 0.0, k_raw = 0.0;
  int p_min = 0, r_min = 0, k_min = 1;
};

/// Affine and Poly use an eps/3 split, Transcendental eps/4.
OptimalParams optimal_params(double eps, const RateConstants& c, WorkVariant v, int rbar = 1);

double work_bound(double eps, const RateConstants& c, WorkVariant v, int rbar = 1);

struct AsymptoticRow {
  double eps;
  double w_affine, w_poly, w_transc, w_sc;
};

std::vector<AsymptoticRow> asymptotic_table(const std::vector<double>& eps,
                                            const RateConstants& c, int rbar = 1);

}  // namespace sgsc
