#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sgsc/bounds.hpp"

using namespace sgsc;

namespace {

std::vector<double> decades(int lo, int hi) {
  std::vector<double> e;
  for (int k = lo; k <= hi; ++k) e.push_back(std::pow(10.0, -k));
  return e;
}

}  // namespace

TEST_CASE("rate fit recovers synthetic constants") {
  std::vector<std::pair<double, double>> rows;
  for (int p = 0; p <= 6; ++p) rows.push_back({double(p), 2.0 * std::exp(-0.7 * p)});
  const auto fit = fit_rates(rows);
  CHECK(fit.C == doctest::Approx(2.0).epsilon(0.01));
  CHECK(fit.c == doctest::Approx(0.7).epsilon(0.01));
  CHECK(fit.residual < 1e-12);
  CHECK_FALSE(fit.warning);
}

TEST_CASE("rate fit warnings") {
  CHECK(fit_rates({{0, 1e-2}, {1, 1e-2}, {2, 1e-3}}).warning);
  CHECK(fit_rates({{0, 1e-2}, {1, 1e-3}}).warning);
  CHECK_THROWS_AS(fit_rates({{0, 1e-2}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_rates({{0, 1e-2}, {1, 0.0}}), std::invalid_argument);
}

TEST_CASE("optimal parameters") {
  RateConstants c;
  c.C2 = 0.8;
  const auto a = optimal_params(1e-3, c, WorkVariant::Affine);
  const auto b = optimal_params(0.5e-3, c, WorkVariant::Affine);
  CHECK(b.p_raw - a.p_raw == doctest::Approx(std::log(2.0) / 0.8));
  CHECK(a.h_max == doctest::Approx(1e-3 / 3.0));
  CHECK(a.p_min == int(std::ceil(a.p_raw)));
  const auto t = optimal_params(1e-3, c, WorkVariant::Transcendental);
  CHECK(t.h_max == doctest::Approx(1e-3 / 4.0));
  CHECK(t.r_raw == doctest::Approx(std::log(4e3)));
  c.kappa = 1.0;
  CHECK(optimal_params(1e-6, c, WorkVariant::Affine).k_min == 1);
  CHECK(optimal_params(10.0, RateConstants{}, WorkVariant::Affine).p_min == 0);
}

TEST_CASE("constants are validated") {
  RateConstants c;
  c.s = 3.0;
  CHECK_THROWS_AS(work_bound(1e-3, c, WorkVariant::Affine), std::invalid_argument);
  c = RateConstants{};
  c.C3 = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RateConstants{};
  c.kappa = 0.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("work bounds are nonincreasing in eps") {
  const RateConstants c;
  for (auto v : {WorkVariant::Affine, WorkVariant::Poly, WorkVariant::Transcendental, WorkVariant::Collocation}) {
    double prev = 0.0;
    for (int k = 0; k <= 400; ++k) {
      const double eps = std::pow(10.0, -k / 40.0) * 0.999;
      const double w = work_bound(eps, c, v, 3);
      CHECK(std::isfinite(w));
      CHECK(w >= prev * (1 - 1e-12));
      prev = w;
    }
  }
}

TEST_CASE("affine bound scales with C_FEM as a power d/s") {
  RateConstants a, b;
  b.C_FEM = 2.0;
  const double ratio = work_bound(1e-6, b, WorkVariant::Affine) / work_bound(1e-6, a, WorkVariant::Affine);
  CHECK(ratio == doctest::Approx(std::pow(2.0, a.d / a.s)));
}

TEST_CASE("asymptotic orderings") {
  const RateConstants c;
  const auto rows = asymptotic_table(decades(3, 12), c, 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    CHECK(b.w_sc / b.w_affine > a.w_sc / a.w_affine);
    CHECK(b.w_transc / b.w_sc > a.w_transc / a.w_sc);
    CHECK(b.w_transc / b.w_affine > a.w_transc / a.w_affine);
    CHECK(b.w_affine > a.w_affine);
  }
}

TEST_CASE("poly bound with rbar = 1 dominates the affine bound") {
  const RateConstants c;
  for (double eps : decades(2, 12))
    CHECK(work_bound(eps, c, WorkVariant::Poly, 1) >= work_bound(eps, c, WorkVariant::Affine));
}
