#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgsc/fem.hpp"
#include "sgsc/multiindex.hpp"

namespace sgsc {

/// Random diffusion coefficient a(x, y) over reference variables y in [-1,1]^N
/// with density 1/2 per coordinate.
class CoefficientModel {
 public:
  enum class Kind { Affine, Polynomial, Transcendental };

  /// c(x) y^alpha
  struct Term {
    MultiIndex alpha;
    SpatialField field;
  };
  /// offset(x) + scale(x) exp(sum_n rate_n(x) y_n)
  struct ExpProduct {
    SpatialField offset;
    SpatialField scale;
    std::vector<SpatialField> rates;
  };
  using Evaluator = std::function<double(const Point&, std::span<const double>)>;

  static CoefficientModel affine(std::string name, SpatialField a0, std::vector<SpatialField> b,
                                 double a_min, double a_max);
  static CoefficientModel polynomial(std::string name, std::size_t N, std::vector<Term> terms,
                                     double a_min, double a_max);
  static CoefficientModel exp_product(std::string name, ExpProduct e, double a_min, double a_max);
  static CoefficientModel transcendental(std::string name, std::size_t N, Evaluator f, double a_min,
                                         double a_max);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return N_; }
  double a_min() const { return a_min_; }
  double a_max() const { return a_max_; }
  const std::string& name() const { return name_; }
  /// Polynomial total degree; -1 for transcendental models.
  int degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<ExpProduct>& exp_form() const { return exp_; }

  double eval(const Point& x, std::span<const double> y) const;
  bool has_complex() const { return kind_ != Kind::Transcendental || exp_.has_value(); }
  std::complex<double> eval(const Point& x, std::span<const std::complex<double>> z) const;

  /// Evaluates a(., y) at the quadrature points of a fixed mesh.
  class Sampler {
   public:
    void operator()(std::span<const double> y, std::vector<double>& out) const;

   private:
    friend class CoefficientModel;
    const CoefficientModel* model_ = nullptr;
    std::vector<Point> pts_;
    std::vector<std::vector<double>> fields_;
  };
  Sampler sampler(const Mesh& mesh) const;
  Sampler sampler(const std::vector<Point>& pts) const;

 private:
  Kind kind_ = Kind::Affine;
  std::string name_;
  std::size_t N_ = 0;
  double a_min_ = 0.0, a_max_ = 0.0;
  std::vector<Term> terms_;
  std::optional<ExpProduct> exp_;
  Evaluator eval_;
};

/// Coefficient plus load for one of the built-in scenarios.
struct Problem {
  CoefficientModel a;
  SpatialField f;
};

/// Eight discs of radius 0.13; y_n uniform on [-0.99,-0.2] mapped to [-1,1].
CoefficientModel builtin_inclusion_affine(std::size_t N = 8);
/// Disc centres used by the inclusion model, in variable order.
std::vector<Point> inclusion_centres();
CoefficientModel builtin_poly(std::size_t N, int rbar);
CoefficientModel builtin_log_kl(std::size_t N, double Lc);
/// c + exp(k y), one variable, spatially constant.
CoefficientModel builtin_exp1d(double c = 0.1, double k = 2.5);

Problem make_problem(const std::string& model, std::size_t N, int rbar, double Lc);

struct ProjectedCoefficient {
  MultiIndexSet lambda;
  /// fields[k][i] = a_{lambda[k]} at mesh quadrature point i.
  std::vector<std::vector<double>> fields;
  int quad_points = 0;
  double a_min = 0.0;

  double sup_norm(std::size_t k) const;
  /// a^r(., y) at the quadrature points.
  std::vector<double> eval(std::span<const double> y) const;
  std::vector<std::complex<double>> eval(std::span<const std::complex<double>> z) const;
};

class QuadratureBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor Gauss projection with q points per dimension onto Psi_r, r in lambda_r.
ProjectedCoefficient project(const CoefficientModel& model, const Mesh& mesh,
                             const MultiIndexSet& lambda_r, int q, double cap = 1e7);
ProjectedCoefficient project(const CoefficientModel& model, const std::vector<Point>& pts,
                             const MultiIndexSet& lambda_r, int q, double cap = 1e7);
/// Same, always through the pointwise evaluator over the full tensor grid.
ProjectedCoefficient project_tensor(const CoefficientModel& model, const std::vector<Point>& pts,
                                    const MultiIndexSet& lambda_r, int q, double cap = 1e7);

/// Quadrature points per dimension used by default for order r.
int default_quad_points(const CoefficientModel& model, int r);

struct EllipticityRow {
  int r = 0;
  double min_ar = 0.0;
  double max_ar = 0.0;
  double sup_error = 0.0;
};

struct EllipticityReport {
  double a_min = 0.0;
  std::size_t num_samples = 0;
  std::vector<EllipticityRow> rows;
  /// Empty when no order up to r_max qualifies.
  std::optional<int> r_tilde;
};

enum class ProjectionFamily { TotalDegree, Smolyak };

/// Sampled sup-norm of a - a^r over r = 0..r_max on the given spatial points.
EllipticityReport well_posed_order(const CoefficientModel& model, const std::vector<Point>& pts,
                                   int r_max, std::uint64_t seed,
                                   ProjectionFamily family = ProjectionFamily::TotalDegree,
                                   std::size_t num_random = 10000);

/// Samples in [-1,1]^N: 17^N grid for N <= 3 plus shifted Halton points.
std::vector<std::vector<double>> sample_parameters(std::size_t N, std::uint64_t seed,
                                                   std::size_t num_random = 10000);

struct ComplexGrid {
  double re_min = -3.0, re_max = 3.0, im_min = -3.0, im_max = 3.0;
  int n_re = 121, n_im = 121;
  std::complex<double> at(int i_re, int i_im) const;
};

struct RegionGrid {
  ComplexGrid grid;
  /// inside[i_im * n_re + i_re]
  std::vector<char> inside;
};

/// Re a(x, z) >= delta for all given x; N = 1 models only.
RegionGrid ellipticity_region_grid(const CoefficientModel& model, double delta,
                                   const ComplexGrid& grid, const std::vector<Point>& pts);
RegionGrid ellipticity_region_grid(const ProjectedCoefficient& proj, double delta,
                                   const ComplexGrid& grid);

}  // namespace sgsc
