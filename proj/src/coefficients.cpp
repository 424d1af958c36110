#include "sgsc/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sgsc/orthopoly.hpp"
#include "sgsc/sparsity.hpp"

namespace sgsc {

namespace {

void check_point(const Point& x) {
  constexpr double t = 1e-12;
  if (!(x.x >= -t && x.x <= 1 + t && x.y >= -t && x.y <= 1 + t))
    throw std::domain_error("coefficient: x outside [0,1]^2");
}

void check_params(std::size_t N, std::span<const double> y) {
  if (y.size() != N) throw std::domain_error("coefficient: y has wrong dimension");
  for (double v : y)
    if (!(std::abs(v) <= 1.0 + 1e-12)) throw std::domain_error("coefficient: y outside [-1,1]^N");
}

template <class T>
T monomial(const MultiIndex& a, std::span<const T> y) {
  T v = 1.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    for (int k = 0; k < a[n]; ++k) v *= y[n];
  return v;
}

}  // namespace

CoefficientModel CoefficientModel::affine(std::string name, SpatialField a0,
                                          std::vector<SpatialField> b, double a_min,
                                          double a_max) {
  const std::size_t N = b.size();
  if (N == 0) throw std::invalid_argument("affine model needs at least one variable");
  std::vector<Term> terms;
  terms.push_back({MultiIndex(N), std::move(a0)});
  for (std::size_t n = 0; n < N; ++n) {
    MultiIndex e(N);
    e[n] = 1;
    terms.push_back({e, std::move(b[n])});
  }
  auto m = polynomial(std::move(name), N, std::move(terms), a_min, a_max);
  m.kind_ = Kind::Affine;
  return m;
}

CoefficientModel CoefficientModel::polynomial(std::string name, std::size_t N,
                                              std::vector<Term> terms, double a_min,
                                              double a_max) {
  CoefficientModel m;
  m.kind_ = Kind::Polynomial;
  m.name_ = std::move(name);
  m.N_ = N;
  m.a_min_ = a_min;
  m.a_max_ = a_max;
  for (const auto& t : terms)
    if (t.alpha.size() != N) throw std::invalid_argument("polynomial term has wrong dimension");
  m.terms_ = std::move(terms);
  return m;
}

CoefficientModel CoefficientModel::exp_product(std::string name, ExpProduct e, double a_min,
                                               double a_max) {
  CoefficientModel m;
  m.kind_ = Kind::Transcendental;
  m.name_ = std::move(name);
  m.N_ = e.rates.size();
  m.a_min_ = a_min;
  m.a_max_ = a_max;
  m.exp_ = std::move(e);
  return m;
}

CoefficientModel CoefficientModel::transcendental(std::string name, std::size_t N, Evaluator f,
                                                  double a_min, double a_max) {
  CoefficientModel m;
  m.kind_ = Kind::Transcendental;
  m.name_ = std::move(name);
  m.N_ = N;
  m.a_min_ = a_min;
  m.a_max_ = a_max;
  m.eval_ = std::move(f);
  return m;
}

int CoefficientModel::degree() const {
  if (kind_ == Kind::Transcendental) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.alpha.total());
  return d;
}

double CoefficientModel::eval(const Point& x, std::span<const double> y) const {
  check_point(x);
  check_params(N_, y);
  if (kind_ != Kind::Transcendental) {
    double v = 0.0;
    for (const auto& t : terms_) v += t.field(x) * monomial<double>(t.alpha, y);
    return v;
  }
  if (exp_) {
    double s = 0.0;
    for (std::size_t n = 0; n < N_; ++n) s += exp_->rates[n](x) * y[n];
    return exp_->offset(x) + exp_->scale(x) * std::exp(s);
  }
  return eval_(x, y);
}

std::complex<double> CoefficientModel::eval(const Point& x,
                                            std::span<const std::complex<double>> z) const {
  check_point(x);
  if (z.size() != N_) throw std::domain_error("coefficient: z has wrong dimension");
  if (kind_ != Kind::Transcendental) {
    std::complex<double> v = 0.0;
    for (const auto& t : terms_) v += t.field(x) * monomial<std::complex<double>>(t.alpha, z);
    return v;
  }
  if (!exp_) throw std::logic_error("coefficient model has no complex evaluator");
  std::complex<double> s = 0.0;
  for (std::size_t n = 0; n < N_; ++n) s += exp_->rates[n](x) * z[n];
  return exp_->offset(x) + exp_->scale(x) * std::exp(s);
}

CoefficientModel::Sampler CoefficientModel::sampler(const Mesh& mesh) const {
  return sampler(mesh.quadrature_points());
}

CoefficientModel::Sampler CoefficientModel::sampler(const std::vector<Point>& pts) const {
  Sampler s;
  s.model_ = this;
  s.pts_ = pts;
  for (const auto& p : pts) check_point(p);
  auto sample = [&](const SpatialField& f) {
    std::vector<double> v(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) v[i] = f(pts[i]);
    return v;
  };
  if (kind_ != Kind::Transcendental) {
    for (const auto& t : terms_) s.fields_.push_back(sample(t.field));
  } else if (exp_) {
    s.fields_.push_back(sample(exp_->offset));
    s.fields_.push_back(sample(exp_->scale));
    for (const auto& r : exp_->rates) s.fields_.push_back(sample(r));
  }
  return s;
}

void CoefficientModel::Sampler::operator()(std::span<const double> y,
                                           std::vector<double>& out) const {
  const auto& m = *model_;
  check_params(m.N_, y);
  const std::size_t P = pts_.size();
  out.assign(P, 0.0);
  if (m.kind_ != Kind::Transcendental) {
    for (std::size_t k = 0; k < m.terms_.size(); ++k) {
      double c = monomial<double>(m.terms_[k].alpha, y);
      if (c == 0.0) continue;
      const auto& f = fields_[k];
      for (std::size_t i = 0; i < P; ++i) out[i] += c * f[i];
    }
  } else if (m.exp_) {
    for (std::size_t i = 0; i < P; ++i) {
      double s = 0.0;
      for (std::size_t n = 0; n < m.N_; ++n) s += fields_[2 + n][i] * y[n];
      out[i] = fields_[0][i] + fields_[1][i] * std::exp(s);
    }
  } else {
    for (std::size_t i = 0; i < P; ++i) out[i] = m.eval_(pts_[i], y);
  }
}

std::vector<Point> inclusion_centres() {
  const double a = 1.0 / 6.0, b = 0.5, c = 5.0 / 6.0;
  return {{b, a}, {a, b}, {c, b}, {b, c}, {a, a}, {c, a}, {a, c}, {c, c}};
}

CoefficientModel builtin_inclusion_affine(std::size_t N) {
  if (N < 1 || N > 8) throw std::invalid_argument("inclusion model supports 1..8 variables");
  constexpr double radius = 0.13, lo = -0.99, hi = -0.2;
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  auto centres = inclusion_centres();
  centres.resize(N);
  auto chi = [radius](Point c) {
    return [c, radius](const Point& x) {
      double dx = x.x - c.x, dy = x.y - c.y;
      return dx * dx + dy * dy <= radius * radius ? 1.0 : 0.0;
    };
  };
  SpatialField a0 = [centres, chi, mid](const Point& x) {
    double v = 1.0;
    for (const auto& c : centres) v += mid * chi(c)(x);
    return v;
  };
  std::vector<SpatialField> b;
  for (const auto& c : centres) {
    auto ind = chi(c);
    b.push_back([ind, half](const Point& x) { return half * ind(x); });
  }
  return CoefficientModel::affine("inclusion", a0, b, 1.0 + lo, 1.0);
}

CoefficientModel builtin_poly(std::size_t N, int rbar) {
  if (N < 1) throw std::invalid_argument("poly model needs N >= 1");
  if (rbar < 1) throw std::invalid_argument("poly model needs rbar >= 1");
  std::vector<CoefficientModel::Term> terms;
  terms.push_back({MultiIndex(N), [](const Point&) { return 5.0; }});
  double amp = 0.0;
  for (const auto& r : total_degree_set(N, rbar)) {
    const int R = r.total();
    if (R == 0) continue;
    const double c = std::exp(-1.5 * R);
    const double w = R * std::numbers::pi;
    SpatialField f;
    if (R % 2 == 0) f = [c, w](const Point& x) { return c * std::sin(w * x.x) * std::cos(w * x.y); };
    else f = [c, w](const Point& x) { return c * std::cos(w * x.x) * std::sin(w * x.y); };
    terms.push_back({r, f});
    amp += c;
  }
  return CoefficientModel::polynomial("poly", N, std::move(terms), 5.0 - amp, 5.0 + amp);
}

CoefficientModel builtin_log_kl(std::size_t N, double Lc) {
  if (N < 1) throw std::invalid_argument("log-KL model needs N >= 1");
  if (!(Lc > 0.0)) throw std::invalid_argument("log-KL model needs Lc > 0");
  const double Lp = std::max(1.0, 2.0 * Lc), L = Lc / Lp;
  const double s3 = std::sqrt(3.0), sp = std::sqrt(std::numbers::pi);
  CoefficientModel::ExpProduct e;
  e.offset = [](const Point&) { return 0.5; };
  e.scale = [](const Point&) { return std::exp(1.0); };
  const double c1 = s3 * std::sqrt(sp * L / 2.0);
  e.rates.push_back([c1](const Point&) { return c1; });
  double amp = c1;
  for (std::size_t n = 2; n <= N; ++n) {
    const double k = double(n / 2);
    const double zeta = std::sqrt(sp * L) * std::exp(-std::pow(k * std::numbers::pi * L, 2) / 8.0);
    const double c = s3 * zeta, w = k * std::numbers::pi / Lp;
    if (n % 2 == 0) e.rates.push_back([c, w](const Point& x) { return c * std::sin(w * x.x); });
    else e.rates.push_back([c, w](const Point& x) { return c * std::cos(w * x.x); });
    amp += c;
  }
  return CoefficientModel::exp_product("logkl", std::move(e), 0.5 + std::exp(1.0 - amp),
                                       0.5 + std::exp(1.0 + amp));
}

CoefficientModel builtin_exp1d(double c, double k) {
  CoefficientModel::ExpProduct e;
  e.offset = [c](const Point&) { return c; };
  e.scale = [](const Point&) { return 1.0; };
  e.rates.push_back([k](const Point&) { return k; });
  return CoefficientModel::exp_product("exp1d", std::move(e), c + std::exp(-std::abs(k)),
                                       c + std::exp(std::abs(k)));
}

Problem make_problem(const std::string& model, std::size_t N, int rbar, double Lc) {
  if (model == "inclusion") {
    return {builtin_inclusion_affine(N), [](const Point& x) {
              return (x.x >= 0.4 && x.x <= 0.6 && x.y >= 0.4 && x.y <= 0.6) ? 100.0 : 0.0;
            }};
  }
  if (model == "poly") return {builtin_poly(N, rbar), [](const Point&) { return 1.0; }};
  if (model == "logkl") {
    return {builtin_log_kl(N, Lc), [](const Point& x) { return std::cos(x.x) * std::sin(x.y); }};
  }
  throw std::invalid_argument("unknown model '" + model + "' (expected inclusion, poly or logkl)");
}

double ProjectedCoefficient::sup_norm(std::size_t k) const {
  double m = 0.0;
  for (double v : fields[k]) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> ProjectedCoefficient::eval(std::span<const double> y) const {
  const std::size_t N = lambda.dim();
  if (y.size() != N) throw std::domain_error("projected coefficient: y has wrong dimension");
  const std::size_t P = fields.empty() ? 0 : fields[0].size();
  std::vector<int> dmax(N, 0);
  for (const auto& r : lambda)
    for (std::size_t n = 0; n < N; ++n) dmax[n] = std::max(dmax[n], r[n]);
  std::vector<std::vector<double>> psi(N);
  for (std::size_t n = 0; n < N; ++n) psi[n] = legendre_all(dmax[n], y[n]);
  std::vector<double> out(P, 0.0);
  for (std::size_t k = 0; k < lambda.cardinality(); ++k) {
    double c = 1.0;
    for (std::size_t n = 0; n < N; ++n) c *= psi[n][lambda[k][n]];
    const auto& f = fields[k];
    for (std::size_t i = 0; i < P; ++i) out[i] += c * f[i];
  }
  return out;
}

std::vector<std::complex<double>> ProjectedCoefficient::eval(
    std::span<const std::complex<double>> z) const {
  const std::size_t N = lambda.dim();
  if (z.size() != N) throw std::domain_error("projected coefficient: z has wrong dimension");
  const std::size_t P = fields.empty() ? 0 : fields[0].size();
  std::vector<std::complex<double>> out(P, 0.0);
  for (std::size_t k = 0; k < lambda.cardinality(); ++k) {
    std::complex<double> c = 1.0;
    for (std::size_t n = 0; n < N; ++n) c *= legendre(lambda[k][n], z[n]);
    for (std::size_t i = 0; i < P; ++i) out[i] += c * fields[k][i];
  }
  return out;
}

namespace {

void check_budget(std::size_t N, int q, double cap) {
  if (q < 1) throw std::invalid_argument("projection needs q >= 1");
  if (std::pow(double(q), double(N)) > cap)
    throw QuadratureBudgetError("projection quadrature needs q^N = " + std::to_string(q) + "^" +
                                std::to_string(N) +
                                " points, above the cap; use a sparse quadrature instead");
}

int max_degree(const MultiIndexSet& lambda, std::size_t n) {
  int d = 0;
  for (const auto& r : lambda) d = std::max(d, r[n]);
  return d;
}

void check_projection_args(const CoefficientModel& model, const MultiIndexSet& lambda_r, int q,
                           double cap) {
  if (lambda_r.dim() != model.dim())
    throw std::invalid_argument("projection: index set dimension differs from model");
  int r = 0;
  for (const auto& m : lambda_r) r = std::max(r, m.total());
  if (q < r + 2) throw std::invalid_argument("projection needs q >= r + 2");
  check_budget(model.dim(), q, cap);
}

}  // namespace

ProjectedCoefficient project_tensor(const CoefficientModel& model, const std::vector<Point>& pts,
                                    const MultiIndexSet& lambda_r, int q, double cap) {
  check_projection_args(model, lambda_r, q, cap);
  const std::size_t N = model.dim(), P = pts.size(), K = lambda_r.cardinality();
  const auto& g = gauss_rule(q);
  std::vector<std::vector<std::vector<double>>> psi(N);
  for (std::size_t n = 0; n < N; ++n) {
    int dmax = max_degree(lambda_r, n);
    for (int j = 0; j < q; ++j) psi[n].push_back(legendre_all(dmax, g.nodes[j]));
  }
  ProjectedCoefficient out{lambda_r, std::vector<std::vector<double>>(K, std::vector<double>(P, 0.0)),
                           q, model.a_min()};
  auto sampler = model.sampler(pts);
  std::vector<int> idx(N, 0);
  std::vector<double> y(N), vals;
  while (true) {
    double w = 1.0;
    for (std::size_t n = 0; n < N; ++n) {
      y[n] = g.nodes[idx[n]];
      w *= g.weights[idx[n]];
    }
    sampler(y, vals);
    for (std::size_t k = 0; k < K; ++k) {
      double c = w;
      for (std::size_t n = 0; n < N; ++n) c *= psi[n][idx[n]][lambda_r[k][n]];
      auto& f = out.fields[k];
      for (std::size_t i = 0; i < P; ++i) f[i] += c * vals[i];
    }
    std::size_t n = 0;
    while (n < N && idx[n] == q - 1) idx[n++] = 0;
    if (n == N) break;
    ++idx[n];
  }
  return out;
}

ProjectedCoefficient project(const CoefficientModel& model, const std::vector<Point>& pts,
                             const MultiIndexSet& lambda_r, int q, double cap) {
  check_projection_args(model, lambda_r, q, cap);
  const std::size_t N = model.dim(), P = pts.size(), K = lambda_r.cardinality();
  const auto& g = gauss_rule(q);
  ProjectedCoefficient out{lambda_r, std::vector<std::vector<double>>(K, std::vector<double>(P, 0.0)),
                           q, model.a_min()};
  int rmax = 0;
  for (std::size_t n = 0; n < N; ++n) rmax = std::max(rmax, max_degree(lambda_r, n));

  if (model.kind() != CoefficientModel::Kind::Transcendental) {
    // One-dimensional moments <y^k, psi_j>; the tensor rule factorizes over monomials.
    const int deg = model.degree();
    std::vector<std::vector<double>> mom(deg + 1, std::vector<double>(rmax + 1, 0.0));
    for (int j = 0; j < q; ++j) {
      auto psi = legendre_all(rmax, g.nodes[j]);
      double yk = 1.0;
      for (int k = 0; k <= deg; ++k, yk *= g.nodes[j])
        for (int d = 0; d <= rmax; ++d) mom[k][d] += g.weights[j] * yk * psi[d];
    }
    for (int k = 0; k <= deg; ++k)
      for (int d = 0; d <= rmax; ++d)
        if (d > k || (k - d) % 2) mom[k][d] = 0.0;
    for (const auto& t : model.terms()) {
      std::vector<double> f(P);
      for (std::size_t i = 0; i < P; ++i) f[i] = t.field(pts[i]);
      for (std::size_t k = 0; k < K; ++k) {
        double c = 1.0;
        for (std::size_t n = 0; n < N && c != 0.0; ++n) c *= mom[t.alpha[n]][lambda_r[k][n]];
        if (c == 0.0) continue;
        for (std::size_t i = 0; i < P; ++i) out.fields[k][i] += c * f[i];
      }
    }
    return out;
  }

  if (!model.exp_form()) return project_tensor(model, pts, lambda_r, q, cap);

  const auto& e = *model.exp_form();
  std::vector<std::vector<double>> psi(q);
  for (int j = 0; j < q; ++j) psi[j] = legendre_all(rmax, g.nodes[j]);
  std::vector<std::vector<double>> I(N, std::vector<double>(rmax + 1));
  for (std::size_t i = 0; i < P; ++i) {
    const Point& x = pts[i];
    for (std::size_t n = 0; n < N; ++n) {
      const double rate = e.rates[n](x);
      std::fill(I[n].begin(), I[n].end(), 0.0);
      for (int j = 0; j < q; ++j) {
        double v = g.weights[j] * std::exp(rate * g.nodes[j]);
        for (int d = 0; d <= rmax; ++d) I[n][d] += v * psi[j][d];
      }
    }
    const double off = e.offset(x), sc = e.scale(x);
    for (std::size_t k = 0; k < K; ++k) {
      double c = sc;
      for (std::size_t n = 0; n < N; ++n) c *= I[n][lambda_r[k][n]];
      if (lambda_r[k].is_zero()) c += off;
      out.fields[k][i] = c;
    }
  }
  return out;
}

ProjectedCoefficient project(const CoefficientModel& model, const Mesh& mesh,
                             const MultiIndexSet& lambda_r, int q, double cap) {
  return project(model, mesh.quadrature_points(), lambda_r, q, cap);
}

int default_quad_points(const CoefficientModel& model, int r) {
  if (model.kind() == CoefficientModel::Kind::Transcendental) return r + 8;
  return std::max(r + 2, (model.degree() + r + 2) / 2);
}

namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double f = 1.0, v = 0.0;
  while (i > 0) {
    f /= double(base);
    v += f * double(i % base);
    i /= base;
  }
  return v;
}

constexpr std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

std::vector<std::vector<double>> sample_parameters(std::size_t N, std::uint64_t seed,
                                                   std::size_t num_random) {
  if (N > std::size(kPrimes)) throw std::invalid_argument("sample_parameters: N too large");
  std::vector<std::vector<double>> out;
  if (N <= 3) {
    constexpr int m = 17;
    std::vector<int> idx(N, 0);
    while (true) {
      std::vector<double> y(N);
      for (std::size_t n = 0; n < N; ++n) y[n] = -1.0 + 2.0 * idx[n] / (m - 1);
      out.push_back(std::move(y));
      std::size_t n = 0;
      while (n < N && idx[n] == m - 1) idx[n++] = 0;
      if (n == N) break;
      ++idx[n];
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> shift(N);
  for (auto& s : shift) s = U(rng);
  for (std::size_t i = 1; i <= num_random; ++i) {
    std::vector<double> y(N);
    for (std::size_t n = 0; n < N; ++n) {
      double u = radical_inverse(i, kPrimes[n]) + shift[n];
      u -= std::floor(u);
      y[n] = 2.0 * u - 1.0;
    }
    out.push_back(std::move(y));
  }
  return out;
}

EllipticityReport well_posed_order(const CoefficientModel& model, const std::vector<Point>& pts,
                                   int r_max, std::uint64_t seed, ProjectionFamily family,
                                   std::size_t num_random) {
  if (r_max < 0) throw std::invalid_argument("well_posed_order: r_max must be >= 0");
  const std::size_t N = model.dim();
  EllipticityReport rep;
  rep.a_min = model.a_min();
  const auto samples = sample_parameters(N, seed, num_random);
  rep.num_samples = samples.size();
  auto sampler = model.sampler(pts);
  std::vector<std::vector<double>> exact(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) sampler(samples[s], exact[s]);
  for (int r = 0; r <= r_max; ++r) {
    auto lambda = family == ProjectionFamily::TotalDegree ? total_degree_set(N, r) : smolyak_set(N, r);
    auto proj = project(model, pts, lambda, default_quad_points(model, r));
    EllipticityRow row{r, std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t s = 0; s < samples.size(); ++s) {
      auto ar = proj.eval(samples[s]);
      for (std::size_t i = 0; i < ar.size(); ++i) {
        row.min_ar = std::min(row.min_ar, ar[i]);
        row.max_ar = std::max(row.max_ar, ar[i]);
        row.sup_error = std::max(row.sup_error, std::abs(ar[i] - exact[s][i]));
      }
    }
    rep.rows.push_back(row);
  }
  for (int r = r_max; r >= 0 && rep.rows[r].sup_error <= rep.a_min; --r) rep.r_tilde = r;
  return rep;
}

std::complex<double> ComplexGrid::at(int i_re, int i_im) const {
  double re = n_re > 1 ? re_min + (re_max - re_min) * i_re / (n_re - 1) : re_min;
  double im = n_im > 1 ? im_min + (im_max - im_min) * i_im / (n_im - 1) : im_min;
  return {re, im};
}

namespace {

void check_grid(const ComplexGrid& g) {
  if (g.n_re < 1 || g.n_im < 1) throw std::invalid_argument("complex grid needs at least one point");
}

}  // namespace

RegionGrid ellipticity_region_grid(const CoefficientModel& model, double delta,
                                   const ComplexGrid& grid, const std::vector<Point>& pts) {
  if (model.dim() != 1) throw std::invalid_argument("ellipticity region needs a one-variable model");
  if (!model.has_complex()) throw std::invalid_argument("model has no complex evaluator");
  if (!(delta > 0.0 && delta < model.a_min()))
    throw std::invalid_argument("delta must lie in (0, a_min)");
  check_grid(grid);
  RegionGrid out{grid, std::vector<char>(std::size_t(grid.n_re) * grid.n_im, 0)};
  for (int j = 0; j < grid.n_im; ++j)
    for (int i = 0; i < grid.n_re; ++i) {
      std::complex<double> z = grid.at(i, j);
      bool ok = true;
      for (const auto& x : pts)
        if (!(model.eval(x, std::span<const std::complex<double>>(&z, 1)).real() >= delta)) {
          ok = false;
          break;
        }
      out.inside[std::size_t(j) * grid.n_re + i] = ok;
    }
  return out;
}

RegionGrid ellipticity_region_grid(const ProjectedCoefficient& proj, double delta,
                                   const ComplexGrid& grid) {
  if (proj.lambda.dim() != 1) throw std::invalid_argument("ellipticity region needs one variable");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  check_grid(grid);
  RegionGrid out{grid, std::vector<char>(std::size_t(grid.n_re) * grid.n_im, 0)};
  for (int j = 0; j < grid.n_im; ++j)
    for (int i = 0; i < grid.n_re; ++i) {
      std::complex<double> z = grid.at(i, j);
      auto v = proj.eval(std::span<const std::complex<double>>(&z, 1));
      bool ok = std::all_of(v.begin(), v.end(), [delta](auto c) { return c.real() >= delta; });
      out.inside[std::size_t(j) * grid.n_re + i] = ok;
    }
  return out;
}

}  // namespace sgsc
