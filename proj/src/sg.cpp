#include "sgsc/sg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sgsc/orthopoly.hpp"
#include "sgsc/sparsity.hpp"

namespace sgsc {

StochasticMatrix assemble_G(const MultiIndexSet& lambda_p, const MultiIndex& r) {
  StochasticMatrix G{r, {}};
  const std::size_t N = lambda_p.dim();
  for (auto [i, j] : theta_pairs(lambda_p, r)) {
    double v = 1.0;
    for (std::size_t n = 0; n < N; ++n) v *= triple_product(lambda_p[i][n], lambda_p[j][n], r[n]);
    G.entries.push_back({i, j, v});
  }
  return G;
}

GalerkinSystem::GalerkinSystem(MultiIndexSet lambda_p, std::vector<Block> blocks, std::size_t J,
                               std::size_t dropped)
    : lambda_p_(std::move(lambda_p)), blocks_(std::move(blocks)), J_(J), dropped_(dropped) {
  bool found = false;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& blk = blocks_[b];
    if (std::size_t(blk.A.rows()) != J_ || std::size_t(blk.A.cols()) != J_)
      throw std::invalid_argument("GalerkinSystem: block matrix has wrong size");
    if (blk.G.r.is_zero()) {
      mean_index_ = b;
      found = true;
    }
    total_blocks_ += blk.G.size();
    std::vector<std::size_t> order(blk.G.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
      return blk.G.entries[a].col < blk.G.entries[c].col;
    });
    by_col_.push_back(std::move(order));
  }
  if (!found) throw std::invalid_argument("GalerkinSystem: mean term r = 0 missing");
}

const SparseMatrix& GalerkinSystem::mean_matrix() const { return blocks_[mean_index_].A; }

void GalerkinSystem::matvec(const Vector& v, Vector& out) const {
  if (std::size_t(v.size()) != size()) throw std::invalid_argument("matvec: dimension mismatch");
  const Eigen::Index J = Eigen::Index(J_);
  out.setZero(v.size());
  Vector w(J);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& blk = blocks_[b];
    const auto& order = by_col_[b];
    std::size_t k = 0;
    while (k < order.size()) {
      const std::size_t q = blk.G.entries[order[k]].col;
      w.noalias() = blk.A * v.segment(Eigen::Index(q) * J, J);
      for (; k < order.size() && blk.G.entries[order[k]].col == q; ++k) {
        const auto& e = blk.G.entries[order[k]];
        out.segment(Eigen::Index(e.row) * J, J) += e.value * w;
        ++applications_;
      }
    }
  }
}

LinearOperator GalerkinSystem::as_operator() const {
  return {[this](const Vector& x, Vector& y) { matvec(x, y); }, double(total_blocks_)};
}

GalerkinSystem assemble_system(const ProjectedCoefficient& coeff, const Mesh& mesh,
                               const MultiIndexSet& lambda_p, double drop_tol) {
  if (coeff.lambda.dim() != lambda_p.dim())
    throw std::invalid_argument("assemble_system: dimension mismatch");
  StiffnessAssembler assembler(mesh);
  std::vector<GalerkinSystem::Block> blocks;
  std::size_t dropped = 0;
  for (std::size_t k = 0; k < coeff.lambda.cardinality(); ++k) {
    const auto& r = coeff.lambda[k];
    if (!r.is_zero() && coeff.sup_norm(k) < drop_tol) {
      ++dropped;
      continue;
    }
    auto G = assemble_G(lambda_p, r);
    if (G.entries.empty()) {
      ++dropped;
      continue;
    }
    blocks.push_back({std::move(G), assembler.assemble(coeff.fields[k])});
  }
  return GalerkinSystem(lambda_p, std::move(blocks), mesh.num_free(), dropped);
}

MeanPreconditioner::MeanPreconditioner(const GalerkinSystem& sys)
    : chol_(sys.mean_matrix()), M_(sys.num_stochastic()), J_(sys.block_size()) {}

void MeanPreconditioner::apply(const Vector& r, Vector& z) const {
  const Eigen::Index J = Eigen::Index(J_);
  z.resize(r.size());
  Vector t(J);
  for (std::size_t k = 0; k < M_; ++k) {
    chol_.solve(r.segment(Eigen::Index(k) * J, J), t);
    z.segment(Eigen::Index(k) * J, J) = t;
  }
}

LinearOperator MeanPreconditioner::as_operator() const {
  return {[this](const Vector& r, Vector& z) { apply(r, z); }, double(M_)};
}

namespace {

Vector block_rhs(const GalerkinSystem& sys, const Vector& F) {
  if (std::size_t(F.size()) != sys.block_size())
    throw std::invalid_argument("solve: load vector has wrong size");
  Vector b = Vector::Zero(Eigen::Index(sys.size()));
  auto zero = sys.lambda_p().position(MultiIndex(sys.lambda_p().dim()));
  if (!zero) throw std::invalid_argument("solve: Lambda_p must contain the zero index");
  b.segment(Eigen::Index(*zero * sys.block_size()), F.size()) = F;
  return b;
}

}  // namespace

SGResult solve(const GalerkinSystem& sys, const Vector& F, double tol, int max_iter) {
  MeanPreconditioner P(sys);
  SGResult res;
  res.report = pcg(sys.as_operator(), P.as_operator(), block_rhs(sys, F), res.u, tol, max_iter);
  return res;
}

SGResult solve_unpreconditioned(const GalerkinSystem& sys, const Vector& F, double tol,
                                int max_iter) {
  SGResult res;
  res.report = pcg(sys.as_operator(), identity_operator(0.0), block_rhs(sys, F), res.u, tol, max_iter);
  return res;
}

Vector block(const GalerkinSystem& sys, const Vector& u, std::size_t k) {
  if (std::size_t(u.size()) != sys.size()) throw std::invalid_argument("block: size mismatch");
  const Eigen::Index J = Eigen::Index(sys.block_size());
  return u.segment(Eigen::Index(k) * J, J);
}

Vector mean_field(const GalerkinSystem& sys, const Vector& u) {
  auto zero = sys.lambda_p().position(MultiIndex(sys.lambda_p().dim()));
  if (!zero) throw std::invalid_argument("mean_field: Lambda_p must contain the zero index");
  return block(sys, u, *zero);
}

std::array<double, 2> eigen_bounds(int p, const MultiIndex& r) {
  if (p < 0) throw std::invalid_argument("eigen_bounds: p must be >= 0");
  double lo = 1.0, hi = 1.0;
  for (int rn : r) {
    const int m = p + (rn + 2) / 2;
    const auto& g = gauss_rule(std::max(m, 1));
    double a = 1e300, b = -1e300;
    for (double y : g.nodes) {
      double v = legendre(rn, y);
      a = std::min(a, v);
      b = std::max(b, v);
    }
    // Extremes of a product over a Cartesian grid come from per-axis extremes.
    double c[4] = {lo * a, lo * b, hi * a, hi * b};
    lo = *std::min_element(c, c + 4);
    hi = *std::max_element(c, c + 4);
  }
  return {lo, hi};
}

TauBounds tau_bounds(const ProjectedCoefficient& coeff, int p, double a_min) {
  if (!(a_min > 0.0)) throw std::invalid_argument("tau_bounds: a_min must be positive");
  TauBounds t;
  for (std::size_t k = 0; k < coeff.lambda.cardinality(); ++k) {
    const auto& r = coeff.lambda[k];
    if (r.is_zero() || r.total() > 2 * p) continue;
    auto [xi, Xi] = eigen_bounds(p, r);
    const double rho = std::max(std::abs(xi), std::abs(Xi));
    t.lower += rho * coeff.sup_norm(k) / a_min;
    t.upper += rho * coeff.sup_norm(k) / a_min;
  }
  return t;
}

}  // namespace sgsc
