#include "sgsc/fem.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <iomanip>

namespace sgsc {

Mesh::Mesh(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("mesh needs n >= 2");
  const int np = n + 1;
  nodes_.reserve(std::size_t(np) * np);
  free_index_.assign(std::size_t(np) * np, -1);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      nodes_.push_back({double(i) / n, double(j) / n});
      if (i > 0 && i < n && j > 0 && j < n) {
        free_index_[j * np + i] = int(free_nodes_.size());
        free_nodes_.push_back(j * np + i);
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      int a = j * np + i, b = a + 1, c = a + np, d = c + 1;
      tris_.push_back({a, b, d});
      tris_.push_back({a, d, c});
    }
  }
  qp_.reserve(3 * tris_.size());
  for (const auto& t : tris_) {
    for (int k = 0; k < 3; ++k) {
      const Point& p = nodes_[t[(k + 1) % 3]];
      const Point& q = nodes_[t[(k + 2) % 3]];
      qp_.push_back({0.5 * (p.x + q.x), 0.5 * (p.y + q.y)});
    }
  }
}

double Mesh::h() const { return std::sqrt(2.0) / n_; }

std::vector<double> Mesh::sample(const SpatialField& f) const {
  std::vector<double> v(qp_.size());
  for (std::size_t i = 0; i < qp_.size(); ++i) v[i] = f(qp_[i]);
  return v;
}

namespace {

// Gradients of the three barycentric functions.
std::array<std::array<double, 2>, 3> p1_gradients(const Point& a, const Point& b, const Point& c) {
  double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  return {{{(b.y - c.y) / det, (c.x - b.x) / det},
           {(c.y - a.y) / det, (a.x - c.x) / det},
           {(a.y - b.y) / det, (b.x - a.x) / det}}};
}

}  // namespace

StiffnessAssembler::StiffnessAssembler(const Mesh& mesh) : mesh_(&mesh) {
  const std::size_t J = mesh.num_free();
  std::vector<Eigen::Triplet<double>> trip;
  local_.resize(mesh.num_triangles());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    auto g = p1_gradients(mesh.node(tri[0]), mesh.node(tri[1]), mesh.node(tri[2]));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        local_[t][3 * a + b] = mesh.triangle_area() * (g[a][0] * g[b][0] + g[a][1] * g[b][1]);
        int ia = mesh.free_index(tri[a]), ib = mesh.free_index(tri[b]);
        if (ia >= 0 && ib >= 0) trip.emplace_back(ia, ib, 1.0);
      }
  }
  pattern_.resize(Eigen::Index(J), Eigen::Index(J));
  pattern_.setFromTriplets(trip.begin(), trip.end());
  pattern_.makeCompressed();
  slot_.resize(mesh.num_triangles());
  const int* outer = pattern_.outerIndexPtr();
  const int* inner = pattern_.innerIndexPtr();
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        int ia = mesh.free_index(tri[a]), ib = mesh.free_index(tri[b]);
        int s = -1;
        if (ia >= 0 && ib >= 0) {
          for (int k = outer[ia]; k < outer[ia + 1]; ++k)
            if (inner[k] == ib) s = k;
        }
        slot_[t][3 * a + b] = s;
      }
  }
}

SparseMatrix StiffnessAssembler::assemble(std::span<const double> qp_values) const {
  if (qp_values.size() != mesh_->num_quadrature_points())
    throw std::invalid_argument("assemble: wrong number of quadrature values");
  SparseMatrix A = pattern_;
  double* val = A.valuePtr();
  std::fill(val, val + A.nonZeros(), 0.0);
  for (std::size_t t = 0; t < slot_.size(); ++t) {
    double c = (qp_values[3 * t] + qp_values[3 * t + 1] + qp_values[3 * t + 2]) / 3.0;
    if (!std::isfinite(c))
      throw AssemblyError("non-finite coefficient value in triangle " + std::to_string(t));
    for (int k = 0; k < 9; ++k)
      if (slot_[t][k] >= 0) val[slot_[t][k]] += c * local_[t][k];
  }
  return A;
}

SparseMatrix StiffnessAssembler::assemble(const SpatialField& a) const {
  return assemble(mesh_->sample(a));
}

Vector assemble_load(const Mesh& mesh, std::span<const double> f) {
  if (f.size() != mesh.num_quadrature_points())
    throw std::invalid_argument("assemble_load: wrong number of quadrature values");
  Vector F = Vector::Zero(Eigen::Index(mesh.num_free()));
  const double w = mesh.triangle_area() / 3.0;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    for (int k = 0; k < 3; ++k) {
      double v = f[3 * t + k];
      if (!std::isfinite(v)) throw AssemblyError("non-finite load value");
      // Midpoint k lies on the edge of vertices k+1, k+2 where both hats equal 1/2.
      for (int a : {(k + 1) % 3, (k + 2) % 3}) {
        int ia = mesh.free_index(tri[a]);
        if (ia >= 0) F[ia] += w * 0.5 * v;
      }
    }
  }
  return F;
}

Vector assemble_load(const Mesh& mesh, const SpatialField& f) {
  return assemble_load(mesh, mesh.sample(f));
}

LinearOperator matrix_operator(const SparseMatrix& A, double cost) {
  return {[&A](const Vector& x, Vector& y) { y.noalias() = A * x; }, cost};
}

LinearOperator identity_operator(double cost) {
  return {[](const Vector& x, Vector& y) { y = x; }, cost};
}

SolveReport pcg(const LinearOperator& A, const LinearOperator& M, const Vector& b, Vector& x,
                double tol, int max_iter) {
  SolveReport rep;
  x = Vector::Zero(b.size());
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    rep.converged = true;
    return rep;
  }
  Vector r = b, z(b.size()), q(b.size());
  M.apply(r, z);
  ++rep.precond_applies;
  Vector p = z;
  double rz = r.dot(z);
  rep.residual_history.push_back(1.0);
  while (true) {
    if (rep.iterations >= max_iter) {
      rep.cost_units = rep.matvecs * A.cost_per_apply + rep.precond_applies * M.cost_per_apply;
      throw SolverError("PCG did not converge in " + std::to_string(max_iter) + " iterations", rep);
    }
    A.apply(p, q);
    ++rep.matvecs;
    double pq = p.dot(q);
    if (!(pq > 0.0)) {
      rep.cost_units = rep.matvecs * A.cost_per_apply + rep.precond_applies * M.cost_per_apply;
      throw SolverError("PCG breakdown: operator not positive definite", rep);
    }
    double alpha = rz / pq;
    rep.alpha.push_back(alpha);
    x += alpha * p;
    r -= alpha * q;
    ++rep.iterations;
    double rel = r.norm() / bnorm;
    rep.residual_history.push_back(rel);
    rep.relative_residual = rel;
    if (rel <= tol) break;
    M.apply(r, z);
    ++rep.precond_applies;
    double rz_new = r.dot(z);
    double beta = rz_new / rz;
    rep.beta.push_back(beta);
    rz = rz_new;
    p = z + beta * p;
  }
  rep.converged = true;
  rep.cost_units = rep.matvecs * A.cost_per_apply + rep.precond_applies * M.cost_per_apply;
  return rep;
}

std::optional<std::array<double, 2>> ritz_extremes(const SolveReport& rep) {
  const int k = int(rep.alpha.size());
  if (k == 0) return std::nullopt;
  Eigen::VectorXd d(k), e(std::max(k - 1, 0));
  for (int j = 0; j < k; ++j) {
    d[j] = 1.0 / rep.alpha[j];
    if (j > 0) {
      d[j] += rep.beta[j - 1] / rep.alpha[j - 1];
      e[j - 1] = std::sqrt(rep.beta[j - 1]) / rep.alpha[j - 1];
    }
  }
  if (k == 1) return std::array<double, 2>{d[0], d[0]};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  return std::array<double, 2>{es.eigenvalues()[0], es.eigenvalues()[k - 1]};
}

std::optional<double> ritz_condition(const SolveReport& rep) {
  auto ex = ritz_extremes(rep);
  if (!ex) return std::nullopt;
  return (*ex)[1] / (*ex)[0];
}

CholeskyFactor::CholeskyFactor(const SparseMatrix& A) {
  Eigen::SparseMatrix<double> Ac = A;
  llt_.compute(Ac);
  if (llt_.info() != Eigen::Success)
    throw std::runtime_error("Cholesky factorization failed: matrix not SPD");
}

void CholeskyFactor::solve(const Vector& r, Vector& z) const { z = llt_.solve(r); }

LinearOperator CholeskyFactor::as_operator(double cost) const {
  return {[this](const Vector& r, Vector& z) { solve(r, z); }, cost};
}

std::vector<double> to_nodal(const Mesh& mesh, const Vector& u) {
  std::vector<double> v(mesh.num_nodes(), 0.0);
  for (std::size_t k = 0; k < mesh.num_free(); ++k) v[mesh.free_node(k)] = u[Eigen::Index(k)];
  return v;
}

double nodal_l2_error(const Mesh& mesh, const Vector& u, const SpatialField& exact) {
  auto v = to_nodal(mesh, u);
  double s = 0.0;
  for (std::size_t i = 0; i < mesh.num_nodes(); ++i) {
    double d = exact(mesh.node(i)) - v[i];
    s += d * d;
  }
  return std::sqrt(s / (double(mesh.n()) * mesh.n()));
}

double energy_error(const Mesh& mesh, const Vector& u,
                    const std::function<std::array<double, 2>(const Point&)>& grad_exact) {
  // Degree-4 six-point rule in barycentric coordinates.
  static constexpr double a1 = 0.445948490915965, b1 = 1.0 - 2.0 * a1, w1 = 0.223381589678011;
  static constexpr double a2 = 0.091576213509771, b2 = 1.0 - 2.0 * a2, w2 = 0.109951743655322;
  static constexpr double bary[6][3] = {{a1, a1, b1}, {a1, b1, a1}, {b1, a1, a1},
                                        {a2, a2, b2}, {a2, b2, a2}, {b2, a2, a2}};
  static constexpr double wts[6] = {w1, w1, w1, w2, w2, w2};
  auto v = to_nodal(mesh, u);
  double s = 0.0;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    const Point &A = mesh.node(tri[0]), &B = mesh.node(tri[1]), &C = mesh.node(tri[2]);
    auto g = p1_gradients(A, B, C);
    double gx = 0.0, gy = 0.0;
    for (int k = 0; k < 3; ++k) {
      gx += v[tri[k]] * g[k][0];
      gy += v[tri[k]] * g[k][1];
    }
    for (int q = 0; q < 6; ++q) {
      Point x{bary[q][0] * A.x + bary[q][1] * B.x + bary[q][2] * C.x,
              bary[q][0] * A.y + bary[q][1] * B.y + bary[q][2] * C.y};
      auto ge = grad_exact(x);
      double dx = ge[0] - gx, dy = ge[1] - gy;
      s += mesh.triangle_area() * wts[q] * (dx * dx + dy * dy);
    }
  }
  return std::sqrt(s);
}

void write_matrix_market(const std::string& path, const SparseMatrix& A) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << A.rows() << ' ' << A.cols() << ' ' << A.nonZeros() << '\n';
  os << std::setprecision(17);
  for (int i = 0; i < A.outerSize(); ++i)
    for (SparseMatrix::InnerIterator it(A, i); it; ++it)
      os << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value() << '\n';
}

}  // namespace sgsc
