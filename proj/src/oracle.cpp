#include "relcalc/oracle.hpp"

#include <cmath>

namespace relcalc::oracle {

Matrix psd_root(const Matrix& w) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(w);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double floor = lambda.size() ? 1e-12 * lambda.cwiseAbs().maxCoeff() * static_cast<double>(w.rows()) : 0.0;
  Eigen::VectorXd roots = lambda.unaryExpr([floor](double l) { return l <= floor ? 0.0 : std::sqrt(l); });
  return eig.eigenvectors() * roots.cast<Scalar>().asDiagonal() * eig.eigenvectors().adjoint();
}

double min_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

double weighted_residual(const Matrix& w, const Matrix& range_basis, const Vector& b,
                         const Tolerance& tol) {
  const Matrix root = psd_root(w);
  const Vector rb = root * b;
  if (range_basis.cols() == 0) return rb.norm();
  const Matrix design = root * range_basis;
  const Vector t = pseudo_inverse(design, tol) * rb;
  return (design * t - rb).norm();
}

Coset lss_solution_set(const Matrix& graph_inputs, const Matrix& graph_outputs, const Matrix& w,
                       const Vector& b, const Tolerance& tol) {
  const Index n = graph_inputs.rows();
  if (graph_inputs.cols() == 0) return Coset::of_subspace(Subspace(n));
  const Matrix root = psd_root(w);
  const Matrix design = root * graph_outputs;
  const Vector c0 = pseudo_inverse(design, tol) * (root * b);
  const Subspace free = null_space(design, tol);
  Matrix directions = graph_inputs * free.basis();
  return Coset(graph_inputs * c0, range(directions, tol));
}

Coset w1w2_two_stage(const Matrix& graph_inputs, const Matrix& graph_outputs, const Matrix& w1,
                     const Matrix& w2, const Vector& b, const Tolerance& tol) {
  const Coset stage1 = lss_solution_set(graph_inputs, graph_outputs, w1, b, tol);
  const Matrix root = psd_root(w2);
  const Matrix& d = stage1.direction().basis();
  const Vector& x0 = stage1.point();
  if (d.cols() == 0) return stage1;
  const Matrix design = root * d;
  const Vector t0 = -(pseudo_inverse(design, tol) * (root * x0));
  const Subspace free = null_space(design, tol);
  return Coset(x0 + d * t0, range(d * free.basis(), tol));
}

Coset kkt_spline(const Matrix& t, const Matrix& v, const Vector& b, const Tolerance& tol) {
  const Index n = t.cols();
  const Index k = v.rows();
  Matrix kkt = Matrix::Zero(n + k, n + k);
  kkt.topLeftCorner(n, n) = t.adjoint() * t;
  kkt.topRightCorner(n, k) = v.adjoint();
  kkt.bottomLeftCorner(k, n) = v;
  Vector rhs = Vector::Zero(n + k);
  rhs.tail(k) = b;
  const Vector sol = pseudo_inverse(kkt, tol) * rhs;
  Matrix stacked(t.rows() + k, n);
  stacked << t, v;
  return Coset(sol.head(n), null_space(stacked, tol));
}

Smoothing normal_equations(const Matrix& t, const Matrix& v, const Vector& b, double rho,
                           const Tolerance& tol) {
  const Matrix lhs = t.adjoint() * t + rho * v.adjoint() * v;
  Smoothing out;
  out.x = pseudo_inverse(lhs, tol) * (rho * (v.adjoint() * b));
  out.value = std::sqrt((t * out.x).squaredNorm() + rho * (v * out.x - b).squaredNorm());
  return out;
}

double max_dominated_scale(const Matrix& w, const Matrix& x, double tol) {
  double lo = 0.0;
  double hi = 1.0;
  while (min_eigenvalue(w - hi * x) >= -tol && hi < 1e12) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (min_eigenvalue(w - mid * x) >= -tol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace relcalc::oracle
