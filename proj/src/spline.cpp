#include "relcalc/spline.hpp"

#include <cmath>

namespace relcalc {

SplineProblem::SplineProblem(Matrix t_in, Matrix v_in, Vector b_in, const Tolerance& tol)
    : t(std::move(t_in)), v(std::move(v_in)), b(std::move(b_in)) {
  require_dims(v.cols(), t.cols(), "SplineProblem (V columns)");
  require_dims(b.size(), v.rows(), "SplineProblem (b)");
  if (numerical_rank(v, tol) != v.rows()) {
    throw PreconditionError("SplineProblem: V is not surjective");
  }
}

SplineSolution spline_solve(const SplineProblem& p, const Tolerance& tol) {
  const Index n = p.t.cols();
  const Weight gram(p.t.adjoint() * p.t, WeightKind::psd, tol);
  const Subspace ker_v = null_space(p.v, tol);
  const LinearRelation residual = identity_minus(make_pws(gram, ker_v, tol), tol);

  const Vector feasible = pseudo_inverse(p.v, tol) * p.b;
  SplineSolution out{false, apply(residual, feasible, tol), 0.0};
  out.exists = !out.spline_set.is_empty();
  if (!out.exists) {
    // T*T is psd, hence ker V-complementable; reaching this is a numerical defect.
    throw ConsistencyError("spline_solve: feasible point outside dom P_{T*T, ker V}");
  }

  const Vector other = feasible + ker_v.basis().rowwise().sum();
  if (!equals(apply(residual, other, tol), out.spline_set, tol)) {
    throw ConsistencyError("spline_solve: spline set depends on the feasible point");
  }

  const Vector s0 = out.spline_set.point();
  const Vector s1 = s0 + out.spline_set.direction().basis().rowwise().sum();
  out.min_value = (p.t * s0).norm();
  const double scale = std::max(1.0, out.min_value);
  if (std::abs((p.t * s1).norm() - out.min_value) > tol.compare_cutoff(n) * scale) {
    throw ConsistencyError("spline_solve: ||T s|| is not constant on the spline set");
  }
  if ((p.v * s0 - p.b).norm() > tol.compare_cutoff(n) * std::max(1.0, p.b.norm())) {
    throw ConsistencyError("spline_solve: spline violates V s = b");
  }
  return out;
}

SmoothingProblem::SmoothingProblem(SplineProblem base_in, double rho_in)
    : base(std::move(base_in)), rho(rho_in) {
  if (!(rho > 0.0)) throw PreconditionError("SmoothingProblem: rho must be positive");
}

SmoothingSolution smooth_solve(const SmoothingProblem& p, const Tolerance& tol) {
  const Matrix& t = p.base.t;
  const Matrix& v = p.base.v;
  const double root = std::sqrt(p.rho);
  const Index e = t.rows();
  const Index k = v.rows();

  Matrix stacked(e + k, t.cols());
  stacked << t, root * v;
  Vector target = Vector::Zero(e + k);
  target.tail(k) = root * p.base.b;

  const Vector projection = project(range(stacked, tol), target);
  SmoothingSolution out{apply(invert(graph_of_matrix(stacked, tol)), projection, tol),
                        (target - projection).norm()};
  if (out.argmin_set.is_empty()) {
    throw ConsistencyError("smooth_solve: projection has no preimage");
  }
  return out;
}

LinearRelation range_relation(const Matrix& t, const Matrix& v, const Tolerance& tol) {
  require_dims(v.cols(), t.cols(), "range_relation");
  return compose(graph_of_matrix(v, tol), invert(graph_of_matrix(t, tol)), tol);
}

Matrix ProjectionBlocks::assembled() const {
  Matrix out(tt.rows() + vt.rows(), tt.cols() + tv.cols());
  out << tt, tv, vt, vv;
  return out;
}

ProjectionBlocks projection_m(const Matrix& t, const Matrix& v, const Tolerance& tol) {
  require_dims(v.cols(), t.cols(), "projection_m");
  const Matrix g = pseudo_inverse(t.adjoint() * t + v.adjoint() * v, tol);
  return {t * g * t.adjoint(), t * g * v.adjoint(), v * g * t.adjoint(), v * g * v.adjoint()};
}

}  // namespace relcalc
