#include "relcalc/weighted.hpp"

#include <cmath>

namespace relcalc {
namespace {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

Weight::Weight(Matrix matrix, WeightKind kind, const Tolerance& tol)
    : matrix_(std::move(matrix)), kind_(kind), tol_(tol) {
  const Index n = matrix_.rows();
  require_dims(matrix_.cols(), n, "weight (square matrix)");
  const double scale = std::max(1.0, spectral_norm(matrix_));
  if ((matrix_ - matrix_.adjoint()).norm() > tol.rank_cutoff(scale, n, n)) {
    throw PreconditionError("weight is not selfadjoint");
  }
  matrix_ = (matrix_ + matrix_.adjoint()).eval() * 0.5;
  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(matrix_, Eigen::EigenvaluesOnly);
    min_eigenvalue_ = eig.eigenvalues()(0);
  }
  psd_ = min_eigenvalue_ >= -tol.rank_cutoff(scale, n, n);
  if (kind_ == WeightKind::psd && !psd_) {
    throw PreconditionError("weight is not positive semidefinite (min eigenvalue " +
                            std::to_string(min_eigenvalue_) + ")");
  }
  if (kind_ == WeightKind::symmetry &&
      (matrix_ * matrix_ - Matrix::Identity(n, n)).norm() > tol.rank_cutoff(scale, n, n)) {
    throw PreconditionError("weight is not a symmetry (W^2 != I)");
  }
}

Matrix Weight::sqrt() const {
  // Eigenvalues under the rank cutoff are zero; rooting their rounding noise
  // would put errors of order sqrt(eps) into every seminorm.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(matrix_);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double top = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = tol_.rank_cutoff(top, dim(), dim());
  Eigen::VectorXd roots = lambda.unaryExpr([cutoff](double l) { return l < cutoff ? 0.0 : std::sqrt(l); });
  return eig.eigenvectors() * roots.cast<Scalar>().asDiagonal() * eig.eigenvectors().adjoint();
}

Subspace w_companion(const Subspace& s, const Weight& w, const Tolerance& tol) {
  require_dims(s.ambient(), w.dim(), "w_companion");
  Subspace companion = complement(image(w.matrix(), s, tol), tol);
  if (!equals(companion, preimage(w.matrix(), complement(s, tol), tol), tol)) {
    throw ConsistencyError("w_companion: (WS)^⊥ and W^{-1}(S^⊥) disagree");
  }
  return companion;
}

LinearRelation make_pws(const Weight& w, const Subspace& s, const Tolerance& tol) {
  return make_pmn(s, w_companion(s, w, tol), tol);
}

ComplementabilityReport complementability(const Weight& w, const Subspace& s,
                                          const Tolerance& tol) {
  require_dims(s.ambient(), w.dim(), "complementability");
  const Subspace companion = w_companion(s, w, tol);
  ComplementabilityReport report;
  report.domain = sum(s, companion, tol);
  report.mul = intersect(s, companion, tol);
  report.is_complementable = report.domain.is_full();

  const Subspace sc = complement(s, tol);
  const LinearRelation ps_w = graph_of_matrix(s.projector() * w.matrix(), tol);
  const LinearRelation a = restrict(ps_w, s, tol).restricted;
  const LinearRelation b = restrict(ps_w, sc, tol).restricted;
  report.criterion_ab = contains(ran(a, tol), ran(b, tol), tol);
  if (report.criterion_ab != report.is_complementable) {
    throw ConsistencyError("complementability: dom P_{W,S} = H disagrees with ran b ⊆ ran a");
  }

  if (report.is_complementable) {
    BlockRep blocks{s, identity_on(s), compose(invert(a), b, tol), zero_on(s), zero_on(sc)};
    if (!equals(generate(blocks, tol), make_pmn(s, companion, tol), tol)) {
      throw ConsistencyError("complementability: (I a^{-1}b; 0 0) does not regenerate P_{W,S}");
    }
    report.pws_blocks = std::move(blocks);
  }
  return report;
}

ShortedOperator shorted(const Weight& w, const Subspace& s, const Tolerance& tol) {
  require_dims(s.ambient(), w.dim(), "shorted");
  if (!w.is_psd()) throw PreconditionError("shorted: weight is not positive semidefinite");
  const Index n = w.dim();
  const Index k = s.dim();
  const Subspace sc = complement(s, tol);

  Matrix unitary(n, n);
  unitary << s.basis(), sc.basis();
  const Matrix blocks = unitary.adjoint() * w.matrix() * unitary;
  const Matrix a = blocks.topLeftCorner(k, k);
  const Matrix b = blocks.topRightCorner(k, n - k);
  const Matrix c = blocks.bottomRightCorner(n - k, n - k);
  const Matrix schur = a - b * pseudo_inverse(c, tol) * b.adjoint();

  ShortedOperator out;
  out.value = s.basis() * schur * s.basis().adjoint();
  out.value = (out.value + out.value.adjoint()).eval() * 0.5;

  const LinearRelation via = compose(graph_of_matrix(w.matrix(), tol),
                                     identity_minus(make_pws(w, sc, tol), tol), tol);
  out.relation_route = to_matrix(via, tol);
  out.discrepancy = spectral_norm(out.value - out.relation_route);
  return out;
}

KreinClassification krein_classify(const Subspace& s, const Weight& w, const Tolerance& tol) {
  if (w.kind() != WeightKind::symmetry) {
    throw PreconditionError("krein_classify: weight must be a symmetry");
  }
  const Subspace companion = w_companion(s, w, tol);
  KreinClassification out;
  out.isotropic = intersect(s, companion, tol);
  out.nondegenerate = out.isotropic.is_zero();
  out.regular = out.nondegenerate && sum(s, companion, tol).is_full();

  const LinearRelation pws = make_pmn(s, companion, tol);
  const bool single_valued = is_operator(pws, tol);
  const bool everywhere = dom(pws, tol).is_full();
  if (single_valued != out.nondegenerate || (single_valued && everywhere) != out.regular) {
    throw ConsistencyError("krein_classify: flags disagree with the shape of P_{W,S}");
  }
  return out;
}

}  // namespace relcalc
