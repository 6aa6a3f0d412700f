#include "relcalc/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace relcalc {
namespace {

constexpr double kPhaseFloor = 1e-8;

// Rotate an orthonormal basis to the eigenvectors of B^H diag(1..n) B and fix
// each column's phase so its first significant entry is real positive.
Matrix canonical_basis(const Matrix& basis) {
  const Index n = basis.rows();
  const Index k = basis.cols();
  if (k == 0) return Matrix(n, 0);

  Eigen::VectorXd weights = Eigen::VectorXd::LinSpaced(n, 1.0, static_cast<double>(n));
  Matrix gram = basis.adjoint() * weights.cast<Scalar>().asDiagonal() * basis;
  gram = (gram + gram.adjoint()).eval() * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  Matrix out = basis * eig.eigenvectors();

  for (Index j = 0; j < k; ++j) {
    auto col = out.col(j);
    col.normalize();
    for (Index i = 0; i < n; ++i) {
      const double mag = std::abs(col(i));
      if (mag > kPhaseFloor) {
        col *= std::conj(col(i)) / mag;
        col(i) = Scalar(std::real(col(i)), 0.0);
        break;
      }
    }
  }
  return out;
}

Index rank_from(const Eigen::VectorXd& sv, Index rows, Index cols, const Tolerance& tol) {
  if (sv.size() == 0) return 0;
  const double cutoff = tol.rank_cutoff(sv(0), rows, cols);
  Index r = 0;
  while (r < sv.size() && sv(r) >= cutoff) ++r;
  return r;
}

}  // namespace

Subspace::Subspace(Index ambient) : ambient_(ambient), basis_(ambient, 0) {
  if (ambient < 0) throw DimensionError("negative ambient dimension");
}

Subspace Subspace::full(Index ambient) {
  return from_orthonormal(Matrix::Identity(ambient, ambient));
}

Subspace Subspace::from_orthonormal(const Matrix& basis) {
  return Subspace(basis.rows(), canonical_basis(basis));
}

Subspace Subspace::span(const Matrix& vectors, const Tolerance& tol) {
  const Index n = vectors.rows();
  if (vectors.cols() == 0 || n == 0) return Subspace(n);
  Eigen::JacobiSVD<Matrix> svd(vectors, Eigen::ComputeThinU);
  const Index r = rank_from(svd.singularValues(), vectors.rows(), vectors.cols(), tol);
  return from_orthonormal(svd.matrixU().leftCols(r));
}

Subspace orthonormalize(std::span<const Vector> vectors, const Tolerance& tol) {
  if (vectors.empty()) {
    throw DimensionError("orthonormalize: ambient dimension of an empty list is unknown");
  }
  const Index n = vectors.front().size();
  Matrix stacked(n, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    require_dims(vectors[j].size(), n, "orthonormalize: vector " + std::to_string(j));
    stacked.col(static_cast<Index>(j)) = vectors[j];
  }
  return Subspace::span(stacked, tol);
}

Subspace sum(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_dims(b.ambient(), a.ambient(), "subspace sum");
  Matrix both(a.ambient(), a.dim() + b.dim());
  both << a.basis(), b.basis();
  return Subspace::span(both, tol);
}

Subspace complement(const Subspace& s, const Tolerance&) {
  const Index n = s.ambient();
  if (s.dim() == 0) return Subspace::full(n);
  if (s.dim() == n) return Subspace::zero(n);
  // The basis is orthonormal, so all of its singular values are one and the
  // trailing left singular vectors span the complement exactly.
  Eigen::JacobiSVD<Matrix> svd(s.basis(), Eigen::ComputeFullU);
  return Subspace::from_orthonormal(svd.matrixU().rightCols(n - s.dim()));
}

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_dims(b.ambient(), a.ambient(), "subspace intersection");
  return complement(sum(complement(a, tol), complement(b, tol), tol), tol);
}

Subspace lattice_op(LatticeOp kind, const Subspace& a, const std::optional<Subspace>& b,
                    const Tolerance& tol) {
  if (kind == LatticeOp::complement) {
    if (b) throw PreconditionError("complement takes a single subspace");
    return complement(a, tol);
  }
  if (!b) throw PreconditionError("sum and intersect take two subspaces");
  return kind == LatticeOp::sum ? sum(a, *b, tol) : intersect(a, *b, tol);
}

Vector project(const Subspace& s, const Vector& v) {
  require_dims(v.size(), s.ambient(), "project");
  return s.basis() * (s.basis().adjoint() * v);
}

Matrix project(const Subspace& s, const Matrix& columns) {
  require_dims(columns.rows(), s.ambient(), "project");
  return s.basis() * (s.basis().adjoint() * columns);
}

bool contains(const Subspace& a, const Vector& v, const Tolerance& tol) {
  require_dims(v.size(), a.ambient(), "contains");
  const double scale = std::max(1.0, v.norm());
  return (v - project(a, v)).norm() <= tol.compare_cutoff(a.ambient()) * scale;
}

bool contains(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_dims(b.ambient(), a.ambient(), "contains");
  if (b.dim() > a.dim()) return false;
  const Matrix residual = b.basis() - project(a, b.basis());
  const double cutoff = tol.compare_cutoff(a.ambient());
  for (Index j = 0; j < residual.cols(); ++j) {
    if (residual.col(j).norm() > cutoff) return false;
  }
  return true;
}

bool equals(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  return a.dim() == b.dim() && contains(a, b, tol) && contains(b, a, tol);
}

bool compare(Comparison kind, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  return kind == Comparison::equals ? equals(a, b, tol) : contains(a, b, tol);
}

double gap(const Subspace& a, const Subspace& b) {
  require_dims(b.ambient(), a.ambient(), "gap");
  if (a.ambient() == 0) return 0.0;
  const Matrix diff = a.projector() - b.projector();
  Eigen::JacobiSVD<Matrix> svd(diff);
  return svd.singularValues()(0);
}

Index numerical_rank(const Matrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return rank_from(svd.singularValues(), a.rows(), a.cols(), tol);
}

Subspace range(const Matrix& a, const Tolerance& tol) { return Subspace::span(a, tol); }

Subspace null_space(const Matrix& a, const Tolerance& tol) {
  const Index c = a.cols();
  if (c == 0) return Subspace(0);
  if (a.rows() == 0) return Subspace::full(c);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const Index r = rank_from(svd.singularValues(), a.rows(), a.cols(), tol);
  return Subspace::from_orthonormal(svd.matrixV().rightCols(c - r));
}

Subspace image(const Matrix& a, const Subspace& s, const Tolerance& tol) {
  require_dims(s.ambient(), a.cols(), "image");
  if (s.dim() == 0) return Subspace(a.rows());
  return Subspace::span(a * s.basis(), tol);
}

Subspace preimage(const Matrix& a, const Subspace& s, const Tolerance& tol) {
  require_dims(s.ambient(), a.rows(), "preimage");
  const Matrix off = a - project(s, a);
  return null_space(off, tol);
}

Matrix pseudo_inverse(const Matrix& a, const Tolerance& tol) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const Index r = rank_from(sv, a.rows(), a.cols(), tol);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Index i = 0; i < r; ++i) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.cast<Scalar>().asDiagonal() * svd.matrixU().adjoint();
}

// --- Coset ---------------------------------------------------------------

Coset::Coset(const Vector& point, Subspace direction)
    : point_(point), direction_(std::move(direction)) {
  require_dims(point.size(), direction_.ambient(), "coset point");
  point_ -= project(direction_, point_);
}

Coset Coset::empty(Index ambient) { return Coset(ambient, true); }

const Vector& Coset::point() const {
  if (empty_) throw PreconditionError("empty coset has no point");
  return point_;
}

bool Coset::contains(const Vector& v, const Tolerance& tol) const {
  require_dims(v.size(), ambient(), "coset membership");
  if (empty_) return false;
  const Vector diff = v - point_;
  const double scale = std::max({1.0, v.norm(), point_.norm()});
  return (diff - project(direction_, diff)).norm() <= tol.compare_cutoff(ambient()) * scale;
}

Coset Coset::translated(const Vector& v) const {
  if (empty_) return *this;
  return Coset(point_ + v, direction_);
}

bool equals(const Coset& a, const Coset& b, const Tolerance& tol) {
  require_dims(b.ambient(), a.ambient(), "coset comparison");
  if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
  return equals(a.direction(), b.direction(), tol) && a.contains(b.point(), tol);
}

}  // namespace relcalc
