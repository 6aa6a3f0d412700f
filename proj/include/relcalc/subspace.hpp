#pragma once

#include <optional>
#include <span>
#include <vector>

#include "relcalc/tolerance.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

/// A linear subspace of C^n held as an orthonormal basis (n x k, k may be 0).
///
/// Bases are canonical: the SVD basis is rotated onto the eigenvectors of
/// B^H diag(1..n) B and each column is given a real positive leading entry,
/// so equal subspaces produce the same basis up to rounding.
class Subspace {
 public:
  explicit Subspace(Index ambient = 0);

  static Subspace zero(Index ambient) { return Subspace(ambient); }
  static Subspace full(Index ambient);
  /// Column span of `vectors` (n x p) with the tolerance's rank rule.
  static Subspace span(const Matrix& vectors, const Tolerance& tol = {});
  /// Wraps a basis already known to be orthonormal; only canonicalizes it.
  static Subspace from_orthonormal(const Matrix& basis);

  [[nodiscard]] Index ambient() const { return ambient_; }
  [[nodiscard]] Index dim() const { return basis_.cols(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_; }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] Matrix projector() const { return basis_ * basis_.adjoint(); }

 private:
  Subspace(Index ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_;
  Matrix basis_;
};

enum class LatticeOp { sum, intersect, complement };
enum class Comparison { equals, contains };

Subspace orthonormalize(std::span<const Vector> vectors, const Tolerance& tol = {});

Subspace sum(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
Subspace intersect(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
Subspace complement(const Subspace& s, const Tolerance& tol = {});
Subspace lattice_op(LatticeOp kind, const Subspace& a, const std::optional<Subspace>& b,
                    const Tolerance& tol = {});

/// Orthogonal projection P_S v.
Vector project(const Subspace& s, const Vector& v);
Matrix project(const Subspace& s, const Matrix& columns);

/// b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
bool contains(const Subspace& a, const Vector& v, const Tolerance& tol = {});
bool equals(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
bool compare(Comparison kind, const Subspace& a, const Subspace& b, const Tolerance& tol = {});

/// Spectral-norm gap ||P_a - P_b||; zero iff the subspaces coincide.
double gap(const Subspace& a, const Subspace& b);

// Matrix-level helpers shared by the higher modules.
Subspace range(const Matrix& a, const Tolerance& tol = {});
Subspace null_space(const Matrix& a, const Tolerance& tol = {});
/// A(S) for a matrix A.
Subspace image(const Matrix& a, const Subspace& s, const Tolerance& tol = {});
/// {x : A x in S}.
Subspace preimage(const Matrix& a, const Subspace& s, const Tolerance& tol = {});
Matrix pseudo_inverse(const Matrix& a, const Tolerance& tol = {});
Index numerical_rank(const Matrix& a, const Tolerance& tol = {});

/// An affine set p + L, or the empty set.
class Coset {
 public:
  /// The representative point is replaced by its component orthogonal to
  /// the direction, i.e. the minimum-norm member.
  Coset(const Vector& point, Subspace direction);

  static Coset empty(Index ambient);
  static Coset of_subspace(const Subspace& s) { return Coset(Vector::Zero(s.ambient()), s); }

  [[nodiscard]] bool is_empty() const { return empty_; }
  [[nodiscard]] Index ambient() const { return direction_.ambient(); }
  [[nodiscard]] const Vector& point() const;
  [[nodiscard]] const Subspace& direction() const { return direction_; }
  [[nodiscard]] bool contains(const Vector& v, const Tolerance& tol = {}) const;
  [[nodiscard]] Coset translated(const Vector& v) const;

 private:
  Coset(Index ambient, bool) : point_(Vector::Zero(ambient)), direction_(ambient), empty_(true) {}

  Vector point_;
  Subspace direction_;
  bool empty_ = false;
};

bool equals(const Coset& a, const Coset& b, const Tolerance& tol = {});

}  // namespace relcalc
