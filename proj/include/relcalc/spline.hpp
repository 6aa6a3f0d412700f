#pragma once

#include "relcalc/weighted.hpp"

namespace relcalc {

/// min ||T x|| subject to V x = b, with V surjective.
struct SplineProblem {
  Matrix t;  // C^n -> C^e
  Matrix v;  // C^n -> C^k
  Vector b;  // in C^k

  /// Checks shapes and that V has full row rank.
  SplineProblem(Matrix t, Matrix v, Vector b, const Tolerance& tol = {});
};

struct SplineSolution {
  bool exists = false;
  Coset spline_set;
  double min_value = 0.0;
};

/// sp(T, V, b) = (I - P_{T*T, ker V}) x~ for the minimum-norm x~ with V x~ = b.
/// The set is recomputed from a second feasible point and compared.
SplineSolution spline_solve(const SplineProblem& p, const Tolerance& tol = {});

/// min (||T x||^2 + rho ||V x - b||^2)^{1/2}, rho > 0.
struct SmoothingProblem {
  SplineProblem base;
  double rho;

  SmoothingProblem(SplineProblem base, double rho);
};

struct SmoothingSolution {
  Coset argmin_set;  // x* + (ker T ∩ ker V)
  double min_value = 0.0;
};

/// Projects (0, b) onto L(T, V) = {(T x, V x)} in the rho-weighted inner
/// product (via the sqrt(rho) rescaling) and pulls the projection back.
SmoothingSolution smooth_solve(const SmoothingProblem& p, const Tolerance& tol = {});

/// L(T, V) = V T^{-1} as a relation in C^e x C^k.
LinearRelation range_relation(const Matrix& t, const Matrix& v, const Tolerance& tol = {});

/// The four blocks of the orthogonal projector onto L(T, V):
/// ( T G^+ T*   T G^+ V* ; V G^+ T*   V G^+ V* ),  G = T*T + V*V.
struct ProjectionBlocks {
  Matrix tt;
  Matrix tv;
  Matrix vt;
  Matrix vv;

  [[nodiscard]] Matrix assembled() const;
};

ProjectionBlocks projection_m(const Matrix& t, const Matrix& v, const Tolerance& tol = {});

}  // namespace relcalc
