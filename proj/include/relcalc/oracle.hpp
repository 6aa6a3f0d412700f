#pragma once

// Brute-force reference computations. Nothing here touches the relation
// calculus: every routine is an ordinary least-squares, KKT or
// normal-equations solve on explicit matrices, so it can be used to check
// the relation-based routes.

#include "relcalc/subspace.hpp"

namespace relcalc::oracle {

/// Hermitian square root with negative eigenvalues clamped.
Matrix psd_root(const Matrix& w);

/// min_t ||W^{1/2}(R t - b)|| for R spanning ran A.
double weighted_residual(const Matrix& w, const Matrix& range_basis, const Vector& b,
                         const Tolerance& tol = {});

/// W-LSS set of b ∈ A x for A given by a graph basis (F; G): every x = F c
/// with G c minimizing the W-residual.
Coset lss_solution_set(const Matrix& graph_inputs, const Matrix& graph_outputs, const Matrix& w,
                       const Vector& b, const Tolerance& tol = {});

/// Minimizers of ||x||_{W2} over the W1-LSS set, by two nested least-squares solves.
Coset w1w2_two_stage(const Matrix& graph_inputs, const Matrix& graph_outputs, const Matrix& w1,
                     const Matrix& w2, const Vector& b, const Tolerance& tol = {});

/// argmin ||T x|| s.t. V x = b from the (pseudo-inverted) KKT system.
Coset kkt_spline(const Matrix& t, const Matrix& v, const Vector& b, const Tolerance& tol = {});

struct Smoothing {
  Vector x;
  double value = 0.0;
};

/// (T*T + rho V*V) x = rho V* b.
Smoothing normal_equations(const Matrix& t, const Matrix& v, const Vector& b, double rho,
                           const Tolerance& tol = {});

/// Largest c with W - c X psd, by bisection on the eigenvalue sign.
double max_dominated_scale(const Matrix& w, const Matrix& x, double tol = 1e-12);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& m);

}  // namespace relcalc::oracle
