#pragma once

#include <optional>
#include <stdexcept>

#include "relcalc/weighted.hpp"

namespace relcalc {

/// The inclusion has no weighted least-squares solution for this b.
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weighted least squares for the inclusion b ∈ A x.
///
/// The weight must be selfadjoint. With a psd weight (the usual setting)
/// a solution always exists in finite dimensions. An indefinite weight
/// asks for W-stationary points instead, and those may not exist.
struct LssProblem {
  LinearRelation a;
  Weight w;
  Vector b;

  LssProblem(LinearRelation a, Weight w, Vector b);
};

struct LssSolution {
  bool exists = false;
  /// min over y ∈ ran A of ||W^{1/2}(y - b)||; set when a solution exists
  /// and the weight is psd.
  std::optional<double> min_value;
  /// <W(y - b), y - b> for any minimizing output y (when a solution exists).
  std::optional<double> residual_form;
  /// Minimum-norm member of the solution set.
  std::optional<Vector> witness;
  Coset solution_set;
  /// P_{W, ran A} b.
  Coset minimizing_outputs;
};

LssSolution solve(const LssProblem& p, const Tolerance& tol = {});

/// Whether 0 ∈ A* W (A x0 - b). Also evaluates A* W (A x0 - b) = A* W (mul A)
/// and throws ConsistencyError when the two tests disagree.
bool check_normal(const LssProblem& p, const Vector& x0, const Tolerance& tol = {});

/// (I - P_{W2, A^{-1} ker W1}) A^{-1} P_{W1, ran A} b: the W1-LSS of minimal
/// W2 seminorm. Throws NoSolution when no W1-LSS exists.
Coset w1w2_solve(const LinearRelation& a, const Weight& w1, const Weight& w2, const Vector& b,
                 const Tolerance& tol = {});

}  // namespace relcalc
