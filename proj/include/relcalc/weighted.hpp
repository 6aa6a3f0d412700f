#pragma once

#include <optional>

#include "relcalc/mvproj.hpp"

namespace relcalc {

enum class WeightKind { selfadjoint, psd, symmetry };

/// A selfadjoint weight W defining the form <x, y>_W = <W x, y>.
class Weight {
 public:
  /// Validates the matrix against `kind`; throws PreconditionError otherwise.
  Weight(Matrix matrix, WeightKind kind, const Tolerance& tol = {});

  [[nodiscard]] const Matrix& matrix() const { return matrix_; }
  [[nodiscard]] WeightKind kind() const { return kind_; }
  [[nodiscard]] Index dim() const { return matrix_.rows(); }
  [[nodiscard]] double min_eigenvalue() const { return min_eigenvalue_; }
  /// Positive semidefinite within tolerance (independent of the declared kind).
  [[nodiscard]] bool is_psd() const { return psd_; }
  /// Accepted as psd although an eigenvalue lies in [-tol, 0).
  [[nodiscard]] bool borderline() const { return psd_ && min_eigenvalue_ < 0.0; }
  /// Square root of the psd part (negative eigenvalues clamped to zero).
  [[nodiscard]] Matrix sqrt() const;

 private:
  Matrix matrix_;
  WeightKind kind_;
  double min_eigenvalue_ = 0.0;
  Tolerance tol_;
  bool psd_ = false;
};

/// S^{⊥_W} = (W S)^⊥, cross-checked against W^{-1}(S^⊥).
Subspace w_companion(const Subspace& s, const Weight& w, const Tolerance& tol = {});

/// P_{W,S} = P_{S, S^{⊥_W}}.
LinearRelation make_pws(const Weight& w, const Subspace& s, const Tolerance& tol = {});

/// In finite dimensions S + (WS)^⊥ is dense exactly when it is the whole
/// space, so quasicomplementability and complementability coincide here.
struct ComplementabilityReport {
  bool is_complementable = false;
  Subspace domain;  // S + (WS)^⊥
  Subspace mul;     // S ∩ (WS)^⊥
  bool criterion_ab = false;  // ran b ⊆ ran a, W = (a b; b* c) w.r.t. S
  std::optional<BlockRep> pws_blocks;  // (I  a^{-1}b ; 0  0) when complementable
};

ComplementabilityReport complementability(const Weight& w, const Subspace& s,
                                          const Tolerance& tol = {});

struct ShortedOperator {
  Matrix value;            // block Schur complement route
  Matrix relation_route;   // W (I - P_{W, S⊥})
  double discrepancy = 0;  // spectral norm of the difference
};

/// Σ_S(W): the largest psd X <= W with ran X ⊆ S.
ShortedOperator shorted(const Weight& w, const Subspace& s, const Tolerance& tol = {});

struct KreinClassification {
  Subspace isotropic;  // S ∩ S^{[⊥]}
  bool nondegenerate = false;
  /// Always true: every subspace sum is closed in finite dimensions.
  bool pseudo_regular = true;
  bool regular = false;
};

KreinClassification krein_classify(const Subspace& s, const Weight& w, const Tolerance& tol = {});

}  // namespace relcalc
