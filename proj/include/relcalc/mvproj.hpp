#pragma once

#include <optional>

#include "relcalc/relation.hpp"

namespace relcalc {

/// P_{M,N} = I_M +^ (N x {0}): the multivalued projection onto M along N.
LinearRelation make_pmn(const Subspace& m, const Subspace& n, const Tolerance& tol = {});

/// The (range, kernel, multivalued part) triple of a super-idempotent
/// E = P_{M,N} +^ ({0} x S).
struct SuperTriple {
  Subspace range_part;
  Subspace kernel_part;
  Subspace mul_part;
};

/// P_{M,N} +^ ({0} x S).
LinearRelation make_super(const SuperTriple& triple, const Tolerance& tol = {});

struct Classification {
  bool is_sub = false;
  bool is_super = false;
  bool is_idempotent = false;
  bool is_mvproj = false;
  /// (ker(I - E), ker E, mul E) when E is super-idempotent.
  std::optional<SuperTriple> canonical;
};

/// Compares E^2 with E. For super-idempotents the canonical triple is
/// rebuilt into a relation and checked against E.
Classification classify(const LinearRelation& e, const Tolerance& tol = {});

struct Decomposition {
  LinearRelation operator_part;  // P_{M ⊖ (M∩N) // N}
  Subspace mul_part;             // M ∩ N
};

/// Splits a multivalued projection into an operator and {0} x (M ∩ N).
Decomposition decompose(const LinearRelation& p, const Tolerance& tol = {});

/// 2x2 block relation with respect to the splitting H = S ⊕ S⊥. Blocks live
/// in ambient coordinates: a ⊆ S x S, b ⊆ S⊥ x S, c ⊆ S x S⊥, d ⊆ S⊥ x S⊥.
struct BlockRep {
  Subspace splitting;
  LinearRelation a;
  LinearRelation b;
  LinearRelation c;
  LinearRelation d;
};

/// The relation generated by the four blocks:
/// {(x1 + x2, w1 + z1 + w2 + z2) : (x1,w1) ∈ a, (x2,z1) ∈ b, (x1,w2) ∈ c, (x2,z2) ∈ d}.
LinearRelation generate(const BlockRep& blocks, const Tolerance& tol = {});

/// P_S(dom T) ⊆ dom T and P_S(mul T) ⊆ mul T.
bool representable(const LinearRelation& t, const Subspace& s, const Tolerance& tol = {});

/// a = P_S T|_S, b = P_S T|_{S⊥}, c = P_{S⊥} T|_S, d = P_{S⊥} T|_{S⊥}.
BlockRep canonical_blocks(const LinearRelation& t, const Subspace& s, const Tolerance& tol = {});

/// The (1,2) coefficient x = {(P_{M⊥} n, -P_M n) : n ∈ N} of P_{M,N}.
/// Cross-checked against `coefficient_x_ando` and against P_{M,N} ∩ (M⊥ x H).
LinearRelation coefficient_x(const Subspace& m, const Subspace& n, const Tolerance& tol = {});

/// -P_M ((I - P_M)|_N)^{-1}, built by relation composition.
LinearRelation coefficient_x_ando(const Subspace& m, const Subspace& n, const Tolerance& tol = {});

/// P_{M,N} = (I  x ; 0  0) with respect to M.
BlockRep assemble_representation(const Subspace& m, const Subspace& n, const Tolerance& tol = {});

struct SuperBuild {
  LinearRelation relation;
  /// (M ⊕ (S2 ∩ x^{-1}(S1)), -x + S1, (S1 + mul x) ⊕ S2). The range part
  /// reduces to M ⊕ (S2 ∩ dom x) exactly when E is idempotent.
  SuperTriple canonical;
  bool is_idempotent = false;
  /// x(S2) ⊆ S1 + mul x.
  bool criterion = false;
  /// E^2 = E by graph comparison.
  bool squares_equal = false;
};

/// E = (I_M   x +^ ({0} x S1) ; 0 +^ ({0} x S2)   0) with respect to M.
/// Throws ConsistencyError if the containment criterion and graph squaring
/// disagree.
SuperBuild build_super(const Subspace& m, const Subspace& s1, const Subspace& s2,
                       const LinearRelation& x, const Tolerance& tol = {});

}  // namespace relcalc
