#pragma once

#include "relcalc/subspace.hpp"

namespace relcalc {

/// A linear relation T in C^n x C^m, stored as its graph: a subspace of
/// C^(n+m) whose vectors are stacked as (x; y).
///
/// In finite dimensions every relation is closed, so `closure(T)` is T.
class LinearRelation {
 public:
  LinearRelation(Index dim_in, Index dim_out, Subspace graph);

  [[nodiscard]] Index dim_in() const { return dim_in_; }
  [[nodiscard]] Index dim_out() const { return dim_out_; }
  [[nodiscard]] const Subspace& graph() const { return graph_; }

  /// First block rows of the graph basis (the x components).
  [[nodiscard]] auto inputs() const { return graph_.basis().topRows(dim_in_); }
  /// Second block rows of the graph basis (the y components).
  [[nodiscard]] auto outputs() const { return graph_.basis().bottomRows(dim_out_); }

 private:
  Index dim_in_;
  Index dim_out_;
  Subspace graph_;
};

struct RelationParts {
  Subspace dom;
  Subspace ran;
  Subspace ker;
  Subspace mul;
};

struct Restriction {
  LinearRelation restricted;  // T|_M
  Subspace image;             // T(M)
};

// Construction.
LinearRelation graph_of_matrix(const Matrix& a, const Tolerance& tol = {});
LinearRelation from_graph_basis(Index dim_in, Index dim_out, const Matrix& vectors,
                                const Tolerance& tol = {});
/// I_M = {(u, u) : u in M}.
LinearRelation identity_on(const Subspace& m);
/// M x {0}; the output space defaults to the input space.
LinearRelation zero_on(const Subspace& m, std::optional<Index> dim_out = std::nullopt);
/// M x N.
LinearRelation product_of_subspaces(const Subspace& m, const Subspace& n);

// Parts.
Subspace dom(const LinearRelation& t, const Tolerance& tol = {});
Subspace ran(const LinearRelation& t, const Tolerance& tol = {});
Subspace ker(const LinearRelation& t, const Tolerance& tol = {});
Subspace mul(const LinearRelation& t, const Tolerance& tol = {});
RelationParts parts(const LinearRelation& t, const Tolerance& tol = {});
bool is_operator(const LinearRelation& t, const Tolerance& tol = {});
/// Matrix of an everywhere defined single-valued relation.
Matrix to_matrix(const LinearRelation& t, const Tolerance& tol = {});

// Algebra.
LinearRelation invert(const LinearRelation& t);
LinearRelation adjoint(const LinearRelation& t, const Tolerance& tol = {});
/// R T = {(x, y) : (x, z) in T, (z, y) in R for some z}.
LinearRelation compose(const LinearRelation& r, const LinearRelation& t, const Tolerance& tol = {});
/// T + S = {(x, y + z) : (x, y) in T, (x, z) in S}.
LinearRelation op_sum(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol = {});
/// Componentwise sum: the subspace sum of the two graphs.
LinearRelation cw_sum(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol = {});
/// Graph intersection.
LinearRelation intersect(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol = {});
/// lambda T = {(x, lambda y) : (x, y) in T}.
LinearRelation scale(const LinearRelation& t, Scalar lambda, const Tolerance& tol = {});
/// I - T on C^n.
LinearRelation identity_minus(const LinearRelation& t, const Tolerance& tol = {});
inline const LinearRelation& closure(const LinearRelation& t) { return t; }

Restriction restrict(const LinearRelation& t, const Subspace& m, const Tolerance& tol = {});
/// T(M).
Subspace image(const LinearRelation& t, const Subspace& m, const Tolerance& tol = {});
/// T^{-1}(S) = {x : (x, y) in T for some y in S}.
Subspace preimage(const LinearRelation& t, const Subspace& s, const Tolerance& tol = {});

/// T x = y + mul T, or the empty coset when x is outside dom T.
Coset apply(const LinearRelation& t, const Vector& x, const Tolerance& tol = {});
/// T(C) = {y : (x, y) in T for some x in C}.
Coset apply(const LinearRelation& t, const Coset& c, const Tolerance& tol = {});

bool contains(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol = {});
bool equals(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol = {});

}  // namespace relcalc
