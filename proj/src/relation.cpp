#include "relcalc/relation.hpp"

#include <algorithm>
#include <cmath>

namespace relcalc {
namespace {

void require_square_pair(const LinearRelation& t, const LinearRelation& s, const char* what) {
  require_dims(s.dim_in(), t.dim_in(), std::string(what) + " (input dimension)");
  require_dims(s.dim_out(), t.dim_out(), std::string(what) + " (output dimension)");
}

LinearRelation from_stacked(Index n, Index m, const Matrix& x, const Matrix& y,
                            const Tolerance& tol) {
  Matrix stacked(n + m, x.cols());
  stacked << x, y;
  return LinearRelation(n, m, Subspace::span(stacked, tol));
}

}  // namespace

LinearRelation::LinearRelation(Index dim_in, Index dim_out, Subspace graph)
    : dim_in_(dim_in), dim_out_(dim_out), graph_(std::move(graph)) {
  if (dim_in < 0 || dim_out < 0) throw DimensionError("negative relation dimension");
  require_dims(graph_.ambient(), dim_in + dim_out, "relation graph");
}

LinearRelation graph_of_matrix(const Matrix& a, const Tolerance& tol) {
  const Index n = a.cols();
  return from_stacked(n, a.rows(), Matrix::Identity(n, n), a, tol);
}

LinearRelation from_graph_basis(Index dim_in, Index dim_out, const Matrix& vectors,
                                const Tolerance& tol) {
  require_dims(vectors.rows(), dim_in + dim_out, "graph basis");
  return LinearRelation(dim_in, dim_out, Subspace::span(vectors, tol));
}

LinearRelation identity_on(const Subspace& m) {
  const Index n = m.ambient();
  Matrix stacked(2 * n, m.dim());
  stacked << m.basis(), m.basis();
  stacked *= Scalar(1.0 / std::sqrt(2.0));
  return LinearRelation(n, n, Subspace::from_orthonormal(stacked));
}

LinearRelation zero_on(const Subspace& m, std::optional<Index> dim_out) {
  const Index n = m.ambient();
  const Index out = dim_out.value_or(n);
  Matrix stacked = Matrix::Zero(n + out, m.dim());
  stacked.topRows(n) = m.basis();
  return LinearRelation(n, out, Subspace::from_orthonormal(stacked));
}

LinearRelation product_of_subspaces(const Subspace& m, const Subspace& n) {
  const Index a = m.ambient();
  const Index b = n.ambient();
  Matrix stacked = Matrix::Zero(a + b, m.dim() + n.dim());
  stacked.topLeftCorner(a, m.dim()) = m.basis();
  stacked.bottomRightCorner(b, n.dim()) = n.basis();
  return LinearRelation(a, b, Subspace::from_orthonormal(stacked));
}

Subspace dom(const LinearRelation& t, const Tolerance& tol) { return range(t.inputs(), tol); }
Subspace ran(const LinearRelation& t, const Tolerance& tol) { return range(t.outputs(), tol); }

// The graph basis is orthonormal, so coefficient vectors killed by one block
// are mapped injectively by the other block.
Subspace ker(const LinearRelation& t, const Tolerance& tol) {
  const Subspace coeffs = null_space(t.outputs(), tol);
  if (coeffs.is_zero()) return Subspace(t.dim_in());
  return range(t.inputs() * coeffs.basis(), tol);
}

Subspace mul(const LinearRelation& t, const Tolerance& tol) {
  const Subspace coeffs = null_space(t.inputs(), tol);
  if (coeffs.is_zero()) return Subspace(t.dim_out());
  return range(t.outputs() * coeffs.basis(), tol);
}

RelationParts parts(const LinearRelation& t, const Tolerance& tol) {
  return {dom(t, tol), ran(t, tol), ker(t, tol), mul(t, tol)};
}

bool is_operator(const LinearRelation& t, const Tolerance& tol) { return mul(t, tol).is_zero(); }

Matrix to_matrix(const LinearRelation& t, const Tolerance& tol) {
  if (!dom(t, tol).is_full() || !is_operator(t, tol)) {
    throw PreconditionError("to_matrix: relation is not an everywhere defined operator");
  }
  return t.outputs() * pseudo_inverse(t.inputs(), tol);
}

LinearRelation invert(const LinearRelation& t) {
  Matrix swapped(t.graph().ambient(), t.graph().dim());
  swapped << t.outputs(), t.inputs();
  return LinearRelation(t.dim_out(), t.dim_in(), Subspace::from_orthonormal(swapped));
}

LinearRelation adjoint(const LinearRelation& t, const Tolerance& tol) {
  // (u, v) in T* iff <g, u> = <f, v> for every (f, g) in T.
  const Index n = t.dim_in();
  const Index m = t.dim_out();
  Matrix row(t.graph().dim(), m + n);
  row << t.outputs().adjoint(), -t.inputs().adjoint();
  if (row.rows() == 0) return LinearRelation(m, n, Subspace::full(m + n));
  return LinearRelation(m, n, null_space(row, tol));
}

LinearRelation compose(const LinearRelation& r, const LinearRelation& t, const Tolerance& tol) {
  require_dims(r.dim_in(), t.dim_out(), "compose (inner dimension)");
  const Index n = t.dim_in();
  const Index e = r.dim_out();
  const Index kt = t.graph().dim();
  const Index kr = r.graph().dim();
  // Coefficients (c, d) with T-output(c) = R-input(d).
  Matrix link(t.dim_out(), kt + kr);
  link << t.outputs(), -r.inputs();
  const Subspace coeffs = null_space(link, tol);
  if (coeffs.is_zero()) return LinearRelation(n, e, Subspace(n + e));
  const Matrix c = coeffs.basis().topRows(kt);
  const Matrix d = coeffs.basis().bottomRows(kr);
  return from_stacked(n, e, t.inputs() * c, r.outputs() * d, tol);
}

LinearRelation op_sum(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol) {
  require_square_pair(t, s, "operator sum");
  const Index n = t.dim_in();
  const Index m = t.dim_out();
  const Index kt = t.graph().dim();
  const Index ks = s.graph().dim();
  Matrix link(n, kt + ks);
  link << t.inputs(), -s.inputs();
  const Subspace coeffs = null_space(link, tol);
  if (coeffs.is_zero()) return LinearRelation(n, m, Subspace(n + m));
  const Matrix c = coeffs.basis().topRows(kt);
  const Matrix d = coeffs.basis().bottomRows(ks);
  return from_stacked(n, m, t.inputs() * c, t.outputs() * c + s.outputs() * d, tol);
}

LinearRelation cw_sum(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol) {
  require_square_pair(t, s, "componentwise sum");
  return LinearRelation(t.dim_in(), t.dim_out(), sum(t.graph(), s.graph(), tol));
}

LinearRelation intersect(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol) {
  require_square_pair(t, s, "relation intersection");
  return LinearRelation(t.dim_in(), t.dim_out(), intersect(t.graph(), s.graph(), tol));
}

LinearRelation scale(const LinearRelation& t, Scalar lambda, const Tolerance& tol) {
  return from_stacked(t.dim_in(), t.dim_out(), t.inputs(), lambda * t.outputs(), tol);
}

LinearRelation identity_minus(const LinearRelation& t, const Tolerance& tol) {
  require_dims(t.dim_out(), t.dim_in(), "identity_minus (square relation)");
  return op_sum(graph_of_matrix(Matrix::Identity(t.dim_in(), t.dim_in()), tol),
                scale(t, Scalar(-1.0), tol), tol);
}

Restriction restrict(const LinearRelation& t, const Subspace& m, const Tolerance& tol) {
  require_dims(m.ambient(), t.dim_in(), "restrict");
  const Index n = t.dim_in();
  const Index out = t.dim_out();
  if (t.graph().is_zero()) {
    return {LinearRelation(n, out, Subspace(n + out)), Subspace(out)};
  }
  const Matrix off = t.inputs() - project(m, Matrix(t.inputs()));
  const Subspace coeffs = null_space(off, tol);
  if (coeffs.is_zero()) return {LinearRelation(n, out, Subspace(n + out)), Subspace(out)};
  LinearRelation restricted =
      from_stacked(n, out, t.inputs() * coeffs.basis(), t.outputs() * coeffs.basis(), tol);
  Subspace img = ran(restricted, tol);
  return {std::move(restricted), std::move(img)};
}

Subspace image(const LinearRelation& t, const Subspace& m, const Tolerance& tol) {
  return restrict(t, m, tol).image;
}

Subspace preimage(const LinearRelation& t, const Subspace& s, const Tolerance& tol) {
  return image(invert(t), s, tol);
}

Coset apply(const LinearRelation& t, const Vector& x, const Tolerance& tol) {
  require_dims(x.size(), t.dim_in(), "apply");
  if (t.graph().is_zero()) {
    return x.norm() <= tol.compare_cutoff(t.dim_in()) ? Coset::of_subspace(Subspace(t.dim_out()))
                                                      : Coset::empty(t.dim_out());
  }
  const Matrix inputs = t.inputs();
  const Vector c = pseudo_inverse(inputs, tol) * x;
  const double scale = std::max(1.0, x.norm());
  if ((inputs * c - x).norm() > tol.compare_cutoff(t.graph().ambient()) * scale) {
    return Coset::empty(t.dim_out());
  }
  return Coset(t.outputs() * c, mul(t, tol));
}

Coset apply(const LinearRelation& t, const Coset& c, const Tolerance& tol) {
  require_dims(c.ambient(), t.dim_in(), "apply to coset");
  if (c.is_empty()) return Coset::empty(t.dim_out());
  const Index k = t.graph().dim();
  const Index l = c.direction().dim();
  // Look for v = F a = p + L s in dom T intersected with the coset.
  Matrix system(t.dim_in(), k + l);
  system << t.inputs(), -c.direction().basis();
  const Vector& p = c.point();
  Vector coeffs = Vector::Zero(k + l);
  if (k + l > 0) coeffs = pseudo_inverse(system, tol) * p;
  const double scale = std::max(1.0, p.norm());
  if ((system * coeffs - p).norm() > tol.compare_cutoff(t.graph().ambient()) * scale) {
    return Coset::empty(t.dim_out());
  }
  const Vector y = t.outputs() * coeffs.head(k);
  return Coset(y, image(t, c.direction(), tol));
}

bool contains(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol) {
  require_square_pair(t, s, "relation containment");
  return contains(t.graph(), s.graph(), tol);
}

bool equals(const LinearRelation& t, const LinearRelation& s, const Tolerance& tol) {
  require_square_pair(t, s, "relation equality");
  return equals(t.graph(), s.graph(), tol);
}

}  // namespace relcalc
