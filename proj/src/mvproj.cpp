#include "relcalc/mvproj.hpp"

namespace relcalc {
namespace {

void require_square(const LinearRelation& t, const char* what) {
  require_dims(t.dim_out(), t.dim_in(), std::string(what) + " (square relation)");
}

LinearRelation orthogonal_projector(const Subspace& s, const Tolerance& tol) {
  return graph_of_matrix(s.projector(), tol);
}

}  // namespace

LinearRelation make_pmn(const Subspace& m, const Subspace& n, const Tolerance& tol) {
  require_dims(n.ambient(), m.ambient(), "make_pmn");
  return cw_sum(identity_on(m), zero_on(n), tol);
}

LinearRelation make_super(const SuperTriple& triple, const Tolerance& tol) {
  const Index dim = triple.range_part.ambient();
  return cw_sum(make_pmn(triple.range_part, triple.kernel_part, tol),
                product_of_subspaces(Subspace(dim), triple.mul_part), tol);
}

Classification classify(const LinearRelation& e, const Tolerance& tol) {
  require_square(e, "classify");
  const LinearRelation squared = compose(e, e, tol);
  Classification out;
  out.is_sub = contains(e, squared, tol);
  out.is_super = contains(squared, e, tol);
  out.is_idempotent = out.is_sub && out.is_super;
  out.is_mvproj = out.is_idempotent && contains(dom(e, tol), ran(e, tol), tol);
  if (out.is_super) {
    SuperTriple triple{ker(identity_minus(e, tol), tol), ker(e, tol), mul(e, tol)};
    if (!equals(make_super(triple, tol), e, tol)) {
      throw ConsistencyError("classify: canonical super-idempotent triple does not rebuild E");
    }
    out.canonical = std::move(triple);
  }
  return out;
}

Decomposition decompose(const LinearRelation& p, const Tolerance& tol) {
  require_square(p, "decompose");
  if (!classify(p, tol).is_mvproj) {
    throw PreconditionError("decompose: relation is not a multivalued projection");
  }
  const Subspace m = ran(p, tol);
  const Subspace n = ker(p, tol);
  Subspace overlap = intersect(m, n, tol);
  const Subspace reduced = intersect(m, complement(overlap, tol), tol);
  return {make_pmn(reduced, n, tol), std::move(overlap)};
}

bool representable(const LinearRelation& t, const Subspace& s, const Tolerance& tol) {
  require_square(t, "representable");
  require_dims(s.ambient(), t.dim_in(), "representable");
  const Subspace d = dom(t, tol);
  const Subspace mv = mul(t, tol);
  const Matrix ps = s.projector();
  return contains(d, image(ps, d, tol), tol) && contains(mv, image(ps, mv, tol), tol);
}

LinearRelation generate(const BlockRep& blocks, const Tolerance& tol) {
  const LinearRelation left = op_sum(blocks.a, blocks.c, tol);
  const LinearRelation right = op_sum(blocks.b, blocks.d, tol);
  return cw_sum(left, right, tol);
}

BlockRep canonical_blocks(const LinearRelation& t, const Subspace& s, const Tolerance& tol) {
  if (!representable(t, s, tol)) {
    throw PreconditionError("canonical_blocks: relation admits no block representation");
  }
  const Subspace sc = complement(s, tol);
  const LinearRelation on_s = restrict(t, s, tol).restricted;
  const LinearRelation on_sc = restrict(t, sc, tol).restricted;
  const LinearRelation ps = orthogonal_projector(s, tol);
  const LinearRelation psc = orthogonal_projector(sc, tol);
  return {s, compose(ps, on_s, tol), compose(ps, on_sc, tol), compose(psc, on_s, tol),
          compose(psc, on_sc, tol)};
}

LinearRelation coefficient_x_ando(const Subspace& m, const Subspace& n, const Tolerance& tol) {
  require_dims(n.ambient(), m.ambient(), "coefficient_x_ando");
  const Index dim = m.ambient();
  const Matrix pm = m.projector();
  const LinearRelation off_m = graph_of_matrix(Matrix::Identity(dim, dim) - pm, tol);
  const LinearRelation inverse = invert(restrict(off_m, n, tol).restricted);
  return compose(graph_of_matrix(-pm, tol), inverse, tol);
}

LinearRelation coefficient_x(const Subspace& m, const Subspace& n, const Tolerance& tol) {
  require_dims(n.ambient(), m.ambient(), "coefficient_x");
  const Index dim = m.ambient();
  const Matrix pm = m.projector();
  const Matrix nb = n.basis();
  Matrix stacked(2 * dim, nb.cols());
  stacked << nb - pm * nb, -(pm * nb);
  LinearRelation x(dim, dim, Subspace::span(stacked, tol));

  if (!equals(x, coefficient_x_ando(m, n, tol), tol)) {
    throw ConsistencyError("coefficient_x: set form and composed form disagree");
  }
  const LinearRelation cut = product_of_subspaces(complement(m, tol), Subspace::full(dim));
  if (!equals(x, intersect(make_pmn(m, n, tol), cut, tol), tol)) {
    throw ConsistencyError("coefficient_x: set form differs from P_{M,N} ∩ (M⊥ x H)");
  }
  return x;
}

BlockRep assemble_representation(const Subspace& m, const Subspace& n, const Tolerance& tol) {
  require_dims(n.ambient(), m.ambient(), "assemble_representation");
  const Subspace mc = complement(m, tol);
  return {m, identity_on(m), coefficient_x(m, n, tol), zero_on(m), zero_on(mc)};
}

SuperBuild build_super(const Subspace& m, const Subspace& s1, const Subspace& s2,
                       const LinearRelation& x, const Tolerance& tol) {
  const Index dim = m.ambient();
  require_dims(s1.ambient(), dim, "build_super (S1)");
  require_dims(s2.ambient(), dim, "build_super (S2)");
  require_dims(x.dim_in(), dim, "build_super (x input)");
  require_dims(x.dim_out(), dim, "build_super (x output)");

  const Subspace mc = complement(m, tol);
  const Subspace dom_x = dom(x, tol);
  const Subspace mul_x = mul(x, tol);
  if (!contains(m, s1, tol)) throw PreconditionError("build_super: S1 is not contained in M");
  if (!contains(mc, s2, tol)) throw PreconditionError("build_super: S2 is not contained in M⊥");
  if (!contains(mc, dom_x, tol)) throw PreconditionError("build_super: dom x is not inside M⊥");
  if (!contains(m, ran(x, tol), tol)) throw PreconditionError("build_super: ran x is not inside M");

  const Subspace none(dim);
  const BlockRep blocks{m, identity_on(m), cw_sum(x, product_of_subspaces(none, s1), tol),
                        cw_sum(zero_on(m), product_of_subspaces(none, s2), tol), zero_on(mc)};
  LinearRelation e = generate(blocks, tol);

  // -x read as the subspace {u - v : (u, v) ∈ x}. Fixed points of E are
  // M ⊕ {u ∈ S2 : x(u) meets S1}; this is M ⊕ (S2 ∩ dom x) only when E is
  // idempotent.
  const Subspace minus_x = range(x.inputs() - x.outputs(), tol);
  SuperTriple canonical{sum(m, intersect(s2, preimage(x, s1, tol), tol), tol),
                        sum(minus_x, intersect(s1, m, tol), tol),
                        sum(sum(s1, mul_x, tol), s2, tol)};
  if (!equals(make_super(canonical, tol), e, tol)) {
    throw ConsistencyError("build_super: canonical triple does not rebuild E");
  }

  const bool criterion = contains(sum(s1, mul_x, tol), image(x, s2, tol), tol);
  const bool squares = equals(compose(e, e, tol), e, tol);
  if (criterion != squares) {
    throw ConsistencyError("build_super: idempotency criterion disagrees with E^2 = E");
  }
  return {std::move(e), std::move(canonical), squares, criterion, squares};
}

}  // namespace relcalc
