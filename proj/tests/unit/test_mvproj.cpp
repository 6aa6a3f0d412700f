#include <doctest.h>

#include "relcalc/mvproj.hpp"
#include "support/random.hpp"

using namespace relcalc;
using namespace relcalc::testing;

namespace {
Subspace span1(const Vector& v) { return Subspace::span(v); }
}  // namespace

TEST_CASE("P_{M,N} examples") {
  const Subspace e1 = span1(e(2, 0)), e2 = span1(e(2, 1));
  Matrix p = Matrix::Zero(2, 2);
  p(0, 0) = 1.0;
  CHECK(equals(make_pmn(e1, e2), graph_of_matrix(p)));

  const LinearRelation mm = make_pmn(e1, e1);
  CHECK(equals(mm, product_of_subspaces(e1, e1)));

  const Coset c = relcalc::apply(make_pmn(span1(vec({1, 1})), e1), e(2, 1));
  CHECK(equals(c, Coset(vec({1, 1}), Subspace::zero(2))));
  CHECK_THROWS_AS(make_pmn(e1, Subspace::full(3)), DimensionError);
}

TEST_CASE("P_{M,N} parts and squaring") {
  Random rng(31);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6);
    const Subspace m = rng.subspace(n), nn = rng.subspace_like(m);
    const LinearRelation p = make_pmn(m, nn);
    CHECK(equals(dom(p), sum(m, nn)));
    CHECK(equals(mul(p), intersect(m, nn)));
    CHECK(equals(ran(p), m));
    CHECK(equals(ker(p), nn));
    CHECK(equals(compose(p, p), p));
    CHECK(equals(adjoint(p), make_pmn(complement(nn), complement(m))));
  }
}

TEST_CASE("classification examples") {
  const Classification full = classify(product_of_subspaces(Subspace::full(2), Subspace::full(2)));
  CHECK(full.is_mvproj);
  CHECK(full.is_idempotent);

  Matrix a(2, 2);
  a << 1, 1, 0, 0;
  const Classification op = classify(graph_of_matrix(a));
  CHECK(op.is_idempotent);
  CHECK(op.is_mvproj);

  const Subspace m = span1(e(2, 0));
  const LinearRelation e_ = cw_sum(identity_on(m), product_of_subspaces(Subspace::zero(2), span1(e(2, 1))));
  const Classification c = classify(e_);
  CHECK(c.is_super);
  REQUIRE(c.canonical);
  CHECK(equals(c.canonical->range_part, m));
  CHECK(equals(c.canonical->mul_part, span1(e(2, 1))));
  CHECK(equals(make_super(*c.canonical), e_));

  // (t e2, t e1): its square is the zero graph, strictly inside it.
  const LinearRelation sub = from_graph_basis(2, 2, cols({vec({0, 1, 1, 0})}));
  const Classification n = classify(sub);
  CHECK(n.is_sub);
  CHECK_FALSE(n.is_super);
  CHECK_FALSE(n.is_idempotent);
  CHECK_FALSE(n.canonical);

  Matrix rot(2, 2);
  rot << 0, -1, 1, 0;
  const Classification r = classify(graph_of_matrix(rot));
  CHECK_FALSE(r.is_sub);
  CHECK_FALSE(r.is_super);
  CHECK_THROWS_AS(classify(graph_of_matrix(Matrix::Zero(2, 3))), DimensionError);
}

TEST_CASE("decomposition") {
  const Subspace e1 = span1(e(2, 0)), e2 = span1(e(2, 1));
  const Decomposition d = decompose(make_pmn(e1, e1));
  CHECK(equals(d.mul_part, e1));
  CHECK(equals(d.operator_part, zero_on(e1)));

  const Decomposition o = decompose(make_pmn(e1, e2));
  CHECK(d.operator_part.dim_in() == 2);
  CHECK(o.mul_part.is_zero());
  CHECK(equals(o.operator_part, make_pmn(e1, e2)));

  Matrix rot(2, 2);
  rot << 0, -1, 1, 0;
  CHECK_THROWS_AS(decompose(graph_of_matrix(rot)), PreconditionError);

  Random rng(32);
  for (int k = 0; k < 100; ++k) {
    const Subspace m = rng.subspace(4), n = rng.subspace_like(m);
    const LinearRelation p = make_pmn(m, n);
    const Decomposition dd = decompose(p);
    CHECK(is_operator(dd.operator_part));
    const Matrix cross = dd.operator_part.graph().basis().adjoint() *
                         product_of_subspaces(Subspace::zero(4), dd.mul_part).graph().basis();
    CHECK(cross.norm() < 1e-9);
    CHECK(equals(cw_sum(dd.operator_part, product_of_subspaces(Subspace::zero(4), dd.mul_part)), p));
  }
}

TEST_CASE("representability") {
  const Subspace e1 = span1(e(2, 0));
  CHECK(representable(make_pmn(e1, span1(vec({1, 1}))), e1));
  const LinearRelation t = identity_on(span1(vec({1, 1})));
  CHECK_FALSE(representable(t, e1));
  CHECK_THROWS_AS(canonical_blocks(t, e1), PreconditionError);
  Random rng(33);
  for (int k = 0; k < 20; ++k) {
    CHECK(representable(graph_of_matrix(rng.matrix(3, 3)), rng.subspace(3)));
  }
}

TEST_CASE("canonical blocks of a matrix") {
  Matrix a(2, 2);
  a << 1, 2, 3, 4;
  const Subspace s = span1(e(2, 0));
  const BlockRep r = canonical_blocks(graph_of_matrix(a), s);
  auto entry = [](Scalar z, Index from, Index to) {
    Matrix m = Matrix::Zero(2, 2);
    m(to, from) = z;
    return m;
  };
  CHECK(equals(r.a, restrict(graph_of_matrix(entry(1, 0, 0)), s).restricted));
  CHECK(equals(r.b, restrict(graph_of_matrix(entry(2, 1, 0)), complement(s)).restricted));
  CHECK(equals(r.c, restrict(graph_of_matrix(entry(3, 0, 1)), s).restricted));
  CHECK(equals(r.d, restrict(graph_of_matrix(entry(4, 1, 1)), complement(s)).restricted));
  CHECK(equals(generate(r), graph_of_matrix(a)));
}

TEST_CASE("canonical blocks of P_{M,N} with S = M") {
  const Subspace m = span1(e(2, 0)), n = span1(vec({1, 1}));
  const BlockRep r = canonical_blocks(make_pmn(m, n), m);
  CHECK(contains(r.a, identity_on(m)));
  CHECK(ran(r.c).is_zero());
  CHECK(equals(generate(r), make_pmn(m, n)));
}

TEST_CASE("coefficient x") {
  const Subspace e1 = span1(e(2, 0)), e2 = span1(e(2, 1));
  CHECK(equals(coefficient_x(e1, e2), zero_on(e2)));

  const LinearRelation x = coefficient_x(e1, span1(vec({1, 1})));
  CHECK(equals(x, from_graph_basis(2, 2, cols({vec({0, 1, -1, 0})}))));

  const LinearRelation xx = coefficient_x(e1, e1);
  CHECK(dom(xx).is_zero());
  CHECK(equals(mul(xx), e1));

  Random rng(34);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6);
    const Subspace m = rng.subspace(n), nn = rng.subspace_like(m);
    const LinearRelation c = coefficient_x(m, nn);
    CHECK(equals(c, coefficient_x_ando(m, nn)));
    CHECK(equals(dom(c), image(complement(m).projector(), nn)));
    CHECK(equals(mul(c), intersect(m, nn)));
  }
}

TEST_CASE("assembled representation") {
  const Subspace e1 = span1(e(2, 0)), e2 = span1(e(2, 1));
  const Subspace d = span1(vec({1, 1}));
  const BlockRep r = assemble_representation(e1, d);
  CHECK(equals(r.a, identity_on(e1)));
  CHECK(equals(r.b, coefficient_x(e1, d)));
  CHECK(equals(generate(r), make_pmn(e1, d)));

  const BlockRep z = assemble_representation(e1, Subspace::zero(2));
  CHECK(equals(generate(z), identity_on(e1)));

  const BlockRep o = assemble_representation(e1, e2);
  CHECK(equals(generate(o), graph_of_matrix(e1.projector())));

  Random rng(35);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6);
    const Subspace m = rng.subspace(n), nn = rng.subspace_like(m);
    CHECK(equals(generate(assemble_representation(m, nn)), make_pmn(m, nn)));
    // x is already determined by its projection onto M ∩ N's complement in M.
    const LinearRelation x = coefficient_x(m, nn);
    const Subspace mn = intersect(m, nn);
    CHECK(equals(compose(make_pmn(m, mn), x), x));
  }
}

TEST_CASE("build_super examples") {
  const Subspace e1 = span1(e(2, 0));
  const SuperBuild a = build_super(e1, e1, Subspace::zero(2), zero_on(Subspace::zero(2)));
  CHECK(a.is_idempotent);
  CHECK(a.criterion);
  CHECK(a.squares_equal);
  CHECK(equals(a.relation, cw_sum(identity_on(e1), product_of_subspaces(Subspace::zero(2), e1))));

  const Subspace m3 = span1(e(3, 0));
  Matrix shift = Matrix::Zero(3, 3);
  shift(0, 1) = 1.0;  // e2 -> e1
  const LinearRelation x = restrict(graph_of_matrix(shift), complement(m3)).restricted;
  const SuperBuild b = build_super(m3, Subspace::zero(3), span1(e(3, 1)), x);
  CHECK_FALSE(b.criterion);
  CHECK_FALSE(b.squares_equal);
  CHECK_FALSE(b.is_idempotent);
  CHECK(classify(b.relation).is_super);

  CHECK_THROWS_AS(build_super(m3, span1(e(3, 1)), Subspace::zero(3), x), PreconditionError);
  CHECK_THROWS_AS(build_super(m3, Subspace::zero(3), m3, x), PreconditionError);
}

TEST_CASE("S2 = {0} always yields an idempotent") {
  Random rng(36);
  for (int k = 0; k < 50; ++k) {
    const Index n = rng.uniform(2, 6);
    const Subspace m = rng.generic(n, rng.uniform(1, n - 1));
    const Subspace mc = complement(m);
    const Subspace d = Subspace::span(mc.basis() * rng.matrix(mc.dim(), rng.uniform(0, mc.dim())));
    const LinearRelation x =
        compose(graph_of_matrix(m.projector() * rng.matrix(n, n)), identity_on(d));
    const Subspace s1 = Subspace::span(m.basis() * rng.matrix(m.dim(), rng.uniform(0, m.dim())));
    CHECK(build_super(m, s1, Subspace::zero(n), x).is_idempotent);
  }
}

TEST_CASE("fixed points of a non-idempotent super-idempotent") {
  const Subspace m = Subspace::span(e(3, 0));
  Matrix shift = Matrix::Zero(3, 3);
  shift(0, 1) = 1.0;
  const LinearRelation x = restrict(graph_of_matrix(shift), complement(m)).restricted;
  const SuperBuild b = build_super(m, Subspace::zero(3), Subspace::span(e(3, 1)), x);
  // e2 is not a fixed point: E e2 = e1 + span e2.
  CHECK(equals(b.canonical.range_part, m));
  CHECK(equals(b.canonical.range_part, ker(identity_minus(b.relation))));
  CHECK_FALSE(equals(b.canonical.range_part, sum(m, intersect(Subspace::span(e(3, 1)), dom(x)))));
}

TEST_CASE("parts of super-idempotents") {
  Random rng(37);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6);
    const Subspace m = rng.subspace(n), nn = rng.subspace_like(m), s = rng.subspace_like(m);
    const LinearRelation t = make_super({m, nn, s});
    CHECK(classify(t).is_super);
    CHECK(equals(ker(t), sum(nn, intersect(m, s))));
    CHECK(equals(mul(t), sum(s, intersect(m, nn))));
  }
}

TEST_CASE("mv projections split their domain") {
  Random rng(38);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6);
    const LinearRelation p = make_pmn(rng.subspace(n), rng.subspace(n));
    const RelationParts pp = parts(p);
    CHECK(equals(pp.dom, sum(pp.ran, pp.ker)));
    CHECK(equals(pp.mul, intersect(pp.ran, pp.ker)));
  }
}
