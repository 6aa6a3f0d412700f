#include <doctest.h>

#include "relcalc/lss.hpp"
#include "relcalc/oracle.hpp"
#include "support/random.hpp"

using namespace relcalc;
using namespace relcalc::testing;

namespace {
Matrix diag(std::initializer_list<double> d) {
  Matrix m = Matrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) m(i, i) = x, ++i;
  return m;
}
Weight psd(const Matrix& m) { return Weight(m, WeightKind::psd); }
}  // namespace

TEST_CASE("classical least squares") {
  const LssProblem p(graph_of_matrix(diag({1, 0})), psd(Matrix::Identity(2, 2)), vec({1, 1}));
  const LssSolution s = solve(p);
  CHECK(s.exists);
  REQUIRE(s.min_value);
  CHECK(*s.min_value == doctest::Approx(1.0));
  CHECK(equals(s.solution_set, Coset(e(2, 0), Subspace::span(e(2, 1)))));
  REQUIRE(s.witness);
  CHECK((*s.witness - e(2, 0)).norm() < 1e-9);
  CHECK(check_normal(p, *s.witness));
  CHECK(check_normal(p, vec({1, 5})));
  CHECK_FALSE(check_normal(p, vec({0, 0})));
}

TEST_CASE("everything relation") {
  const LssProblem p(product_of_subspaces(Subspace::full(2), Subspace::full(2)),
                     psd(Matrix::Identity(2, 2)), vec({3, -1}));
  const LssSolution s = solve(p);
  CHECK(s.exists);
  CHECK(*s.min_value == doctest::Approx(0.0));
  CHECK(s.solution_set.direction().is_full());
}

TEST_CASE("singular weight ignores a coordinate") {
  const LssProblem p(graph_of_matrix(diag({1, 0})), psd(diag({0, 1})), vec({1, 1}));
  const LssSolution s = solve(p);
  CHECK(*s.min_value == doctest::Approx(1.0));
  CHECK(s.solution_set.direction().is_full());
}

TEST_CASE("indefinite weight without a stationary point") {
  Matrix w(2, 2);
  w << 0, 1, 1, 0;
  const LssProblem p(graph_of_matrix(diag({1, 0})), Weight(w, WeightKind::selfadjoint), vec({1, 1}));
  const LssSolution s = solve(p);
  CHECK_FALSE(s.exists);
  CHECK(s.solution_set.is_empty());
  CHECK_FALSE(s.min_value);
  CHECK_FALSE(s.witness);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(LssProblem(graph_of_matrix(diag({1, 0})), psd(Matrix::Identity(3, 3)), vec({1, 1})),
                  DimensionError);
  CHECK_THROWS_AS(LssProblem(graph_of_matrix(diag({1, 0})), psd(Matrix::Identity(2, 2)), vec({1})),
                  DimensionError);
  const LssProblem p(product_of_subspaces(Subspace::span(e(2, 0)), Subspace::full(2)),
                     psd(Matrix::Identity(2, 2)), vec({1, 1}));
  CHECK_THROWS_AS(check_normal(p, e(2, 1)), PreconditionError);
}

TEST_CASE("random problems against the oracle") {
  Random rng(51);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6);
    const LinearRelation a = rng.relation(n, n);
    const Matrix w = rng.psd(n, rng.uniform(0, n));
    const Vector b = rng.vector(n);
    const LssProblem p(a, psd(w), b);
    const LssSolution s = solve(p);
    REQUIRE(s.exists);
    CHECK(*s.min_value == doctest::Approx(oracle::weighted_residual(w, ran(a).basis(), b)).epsilon(1e-8));
    const Coset o = oracle::lss_solution_set(a.inputs(), a.outputs(), w, b);
    CHECK(equals(s.solution_set, o, Tolerance(1e-8)));
    CHECK(equals(s.solution_set.direction(), preimage(a, null_space(w))));
    CHECK(check_normal(p, *s.witness));
  }
}

TEST_CASE("W1W2 solutions") {
  const Coset c = w1w2_solve(graph_of_matrix(diag({1, 0})), psd(diag({0, 1})),
                             psd(Matrix::Identity(2, 2)), vec({1, 1}));
  CHECK(equals(c, Coset::of_subspace(Subspace::zero(2))));

  Random rng(52);
  const Matrix a = rng.rank_matrix(4, 4, 2);
  const Vector b = rng.vector(4);
  const Coset mp = w1w2_solve(graph_of_matrix(a), psd(Matrix::Identity(4, 4)),
                              psd(Matrix::Identity(4, 4)), b);
  CHECK((mp.point() - pseudo_inverse(a) * b).norm() < 1e-8);
  CHECK(mp.direction().is_zero());

  CHECK_THROWS_AS(w1w2_solve(graph_of_matrix(a), Weight(rng.selfadjoint(4), WeightKind::selfadjoint),
                             psd(Matrix::Identity(4, 4)), b),
                  PreconditionError);
}
