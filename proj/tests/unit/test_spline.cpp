#include <doctest.h>

#include <cmath>

#include "relcalc/oracle.hpp"
#include "relcalc/spline.hpp"
#include "support/random.hpp"

using namespace relcalc;
using namespace relcalc::testing;

namespace {
Matrix row(std::initializer_list<Scalar> xs) { return vec(xs).transpose(); }
}  // namespace

TEST_CASE("minimal norm interpolant") {
  const SplineSolution s = spline_solve(SplineProblem(Matrix::Identity(2, 2), row({1, 0}), vec({1})));
  CHECK(s.exists);
  CHECK(equals(s.spline_set, Coset(e(2, 0), Subspace::zero(2))));
  CHECK(s.min_value == doctest::Approx(1.0));
}

TEST_CASE("objective constant on the feasible set") {
  const Matrix v = row({1, 1, 0});
  const SplineSolution s = spline_solve(SplineProblem(v, v, vec({2})));
  CHECK(equals(s.spline_set.direction(), null_space(v)));
  CHECK(s.min_value == doctest::Approx(2.0));
}

TEST_CASE("spline problem validation") {
  CHECK_THROWS_AS(SplineProblem(Matrix::Identity(2, 2), Matrix::Zero(1, 2), vec({1})), PreconditionError);
  CHECK_THROWS_AS(SplineProblem(Matrix::Identity(2, 2), row({1, 0, 0}), vec({1})), DimensionError);
  CHECK_THROWS_AS(SplineProblem(Matrix::Identity(2, 2), row({1, 0}), vec({1, 2})), DimensionError);
}

TEST_CASE("splines against the KKT system") {
  Random rng(61);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6), kk = rng.uniform(1, n), e_ = rng.uniform(1, 6);
    const Matrix t = rng.rank_matrix(e_, n, rng.uniform(0, std::min(e_, n)));
    const Matrix v = rng.rank_matrix(kk, n, kk);
    const Vector b = rng.vector(kk);
    const SplineSolution s = spline_solve(SplineProblem(t, v, b));
    const Coset kkt = oracle::kkt_spline(t, v, b);
    CHECK(equals(s.spline_set, kkt, Tolerance(1e-8)));
    CHECK(s.min_value == doctest::Approx((t * kkt.point()).norm()).epsilon(1e-8));
    CHECK((v * s.spline_set.point() - b).norm() < 1e-8);
  }
}

TEST_CASE("smoothing") {
  const SplineProblem base(Matrix::Identity(2, 2), row({1, 0}), vec({1}));
  const SmoothingSolution s = smooth_solve(SmoothingProblem(base, 1.0));
  CHECK((s.argmin_set.point() - vec({0.5, 0})).norm() < 1e-9);
  CHECK(s.min_value == doctest::Approx(std::sqrt(0.5)));

  const SmoothingSolution z = smooth_solve(SmoothingProblem(SplineProblem(Matrix::Identity(2, 2), row({1, 0}), vec({0})), 3.0));
  CHECK(z.argmin_set.contains(Vector::Zero(2)));
  CHECK(z.min_value == doctest::Approx(0.0));

  CHECK_THROWS_AS(SmoothingProblem(base, 0.0), PreconditionError);
  CHECK_THROWS_AS(SmoothingProblem(base, -1.0), PreconditionError);
}

TEST_CASE("smoothing minimum grows with rho up to the spline minimum") {
  Random rng(62);
  for (int k = 0; k < 50; ++k) {
    const Index n = rng.uniform(2, 6), kk = rng.uniform(1, n);
    const SplineProblem p(rng.matrix(rng.uniform(1, 6), n), rng.rank_matrix(kk, n, kk), rng.vector(kk));
    const double cap = spline_solve(p).min_value;
    double last = 0.0;
    for (double rho : {1.0, 10.0, 100.0}) {
      const double v = smooth_solve(SmoothingProblem(p, rho)).min_value;
      CHECK(v >= last - 1e-9);
      CHECK(v <= cap + 1e-9);
      last = v;
    }
  }
}

TEST_CASE("smoothing against normal equations") {
  Random rng(63);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(2, 6), kk = rng.uniform(1, n), e_ = rng.uniform(1, 6);
    const Matrix t = rng.rank_matrix(e_, n, rng.uniform(0, std::min(e_, n)));
    const Matrix v = rng.rank_matrix(kk, n, kk);
    const Vector b = rng.vector(kk);
    const double rho = rng.real(0.1, 10);
    const SmoothingSolution s = smooth_solve(SmoothingProblem(SplineProblem(t, v, b), rho));
    const oracle::Smoothing ne = oracle::normal_equations(t, v, b, rho);
    CHECK(s.argmin_set.contains(ne.x, Tolerance(1e-8)));
    CHECK(s.min_value == doctest::Approx(ne.value).epsilon(1e-8));
    const Vector x = s.argmin_set.point();
    const double self = std::sqrt((t * x).squaredNorm() + rho * (v * x - b).squaredNorm());
    CHECK(s.min_value == doctest::Approx(self).epsilon(1e-10));
    CHECK(equals(s.argmin_set.direction(), intersect(null_space(t), null_space(v))));
  }
}

TEST_CASE("projection blocks") {
  const ProjectionBlocks z = projection_m(Matrix::Identity(2, 2), Matrix::Zero(1, 2));
  CHECK((z.tt - Matrix::Identity(2, 2)).norm() < 1e-12);
  CHECK(z.tv.norm() < 1e-12);
  CHECK(z.vt.norm() < 1e-12);
  CHECK(z.vv.norm() < 1e-12);

  const ProjectionBlocks p = projection_m(Matrix::Identity(2, 2), row({1, 0}));
  Matrix tl = Matrix::Zero(2, 2);
  tl(0, 0) = 0.5;
  tl(1, 1) = 1.0;
  CHECK((p.tt - tl).norm() < 1e-12);

  Random rng(64);
  for (int k = 0; k < 100; ++k) {
    const Index n = rng.uniform(1, 6);
    const Matrix t = rng.rank_matrix(rng.uniform(1, 6), n, 1);
    const Matrix v = rng.matrix(rng.uniform(1, 6), n);
    const Matrix big = projection_m(t, v).assembled();
    Matrix stacked(t.rows() + v.rows(), n);
    stacked << t, v;
    CHECK((big * big - big).norm() < 1e-9);
    CHECK((big.adjoint() - big).norm() < 1e-9);
    CHECK(equals(range(big, Tolerance(1e-9)), range(stacked)));
    CHECK(equals(range_relation(t, v).graph(), range(stacked)));
  }
}
