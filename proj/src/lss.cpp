#include "relcalc/lss.hpp"

#include <cmath>

namespace relcalc {
namespace {

double seminorm(const Matrix& root, const Vector& v) { return (root * v).norm(); }

double form(const Weight& w, const Vector& v) { return std::real(v.dot(w.matrix() * v)); }

// A representative of the coset other than its canonical point.
Vector second_representative(const Coset& c) {
  return c.point() + c.direction().basis().rowwise().sum();
}

}  // namespace

LssProblem::LssProblem(LinearRelation a_in, Weight w_in, Vector b_in)
    : a(std::move(a_in)), w(std::move(w_in)), b(std::move(b_in)) {
  require_dims(a.dim_out(), a.dim_in(), "LssProblem (A must act on one space)");
  require_dims(w.dim(), a.dim_out(), "LssProblem (weight)");
  require_dims(b.size(), a.dim_out(), "LssProblem (b)");
}

LssSolution solve(const LssProblem& p, const Tolerance& tol) {
  const Index n = p.a.dim_in();
  const Subspace range_a = ran(p.a, tol);
  const LinearRelation pws = make_pws(p.w, range_a, tol);

  LssSolution out{false, std::nullopt, std::nullopt, std::nullopt, Coset::empty(n),
                  Coset::empty(n)};
  out.minimizing_outputs = apply(pws, p.b, tol);
  out.exists = !out.minimizing_outputs.is_empty();
  if (!out.exists) return out;

  const Coset& outputs = out.minimizing_outputs;
  const Vector y0 = outputs.point();
  const Vector y1 = second_representative(outputs);
  const double f0 = form(p.w, y0 - p.b);
  const double f1 = form(p.w, y1 - p.b);
  const double scale = std::max({1.0, std::abs(f0), p.b.squaredNorm()});
  if (std::abs(f0 - f1) > tol.compare_cutoff(n) * scale) {
    throw ConsistencyError("solve: residual differs between minimizing outputs");
  }
  out.residual_form = f0;
  if (p.w.is_psd()) {
    const Matrix root = p.w.sqrt();
    out.min_value = seminorm(root, y0 - p.b);
  }

  out.solution_set = apply(invert(p.a), outputs, tol);
  if (out.solution_set.is_empty()) {
    throw ConsistencyError("solve: minimizing outputs have no preimage under A");
  }
  const Subspace expected = image(invert(p.a), mul(pws, tol), tol);
  if (!equals(out.solution_set.direction(), expected, tol)) {
    throw ConsistencyError("solve: solution set is not x0 + A^{-1}(mul P_{W, ran A})");
  }
  out.witness = out.solution_set.point();
  return out;
}

bool check_normal(const LssProblem& p, const Vector& x0, const Tolerance& tol) {
  const Coset image_x0 = apply(p.a, x0, tol);
  if (image_x0.is_empty()) throw PreconditionError("check_normal: x0 is outside dom A");

  const LinearRelation normal = compose(adjoint(p.a, tol), graph_of_matrix(p.w.matrix(), tol), tol);
  const Coset pushed = apply(normal, image_x0.translated(-p.b), tol);
  const bool zero_in = pushed.contains(Vector::Zero(p.a.dim_in()), tol);

  const Coset reference = apply(normal, Coset::of_subspace(mul(p.a, tol)), tol);
  const bool coset_equal = equals(pushed, reference, tol);
  if (zero_in != coset_equal) {
    throw ConsistencyError("check_normal: 0-membership and coset equality disagree");
  }
  return zero_in;
}

Coset w1w2_solve(const LinearRelation& a, const Weight& w1, const Weight& w2, const Vector& b,
                 const Tolerance& tol) {
  require_dims(a.dim_out(), a.dim_in(), "w1w2_solve (square relation)");
  require_dims(w1.dim(), a.dim_in(), "w1w2_solve (W1)");
  require_dims(w2.dim(), a.dim_in(), "w1w2_solve (W2)");
  require_dims(b.size(), a.dim_in(), "w1w2_solve (b)");
  if (!w1.is_psd() || !w2.is_psd()) {
    throw PreconditionError("w1w2_solve: both weights must be positive semidefinite");
  }

  const LinearRelation a_inv = invert(a);
  const Coset outputs = apply(make_pws(w1, ran(a, tol), tol), b, tol);
  if (outputs.is_empty()) throw NoSolution("w1w2_solve: b is outside dom P_{W1, ran A}");
  const Coset w1_solutions = apply(a_inv, outputs, tol);

  const Subspace slack = image(a_inv, null_space(w1.matrix(), tol), tol);
  const LinearRelation reduce = identity_minus(make_pws(w2, slack, tol), tol);
  Coset result = apply(reduce, w1_solutions, tol);
  if (result.is_empty()) {
    throw ConsistencyError("w1w2_solve: W1-LSS set lies outside dom (I - P_{W2, A^{-1} ker W1})");
  }
  return result;
}

}  // namespace relcalc
