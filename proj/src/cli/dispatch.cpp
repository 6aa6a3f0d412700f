#include <cmath>

#include "relcalc/cli.hpp"
#include "relcalc/oracle.hpp"

namespace relcalc::cli {
namespace {

using nlohmann::json;

struct Context {
  const ProblemFile& file;
  const json& section;
  const Tolerance& tol;
  bool verify;
  Report& report;

  [[nodiscard]] std::string ref(const char* key) const { return section.at(key).get<std::string>(); }

  [[nodiscard]] Subspace subspace(const char* key) const {
    return Subspace::span(file.subspaces.at(ref(key)).spanning, tol);
  }

  [[nodiscard]] LinearRelation relation(const char* key) const {
    const RelationSpec& spec = file.relations.at(ref(key));
    if (const auto* m = std::get_if<MatrixRelation>(&spec)) {
      return graph_of_matrix(file.matrices.at(m->matrix), tol);
    }
    const auto& g = std::get<GraphRelation>(spec);
    return from_graph_basis(g.dim_in, g.dim_out, g.vectors, tol);
  }

  [[nodiscard]] Weight weight(const char* key) const {
    const WeightSpec& spec = file.weights.at(ref(key));
    Weight w(file.matrices.at(spec.matrix), spec.kind, tol);
    if (w.borderline()) {
      report.diagnostics["borderline_weights"].push_back(
          {{"weight", ref(key)}, {"min_eigenvalue", w.min_eigenvalue()}});
    }
    return w;
  }

  [[nodiscard]] const Matrix& matrix(const char* key) const { return file.matrices.at(ref(key)); }
  [[nodiscard]] const Vector& vector(const char* key) const { return file.vectors.at(ref(key)); }

  void delta(double value) const { report.diagnostics["oracle_delta"] = value; }
};

double distance_to(const Coset& c, const Vector& v) {
  const Vector diff = v - c.point();
  return (diff - project(c.direction(), diff)).norm();
}

double coset_delta(const Coset& got, const Coset& want) {
  if (got.is_empty() || want.is_empty()) return got.is_empty() == want.is_empty() ? 0.0 : 1.0;
  return distance_to(got, want.point()) + gap(got.direction(), want.direction());
}

json encode_blocks(const BlockRep& blocks, const Tolerance& tol) {
  return {{"splitting", encode(blocks.splitting)},
          {"a", encode(blocks.a, tol)},
          {"b", encode(blocks.b, tol)},
          {"c", encode(blocks.c, tol)},
          {"d", encode(blocks.d, tol)}};
}

void relation_analyze(const Context& cx) {
  const LinearRelation t = cx.relation("relation");
  const RelationParts p = parts(t, cx.tol);
  auto& r = cx.report.results;
  r["relation"] = encode(t, cx.tol);
  r["dom"] = encode(p.dom);
  r["ran"] = encode(p.ran);
  r["ker"] = encode(p.ker);
  r["mul"] = encode(p.mul);
  r["is_operator"] = p.mul.is_zero();
  if (cx.verify) {
    const LinearRelation star = adjoint(t, cx.tol);
    const Index g = t.graph().dim();
    const double dims = static_cast<double>(std::abs(g - p.dom.dim() - p.mul.dim()) +
                                            std::abs(g - p.ran.dim() - p.ker.dim()));
    cx.delta(dims + gap(mul(star, cx.tol), complement(p.dom, cx.tol)) +
             gap(ker(star, cx.tol), complement(p.ran, cx.tol)));
  }
}

void proj_build(const Context& cx) {
  const Subspace m = cx.subspace("M");
  const Subspace n = cx.subspace("N");
  const LinearRelation p = make_pmn(m, n, cx.tol);
  const Classification cls = classify(p, cx.tol);
  const Decomposition dec = decompose(p, cx.tol);
  const RelationParts pp = parts(p, cx.tol);
  auto& r = cx.report.results;
  r["projection"] = encode(p, cx.tol);
  r["dom"] = encode(pp.dom);
  r["ran"] = encode(pp.ran);
  r["ker"] = encode(pp.ker);
  r["mul"] = encode(pp.mul);
  r["classification"] = {{"is_sub", cls.is_sub},
                         {"is_super", cls.is_super},
                         {"is_idempotent", cls.is_idempotent},
                         {"is_mvproj", cls.is_mvproj}};
  r["decomposition"] = {{"operator_part", encode(dec.operator_part, cx.tol)},
                        {"mul_part", encode(dec.mul_part)}};
  if (cx.verify) {
    const LinearRelation rebuilt =
        cw_sum(dec.operator_part, product_of_subspaces(Subspace(m.ambient()), dec.mul_part), cx.tol);
    cx.delta(gap(compose(p, p, cx.tol).graph(), p.graph()) + gap(rebuilt.graph(), p.graph()));
  }
}

void proj_represent(const Context& cx) {
  auto& r = cx.report.results;
  if (cx.section.contains("relation")) {
    const LinearRelation t = cx.relation("relation");
    const Subspace s = cx.subspace("S");
    const bool ok = representable(t, s, cx.tol);
    r["mode"] = "relation";
    r["representable"] = ok;
    if (ok) {
      const BlockRep blocks = canonical_blocks(t, s, cx.tol);
      r["blocks"] = encode_blocks(blocks, cx.tol);
      if (cx.verify) cx.delta(gap(generate(blocks, cx.tol).graph(), t.graph()));
    } else if (cx.verify) {
      cx.delta(0.0);
    }
    return;
  }
  const Subspace m = cx.subspace("M");
  const Subspace n = cx.subspace("N");
  const BlockRep blocks = assemble_representation(m, n, cx.tol);
  r["mode"] = "projection";
  r["representable"] = true;
  r["blocks"] = encode_blocks(blocks, cx.tol);
  r["coefficient_x"] = {{"dom", encode(dom(blocks.b, cx.tol))}, {"mul", encode(mul(blocks.b, cx.tol))}};
  if (cx.verify) cx.delta(gap(generate(blocks, cx.tol).graph(), make_pmn(m, n, cx.tol).graph()));
}

void lss_solve(const Context& cx) {
  const LinearRelation a = cx.relation("A");
  const LssProblem problem(a, cx.weight("W"), cx.vector("b"));
  const LssSolution sol = solve(problem, cx.tol);
  auto& r = cx.report.results;
  r["exists"] = sol.exists;
  r["min_value"] = sol.min_value ? json(*sol.min_value) : json(nullptr);
  r["residual_form"] = sol.residual_form ? json(*sol.residual_form) : json(nullptr);
  r["witness"] = sol.witness ? encode(*sol.witness) : json(nullptr);
  r["solution_set"] = encode(sol.solution_set);
  r["minimizing_outputs"] = encode(sol.minimizing_outputs);
  if (!sol.exists) cx.report.status = "no-solution";
  if (cx.verify && sol.exists && sol.min_value) {
    const Matrix& w = problem.w.matrix();
    const double value = oracle::weighted_residual(w, ran(a, cx.tol).basis(), problem.b, cx.tol);
    const Coset set = oracle::lss_solution_set(a.inputs(), a.outputs(), w, problem.b, cx.tol);
    cx.delta(std::abs(*sol.min_value - value) + coset_delta(sol.solution_set, set));
  }
}

void w1w2(const Context& cx) {
  const LinearRelation a = cx.relation("A");
  const Weight w1 = cx.weight("W1");
  const Weight w2 = cx.weight("W2");
  const Vector& b = cx.vector("b");
  auto& r = cx.report.results;
  try {
    const Coset set = w1w2_solve(a, w1, w2, b, cx.tol);
    r["exists"] = true;
    r["solution_set"] = encode(set);
    if (cx.verify) {
      cx.delta(coset_delta(set, oracle::w1w2_two_stage(a.inputs(), a.outputs(), w1.matrix(),
                                                       w2.matrix(), b, cx.tol)));
    }
  } catch (const NoSolution& e) {
    r["exists"] = false;
    cx.report.status = "no-solution";
    cx.report.diagnostics["message"] = e.what();
  }
}

void spline(const Context& cx) {
  const SplineProblem p(cx.matrix("T"), cx.matrix("V"), cx.vector("b"), cx.tol);
  const SplineSolution sol = spline_solve(p, cx.tol);
  auto& r = cx.report.results;
  r["exists"] = sol.exists;
  r["spline_set"] = encode(sol.spline_set);
  r["min_value"] = sol.min_value;
  if (cx.verify) {
    const Coset kkt = oracle::kkt_spline(p.t, p.v, p.b, cx.tol);
    cx.delta(std::abs(sol.min_value - (p.t * kkt.point()).norm()) + coset_delta(sol.spline_set, kkt));
  }
}

void smooth(const Context& cx) {
  const double rho = cx.section.contains("rho") ? cx.section["rho"].get<double>() : *cx.file.rho;
  const SmoothingProblem p(SplineProblem(cx.matrix("T"), cx.matrix("V"), cx.vector("b"), cx.tol),
                           rho);
  const SmoothingSolution sol = smooth_solve(p, cx.tol);
  auto& r = cx.report.results;
  r["rho"] = rho;
  r["argmin_set"] = encode(sol.argmin_set);
  r["min_value"] = sol.min_value;
  if (cx.verify) {
    const oracle::Smoothing ne = oracle::normal_equations(p.base.t, p.base.v, p.base.b, rho, cx.tol);
    cx.delta(std::abs(sol.min_value - ne.value) + distance_to(sol.argmin_set, ne.x));
  }
}

void shorted_cmd(const Context& cx) {
  const ShortedOperator s = shorted(cx.weight("W"), cx.subspace("S"), cx.tol);
  cx.report.results["shorted"] = encode_matrix(s.value);
  cx.report.diagnostics["route_discrepancy"] = s.discrepancy;
  if (cx.verify) cx.delta(s.discrepancy);
}

void complementable_cmd(const Context& cx) {
  const Weight w = cx.weight("W");
  const Subspace s = cx.subspace("S");
  const ComplementabilityReport rep = complementability(w, s, cx.tol);
  auto& r = cx.report.results;
  r["is_complementable"] = rep.is_complementable;
  r["criterion_ab"] = rep.criterion_ab;
  r["domain"] = encode(rep.domain);
  r["mul"] = encode(rep.mul);
  r["pws_blocks"] = rep.pws_blocks ? encode_blocks(*rep.pws_blocks, cx.tol) : json(nullptr);
  if (cx.verify) {
    double d = rep.is_complementable == rep.criterion_ab ? 0.0 : 1.0;
    if (rep.pws_blocks) {
      d += gap(generate(*rep.pws_blocks, cx.tol).graph(), make_pws(w, s, cx.tol).graph());
    }
    cx.delta(d);
  }
}

void krein_cmd(const Context& cx) {
  const Weight w = cx.weight("W");
  const Subspace s = cx.subspace("S");
  const KreinClassification k = krein_classify(s, w, cx.tol);
  auto& r = cx.report.results;
  r["isotropic"] = encode(k.isotropic);
  r["nondegenerate"] = k.nondegenerate;
  r["degenerate"] = !k.nondegenerate;
  r["pseudo_regular"] = k.pseudo_regular;
  r["regular"] = k.regular;
  if (cx.verify) {
    const LinearRelation pws = make_pws(w, s, cx.tol);
    const bool bounded = is_operator(pws, cx.tol) && dom(pws, cx.tol).is_full();
    cx.delta(bounded == k.regular ? 0.0 : 1.0);
  }
}

}  // namespace

Report dispatch(const std::string& command, const ProblemFile& file, const Options& opts) {
  Report report;
  report.command = command;
  try {
    if (!is_command(command)) throw ParseError("unknown command '" + command + "'");
    auto it = file.commands.find(command);
    if (it == file.commands.end()) {
      throw ParseError("/" + command + ": problem file has no section for this command");
    }
    const Tolerance tol = resolve_tolerance(opts, &file);
    report.diagnostics["tolerance"] = {
        {"abs_eps", tol.abs_eps},
        {"rel_eps", tol.rel_eps ? json(*tol.rel_eps) : json("auto")}};
    const Context cx{file, it->second, tol, opts.verify, report};

    if (command == "relation-analyze") relation_analyze(cx);
    else if (command == "proj-build") proj_build(cx);
    else if (command == "proj-represent") proj_represent(cx);
    else if (command == "lss-solve") lss_solve(cx);
    else if (command == "w1w2-solve") w1w2(cx);
    else if (command == "spline") spline(cx);
    else if (command == "smooth") smooth(cx);
    else if (command == "shorted") shorted_cmd(cx);
    else if (command == "complementable") complementable_cmd(cx);
    else krein_cmd(cx);
  } catch (const std::exception& e) {
    report.status = "error";
    report.results = json::object();
    report.diagnostics["message"] = e.what();
  }
  return report;
}

Report run_file(const std::string& command, const std::filesystem::path& path,
                const Options& opts) {
  try {
    return dispatch(command, parse(path), opts);
  } catch (const std::exception& e) {
    Report report;
    report.command = command;
    report.status = "error";
    report.diagnostics["message"] = e.what();
    return report;
  }
}

}  // namespace relcalc::cli
