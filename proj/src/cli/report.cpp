#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "relcalc/cli.hpp"

namespace relcalc::cli {
namespace {

using nlohmann::json;

// Twelve significant digits keep reports stable across rounding noise.
double tidy(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

void emit_text(std::ostringstream& out, const json& obj, const std::string& indent) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      emit_text(out, value, indent + "  ");
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

json encode(Scalar z) { return json::array({tidy(z.real()), tidy(z.imag())}); }

json encode(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

json encode_matrix(const Matrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(encode(Vector(m.row(r).transpose())));
  return out;
}

json encode(const Subspace& s) {
  json basis = json::array();
  for (Index j = 0; j < s.dim(); ++j) basis.push_back(encode(Vector(s.basis().col(j))));
  return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

json encode(const Coset& c) {
  if (c.is_empty()) return {{"empty", true}, {"ambient", c.ambient()}};
  return {{"empty", false}, {"point", encode(c.point())}, {"directions", encode(c.direction())}};
}

json encode(const LinearRelation& t, const Tolerance& tol) {
  const RelationParts p = parts(t, tol);
  return {{"dim_in", t.dim_in()},
          {"dim_out", t.dim_out()},
          {"graph", encode(t.graph())},
          {"dims", {{"graph", t.graph().dim()},
                    {"dom", p.dom.dim()},
                    {"ran", p.ran.dim()},
                    {"ker", p.ker.dim()},
                    {"mul", p.mul.dim()}}}};
}

json Report::to_json() const {
  return {{"command", command}, {"status", status}, {"results", results},
          {"diagnostics", diagnostics}};
}

Report Report::from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.results = j.at("results");
  r.diagnostics = j.at("diagnostics");
  return r;
}

Tolerance resolve_tolerance(const Options& opts, const ProblemFile* file) {
  if (opts.tol) return Tolerance(*opts.tol);
  if (file && file->tol) return Tolerance(*file->tol);
  if (const char* env = std::getenv("RELCALC_TOL"); env && *env) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || value < 0.0) {
      throw ParseError("RELCALC_TOL: not a nonnegative number: " + std::string(env));
    }
    return Tolerance(value);
  }
  return Tolerance();
}

std::string emit(const Report& report, Format format) {
  if (format == Format::json) return report.to_json().dump(2) + "\n";
  std::ostringstream out;
  out << "relcalc " << report.command << ": " << report.status << "\n";
  emit_text(out, report.results, "  ");
  if (!report.diagnostics.empty()) {
    out << "diagnostics:\n";
    emit_text(out, report.diagnostics, "  ");
  }
  return out.str();
}

int exit_code(const Report& report) {
  if (report.status == "ok") return 0;
  if (report.status == "no-solution") return 2;
  return 1;
}

}  // namespace relcalc::cli
