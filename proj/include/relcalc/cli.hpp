#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "relcalc/lss.hpp"
#include "relcalc/spline.hpp"

namespace relcalc::cli {

/// Malformed problem file. The message carries a line number (syntax
/// errors) or a JSON pointer to the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubspaceSpec {
  Index ambient = 0;
  Matrix spanning;  // ambient x p
};

struct MatrixRelation {
  std::string matrix;
};

struct GraphRelation {
  Index dim_in = 0;
  Index dim_out = 0;
  Matrix vectors;  // (dim_in + dim_out) x p
};

using RelationSpec = std::variant<MatrixRelation, GraphRelation>;

struct WeightSpec {
  std::string matrix;
  WeightKind kind = WeightKind::selfadjoint;
};

/// A validated problem file (format version 1). Entities are stored as
/// given; tolerance-dependent objects are built at dispatch time.
struct ProblemFile {
  int version = 1;
  std::string field = "complex";
  std::map<std::string, Matrix> matrices;
  std::map<std::string, Vector> vectors;
  std::map<std::string, SubspaceSpec> subspaces;
  std::map<std::string, RelationSpec> relations;
  std::map<std::string, WeightSpec> weights;
  std::optional<double> tol;
  std::optional<double> rho;
  /// Command name -> its section, references already resolved and checked.
  std::map<std::string, nlohmann::json> commands;
};

inline constexpr const char* kCommands[] = {
    "relation-analyze", "proj-build", "proj-represent", "lss-solve",      "w1w2-solve",
    "spline",           "smooth",     "shorted",        "complementable", "krein-classify"};

bool is_command(const std::string& name);

ProblemFile parse(const std::filesystem::path& path);
ProblemFile parse_text(const std::string& text, const std::string& source = "<input>");

struct Options {
  std::optional<double> tol;  // --tol
  bool verify = false;
};

struct Report {
  std::string command;
  std::string status = "ok";  // ok | no-solution | error
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json diagnostics = nlohmann::json::object();

  [[nodiscard]] nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  bool operator==(const Report&) const = default;
};

/// Resolves the tolerance for a run: --tol, then the file's "tol"
/// parameter, then RELCALC_TOL, then the default.
Tolerance resolve_tolerance(const Options& opts, const ProblemFile* file);

/// Runs one command. Library errors become status "error"; a missing
/// weighted least-squares solution becomes status "no-solution".
Report dispatch(const std::string& command, const ProblemFile& file, const Options& opts);

/// Parses `path` and dispatches, turning parse failures into error reports.
Report run_file(const std::string& command, const std::filesystem::path& path,
                const Options& opts);

enum class Format { json, text };

std::string emit(const Report& report, Format format);
int exit_code(const Report& report);

// JSON encodings shared with the tests.
nlohmann::json encode(Scalar z);
nlohmann::json encode(const Vector& v);
nlohmann::json encode_matrix(const Matrix& m);
nlohmann::json encode(const Subspace& s);
nlohmann::json encode(const Coset& c);
nlohmann::json encode(const LinearRelation& t, const Tolerance& tol);

}  // namespace relcalc::cli
