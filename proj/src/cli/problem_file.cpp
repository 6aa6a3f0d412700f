#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "relcalc/cli.hpp"

namespace relcalc::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Scalar read_scalar(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(where, "expected a number or a [re, im] pair");
}

Vector read_vector(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of scalars");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = read_scalar(j[i], where + "/" + std::to_string(i));
  }
  return v;
}

Matrix read_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_where = where + "/" + std::to_string(r);
    if (!j[r].is_array()) fail(row_where, "expected a row array");
    if (j[r].size() != cols) {
      throw DimensionError(row_where + ": row has " + std::to_string(j[r].size()) +
                           " entries but row 0 has " + std::to_string(cols));
    }
    m.row(static_cast<Index>(r)) = read_vector(j[r], row_where).transpose();
  }
  return m;
}

// Columns given as a list of vectors, each of length `dim`.
Matrix read_columns(const json& j, Index dim, const std::string& where, const std::string& name) {
  if (!j.is_array()) fail(where, "expected an array of vectors");
  Matrix m(dim, static_cast<Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    const Vector v = read_vector(j[c], where + "/" + std::to_string(c));
    if (v.size() != dim) {
      throw DimensionError(where + "/" + std::to_string(c) + ": vector of '" + name +
                           "' has length " + std::to_string(v.size()) + ", ambient dimension is " +
                           std::to_string(dim));
    }
    m.col(static_cast<Index>(c)) = v;
  }
  return m;
}

Index read_dim(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer() || obj[key].get<long long>() < 0) {
    fail(where + "/" + key, "expected a nonnegative integer");
  }
  return static_cast<Index>(obj[key].get<long long>());
}

WeightKind read_kind(const json& j, const std::string& where) {
  const std::string kind = j.is_string() ? j.get<std::string>() : "";
  if (kind == "selfadjoint") return WeightKind::selfadjoint;
  if (kind == "psd") return WeightKind::psd;
  if (kind == "symmetry") return WeightKind::symmetry;
  fail(where, "weight kind must be one of selfadjoint, psd, symmetry");
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

// Resolves and dimension-checks the references of one command section.
class SectionChecker {
 public:
  SectionChecker(const ProblemFile& file, const std::string& command, const json& section)
      : file_(file), where_("/" + command), section_(section) {
    if (!section.is_object()) fail(where_, "command section must be an object");
  }

  [[nodiscard]] bool has(const char* key) const { return section_.contains(key); }

  std::string name(const char* key) const {
    if (!section_.contains(key) || !section_[key].is_string()) {
      fail(where_ + "/" + key, "expected the name of a defined entity");
    }
    return section_[key].get<std::string>();
  }

  const Matrix& matrix(const char* key) const { return lookup(file_.matrices, key, "matrix"); }
  const Vector& vector(const char* key) const { return lookup(file_.vectors, key, "vector"); }
  const SubspaceSpec& subspace(const char* key) const {
    return lookup(file_.subspaces, key, "subspace");
  }
  const WeightSpec& weight(const char* key) const { return lookup(file_.weights, key, "weight"); }

  std::pair<Index, Index> relation_dims(const char* key) const {
    const RelationSpec& spec = lookup(file_.relations, key, "relation");
    if (const auto* m = std::get_if<MatrixRelation>(&spec)) {
      const Matrix& a = file_.matrices.at(m->matrix);
      return {a.cols(), a.rows()};
    }
    const auto& g = std::get<GraphRelation>(spec);
    return {g.dim_in, g.dim_out};
  }

  Index weight_dim(const char* key) const { return file_.matrices.at(weight(key).matrix).rows(); }

  void same(Index a, const std::string& a_name, Index b, const std::string& b_name) const {
    if (a != b) {
      throw DimensionError(where_ + ": dimension mismatch between " + a_name + " (" +
                           std::to_string(a) + ") and " + b_name + " (" + std::to_string(b) + ")");
    }
  }

  std::string label(const char* key, const char* kind) const {
    return kind + std::string(" '") + name(key) + "'";
  }

 private:
  template <typename Map>
  const typename Map::mapped_type& lookup(const Map& map, const char* key, const char* kind) const {
    const std::string n = name(key);
    auto it = map.find(n);
    if (it == map.end()) {
      fail(where_ + "/" + key, std::string("refers to undefined ") + kind + " '" + n + "'");
    }
    return it->second;
  }

  const ProblemFile& file_;
  std::string where_;
  const json& section_;
};

void check_weight_subspace(const SectionChecker& c) {
  c.same(c.weight_dim("W"), c.label("W", "weight"), c.subspace("S").ambient,
         c.label("S", "subspace"));
}

void check_section(const ProblemFile& file, const std::string& command, const json& section) {
  const SectionChecker c(file, command, section);
  if (command == "relation-analyze") {
    c.relation_dims("relation");
  } else if (command == "proj-build") {
    c.same(c.subspace("M").ambient, c.label("M", "subspace"), c.subspace("N").ambient,
           c.label("N", "subspace"));
  } else if (command == "proj-represent") {
    if (c.has("relation")) {
      const auto [in, out] = c.relation_dims("relation");
      c.same(in, c.label("relation", "relation") + " input", out,
             c.label("relation", "relation") + " output");
      c.same(in, c.label("relation", "relation"), c.subspace("S").ambient,
             c.label("S", "subspace"));
    } else {
      c.same(c.subspace("M").ambient, c.label("M", "subspace"), c.subspace("N").ambient,
             c.label("N", "subspace"));
    }
  } else if (command == "lss-solve" || command == "w1w2-solve") {
    const auto [in, out] = c.relation_dims("A");
    const std::string a = c.label("A", "relation");
    c.same(in, a + " input", out, a + " output");
    c.same(c.vector("b").size(), c.label("b", "vector"), out, a);
    if (command == "lss-solve") {
      c.same(c.weight_dim("W"), c.label("W", "weight"), out, a);
    } else {
      c.same(c.weight_dim("W1"), c.label("W1", "weight"), out, a);
      c.same(c.weight_dim("W2"), c.label("W2", "weight"), in, a);
    }
  } else if (command == "spline" || command == "smooth") {
    const Matrix& t = c.matrix("T");
    const Matrix& v = c.matrix("V");
    c.same(v.cols(), c.label("V", "matrix") + " columns", t.cols(),
           c.label("T", "matrix") + " columns");
    c.same(c.vector("b").size(), c.label("b", "vector"), v.rows(),
           c.label("V", "matrix") + " rows");
    if (command == "smooth") {
      const bool local = section.contains("rho");
      if (local && !section["rho"].is_number()) fail("/smooth/rho", "expected a number");
      if (!local && !file.rho) fail("/smooth", "missing rho (section or params)");
    }
  } else if (command == "shorted" || command == "complementable" || command == "krein-classify") {
    check_weight_subspace(c);
  }
}

}  // namespace

bool is_command(const std::string& name) {
  return std::find(std::begin(kCommands), std::end(kCommands), name) != std::end(kCommands);
}

ProblemFile parse_text(const std::string& text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!root.is_object()) fail(source, "top level must be an object");

  ProblemFile file;
  if (!root.contains("version") || !root["version"].is_number_integer()) {
    fail("/version", "missing integer format version");
  }
  file.version = root["version"].get<int>();
  if (file.version != 1) fail("/version", "unsupported format version " + std::to_string(file.version));
  if (root.contains("field")) {
    if (!root["field"].is_string() || root["field"].get<std::string>() != "complex") {
      fail("/field", "only the \"complex\" field is supported");
    }
  }

  auto section = [&](const char* key) -> const json& {
    static const json empty = json::object();
    if (!root.contains(key)) return empty;
    if (!root[key].is_object()) fail(std::string("/") + key, "expected an object");
    return root[key];
  };

  for (const auto& [name, value] : section("matrices").items()) {
    file.matrices.emplace(name, read_matrix(value, "/matrices/" + name));
  }
  for (const auto& [name, value] : section("vectors").items()) {
    file.vectors.emplace(name, read_vector(value, "/vectors/" + name));
  }
  for (const auto& [name, value] : section("subspaces").items()) {
    const std::string where = "/subspaces/" + name;
    if (!value.is_object()) fail(where, "expected {\"ambient\": n, \"span\": [...]}");
    SubspaceSpec spec;
    spec.ambient = read_dim(value, "ambient", where);
    spec.spanning = read_columns(value.value("span", json::array()), spec.ambient,
                                 where + "/span", name);
    file.subspaces.emplace(name, std::move(spec));
  }
  for (const auto& [name, value] : section("relations").items()) {
    const std::string where = "/relations/" + name;
    if (!value.is_object()) fail(where, "expected an object");
    if (value.contains("matrix")) {
      const std::string ref = value["matrix"].is_string() ? value["matrix"].get<std::string>() : "";
      if (!file.matrices.contains(ref)) fail(where + "/matrix", "refers to undefined matrix '" + ref + "'");
      file.relations.emplace(name, MatrixRelation{ref});
    } else {
      GraphRelation g;
      g.dim_in = read_dim(value, "dim_in", where);
      g.dim_out = read_dim(value, "dim_out", where);
      g.vectors = read_columns(value.value("graph", json::array()), g.dim_in + g.dim_out,
                               where + "/graph", name);
      file.relations.emplace(name, std::move(g));
    }
  }
  for (const auto& [name, value] : section("weights").items()) {
    const std::string where = "/weights/" + name;
    if (!value.is_object()) fail(where, "expected {\"matrix\": name, \"kind\": ...}");
    WeightSpec spec;
    spec.matrix = value.value("matrix", std::string());
    auto it = file.matrices.find(spec.matrix);
    if (it == file.matrices.end()) fail(where + "/matrix", "refers to undefined matrix '" + spec.matrix + "'");
    if (it->second.rows() != it->second.cols()) {
      throw DimensionError(where + ": weight matrix '" + spec.matrix + "' is " +
                           std::to_string(it->second.rows()) + "x" +
                           std::to_string(it->second.cols()) + ", not square");
    }
    spec.kind = read_kind(value.value("kind", json("selfadjoint")), where + "/kind");
    file.weights.emplace(name, std::move(spec));
  }
  const json& params = section("params");
  if (params.contains("tol")) {
    if (!params["tol"].is_number() || params["tol"].get<double>() < 0) fail("/params/tol", "expected a nonnegative number");
    file.tol = params["tol"].get<double>();
  }
  if (params.contains("rho")) {
    if (!params["rho"].is_number()) fail("/params/rho", "expected a number");
    file.rho = params["rho"].get<double>();
  }

  static const std::set<std::string> kData{"version", "field",   "matrices", "vectors",
                                           "subspaces", "relations", "weights", "params"};
  for (const auto& [key, value] : root.items()) {
    if (kData.contains(key)) continue;
    if (!is_command(key)) fail("/" + key, "unknown section");
    check_section(file, key, value);
    file.commands.emplace(key, value);
  }
  return file;
}

ProblemFile parse(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path.string());
}

}  // namespace relcalc::cli
