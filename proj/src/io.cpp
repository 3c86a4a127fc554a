#include "wintgen/io.hpp"

#include <fstream>
#include <sstream>

#include "wintgen/parallel.hpp"

namespace wintgen {

using nlohmann::json;

Rational rational_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_unsigned()) {
      auto u = v.get<unsigned long long>();
      return Rational::parse(std::to_string(u));
    }
    if (v.is_number_float()) return Rational::from_double_decimal(v.get<double>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a number or a rational string");
}

namespace {

int int_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<Rational> rational_list(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw InputError(where + ": expected a non-empty array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(rational_from_json(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw InputError(where + ": expected a non-empty array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError(where + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ModelFile parse_model(const json& j) {
  if (!j.is_object()) throw InputError("model file must be a JSON object");
  ModelFile mf;
  mf.n = int_field(j, "n");
  mf.m = int_field(j, "m");
  if (mf.n < 4 || mf.n > kMaxDim) throw InputError("n must lie in 4.." + std::to_string(kMaxDim));
  if (mf.m < 1) throw InputError("m must be at least 1");
  if (!j.contains("k_tilde")) throw InputError("missing field 'k_tilde'");
  mf.k_tilde = rational_from_json(j.at("k_tilde"), "k_tilde");
  const bool has_ops = j.contains("shape_operators");
  const bool has_cl = j.contains("choi_lu");
  if (has_ops == has_cl) throw InputError("exactly one of 'shape_operators' and 'choi_lu' is required");
  if (has_cl) {
    const auto& c = j.at("choi_lu");
    if (!c.is_object()) throw InputError("'choi_lu' must be an object");
    ChoiLuParams p;
    p.n = mf.n;
    p.m = mf.m;
    p.k_tilde = mf.k_tilde;
    for (const char* key : {"a", "b", "c", "mu"})
      if (!c.contains(key)) throw InputError(std::string("choi_lu: missing '") + key + "'");
    p.a = rational_from_json(c.at("a"), "choi_lu.a");
    p.b = rational_from_json(c.at("b"), "choi_lu.b");
    p.c = rational_from_json(c.at("c"), "choi_lu.c");
    p.mu = rational_from_json(c.at("mu"), "choi_lu.mu");
    try {
      p.validate();
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    mf.choi_lu = p;
    return mf;
  }
  const auto& ops = j.at("shape_operators");
  if (!ops.is_array() || static_cast<int>(ops.size()) != mf.m)
    throw InputError("'shape_operators' must hold exactly m matrices");
  std::vector<SymMatrix<Rational>> mats;
  for (int al = 0; al < mf.m; ++al) {
    const auto& M = ops[al];
    const std::string where = "shape_operators[" + std::to_string(al) + "]";
    if (!M.is_array() || static_cast<int>(M.size()) != mf.n) throw InputError(where + " must have n rows");
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < mf.n; ++i) {
      if (!M[i].is_array() || static_cast<int>(M[i].size()) != mf.n)
        throw InputError(where + " row " + std::to_string(i + 1) + " must have n entries");
      std::vector<Rational> row;
      for (int k = 0; k < mf.n; ++k)
        row.push_back(rational_from_json(M[i][k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
      rows.push_back(std::move(row));
    }
    try {
      mats.push_back(SymMatrix<Rational>::from_rows(rows));
    } catch (const std::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  mf.shape_operators = std::move(mats);
  return mf;
}

SubmanifoldModel<Rational> ModelFile::build() const {
  if (choi_lu) return choi_lu_shape_ops(*choi_lu);
  return SubmanifoldModel<Rational>(n, m, k_tilde, *shape_operators);
}

ModelFile parse_model_text(const std::string& text) { return parse_model(parse_text(text)); }
ModelFile load_model(const std::string& path) { return parse_model_text(read_file(path)); }

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

RunConfig parse_run_config(const json& j) {
  if (!j.is_object()) throw InputError("run config must be a JSON object");
  RunConfig rc;
  rc.parallelism = default_jobs();
  if (j.contains("mode")) {
    auto m = j.at("mode").is_string() ? parse_mode(j.at("mode").get<std::string>()) : std::nullopt;
    if (!m) throw InputError("mode must be \"exact\" or \"float\"");
    rc.mode = *m;
  }
  if (j.contains("tol")) {
    if (!j.at("tol").is_number() || !(j.at("tol").get<double>() > 0)) throw InputError("tol must be a positive number");
    rc.tol = j.at("tol").get<double>();
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (!g.is_object()) throw InputError("grid must be an object");
    for (const auto& [key, value] : g.items()) {
      auto vals = rational_list(value, "grid." + key);
      if (key == "a") rc.grid.a = vals;
      else if (key == "b") rc.grid.b = vals;
      else if (key == "c") rc.grid.c = vals;
      else if (key == "mu") rc.grid.mu = vals;
      else if (key == "k_tilde") rc.grid.k_tilde = vals;
      else throw InputError("grid: unknown variable '" + key + "'");
    }
  }
  if (j.contains("n_list")) rc.grid.n_list = int_list(j.at("n_list"), "n_list");
  if (j.contains("m_list")) rc.grid.m_list = int_list(j.at("m_list"), "m_list");
  for (int n : rc.grid.n_list)
    if (n < 4 || n > kMaxDim) throw InputError("n_list: n must lie in 4.." + std::to_string(kMaxDim));
  for (int m : rc.grid.m_list)
    if (m < 2) throw InputError("m_list: Choi-Lu grids need m >= 2");
  if (j.contains("output")) {
    auto o = j.at("output").is_string() ? parse_output(j.at("output").get<std::string>()) : std::nullopt;
    if (!o) throw InputError("output must be \"json\" or \"csv\"");
    rc.output = *o;
  }
  if (j.contains("parallelism")) {
    const auto& p = j.at("parallelism");
    if (!p.is_number_integer() || p.get<int>() < 1) throw InputError("parallelism must be a positive integer");
    rc.parallelism = p.get<int>();
  }
  return rc;
}

RunConfig load_run_config(const std::string& path) { return parse_run_config(parse_text(read_file(path))); }

json to_json(const ChoiLuParams& p) {
  return {{"n", p.n},
          {"m", p.m},
          {"a", p.a.to_string()},
          {"b", p.b.to_string()},
          {"c", p.c.to_string()},
          {"mu", p.mu.to_string()},
          {"k_tilde", p.k_tilde.to_string()}};
}

}  // namespace wintgen
