#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wintgen/choi_lu.hpp"
#include "wintgen/curvature.hpp"
#include "wintgen/grid.hpp"

namespace wintgen {

// Malformed or inconsistent input files. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers, "p/q" strings, decimal strings and JSON numbers (read by their shortest
// decimal representation).
Rational rational_from_json(const nlohmann::json& v, const std::string& where);

// {"n":4,"m":3,"k_tilde":"0", "choi_lu":{"a":..,"b":..,"c":..,"mu":..}}
// {"n":4,"m":2,"k_tilde":0, "shape_operators":[[[..n..],..n..],..m..]}
struct ModelFile {
  int n = 0;
  int m = 0;
  Rational k_tilde;
  std::optional<std::vector<SymMatrix<Rational>>> shape_operators;
  std::optional<ChoiLuParams> choi_lu;

  SubmanifoldModel<Rational> build() const;
};

ModelFile parse_model(const nlohmann::json& j);
ModelFile parse_model_text(const std::string& text);
ModelFile load_model(const std::string& path);

enum class Mode { Exact, Float };
enum class OutputFormat { Json, Csv };

// {"mode":"exact","tol":1e-9,"grid":{"a":[..],"b":[..],"c":[..],"mu":[..],"k_tilde":[..]},
//  "n_list":[4,5],"m_list":[3],"output":"csv","parallelism":2}
// Missing keys keep the defaults (default grid, exact, json, default_jobs()).
struct RunConfig {
  Mode mode = Mode::Exact;
  double tol = 1e-9;  // float mode only
  GridSpec grid = GridSpec::default_grid();
  OutputFormat output = OutputFormat::Json;
  int parallelism = 1;
};

RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

std::optional<Mode> parse_mode(const std::string& s);
std::optional<OutputFormat> parse_output(const std::string& s);

nlohmann::json to_json(const ChoiLuParams& p);

}  // namespace wintgen
