#include "wintgen/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wintgen/audit.hpp"
#include "wintgen/classify.hpp"
#include "wintgen/derivations.hpp"
#include "wintgen/io.hpp"
#include "wintgen/parallel.hpp"
#include "wintgen/random_model.hpp"

namespace wintgen {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\n";
}

std::string dbl(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string index_string(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

struct Component {
  std::vector<int> index;  // 1-based
  std::string value;
};

template <class S, std::size_t Rank>
std::vector<Component> components_of(const Tensor<S, Rank>& t) {
  std::vector<Component> out;
  for_each_index<Rank>(t.dim(), [&](const std::array<int, Rank>& i) {
    const S& v = t[i];
    if (is_zero(v)) return;
    std::vector<int> idx(i.begin(), i.end());
    for (auto& k : idx) ++k;
    out.push_back({idx, scalar_string(v)});
  });
  return out;
}

template <class S>
std::vector<Component> components_of(const SymMatrix<S>& t) {
  std::vector<Component> out;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      if (!is_zero(t(i, j))) out.push_back({{i + 1, j + 1}, scalar_string(t(i, j))});
  return out;
}

template <class S>
std::vector<Component> components_of(const NormalTensor4<S>& t) {
  std::vector<Component> out;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int a = 0; a < t.codim(); ++a)
        for (int b = 0; b < t.codim(); ++b)
          if (!is_zero(t(i, j, a, b))) out.push_back({{i + 1, j + 1, a + 1, b + 1}, scalar_string(t(i, j, a, b))});
  return out;
}

const std::vector<std::string>& compute_selectors() {
  static const std::vector<std::string> v{"R",  "Ricc", "C",   "Rperp", "gwRicc", "RC",  "CR",   "RR", "CC",
                                          "QgR", "QgC", "QgGR", "QSR",  "QSC",    "QSGS", "P", "RCmCR", "RRicc",
                                          "QgRicc"};
  return v;
}

template <class S>
std::vector<Component> select_components(const SubmanifoldModel<S>& model, const std::string& sel) {
  PointTensors<S> pt(model);
  if (sel == "R") return components_of(pt.R());
  if (sel == "Ricc") return components_of(pt.ricci().ricc);
  if (sel == "C") return components_of(pt.C());
  if (sel == "gwRicc") return components_of(pt.g_wedge_ricc());
  if (sel == "Rperp") return components_of(normal_curvature(model));
  if (sel == "P") return components_of(p_tensor(pt.R(), pt.ricci()));
  const auto id = parse_selector(sel);
  if (!id) throw InputError("unknown selector '" + sel + "'");
  if (rank_of(*id) == 6) return components_of(pt.tensor6(*id));
  return components_of(pt.tensor4(*id));
}

template <class S>
json summary_of(const SubmanifoldModel<S>& model) {
  const auto R = gauss_curvature(model);
  const auto ric = ricci_from_R(R);
  const auto Rp = normal_curvature(model);
  const auto inv = scalar_invariants(model, R, ric, Rp);
  const auto mc = mean_curvature(model);
  return {{"tau", scalar_string(ric.tau)},
          {"rho", scalar_string(inv.rho)},
          {"rho_perp", inv.rho_perp.to_string()},
          {"H_sq", scalar_string(mc.H_sq)},
          {"ddvv_gap", ddvv_gap(model).to_string()},
          {"umbilicity", to_string(classify_umbilicity(model))}};
}

json model_header(const ModelFile& mf) {
  json j{{"n", mf.n}, {"m", mf.m}, {"k_tilde", mf.k_tilde.to_string()}};
  if (mf.choi_lu) j["choi_lu"] = to_json(*mf.choi_lu);
  return j;
}

struct Common {
  std::string mode = "exact";
  double tol = kFloatTol;
  std::string out = "json";
  int jobs = 0;
};

Mode mode_of(const Common& c) {
  auto m = parse_mode(c.mode);
  if (!m) throw InputError("--mode must be exact or float");
  return *m;
}

OutputFormat output_of(const std::string& s) {
  auto o = parse_output(s);
  if (!o) throw InputError("--out must be json or csv");
  return *o;
}

// ---- compute ----

int cmd_compute(const std::string& model_path, const std::string& sel, const Common& c, std::ostream& out) {
  const ModelFile mf = load_model(model_path);
  const auto model = mf.build();
  bool known = false;
  for (const auto& s : compute_selectors()) known = known || s == sel;
  if (!known) throw InputError("unknown selector '" + sel + "'");
  std::vector<Component> comps;
  json summary;
  if (mode_of(c) == Mode::Exact) {
    comps = select_components(model, sel);
    summary = summary_of(model);
  } else {
    const auto md = model.cast<double>();
    comps = select_components(md, sel);
    summary = summary_of(md);
  }
  if (output_of(c.out) == OutputFormat::Json) {
    json j{{"selector", sel}, {"mode", c.mode}, {"model", model_header(mf)}, {"summary", summary}};
    json arr = json::array();
    for (const auto& comp : comps) arr.push_back({{"index", comp.index}, {"value", comp.value}});
    j["components"] = arr;
    out << j.dump(2) << "\n";
  } else {
    out << "# selector=" << sel << " tau=" << summary["tau"].get<std::string>()
        << " rho=" << summary["rho"].get<std::string>() << " rho_perp=" << summary["rho_perp"].get<std::string>()
        << " H_sq=" << summary["H_sq"].get<std::string>() << " ddvv_gap=" << summary["ddvv_gap"].get<std::string>()
        << " umbilicity=" << summary["umbilicity"].get<std::string>() << "\n";
    csv_row(out, {"index", "value"});
    for (const auto& comp : comps) csv_row(out, {index_string(comp.index), comp.value});
  }
  return kExitPass;
}

// ---- conditions ----

template <class S>
int emit_conditions(const SubmanifoldModel<S>& model, const Common& c, const ModelFile& mf, std::ostream& out) {
  auto rows = condition_matrix(model, c.tol);
  auto lam = [](const DependenceVerdict<S>& v) { return v.lambda ? scalar_string(*v.lambda) : std::string(); };
  if (output_of(c.out) == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"left", to_string(r.left)},
                     {"right", to_string(r.right)},
                     {"condition", r.named ? to_string(*r.named) : ""},
                     {"kind", to_string(r.verdict.kind)},
                     {"dependent", r.verdict.dependent()},
                     {"lambda", lam(r.verdict)},
                     {"residual", scalar_string(r.verdict.residual_max)}});
    out << json{{"mode", c.mode}, {"model", model_header(mf)}, {"conditions", arr}}.dump(2) << "\n";
  } else {
    csv_row(out, {"left", "right", "condition", "kind", "dependent", "lambda", "residual"});
    for (const auto& r : rows)
      csv_row(out, {to_string(r.left), to_string(r.right), r.named ? to_string(*r.named) : "",
                    to_string(r.verdict.kind), r.verdict.dependent() ? "1" : "0", lam(r.verdict),
                    scalar_string(r.verdict.residual_max)});
  }
  return kExitPass;
}

int cmd_conditions(const std::string& model_path, const Common& c, std::ostream& out) {
  const ModelFile mf = load_model(model_path);
  const auto model = mf.build();
  if (mode_of(c) == Mode::Exact) return emit_conditions(model, c, mf, out);
  return emit_conditions(model.cast<double>(), c, mf, out);
}

// ---- ddvv ----

struct DdvvOptions {
  std::string model;
  int random = 0;
  int n = 4;
  int m = 2;
  std::uint64_t seed = 7;
};

int cmd_ddvv(const DdvvOptions& o, const Common& c, std::ostream& out) {
  const bool json_out = output_of(c.out) == OutputFormat::Json;
  if (!o.model.empty()) {
    const ModelFile mf = load_model(o.model);
    const RealValue gap = ddvv_gap(mf.build());
    const bool neg = gap.approx < -c.tol;
    if (json_out) out << json{{"model", model_header(mf)}, {"gap", gap.to_string()}, {"negative", neg}}.dump(2) << "\n";
    else {
      csv_row(out, {"gap", "negative"});
      csv_row(out, {gap.to_string(), neg ? "1" : "0"});
    }
    return neg ? kExitFail : kExitPass;
  }
  if (o.n < 4 || o.n > kMaxDim) throw InputError("--n must lie in 4.." + std::to_string(kMaxDim));
  if (o.m < 1) throw InputError("--m must be at least 1");
  Pcg64 rng(o.seed);
  double min_gap = std::numeric_limits<double>::infinity(), sum = 0.0;
  int negatives = 0, exact = 0;
  for (int i = 0; i < o.random; ++i) {
    const RealValue gap = ddvv_gap(random_model(rng, o.n, o.m));
    if (gap.exact) ++exact;
    min_gap = std::min(min_gap, gap.approx);
    sum += gap.approx;
    if (gap.approx < -c.tol) ++negatives;
  }
  const double mean = o.random > 0 ? sum / o.random : 0.0;
  if (o.random == 0) min_gap = 0.0;
  if (json_out) {
    out << json{{"count", o.random}, {"n", o.n},          {"m", o.m},        {"seed", o.seed},
                {"tol", c.tol},      {"min_gap", min_gap}, {"mean_gap", mean}, {"negative", negatives},
                {"exact_gaps", exact}}
               .dump(2)
        << "\n";
  } else {
    csv_row(out, {"count", "n", "m", "seed", "min_gap", "mean_gap", "negative"});
    csv_row(out, {std::to_string(o.random), std::to_string(o.n), std::to_string(o.m), std::to_string(o.seed),
                  dbl(min_gap), dbl(mean), std::to_string(negatives)});
  }
  return negatives == 0 ? kExitPass : kExitFail;
}

// ---- grid resolution ----

struct GridChoice {
  GridSpec grid;
  bool is_default = true;
  std::optional<RunConfig> config;
};

GridChoice resolve_grid(const std::string& grid_arg) {
  GridChoice g;
  if (grid_arg.empty() || grid_arg == "default") {
    g.grid = GridSpec::default_grid();
    return g;
  }
  g.config = load_run_config(grid_arg);
  g.grid = g.config->grid;
  g.is_default = false;
  return g;
}

// Flags given on the command line win over the config file.
void merge_config(Common& c, const GridChoice& g, const CLI::App& sub) {
  if (!g.config) return;
  if (sub.count("--mode") == 0) c.mode = g.config->mode == Mode::Exact ? "exact" : "float";
  if (sub.count("--tol") == 0) c.tol = g.config->tol;
  if (sub.count("--out") == 0) c.out = g.config->output == OutputFormat::Json ? "json" : "csv";
  if (sub.count("--jobs") == 0) c.jobs = g.config->parallelism;
}

json params_json(const ChoiLuParams& p) { return to_json(p); }

std::vector<std::string> params_fields(const ChoiLuParams& p) {
  return {std::to_string(p.n), std::to_string(p.m), p.a.to_string(),  p.b.to_string(),
          p.c.to_string(),     p.mu.to_string(),    p.k_tilde.to_string()};
}

// ---- verify: theorems ----

int verify_theorem(const std::string& id, const GridSpec& grid, const Common& c, bool failures_only,
                   std::ostream& out, std::ostream& err) {
  VerdictOptions vo;
  vo.jobs = c.jobs;
  const auto rep = theorem_verdict(id, grid, vo);
  if (output_of(c.out) == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& v : rep.points) {
      if (failures_only && v.pass) continue;
      rows.push_back({{"params", params_json(v.params)},
                      {"branch", v.branch},
                      {"predicted", v.predicted},
                      {"observed", v.observed},
                      {"kind", v.kind},
                      {"lambda", v.lambda},
                      {"claimed_lambda", v.claimed},
                      {"residual", v.residual},
                      {"note", v.note},
                      {"pass", v.pass}});
    }
    out << json{{"id", rep.id},
                {"statement", rep.statement},
                {"points", rep.points.size()},
                {"failures", rep.failures},
                {"passed", rep.passed()},
                {"seconds", rep.seconds},
                {"rows", rows}}
               .dump(2)
        << "\n";
  } else {
    csv_row(out, {"theorem_id", "n", "m", "a", "b", "c", "mu", "k_tilde", "branch", "predicted", "observed", "kind",
                  "lambda", "claimed_lambda", "residual", "pass", "note"});
    for (const auto& v : rep.points) {
      if (failures_only && v.pass) continue;
      auto f = params_fields(v.params);
      std::vector<std::string> row{rep.id};
      row.insert(row.end(), f.begin(), f.end());
      row.insert(row.end(), {v.branch, v.predicted ? "1" : "0", v.observed ? "1" : "0", v.kind, v.lambda, v.claimed,
                             v.residual, v.pass ? "1" : "0", v.note});
      csv_row(out, row);
    }
  }
  err << rep.id << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.points.size() << " points, "
      << rep.failures << " failing)\n";
  return rep.passed() ? kExitPass : kExitFail;
}

// ---- verify: commutation identity ----

int verify_commutation(const GridSpec& grid, const Common& c, std::uint64_t seed, std::ostream& out,
                       std::ostream& err) {
  struct Row {
    std::string source;
    std::string params;
    json params_json;
    std::string residual;
  };
  const auto pts = grid.points();
  std::vector<SubmanifoldModel<Rational>> models;
  std::vector<Row> rows;
  for (const auto& p : pts) {
    models.push_back(choi_lu_shape_ops(p));
    rows.push_back({"grid", p.describe(), params_json(p), ""});
  }
  Pcg64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    const int n = 4 + i % 4, m = 1 + i % 3;
    models.push_back(random_model(rng, n, m));
    rows.push_back({"random", "n=" + std::to_string(n) + " m=" + std::to_string(m) + " seed=" + std::to_string(seed) +
                                  " draw=" + std::to_string(i),
                    json{{"n", n}, {"m", m}, {"seed", seed}, {"draw", i}}, ""});
  }
  const std::vector<CommutationConvention> conventions{
      {+1, PTensorForm::Corrected}, {-1, PTensorForm::Corrected}, {+1, PTensorForm::Literal}, {-1, PTensorForm::Literal}};
  auto residual_under = [&](const CommutationConvention& conv) {
    return parallel_map<Rational>(models.size(), c.jobs, [&](std::size_t i) {
      return max_abs_component(commutation_residual(models[i], conv)).first;
    });
  };
  auto all_zero = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
  };
  const auto primary = residual_under(conventions[0]);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    rows[i].residual = primary[i].to_string();
    if (!primary[i].is_zero()) ++failures;
  }
  // The alternatives are only tried when the primary convention leaves a residual.
  int working = all_zero(primary) ? 0 : -1;
  for (std::size_t k = 1; working < 0 && k < conventions.size(); ++k)
    if (all_zero(residual_under(conventions[k]))) working = static_cast<int>(k);
  auto conv_name = [&](int k) {
    if (k < 0) return std::string("none");
    return std::string(conventions[k].extension_sign > 0 ? "+" : "-") + "ext," +
           (conventions[k].p_form == PTensorForm::Corrected ? "corrected P" : "literal P");
  };
  if (output_of(c.out) == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"source", r.source}, {"params", r.params_json}, {"residual", r.residual}});
    out << json{{"id", "identity:commutation"},
                {"models", models.size()},
                {"failures", failures},
                {"convention", conv_name(working)},
                {"passed", working >= 0},
                {"rows", arr}}
               .dump(2)
        << "\n";
  } else {
    csv_row(out, {"source", "params", "residual_max"});
    for (const auto& r : rows) csv_row(out, {r.source, r.params, r.residual});
  }
  err << "identity:commutation: " << (working >= 0 ? "PASS" : "FAIL") << " (" << models.size()
      << " models, convention " << conv_name(working) << ")\n";
  return working >= 0 ? kExitPass : kExitFail;
}

// ---- verify: table audit ----

int verify_audit(GridSpec grid, bool is_default, const Common& c, const std::string& errata_path, std::ostream& out,
                 std::ostream& err) {
  if (is_default) grid.m_list = {3};
  const auto tangent = audit_tangent_tables(grid, c.jobs);
  const auto derived = audit_derived_tables(grid, c.jobs);
  const bool pass = tangent.errata.empty() && derived.all_confirmed();
  if (!errata_path.empty()) {
    std::ofstream f(errata_path);
    if (!f) throw InputError("cannot write " + errata_path);
    AuditReport all = tangent;
    all.errata.insert(all.errata.end(), derived.errata.begin(), derived.errata.end());
    write_errata_csv(f, all);
  }
  auto part = [](const AuditReport& r) {
    std::size_t confirmed = 0;
    for (const auto& e : r.errata) confirmed += e.confirmed() ? 1 : 0;
    return json{{"points", r.points},         {"checks", r.checks},
                {"errata", r.errata.size()},  {"confirmed_errata", confirmed},
                {"omissions", r.omissions.size()}, {"seconds", r.seconds}};
  };
  if (output_of(c.out) == OutputFormat::Json) {
    out << json{{"id", "audit:tables"}, {"tangent", part(tangent)}, {"derived", part(derived)}, {"passed", pass}}.dump(2)
        << "\n";
  } else {
    AuditReport all = tangent;
    all.errata.insert(all.errata.end(), derived.errata.begin(), derived.errata.end());
    write_errata_csv(out, all);
  }
  err << "audit:tables: " << (pass ? "PASS" : "FAIL") << " (tangent errata " << tangent.errata.size()
      << ", derived errata " << derived.errata.size() << (derived.all_confirmed() ? ", all confirmed" : ", unconfirmed")
      << ")\n";
  return pass ? kExitPass : kExitFail;
}

// ---- sweep ----

struct SweepOptions {
  std::string left, right;
  bool counterexamples = false;
  bool generic = false;
};

TensorId tensor_arg(const std::string& s, const char* flag) {
  auto id = parse_selector(s);
  if (!id) throw InputError(std::string(flag) + ": unknown tensor '" + s + "'");
  return *id;
}

int cmd_sweep(const SweepOptions& o, GridSpec grid, const Common& c, std::ostream& out, std::ostream& err) {
  const bool json_out = output_of(c.out) == OutputFormat::Json;
  if (o.counterexamples) {
    if (o.left.empty()) throw InputError("--counterexamples needs --left");
    const TensorId l = tensor_arg(o.left, "--left");
    std::optional<TensorId> r;
    if (!o.right.empty()) r = tensor_arg(o.right, "--right");
    if (r && rank_of(*r) != rank_of(l)) throw InputError("--left and --right have different ranks");
    if (o.generic) grid = generic_grid();
    const auto hits = counterexample_search(l, r, grid, c.jobs);
    if (json_out) {
      json arr = json::array();
      for (const auto& h : hits)
        arr.push_back({{"params", params_json(h.params)}, {"kind", to_string(h.kind)}, {"lambda", h.lambda}});
      out << json{{"left", to_string(l)}, {"right", r ? to_string(*r) : "0"}, {"hits", arr}}.dump(2) << "\n";
    } else {
      csv_row(out, {"n", "m", "a", "b", "c", "mu", "k_tilde", "kind", "lambda"});
      for (const auto& h : hits) {
        auto f = params_fields(h.params);
        f.push_back(to_string(h.kind));
        f.push_back(h.lambda);
        csv_row(out, f);
      }
    }
    err << "counterexamples: " << hits.size() << "\n";
    return hits.empty() ? kExitPass : kExitFail;
  }
  std::optional<TensorId> lf, rf;
  if (!o.left.empty()) lf = tensor_arg(o.left, "--left");
  if (!o.right.empty()) rf = tensor_arg(o.right, "--right");
  const auto pts = grid.points();
  using Rows = std::vector<ConditionReport<Rational>>;
  auto all = parallel_map<Rows>(pts.size(), c.jobs, [&](std::size_t i) {
    PointTensors<Rational> pt(choi_lu_shape_ops(pts[i]));
    Rows rows;
    if (lf && rf) {
      rows.push_back({*lf, *rf, std::nullopt, dependence_of(pt, *lf, *rf)});
      return rows;
    }
    for (auto& r : condition_matrix(pt))
      if ((!lf || r.left == *lf) && (!rf || r.right == *rf)) rows.push_back(r);
    return rows;
  });
  if (json_out) {
    json arr = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (const auto& r : all[i])
        arr.push_back({{"params", params_json(pts[i])},
                       {"left", to_string(r.left)},
                       {"right", to_string(r.right)},
                       {"kind", to_string(r.verdict.kind)},
                       {"lambda", r.verdict.lambda ? r.verdict.lambda->to_string() : ""}});
    out << json{{"rows", arr}}.dump(2) << "\n";
  } else {
    csv_row(out, {"n", "m", "a", "b", "c", "mu", "k_tilde", "left", "right", "kind", "lambda"});
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (const auto& r : all[i]) {
        auto f = params_fields(pts[i]);
        f.insert(f.end(), {to_string(r.left), to_string(r.right), to_string(r.verdict.kind),
                           r.verdict.lambda ? r.verdict.lambda->to_string() : ""});
        csv_row(out, f);
      }
  }
  return kExitPass;
}

void add_common(CLI::App* sub, Common& c, bool with_jobs) {
  sub->add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--tol", c.tol, "relative tolerance in float mode")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  if (with_jobs) sub->add_option("--jobs", c.jobs, "worker threads (default: WINTGEN_JOBS or all cores)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pointwise curvature verification for Wintgen ideal submanifolds", "wintgen"};
  app.require_subcommand(1);
  Common c;
  std::string model_path, selector, grid_arg = "default", theorem, errata_path;
  std::uint64_t seed = 1;
  bool failures_only = false;
  DdvvOptions dd;
  SweepOptions sw;

  auto* compute = app.add_subcommand("compute", "list the nonzero components of one tensor");
  compute->add_option("--model", model_path, "model JSON file")->required();
  compute->add_option("--select,selector", selector, "tensor selector")->required();
  add_common(compute, c, false);

  auto* verify = app.add_subcommand("verify", "check a theorem, the commutation identity or the tables on a grid");
  verify->add_option("id", theorem, "T1..T27, C1..C9, TB, TC, TD, TE, identity:commutation, audit:tables")->required();
  verify->add_option("--grid", grid_arg, "run config JSON or 'default'");
  verify->add_option("--seed", seed, "seed of the random models (identity:commutation)");
  verify->add_option("--errata", errata_path, "write the errata CSV here (audit:tables)");
  verify->add_flag("--failures-only", failures_only, "list failing points only");
  add_common(verify, c, true);

  auto* conditions = app.add_subcommand("conditions", "evaluate the pseudo-symmetry condition matrix of a model");
  conditions->add_option("--model", model_path, "model JSON file")->required();
  add_common(conditions, c, false);

  auto* ddvv = app.add_subcommand("ddvv", "DDVV gap of a model or of random models");
  auto* ddvv_model = ddvv->add_option("--model", dd.model, "model JSON file");
  auto* ddvv_random = ddvv->add_option("--random", dd.random, "number of random models")->check(CLI::NonNegativeNumber);
  ddvv_model->excludes(ddvv_random);
  ddvv->add_option("--n", dd.n, "tangent dimension of random models");
  ddvv->add_option("--m", dd.m, "codimension of random models");
  ddvv->add_option("--seed", dd.seed, "seed");
  add_common(ddvv, c, false);

  auto* sweep = app.add_subcommand("sweep", "condition verdicts over a grid, or a counterexample search");
  sweep->add_option("--grid", grid_arg, "run config JSON or 'default'");
  sweep->add_option("--left", sw.left, "left tensor selector (RR, RC, CR, CC, RCmCR, RRicc)");
  sweep->add_option("--right", sw.right, "right tensor selector (QgR, QgC, QgGR, QSR, QSC, QSGS, QgRicc)");
  sweep->add_flag("--counterexamples", sw.counterexamples,
                  "report non-umbilical points outside the special branches where the condition holds");
  sweep->add_flag("--generic", sw.generic, "use the a,b != 0 grid");
  add_common(sweep, c, true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (c.jobs <= 0) c.jobs = default_jobs();
    if (*compute) return cmd_compute(model_path, selector, c, out);
    if (*conditions) return cmd_conditions(model_path, c, out);
    if (*ddvv) {
      if (dd.model.empty() && ddvv->count("--random") == 0) throw InputError("ddvv needs --model or --random");
      return cmd_ddvv(dd, c, out);
    }
    if (*verify) {
      const GridChoice g = resolve_grid(grid_arg);
      merge_config(c, g, *verify);
      if (c.jobs <= 0) c.jobs = default_jobs();
      if (theorem == "identity:commutation") return verify_commutation(g.grid, c, seed, out, err);
      if (theorem == "audit:tables") return verify_audit(g.grid, g.is_default, c, errata_path, out, err);
      try {
        theorem_info(theorem);
      } catch (const UnknownTheoremError& e) {
        throw InputError(e.what());
      }
      return verify_theorem(theorem, g.grid, c, failures_only, out, err);
    }
    if (*sweep) {
      const GridChoice g = resolve_grid(grid_arg);
      merge_config(c, g, *sweep);
      if (c.jobs <= 0) c.jobs = default_jobs();
      return cmd_sweep(sw, g.grid, c, out, err);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConstraintError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace wintgen
