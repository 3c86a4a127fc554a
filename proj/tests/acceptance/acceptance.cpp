// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff every criterion passes.
// Usage: wintgen_acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "wintgen/audit.hpp"
#include "wintgen/classify.hpp"
#include "wintgen/derivations.hpp"
#include "wintgen/parallel.hpp"
#include "wintgen/random_model.hpp"

using namespace wintgen;

namespace {

// Tolerances and limits, fixed here.
constexpr double kTangentAuditSeconds = 60.0;
constexpr double kDerivedAuditSeconds = 600.0;
constexpr double kDdvvFloor = -1e-9;
constexpr int kDdvvRandomModels = 1000;
constexpr std::uint64_t kDdvvSeed = 7;
constexpr int kCommutationRandomModels = 20;
constexpr std::uint64_t kCommutationSeed = 1;
constexpr double kTheoremERelTol = 1e-6;
constexpr int kStructuralModelsPerN = 3;
constexpr std::uint64_t kStructuralSeed = 99;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

GridSpec audit_grid() {
  auto g = GridSpec::default_grid();
  g.m_list = {3};
  return g;
}

void note(const std::string& s) { std::printf("    %s\n", s.c_str()); }

// Distinct models of the grid: m only adds zero shape operators beyond the third.
std::vector<ChoiLuParams> distinct_models(const GridSpec& grid) {
  std::vector<ChoiLuParams> out;
  std::set<std::string> seen;
  for (auto p : grid.points()) {
    p.m = 3;
    if (seen.insert(p.describe()).second) out.push_back(p);
  }
  return out;
}

Outcome tangent_audit(int jobs) {
  const auto rep = audit_tangent_tables(audit_grid(), jobs);
  for (const auto& e : rep.errata) note("erratum " + e.label + " row " + std::to_string(e.row) + " " + e.index);
  return {rep.errata.empty() && rep.seconds < kTangentAuditSeconds,
          fmt("%zu points, %zu checks, %zu errata, %.1f s (limit %.0f s)", rep.points, rep.checks, rep.errata.size(),
              rep.seconds, kTangentAuditSeconds)};
}

Outcome derived_audit(int jobs) {
  const auto rep = audit_derived_tables(audit_grid(), jobs);
  std::size_t unconfirmed = 0;
  for (const auto& e : rep.errata) {
    note(fmt("erratum %s row %d n=%d %s: table %s, brute force %s, operator route %s (%s)", e.label.c_str(), e.row,
             e.params.n, e.index.c_str(), e.table_value.to_string().c_str(), e.brute_value.to_string().c_str(),
             e.operator_value.to_string().c_str(), e.confirmed() ? "confirmed" : "NOT confirmed"));
    if (!e.confirmed()) ++unconfirmed;
  }
  if (std::ofstream os{"acceptance_errata.csv"}) write_errata_csv(os, rep);
  return {unconfirmed == 0 && rep.seconds < kDerivedAuditSeconds,
          fmt("%zu points, %zu checks, %zu errata rows, %zu unconfirmed, %.1f s (limit %.0f s)", rep.points,
              rep.checks, rep.errata.size(), unconfirmed, rep.seconds, kDerivedAuditSeconds)};
}

Outcome ddvv(int jobs) {
  const auto pts = GridSpec::default_grid().points();
  const auto gaps = parallel_map<int>(pts.size(), jobs, [&](std::size_t i) {
    const auto g = ddvv_gap(choi_lu_shape_ops(pts[i]));
    return g.exact && g.exact->is_zero() ? 0 : 1;
  });
  const auto nonzero = static_cast<std::size_t>(std::count(gaps.begin(), gaps.end(), 1));
  Pcg64 rng(kDdvvSeed);
  int negative = 0;
  double min_gap = 1e300;
  for (int i = 0; i < kDdvvRandomModels; ++i) {
    const int n = 4 + i % 2;
    const int m = 2 + (i / 2) % 2;
    const double gap = ddvv_gap(random_model(rng, n, m).cast<double>()).approx;
    min_gap = std::min(min_gap, gap);
    if (gap < kDdvvFloor) ++negative;
  }
  return {nonzero == 0 && negative == 0,
          fmt("frame grid: %zu points, %zu nonzero gaps; random: %d models, min gap %.3g, %d below %.0e",
              pts.size(), nonzero, kDdvvRandomModels, min_gap, negative, kDdvvFloor)};
}

Outcome coefficients() {
  bool all = true;
  std::string summary;
  auto run = [&](const std::string& id, const std::vector<ChoiLuParams>& pts, const std::string& what) {
    std::size_t fails = 0;
    for (const auto& p : pts) {
      const auto v = theorem_point_verdict(id, p);
      if (v.pass) continue;
      if (fails++ < 3)
        note(fmt("%s %s: %s lambda=%s claimed=%s %s", id.c_str(), p.describe().c_str(), v.kind.c_str(),
                 v.lambda.c_str(), v.claimed.c_str(), v.note.c_str()));
    }
    note(fmt("%s %s: %zu points, %zu failing", id.c_str(), what.c_str(), pts.size(), fails));
    all = all && fails == 0;
    summary += fmt("%s%s %s", summary.empty() ? "" : ", ", id.c_str(), fails ? "fail" : "ok");
  };
  run("T9", case_points("T2ii"), "R·C−C·R vs Q(g,R)");
  run("T10", case_points("T10ii"), "R·C vs Q(g,C)");
  run("T25", case_points("T25ii"), "R·C vs Q(Ricc,g∧Ricc)");
  auto mixed = case_points("T27ii");
  std::size_t off_constraint = 0;
  for (const auto& p : mixed)
    if (!(p.H_sq() + p.k_tilde == Rational(2) * p.mu * p.mu / Rational(p.n - 1))) ++off_constraint;
  if (off_constraint) note(fmt("T27 builder points off the H²+k̃ = 2μ²/(n−1) constraint: %zu", off_constraint));
  all = all && off_constraint == 0;
  run("T27", mixed, "R·C−C·R vs Q(Ricc,g∧Ricc)");
  std::vector<ChoiLuParams> pu;
  for (const auto& p : GridSpec::default_grid().points())
    if (p.a.is_zero() && p.b.is_zero() && !p.mu.is_zero() && p.m == 3) pu.push_back(p);
  run("TB", pu, "R·R vs Q(g,R) on pseudo-umbilical frames");
  return {all, summary};
}

Outcome semi_symmetry(int jobs) {
  std::size_t nonzero = 0, total = 0;
  for (const char* cid : {"T2ii", "C1ii"})
    for (const auto& p : case_points(cid)) {
      ++total;
      PointTensors<Rational> pt(choi_lu_shape_ops(p));
      if (!pt.is_zero_tensor(TensorId::RC)) {
        ++nonzero;
        note(std::string("R·C != 0 at ") + cid + " " + p.describe());
      }
    }
  auto grid = generic_grid();
  grid.m_list = {3};
  const auto t0 = Clock::now();
  const auto cr = counterexample_search(TensorId::CR, std::nullopt, grid, jobs);
  const auto diff = counterexample_search(TensorId::RCmCR, std::nullopt, grid, jobs);
  for (const auto& h : cr) note("C·R = 0 at " + h.params.describe());
  for (const auto& h : diff) note("R·C − C·R = 0 at " + h.params.describe());
  return {nonzero == 0 && cr.empty() && diff.empty(),
          fmt("R·C = 0 on %zu/%zu branch points; generic grid: %zu with C·R = 0, %zu with R·C − C·R = 0 (%.1f s)",
              total - nonzero, total, cr.size(), diff.size(), since(t0))};
}

Outcome commutation(int jobs) {
  const auto pts = distinct_models(GridSpec::default_grid());
  const auto t0 = Clock::now();
  const auto bad = parallel_map<int>(pts.size(), jobs, [&](std::size_t i) {
    return commutation_residual(choi_lu_shape_ops(pts[i])).is_zero() ? 0 : 1;
  });
  const auto grid_bad = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
  Pcg64 rng(kCommutationSeed);
  int random_bad = 0;
  for (int i = 0; i < kCommutationRandomModels; ++i) {
    const auto M = random_model(rng, 4 + i % 4, 1 + i % 3);
    if (!commutation_residual(M).is_zero()) {
      ++random_bad;
      // the alternatives are reported, never substituted
      for (auto conv : {CommutationConvention{-1, PTensorForm::Corrected}, CommutationConvention{+1, PTensorForm::Literal},
                        CommutationConvention{-1, PTensorForm::Literal}})
        if (commutation_residual(M, conv).is_zero())
          note(fmt("random model %d closes with sign %+d, %s P", i, conv.extension_sign,
                   conv.p_form == PTensorForm::Literal ? "literal" : "corrected"));
    }
  }
  return {grid_bad == 0 && random_bad == 0,
          fmt("frame grid: %zu models, %zu nonzero; random: %d models, %d nonzero (%.1f s)", pts.size(), grid_bad,
              kCommutationRandomModels, random_bad, since(t0))};
}

Outcome structural() {
  Pcg64 rng(kStructuralSeed);
  std::vector<std::string> failed;
  int checked = 0;
  for (int n = 4; n <= 7; ++n)
    for (int t = 0; t < kStructuralModelsPerN; ++t) {
      const auto M = random_model(rng, n, 1 + t % 3);
      const auto R = gauss_curvature(M);
      const auto ric = ricci_from_R(R);
      const auto C = weyl(R, ric);
      const auto g = SymMatrix<Rational>::identity(n);
      const auto A = random_sym(rng, n);
      auto check = [&](bool ok, const char* what) {
        ++checked;
        if (!ok) failed.push_back(fmt("%s (n=%d)", what, n));
      };
      check(is_pair_skew(R) && has_pair_symmetry(R), "curvature symmetries of R");
      check(satisfies_first_bianchi(R), "first Bianchi identity");
      bool traceless = is_curvature_like(C);
      for (int u = 0; u < n && traceless; ++u)
        for (int v = 0; v < n; ++v) {
          Rational s = 0;
          for (int i = 0; i < n; ++i) s += C(i, u, v, i);
          traceless = traceless && s.is_zero();
        }
      check(traceless, "Weyl tensor trace free");
      check(endo_derive(R, g).is_zero(), "R·g = 0");
      check(tachibana(g, kulkarni_nomizu(g, g)).is_zero(), "Q(g,g∧g) = 0");
      check(tachibana(A, kulkarni_nomizu(A, A)).is_zero(), "Q(A,A∧A) = 0");
    }
  for (const auto& f : failed) note("failed: " + f);
  return {failed.empty(), fmt("%d checks on random models, n = 4..7, %zu failed", checked, failed.size())};
}

Outcome theorem_e(int jobs) {
  VerdictOptions opts;
  opts.jobs = jobs;
  opts.add_case_points = false;
  opts.te_rel_tol = kTheoremERelTol;
  const auto rep = theorem_verdict("TE", GridSpec::default_grid(), opts);
  std::size_t checked = 0, shown = 0;
  std::set<std::string> seen;
  for (const auto& v : rep.points) {
    auto key = v.params;
    key.m = 3;
    if (!seen.insert(key.describe()).second || v.branch == "umbilical") continue;
    ++checked;
    if (!v.pass && shown++ < 3)
      note(fmt("%s: L=%s, formula %s, %s", v.params.describe().c_str(), v.lambda.c_str(), v.claimed.c_str(),
               v.note.c_str()));
  }
  return {rep.passed(), fmt("%zu non-umbilical models, %zu grid rows failing at relative %.0e (%.1f s)", checked,
                            rep.failures, kTheoremERelTol, rep.seconds)};
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = default_jobs();
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"closed-form tangent tables equal brute force", [&] { return tangent_audit(jobs); }},
      {"derived tables: every mismatch confirmed by two routes", [&] { return derived_audit(jobs); }},
      {"DDVV equality on frames, inequality on random models", [&] { return ddvv(jobs); }},
      {"coefficient identities on their branch grids", [] { return coefficients(); }},
      {"Weyl semi-symmetric branches; C·R, R·C−C·R vanish only when umbilical", [&] { return semi_symmetry(jobs); }},
      {"commutation identity residual vanishes", [&] { return commutation(jobs); }},
      {"structural invariants", [] { return structural(); }},
      {"C·C coefficient against the inf K formula", [&] { return theorem_e(jobs); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int num = static_cast<int>(k) + 1;
    if (!only.empty() && !only.count(num)) continue;
    std::printf("criterion %d: %s\n", num, criteria[k].first);
    std::fflush(stdout);
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", num, o.detail.c_str(), since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
