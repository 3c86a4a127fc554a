#include "wintgen/audit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

#include "wintgen/component_tables.hpp"
#include "wintgen/curvature.hpp"
#include "wintgen/derivations.hpp"
#include "wintgen/operator_route.hpp"
#include "wintgen/parallel.hpp"

namespace wintgen {

bool AuditReport::all_confirmed() const {
  return std::all_of(errata.begin(), errata.end(), [](const ErratumRow& r) { return r.confirmed(); });
}

std::size_t AuditReport::errata_for(const std::vector<std::string>& labels) const {
  return static_cast<std::size_t>(std::count_if(errata.begin(), errata.end(), [&](const ErratumRow& r) {
    return std::find(labels.begin(), labels.end(), r.label) != labels.end();
  }));
}

std::string format_index(const std::vector<int>& zero_based, std::size_t split) {
  std::ostringstream os;
  os << '(';
  for (std::size_t s = 0; s < zero_based.size(); ++s) {
    if (s > 0) os << (s == split ? ';' : ',');
    os << zero_based[s] + 1;
  }
  os << ')';
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Assign {
  int i = -1, j = -1, k = -1, x = -1, y = -1;
};

int resolve(Slot s, const Assign& a) {
  switch (s) {
    case Slot::E1: return 0;
    case Slot::E2: return 1;
    case Slot::Ei: return a.i;
    case Slot::Ej: return a.j;
    case Slot::Ek: return a.k;
    case Slot::AnyX: return a.x;
    case Slot::AnyY: return a.y;
  }
  return -1;
}

// Every assignment of distinct indices ≥ 3 to Ei/Ej/Ek and arbitrary indices to AnyX/AnyY,
// restricted to the slots that actually occur.
template <class F>
void for_each_instance(int n, const std::vector<Slot>& used, F&& f) {
  auto has = [&](Slot s) { return std::find(used.begin(), used.end(), s) != used.end(); };
  const bool ui = has(Slot::Ei), uj = has(Slot::Ej), uk = has(Slot::Ek);
  const bool ux = has(Slot::AnyX), uy = has(Slot::AnyY);
  auto range = [&](bool used_slot, int lo) {
    std::vector<int> r;
    if (!used_slot) return std::vector<int>{-1};
    for (int v = lo; v < n; ++v) r.push_back(v);
    return r;
  };
  Assign a;
  for (int i : range(ui, 2))
    for (int j : range(uj, 2)) {
      if (j >= 0 && j == i) continue;
      for (int k : range(uk, 2)) {
        if (k >= 0 && (k == i || k == j)) continue;
        for (int x : range(ux, 0))
          for (int y : range(uy, 0)) {
            a.i = i;
            a.j = j;
            a.k = k;
            a.x = x;
            a.y = y;
            f(a);
          }
      }
    }
}

struct Hit {
  std::string index;
  Rational closed, brute, op;
};

// Mismatches of one (group, row) at one grid point.
struct RowHits {
  int group = 0;
  std::string label;
  int row = 0;
  Hit first;
  std::size_t entries = 0;
  std::size_t confirmed = 0;
};

struct OmitHits {
  int group = 0;
  std::string label;
  std::string index;
  Rational brute;
  std::size_t components = 0;
};

struct PointResult {
  std::size_t checks = 0;
  std::vector<RowHits> rows;
  std::vector<OmitHits> omissions;
};

class HitSink {
 public:
  HitSink(int group, std::string label, int row) : group_(group), label_(std::move(label)), row_(row) {}

  void add(const std::string& index, const Rational& closed, const Rational& brute, const Rational& op) {
    if (hits_.entries == 0) {
      hits_.group = group_;
      hits_.label = label_;
      hits_.row = row_;
      hits_.first = {index, closed, brute, op};
    }
    ++hits_.entries;
    if (op == brute) ++hits_.confirmed;
  }

  void flush(PointResult& out) {
    if (hits_.entries > 0) out.rows.push_back(hits_);
  }

 private:
  int group_;
  std::string label_;
  int row_;
  RowHits hits_;
};

// Merge per-point results in grid order, aggregating by (group, row, n).
AuditReport merge(const std::vector<ChoiLuParams>& points, const std::vector<PointResult>& results) {
  AuditReport report;
  report.points = points.size();
  std::map<std::tuple<int, int, int>, ErratumRow> errata;
  std::map<std::tuple<int, int>, OmissionRow> omissions;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    const auto& res = results[k];
    report.checks += res.checks;
    for (const auto& h : res.rows) {
      auto key = std::make_tuple(h.group, h.row, p.n);
      auto it = errata.find(key);
      if (it == errata.end()) {
        ErratumRow e;
        e.label = h.label;
        e.row = h.row;
        e.params = p;
        e.index = h.first.index;
        e.table_value = h.first.closed;
        e.brute_value = h.first.brute;
        e.operator_value = h.first.op;
        it = errata.emplace(key, e).first;
      }
      ++it->second.mismatched_points;
      it->second.mismatched_entries += h.entries;
      it->second.confirmed_entries += h.confirmed;
    }
    for (const auto& o : res.omissions) {
      auto key = std::make_tuple(o.group, p.n);
      auto it = omissions.find(key);
      if (it == omissions.end()) {
        OmissionRow r;
        r.label = o.label;
        r.params = p;
        r.index = o.index;
        r.brute_value = o.brute;
        it = omissions.emplace(key, r).first;
      }
      ++it->second.points;
      it->second.components += o.components;
    }
  }
  for (auto& [key, e] : errata) report.errata.push_back(std::move(e));
  for (auto& [key, o] : omissions) report.omissions.push_back(std::move(o));
  return report;
}

std::vector<Slot> used_slots(std::initializer_list<Slot> base, const std::vector<WedgeTerm>& terms) {
  std::vector<Slot> used(base);
  for (const auto& t : terms) {
    used.push_back(t.p);
    used.push_back(t.q);
  }
  return used;
}

// Skew n×n matrix of a bivector Σ coef E_p∧E_q, entry [p][q] for p<q.
void accumulate_bivector(std::vector<Rational>& m, int n, int P, int Q, const Rational& c) {
  if (P == Q || c.is_zero()) return;
  if (P < Q) m[P * n + Q] += c;
  else m[Q * n + P] -= c;
}

// ---------------------------------------------------------------- tangent tables

enum TangentGroup { kGroupR, kGroupRicc, kGroupGwR, kGroupC };

const char* omission_label(int kind) {
  switch (kind) {
    case kGroupR: return "eq001*";
    case kGroupRicc: return "eq001**";
    case kGroupGwR: return "eqgWRICCI001**";
    default: return "eq701*";
  }
}

int group_of(TangentKind k) {
  switch (k) {
    case TangentKind::R: return kGroupR;
    case TangentKind::Ricc: return kGroupRicc;
    case TangentKind::GwRicc: return kGroupGwR;
    case TangentKind::C: return kGroupC;
    case TangentKind::Scalar: return -1;
  }
  return -1;
}

// Components covered by the listed entries (and their skew / pair-symmetry images).
std::array<std::vector<char>, 4> covered_components(int n) {
  std::array<std::vector<char>, 4> cov;
  for (int g = 0; g < 4; ++g) cov[g].assign(g == kGroupRicc ? n * n : n * n * n * n, 0);
  for (const auto& e : tangent_entries()) {
    const int g = group_of(e.kind);
    if (g < 0) continue;
    for_each_instance(n, e.pattern, [&](const Assign& a) {
      std::vector<int> ix;
      for (Slot s : e.pattern) ix.push_back(resolve(s, a));
      if (g == kGroupRicc) {
        cov[g][ix[0] * n + ix[1]] = 1;
        cov[g][ix[1] * n + ix[0]] = 1;
        return;
      }
      for (int swap12 = 0; swap12 < 2; ++swap12)
        for (int swap34 = 0; swap34 < 2; ++swap34)
          for (int pair = 0; pair < 2; ++pair) {
            int a0 = ix[0], a1 = ix[1], a2 = ix[2], a3 = ix[3];
            if (swap12) std::swap(a0, a1);
            if (swap34) std::swap(a2, a3);
            if (pair) {
              std::swap(a0, a2);
              std::swap(a1, a3);
            }
            cov[g][((a0 * n + a1) * n + a2) * n + a3] = 1;
          }
    });
  }
  return cov;
}

PointResult tangent_point(const ChoiLuParams& p, const std::array<std::vector<char>, 4>& cov) {
  PointResult out;
  const int n = p.n;
  const auto model = choi_lu_shape_ops(p);
  const auto R = gauss_curvature(model);
  const auto ric = ricci_from_R(R);
  const auto gR = g_wedge_ricci(ric);
  const auto C = weyl(R, ric);
  const auto table = closed_form_table(p);
  const auto named = table.entries();
  auto table_value = [&](const std::string& name) {
    for (const auto& [k, v] : named)
      if (k == name) return v;
    throw std::logic_error("no table entry " + name);
  };
  std::optional<OperatorRoute> route;
  auto op = [&]() -> const OperatorRoute& {
    if (!route) route.emplace(model);
    return *route;
  };

  // Listed entries.
  std::map<std::string, int> row_in_label;
  int group = 0;
  std::string last_label;
  for (const auto& e : tangent_entries()) {
    if (e.label != last_label) {
      ++group;
      last_label = e.label;
    }
    const int row = ++row_in_label[e.label];
    HitSink sink(group, e.label, row);
    const Rational closed = table_value(e.name);
    if (e.kind == TangentKind::Scalar) {
      const Rational brute = e.name == "tau" ? ric.tau : ric.tau / Rational(n * (n - 1));
      ++out.checks;
      if (!(brute == closed)) {
        const Rational alt = e.name == "tau" ? op().tau() : op().tau() / Rational(n * (n - 1));
        sink.add("()", closed, brute, alt);
      }
      sink.flush(out);
      continue;
    }
    for_each_instance(n, e.pattern, [&](const Assign& a) {
      std::vector<int> ix;
      for (Slot s : e.pattern) ix.push_back(resolve(s, a));
      Rational brute;
      switch (e.kind) {
        case TangentKind::R: brute = R(ix[0], ix[1], ix[2], ix[3]); break;
        case TangentKind::Ricc: brute = ric.ricc(ix[0], ix[1]); break;
        case TangentKind::GwRicc: brute = gR(ix[0], ix[1], ix[2], ix[3]); break;
        case TangentKind::C: brute = C(ix[0], ix[1], ix[2], ix[3]); break;
        case TangentKind::Scalar: break;
      }
      ++out.checks;
      if (brute == closed) return;
      const auto& o = op();
      std::vector<OperatorRoute::Vec> v;
      for (int x : ix) v.push_back(o.basis(x));
      Rational alt;
      switch (e.kind) {
        case TangentKind::R: alt = o.R(v[0], v[1], v[2], v[3]); break;
        case TangentKind::Ricc: alt = o.ricc(v[0], v[1]); break;
        case TangentKind::GwRicc: alt = o.g_wedge_ricc(v[0], v[1], v[2], v[3]); break;
        case TangentKind::C: alt = o.C(v[0], v[1], v[2], v[3]); break;
        case TangentKind::Scalar: break;
      }
      sink.add(format_index(ix, ix.size()), closed, brute, alt);
    });
    sink.flush(out);
  }

  // Components the tables declare null.
  for (int g = 0; g < 4; ++g) {
    OmitHits hits;
    hits.group = 100 + g;
    hits.label = omission_label(g);
    if (g == kGroupRicc) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (cov[g][u * n + v]) continue;
          const Rational& val = ric.ricc(u, v);
          if (val.is_zero()) continue;
          if (hits.components++ == 0) {
            hits.index = format_index({u, v}, 2);
            hits.brute = val;
          }
        }
    } else {
      const Tensor4<Rational>& T = g == kGroupR ? R : g == kGroupGwR ? gR : C;
      for_each_index<4>(n, [&](const std::array<int, 4>& i) {
        if (cov[g][((i[0] * n + i[1]) * n + i[2]) * n + i[3]]) return;
        const Rational& val = T[i];
        if (val.is_zero()) return;
        if (hits.components++ == 0) {
          hits.index = format_index({i[0], i[1], i[2], i[3]}, 4);
          hits.brute = val;
        }
      });
    }
    if (hits.components > 0) out.omissions.push_back(hits);
  }

  // Bivectors A_α(E_x) ∧ A_α(E_y).
  const TableVars vars = TableVars::of(p);
  int bgroup = 200;
  for (const auto& t : shape_bivector_tables()) {
    ++bgroup;
    int row = 0;
    for (const auto& r : t.rows) {
      ++row;
      HitSink sink(bgroup, t.label, row);
      std::vector<int> alphas;
      if (r.alpha <= 3) {
        if (r.alpha <= p.m) alphas.push_back(r.alpha - 1);
      } else {
        for (int al = 3; al < p.m; ++al) alphas.push_back(al);
      }
      for (int al : alphas) {
        const auto& A = model.shape_op(al);
        for_each_instance(n, used_slots({r.x, r.y}, r.terms), [&](const Assign& a) {
          const int x = resolve(r.x, a), y = resolve(r.y, a);
          std::vector<Rational> closed(n * n);
          for (const auto& term : r.terms)
            accumulate_bivector(closed, n, resolve(term.p, a), resolve(term.q, a), term.coef(vars));
          for (int P = 0; P < n; ++P)
            for (int Q = P + 1; Q < n; ++Q) {
              const Rational brute = A(P, x) * A(Q, y) - A(Q, x) * A(P, y);
              ++out.checks;
              if (brute == closed[P * n + Q]) continue;
              const auto& o = op();
              const auto AX = o.apply_shape(al, o.basis(x)), AY = o.apply_shape(al, o.basis(y));
              const Rational alt = OperatorRoute::dot(OperatorRoute::wedge_apply(AX, AY, o.basis(Q)), o.basis(P));
              std::ostringstream idx;
              idx << "alpha=" << al + 1 << " " << format_index({x, y, P, Q}, 2);
              sink.add(idx.str(), closed[P * n + Q], brute, alt);
            }
        });
      }
      sink.flush(out);
    }
  }

  // ℛ(E_x,E_y) as a bivector; coefficient of E_p∧E_q (p<q) is R(x,y,q,p).
  {
    int row = 0;
    for (const auto& r : curvature_operator_table()) {
      ++row;
      HitSink sink(300, "eq010", row);
      for_each_instance(n, used_slots({r.x, r.y}, r.terms), [&](const Assign& a) {
        const int x = resolve(r.x, a), y = resolve(r.y, a);
        std::vector<Rational> closed(n * n);
        for (const auto& term : r.terms)
          accumulate_bivector(closed, n, resolve(term.p, a), resolve(term.q, a), term.coef(vars));
        for (int P = 0; P < n; ++P)
          for (int Q = P + 1; Q < n; ++Q) {
            const Rational& brute = R(x, y, Q, P);
            ++out.checks;
            if (brute == closed[P * n + Q]) continue;
            const auto& o = op();
            const Rational alt = OperatorRoute::dot(o.curvature_op(o.basis(x), o.basis(y), o.basis(Q)), o.basis(P));
            sink.add(format_index({x, y, P, Q}, 2), closed[P * n + Q], brute, alt);
          }
      });
      sink.flush(out);
    }
  }

  // 𝒮(E_x).
  {
    int row = 0;
    for (const auto& r : ricci_operator_table()) {
      ++row;
      HitSink sink(301, "eq3", row);
      std::vector<Slot> used{r.x};
      for (const auto& [f, s] : r.terms) used.push_back(s);
      for_each_instance(n, used, [&](const Assign& a) {
        const int x = resolve(r.x, a);
        std::vector<Rational> closed(n);
        for (const auto& [f, s] : r.terms) closed[resolve(s, a)] += f(vars);
        for (int v = 0; v < n; ++v) {
          const Rational& brute = ric.ricc(x, v);
          ++out.checks;
          if (brute == closed[v]) continue;
          const auto& o = op();
          sink.add(format_index({x, v}, 1), closed[v], brute, o.ricci_op(o.basis(x))[v]);
        }
      });
      sink.flush(out);
    }
  }
  return out;
}

// ---------------------------------------------------------------- derived tables

struct PointTensors {
  Tensor4<Rational> R, C, gR;
  EndoField<Rational> fR, fC, fg, fS;
};

PointTensors point_tensors(const SubmanifoldModel<Rational>& model) {
  auto R = gauss_curvature(model);
  auto ric = ricci_from_R(R);
  auto C = weyl(R, ric);
  auto gR = g_wedge_ricci(ric);
  auto fR = EndoField<Rational>::from_tensor(R);
  auto fC = EndoField<Rational>::from_tensor(C);
  auto fg = EndoField<Rational>::wedge(SymMatrix<Rational>::identity(model.n()));
  auto fS = EndoField<Rational>::wedge(ric.ricc);
  return {std::move(R), std::move(C), std::move(gR), std::move(fR), std::move(fC), std::move(fg), std::move(fS)};
}

Rational brute_derived(DerivedId id, const PointTensors& t, const std::array<int, 6>& i) {
  switch (id) {
    case DerivedId::RC: return derive_component(t.fR, t.C, i);
    case DerivedId::CR: return derive_component(t.fC, t.R, i);
    case DerivedId::RCmCR: return derive_component(t.fR, t.C, i) - derive_component(t.fC, t.R, i);
    case DerivedId::QgR: return derive_component(t.fg, t.R, i);
    case DerivedId::QgC: return derive_component(t.fg, t.C, i);
    case DerivedId::QgGR: return derive_component(t.fg, t.gR, i);
    case DerivedId::QSR: return derive_component(t.fS, t.R, i);
    case DerivedId::QSC: return derive_component(t.fS, t.C, i);
    case DerivedId::QSGS: return derive_component(t.fS, t.gR, i);
  }
  return {};
}

PointResult derived_point(const ChoiLuParams& p, const std::vector<std::size_t>& selected) {
  PointResult out;
  const int n = p.n;
  const auto model = choi_lu_shape_ops(p);
  const auto t = point_tensors(model);
  const TableVars vars = TableVars::of(p);
  std::optional<OperatorRoute> route;
  const auto& tables = derived_tables();
  for (std::size_t ti : selected) {
    const auto& table = tables[ti];
    int row = 0;
    for (const auto& r : table.rows) {
      ++row;
      HitSink sink(static_cast<int>(ti), table.label, row);
      std::vector<Rational> coefs;
      for (const auto& term : r.terms) coefs.push_back(term.coef(vars));
      for_each_instance(n, used_slots({r.args[0], r.args[1], r.args[2], r.args[3]}, r.terms), [&](const Assign& a) {
        const int x1 = resolve(r.args[0], a), x2 = resolve(r.args[1], a);
        const int x = resolve(r.args[2], a), y = resolve(r.args[3], a);
        // slice(z,w) = Σ coef·g((E_p∧E_q)E_z, E_w) = Σ coef·(δ_qz δ_pw − δ_pz δ_qw)
        std::vector<Rational> closed(n * n);
        for (std::size_t s = 0; s < r.terms.size(); ++s) {
          const int P = resolve(r.terms[s].p, a), Q = resolve(r.terms[s].q, a);
          if (P == Q) continue;
          closed[Q * n + P] += coefs[s];
          closed[P * n + Q] -= coefs[s];
        }
        // Both sides are skew in (z,w); the diagonal vanishes identically.
        for (int z = 0; z < n; ++z)
          for (int w = z + 1; w < n; ++w) {
            const std::array<int, 6> idx{x1, x2, z, w, x, y};
            const Rational brute = brute_derived(table.tensor, t, idx);
            ++out.checks;
            if (brute == closed[z * n + w]) continue;
            if (!route) route.emplace(model);
            sink.add(format_index({x1, x2, z, w, x, y}, 4), closed[z * n + w], brute, route->derived(table.tensor, idx));
          }
      });
      sink.flush(out);
    }
  }
  return out;
}

void write_params(std::ostream& os, const ChoiLuParams& p) {
  os << p.n << ',' << p.m << ',' << p.a << ',' << p.b << ',' << p.c << ',' << p.mu << ',' << p.k_tilde;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

}  // namespace

AuditReport audit_tangent_tables(const GridSpec& grid, int jobs) {
  const auto t0 = Clock::now();
  const auto points = grid.points();
  std::map<int, std::array<std::vector<char>, 4>> cov;
  for (const auto& p : points)
    if (!cov.count(p.n)) cov[p.n] = covered_components(p.n);
  auto results = parallel_map<PointResult>(points.size(), jobs,
                                           [&](std::size_t k) { return tangent_point(points[k], cov.at(points[k].n)); });
  auto report = merge(points, results);
  report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

AuditReport audit_derived_tables(const GridSpec& grid, int jobs, const std::vector<std::string>& labels) {
  const auto t0 = Clock::now();
  std::vector<std::size_t> selected;
  const auto& tables = derived_tables();
  for (std::size_t i = 0; i < tables.size(); ++i)
    if (labels.empty() || std::find(labels.begin(), labels.end(), tables[i].label) != labels.end())
      selected.push_back(i);
  const auto points = grid.points();
  auto results = parallel_map<PointResult>(points.size(), jobs,
                                           [&](std::size_t k) { return derived_point(points[k], selected); });
  auto report = merge(points, results);
  report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

void write_errata_csv(std::ostream& os, const AuditReport& report) {
  os << "label,row,n,m,a,b,c,mu,k_tilde,index,table_value,bruteforce_value,operator_value,"
        "mismatched_points,mismatched_entries,confirmed_entries,confirmed\n";
  for (const auto& e : report.errata) {
    os << e.label << ',' << e.row << ',';
    write_params(os, e.params);
    os << ',' << csv_quote(e.index) << ',' << e.table_value << ',' << e.brute_value << ',' << e.operator_value << ','
       << e.mismatched_points << ',' << e.mismatched_entries << ',' << e.confirmed_entries << ','
       << (e.confirmed() ? "yes" : "no") << '\n';
  }
}

void write_omissions_csv(std::ostream& os, const AuditReport& report) {
  os << "label,n,m,a,b,c,mu,k_tilde,index,bruteforce_value,points,components\n";
  for (const auto& o : report.omissions) {
    os << o.label << ',';
    write_params(os, o.params);
    os << ',' << csv_quote(o.index) << ',' << o.brute_value << ',' << o.points << ',' << o.components << '\n';
  }
}

}  // namespace wintgen
