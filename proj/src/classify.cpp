#include "wintgen/classify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "wintgen/parallel.hpp"
#include "wintgen/sectional.hpp"

namespace wintgen {

std::string to_string(DepKind k) {
  switch (k) {
    case DepKind::BothZero: return "BothZero";
    case DepKind::LeftZero: return "LeftZero";
    case DepKind::RightZero: return "RightZero";
    case DepKind::Proportional: return "Proportional";
    case DepKind::Independent: return "Independent";
  }
  return "?";
}

namespace {

struct TensorName {
  TensorId id;
  const char* display;
  const char* selector;
  int rank;
};

constexpr TensorName kTensorNames[] = {
    {TensorId::RR, "R·R", "RR", 6},
    {TensorId::RC, "R·C", "RC", 6},
    {TensorId::CR, "C·R", "CR", 6},
    {TensorId::CC, "C·C", "CC", 6},
    {TensorId::RCmCR, "R·C−C·R", "RCmCR", 6},
    {TensorId::RRicc, "R·Ricc", "RRicc", 4},
    {TensorId::QgR, "Q(g,R)", "QgR", 6},
    {TensorId::QgC, "Q(g,C)", "QgC", 6},
    {TensorId::QgRicc, "Q(g,Ricc)", "QgRicc", 4},
    {TensorId::QgGR, "Q(g,g∧Ricc)", "QgGR", 6},
    {TensorId::QSR, "Q(Ricc,R)", "QSR", 6},
    {TensorId::QSC, "Q(Ricc,C)", "QSC", 6},
    {TensorId::QSGS, "Q(Ricc,g∧Ricc)", "QSGS", 6},
};

const TensorName& name_of(TensorId id) {
  for (const auto& t : kTensorNames)
    if (t.id == id) return t;
  throw std::invalid_argument("unknown tensor id");
}

}  // namespace

std::string to_string(TensorId id) { return name_of(id).display; }
std::string selector_name(TensorId id) { return name_of(id).selector; }
int rank_of(TensorId id) { return name_of(id).rank; }

std::optional<TensorId> parse_selector(const std::string& s) {
  for (const auto& t : kTensorNames)
    if (s == t.selector) return t.id;
  return std::nullopt;
}

const std::vector<TensorId>& left_tensors() {
  static const std::vector<TensorId> v{TensorId::RR, TensorId::RC, TensorId::CR, TensorId::CC, TensorId::RCmCR};
  return v;
}

const std::vector<TensorId>& right_tensors() {
  static const std::vector<TensorId> v{TensorId::QgR, TensorId::QgC, TensorId::QgGR,
                                       TensorId::QSR, TensorId::QSC, TensorId::QSGS};
  return v;
}

std::string to_string(NamedCondition c) {
  switch (c) {
    case NamedCondition::PseudoSymmetric: return "pseudo_symmetric";
    case NamedCondition::WeylPseudoSymmetric: return "weyl_pseudo_symmetric";
    case NamedCondition::PseudoSymmetricWeyl: return "pseudo_symmetric_weyl";
    case NamedCondition::RicciPseudoSymmetric: return "ricci_pseudo_symmetric";
    case NamedCondition::RicciWeyl: return "ricci_weyl";
  }
  return "?";
}

std::optional<NamedCondition> parse_named_condition(const std::string& s) {
  for (auto c : {NamedCondition::PseudoSymmetric, NamedCondition::WeylPseudoSymmetric,
                 NamedCondition::PseudoSymmetricWeyl, NamedCondition::RicciPseudoSymmetric, NamedCondition::RicciWeyl})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::pair<TensorId, TensorId> condition_pair(NamedCondition c) {
  switch (c) {
    case NamedCondition::PseudoSymmetric: return {TensorId::RR, TensorId::QgR};
    case NamedCondition::WeylPseudoSymmetric: return {TensorId::RC, TensorId::QgC};
    case NamedCondition::PseudoSymmetricWeyl: return {TensorId::CC, TensorId::QgC};
    case NamedCondition::RicciPseudoSymmetric: return {TensorId::RRicc, TensorId::QgRicc};
    case NamedCondition::RicciWeyl: return {TensorId::RC, TensorId::QSC};
  }
  throw std::invalid_argument("unknown condition");
}

bool satisfies(Hypothesis h, const Rational& k) {
  switch (h) {
    case Hypothesis::Any: return true;
    case Hypothesis::KPositive: return k.sign() > 0;
    case Hypothesis::KNonPositive: return k.sign() <= 0;
    case Hypothesis::KZero: return k.is_zero();
  }
  return false;
}

BranchFlags branch_flags(const ChoiLuParams& p) {
  BranchFlags f;
  f.umbilical = p.mu.is_zero();
  if (f.umbilical) return f;
  const bool ab_zero = p.a.is_zero() && p.b.is_zero();
  const Rational mu2 = p.mu * p.mu;
  f.pseudo_umbilical = ab_zero;
  f.weyl_semi_symmetric = ab_zero && (p.c * p.c + p.k_tilde).is_zero();
  // (a,b) can be rotated into (0,|(a,b)|) by turning the E1E2 and ξ1ξ2 planes together,
  // so "a=0, b=μ" only fixes a²+b².
  f.mixed = p.a * p.a + p.b * p.b == mu2 && p.H_sq() + p.k_tilde == 2 * mu2 / Rational(p.n - 1);
  return f;
}

GridSpec generic_grid() {
  GridSpec g = GridSpec::default_grid();
  g.a = g.b = {Rational(-2, 3), Rational(-1, 3), Rational(1, 3), Rational(2, 3)};
  return g;
}

namespace {

using LambdaFn = Rational (*)(const ChoiLuParams&);

enum class Special { None, SemiSymmetric, PseudoUmbilical, PseudoUmbilicalNonflat, Mixed };

enum class Shape { Vanishes, Depends, Corollary7, Corollary9, PseudoSym, RicciEquiv, WeylPseudo, ConformalFlat };

struct Rule {
  const char* id;
  Hypothesis hyp;
  Shape shape;
  TensorId left;
  std::optional<TensorId> right;
  Special special;
  LambdaFn claimed;  // on the special branch
  const char* statement;
};

Rational zero_lambda(const ChoiLuParams&) { return Rational(0); }

Rational lambda_rcmcr_qgr(const ChoiLuParams& p) {
  const Rational n(p.n);
  return Rational(-2) * (n - 3) * p.mu * p.mu / ((n - 1) * (n - 2));
}

Rational lambda_rc_qgc(const ChoiLuParams& p) { return p.k_tilde + p.c * p.c; }

Rational lambda_rc_qsgs(const ChoiLuParams& p) { return (p.k_tilde + p.c * p.c) / (2 * p.mu * p.mu); }

Rational lambda_rcmcr_qsgs(const ChoiLuParams& p) {
  const Rational n(p.n);
  return -(n - 3) / ((n - 1) * (n - 2));
}

using H = Hypothesis;
using T = TensorId;
using Sh = Shape;
using Sp = Special;

const Rule kRules[] = {
    {"T1", H::KPositive, Sh::Vanishes, T::RC, {}, Sp::None, nullptr, "k>0: R·C = 0 iff totally umbilical"},
    {"T2", H::KNonPositive, Sh::Vanishes, T::RC, {}, Sp::SemiSymmetric, nullptr,
     "k<=0: R·C = 0 iff totally umbilical or a=b=0, c²=-k, μ≠0"},
    {"C1", H::KZero, Sh::Vanishes, T::RC, {}, Sp::SemiSymmetric, nullptr,
     "k=0: R·C = 0 iff totally umbilical or minimal with a=b=c=0, μ≠0"},
    {"T3", H::Any, Sh::Vanishes, T::CR, {}, Sp::None, nullptr, "C·R = 0 iff totally umbilical"},
    {"T4", H::Any, Sh::Vanishes, T::RCmCR, {}, Sp::None, nullptr, "R·C - C·R = 0 iff totally umbilical"},
    {"T5", H::KPositive, Sh::Depends, T::RC, T::QgR, Sp::None, nullptr,
     "k>0: R·C ~ Q(g,R) iff totally umbilical"},
    {"T6", H::KNonPositive, Sh::Depends, T::RC, T::QgR, Sp::SemiSymmetric, zero_lambda,
     "k<=0: R·C ~ Q(g,R) iff totally umbilical or a=b=0, c²=-k, μ≠0 (then R·C = 0)"},
    {"C2", H::KZero, Sh::Depends, T::RC, T::QgR, Sp::SemiSymmetric, zero_lambda,
     "k=0: R·C ~ Q(g,R) iff totally umbilical or a=b=c=0, μ≠0 (then R·C = 0)"},
    {"T7", H::Any, Sh::Depends, T::CR, T::QgR, Sp::None, nullptr, "C·R ~ Q(g,R) iff totally umbilical"},
    {"T8", H::KPositive, Sh::Depends, T::RCmCR, T::QgR, Sp::None, nullptr,
     "k>0: R·C - C·R ~ Q(g,R) iff totally umbilical"},
    {"T9", H::KNonPositive, Sh::Depends, T::RCmCR, T::QgR, Sp::SemiSymmetric, lambda_rcmcr_qgr,
     "k<=0: R·C - C·R ~ Q(g,R) iff totally umbilical or a=b=0, c²=-k, μ≠0, with λ = -2(n-3)μ²/((n-1)(n-2))"},
    {"C3", H::KZero, Sh::Depends, T::RCmCR, T::QgR, Sp::SemiSymmetric, lambda_rcmcr_qgr,
     "k=0: R·C - C·R ~ Q(g,R) iff totally umbilical or a=b=c=0, μ≠0, with λ = -2(n-3)μ²/((n-1)(n-2))"},
    {"T10", H::Any, Sh::Depends, T::RC, T::QgC, Sp::PseudoUmbilical, lambda_rc_qgc,
     "R·C ~ Q(g,C) iff totally umbilical or a=b=0, μ≠0, with λ = k + c²"},
    {"T11", H::Any, Sh::Depends, T::CR, T::QgC, Sp::None, nullptr, "C·R ~ Q(g,C) iff totally umbilical"},
    {"T12", H::Any, Sh::Depends, T::RCmCR, T::QgC, Sp::None, nullptr, "R·C - C·R ~ Q(g,C) iff totally umbilical"},
    {"T13", H::KPositive, Sh::Depends, T::RC, T::QgGR, Sp::None, nullptr,
     "k>0: R·C ~ Q(g,g∧Ricc) iff totally umbilical"},
    {"T14", H::KNonPositive, Sh::Depends, T::RC, T::QgGR, Sp::SemiSymmetric, zero_lambda,
     "k<=0: R·C ~ Q(g,g∧Ricc) iff totally umbilical or a=b=0, c²=-k, μ≠0 (then R·C = 0)"},
    {"C4", H::KZero, Sh::Depends, T::RC, T::QgGR, Sp::SemiSymmetric, zero_lambda,
     "k=0: R·C ~ Q(g,g∧Ricc) iff totally umbilical or a=b=c=0, μ≠0 (then R·C = 0)"},
    {"T15", H::Any, Sh::Depends, T::CR, T::QgGR, Sp::None, nullptr, "C·R ~ Q(g,g∧Ricc) iff totally umbilical"},
    {"T16", H::Any, Sh::Depends, T::RCmCR, T::QgGR, Sp::None, nullptr,
     "R·C - C·R ~ Q(g,g∧Ricc) iff totally umbilical"},
    {"T17", H::KPositive, Sh::Depends, T::RC, T::QSR, Sp::None, nullptr,
     "k>0: R·C ~ Q(Ricc,R) iff totally umbilical"},
    {"T18", H::KNonPositive, Sh::Depends, T::RC, T::QSR, Sp::SemiSymmetric, zero_lambda,
     "k<=0: R·C ~ Q(Ricc,R) iff totally umbilical or a=b=0, c²=-k, μ≠0 (then R·C = 0)"},
    {"C5", H::KZero, Sh::Depends, T::RC, T::QSR, Sp::SemiSymmetric, zero_lambda,
     "k=0: R·C ~ Q(Ricc,R) iff totally umbilical or a=b=c=0, μ≠0 (then R·C = 0)"},
    {"T19", H::Any, Sh::Depends, T::CR, T::QSR, Sp::None, nullptr, "C·R ~ Q(Ricc,R) iff totally umbilical"},
    {"T20", H::Any, Sh::Depends, T::RCmCR, T::QSR, Sp::None, nullptr,
     "R·C - C·R ~ Q(Ricc,R) iff totally umbilical"},
    {"T21", H::KPositive, Sh::Depends, T::RC, T::QSC, Sp::None, nullptr,
     "k>0: R·C ~ Q(Ricc,C) iff totally umbilical"},
    {"T22", H::KNonPositive, Sh::Depends, T::RC, T::QSC, Sp::SemiSymmetric, zero_lambda,
     "k<=0: R·C ~ Q(Ricc,C) iff totally umbilical or a=b=0, c²=-k, μ≠0 (then R·C = 0)"},
    {"C6", H::KZero, Sh::Depends, T::RC, T::QSC, Sp::SemiSymmetric, zero_lambda,
     "k=0: R·C ~ Q(Ricc,C) iff totally umbilical or a=b=c=0, μ≠0 (then R·C = 0)"},
    {"T23", H::Any, Sh::Depends, T::CR, T::QSC, Sp::None, nullptr, "C·R ~ Q(Ricc,C) iff totally umbilical"},
    {"T24", H::Any, Sh::Depends, T::RCmCR, T::QSC, Sp::None, nullptr,
     "R·C - C·R ~ Q(Ricc,C) iff totally umbilical"},
    {"T25", H::Any, Sh::Depends, T::RC, T::QSGS, Sp::PseudoUmbilicalNonflat, lambda_rc_qsgs,
     "R·C ~ Q(Ricc,g∧Ricc) iff totally umbilical or a=b=0, μ≠0, c²+k≠0, with λ = (k+c²)/(2μ²)"},
    {"T26", H::Any, Sh::Depends, T::CR, T::QSGS, Sp::None, nullptr,
     "C·R ~ Q(Ricc,g∧Ricc) iff totally umbilical"},
    {"T27", H::Any, Sh::Depends, T::RCmCR, T::QSGS, Sp::Mixed, lambda_rcmcr_qsgs,
     "R·C - C·R ~ Q(Ricc,g∧Ricc) iff totally umbilical or a=0, b=μ≠0 with H²+k = 2μ²/(n-1), "
     "with λ = -(n-3)/((n-1)(n-2))"},
    {"C7", H::KNonPositive, Sh::Corollary7, T::RC, {}, Sp::SemiSymmetric, lambda_rcmcr_qgr,
     "k<=0, non-umbilical: a=b=0, c²=-k  <=>  R·C ~ Q(g,R)  <=>  R·C ~ Q(g,g∧Ricc)  <=>  R·C ~ Q(Ricc,R)  "
     "<=>  R·C ~ Q(Ricc,C)  <=>  R·C - C·R ~ Q(g,R)"},
    {"C8", H::KZero, Sh::Corollary7, T::RC, {}, Sp::SemiSymmetric, lambda_rcmcr_qgr,
     "k=0, non-umbilical: a=b=c=0  <=>  R·C ~ Q(g,R)  <=>  R·C ~ Q(g,g∧Ricc)  <=>  R·C ~ Q(Ricc,R)  "
     "<=>  R·C ~ Q(Ricc,C)  <=>  R·C - C·R ~ Q(g,R)"},
    {"C9", H::KPositive, Sh::Corollary9, T::RC, {}, Sp::None, nullptr,
     "k>0: R·C ~ Q(g,R)  <=>  R·C ~ Q(g,g∧Ricc)  <=>  R·C ~ Q(Ricc,R)  <=>  R·C ~ Q(Ricc,C)  <=>  "
     "totally umbilical"},
    {"TB", H::Any, Sh::PseudoSym, T::RR, T::QgR, Sp::None, nullptr,
     "R·R ~ Q(g,R) iff totally umbilical (L=0) or minimal or pseudo-umbilical (L = k + H²)"},
    {"TC", H::Any, Sh::RicciEquiv, T::RR, T::QgR, Sp::None, nullptr,
     "R·R ~ Q(g,R) iff R·Ricc ~ Q(g,Ricc)"},
    {"TD", H::Any, Sh::WeylPseudo, T::CC, T::QgC, Sp::None, nullptr, "C·C ~ Q(g,C) everywhere"},
    {"TE", H::Any, Sh::ConformalFlat, T::CC, T::QgC, Sp::None, nullptr,
     "C = 0 iff totally umbilical; otherwise C·C = L Q(g,C) with L = (n-3)/((n-1)(n-2))(τ - n(n-1) inf K)"},
};

const Rule& rule_of(const std::string& id) {
  for (const auto& r : kRules)
    if (id == r.id) return r;
  throw UnknownTheoremError("unknown theorem id: " + id);
}

bool on_special(Special s, const BranchFlags& f, const ChoiLuParams& p) {
  switch (s) {
    case Special::None: return false;
    case Special::SemiSymmetric: return f.weyl_semi_symmetric;
    case Special::PseudoUmbilical: return f.pseudo_umbilical;
    case Special::PseudoUmbilicalNonflat: return f.pseudo_umbilical && !(p.c * p.c + p.k_tilde).is_zero();
    case Special::Mixed: return f.mixed;
  }
  return false;
}

std::string lambda_string(const DependenceVerdict<Rational>& v) { return v.lambda ? v.lambda->to_string() : ""; }

// The claimed λ is matched only when λ is determined (BothZero admits every λ).
bool lambda_matches(const DependenceVerdict<Rational>& v, const Rational& claimed) {
  if (v.kind == DepKind::BothZero) return true;
  return v.lambda && *v.lambda == claimed;
}

void fill_dependence(PointVerdict& out, const DependenceVerdict<Rational>& v) {
  out.observed = v.dependent();
  out.kind = to_string(v.kind);
  out.lambda = lambda_string(v);
  out.residual = v.residual_max.to_string();
}

PointVerdict evaluate(const Rule& r, const ChoiLuParams& p, double te_rel_tol) {
  PointVerdict out;
  out.params = p;
  const BranchFlags f = branch_flags(p);
  const bool special = on_special(r.special, f, p);
  out.branch = f.umbilical ? "umbilical" : special ? "special" : "generic";
  PointTensors<Rational> pt(choi_lu_shape_ops(p));

  switch (r.shape) {
    case Shape::Vanishes: {
      out.predicted = f.umbilical || special;
      out.observed = pt.is_zero_tensor(r.left);
      out.kind = out.observed ? "zero" : "nonzero";
      out.residual = max_abs_component(pt.tensor6(r.left)).first.to_string();
      out.pass = out.predicted == out.observed;
      break;
    }
    case Shape::Depends: {
      out.predicted = f.umbilical || special;
      const auto v = dependence_of(pt, r.left, *r.right);
      fill_dependence(out, v);
      out.pass = out.predicted == out.observed;
      if (special && r.claimed && !f.umbilical) {
        const Rational c = r.claimed(p);
        out.claimed = c.to_string();
        if (out.observed && !lambda_matches(v, c)) {
          out.pass = false;
          out.note = "lambda differs from the claimed value";
        }
      }
      break;
    }
    case Shape::Corollary7:
    case Shape::Corollary9: {
      const bool c7 = r.shape == Shape::Corollary7;
      out.predicted = c7 ? f.weyl_semi_symmetric : f.umbilical;
      std::vector<std::pair<TensorId, TensorId>> conds{
          {T::RC, T::QgR}, {T::RC, T::QgGR}, {T::RC, T::QSR}, {T::RC, T::QSC}};
      if (c7) conds.push_back({T::RCmCR, T::QgR});
      out.pass = true;
      out.observed = true;
      std::string flags;
      for (std::size_t i = 0; i < conds.size(); ++i) {
        const auto v = dependence_of(pt, conds[i].first, conds[i].second);
        flags += (i ? "," : "") + to_string(conds[i].first) + "~" + to_string(conds[i].second) + "=" +
                 (v.dependent() ? "1" : "0");
        if (v.dependent() != out.predicted) out.pass = false;
        out.observed = out.observed && v.dependent();
        if (c7 && i == 4) {
          out.kind = to_string(v.kind);
          out.lambda = lambda_string(v);
          out.residual = v.residual_max.to_string();
          if (out.predicted) {
            const Rational c = r.claimed(p);
            out.claimed = c.to_string();
            if (v.dependent() && !lambda_matches(v, c)) out.pass = false;
          }
        }
      }
      out.note = flags;
      break;
    }
    case Shape::PseudoSym: {
      const auto u = classify_umbilicity(pt.model());
      const bool pu = u == Umbilicity::Minimal || u == Umbilicity::PseudoUmbilical;
      out.predicted = is_umbilical_class(u) || pu;
      out.branch = to_string(u);
      const auto v = dependence_of(pt, T::RR, T::QgR);
      fill_dependence(out, v);
      out.pass = out.predicted == out.observed;
      if (pu) {
        const Rational c = p.k_tilde + p.H_sq();
        out.claimed = c.to_string();
        if (out.observed && !lambda_matches(v, c)) {
          out.pass = false;
          out.note = "lambda differs from k + H^2";
        }
      }
      break;
    }
    case Shape::RicciEquiv: {
      const auto v1 = dependence_of(pt, T::RR, T::QgR);
      const auto v2 = dependence_of(pt, T::RRicc, T::QgRicc);
      out.predicted = v1.dependent();
      fill_dependence(out, v2);
      out.note = "R·R~Q(g,R) " + to_string(v1.kind) + "; R·Ricc~Q(g,Ricc) " + to_string(v2.kind);
      out.pass = out.predicted == out.observed;
      break;
    }
    case Shape::WeylPseudo: {
      out.predicted = true;
      fill_dependence(out, dependence_of(pt, T::CC, T::QgC));
      out.pass = out.observed;
      break;
    }
    case Shape::ConformalFlat: {
      out.predicted = f.umbilical;
      const bool flat = pt.C().is_zero();
      out.pass = flat == f.umbilical;
      if (!flat) out.note = "C != 0";
      if (flat) {
        out.kind = "conformally flat";
        break;
      }
      const auto v = dependence_of(pt, T::CC, T::QgC);
      fill_dependence(out, v);
      out.observed = v.dependent();
      if (!v.dependent() || !v.lambda) {
        out.pass = false;
        out.note = "C·C and Q(g,C) are not dependent";
        break;
      }
      const auto Rd = pt.R().cast<double>();
      const double infK = inf_sectional(Rd).value;
      const double n = p.n;
      const double tau = pt.ricci().tau.to_double();
      const double formula = (n - 3) / ((n - 1) * (n - 2)) * (tau - n * (n - 1) * infK);
      const double lam = v.lambda->to_double();
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.12g", formula);
      out.claimed = buf;
      const double scale = std::max(std::fabs(lam), std::fabs(formula));
      const double err = std::fabs(lam - formula);
      std::snprintf(buf, sizeof(buf), "inf K=%.12g rel err=%.3g", infK, scale > 0 ? err / scale : 0.0);
      out.note = buf;
      if (scale > 1e-12 && err > te_rel_tol * scale) out.pass = false;
      break;
    }
  }
  return out;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> reg = [] {
    std::vector<TheoremInfo> v;
    for (const auto& r : kRules) v.push_back({r.id, r.hyp, r.statement});
    return v;
  }();
  return reg;
}

const TheoremInfo& theorem_info(const std::string& id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return t;
  throw UnknownTheoremError("unknown theorem id: " + id);
}

std::vector<ChoiLuParams> case_points(const std::string& case_id) {
  const std::vector<Rational> mus{Rational(1), Rational(2), Rational(1, 2)};
  std::vector<ChoiLuParams> out;
  for (int n = 4; n <= 6; ++n)
    for (const auto& mu : mus) {
      CaseArgs args;
      args.n = n;
      args.m = 3;
      args.mu = mu;
      if (case_id == "T2ii") {
        for (int k : {-1, -4}) {
          const Rational root = Rational(-k).exact_sqrt().value();
          for (const auto& c : {root, -root}) {
            args.k_tilde = k;
            args.c = c;
            out.push_back(theorem_case_params(case_id, args));
          }
        }
      } else if (case_id == "C1ii") {
        for (int m : {2, 3}) {
          args.m = m;
          out.push_back(theorem_case_params(case_id, args));
        }
      } else if (case_id == "T10ii" || case_id == "T25ii") {
        for (const auto& c : {Rational(0), Rational(1), Rational(-1, 2), Rational(2)})
          for (int k : {-1, 0, 1}) {
            args.c = c;
            args.k_tilde = k;
            if (case_id == "T25ii" && (c * c + args.k_tilde).is_zero()) continue;
            out.push_back(theorem_case_params(case_id, args));
          }
      } else if (case_id == "T27ii") {
        for (const auto& c : {Rational(0), Rational(1), Rational(1, 2)}) {
          args.c = c;
          args.k_tilde = -c * c - mu * mu * Rational(n - 3) / Rational(n - 1);
          out.push_back(theorem_case_params(case_id, args));
        }
      } else {
        throw std::invalid_argument("no point set for case " + case_id);
      }
    }
  return out;
}

std::vector<ChoiLuParams> theorem_points(const std::string& id, const GridSpec& grid, bool add_case_points) {
  const Rule& r = rule_of(id);
  std::vector<ChoiLuParams> pts = grid.points();
  if (add_case_points)
    for (const char* cid : {"T2ii", "C1ii", "T10ii", "T25ii", "T27ii"}) {
      auto extra = case_points(cid);
      pts.insert(pts.end(), extra.begin(), extra.end());
    }
  std::vector<ChoiLuParams> out;
  std::set<std::string> seen;
  for (auto& p : pts) {
    if (!satisfies(r.hyp, p.k_tilde)) continue;
    if (!seen.insert(p.describe()).second) continue;
    // The first listed condition excludes umbilical points while the others hold there.
    if (r.shape == Shape::Corollary7 && p.mu.is_zero()) continue;
    out.push_back(p);
  }
  return out;
}

namespace {

// Extra zero shape operators leave every intrinsic tensor unchanged, so points that differ
// only in m are evaluated once. Returns, per point, the index of its first equivalent.
std::vector<std::size_t> representatives(const std::vector<ChoiLuParams>& pts, std::vector<std::size_t>& unique) {
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> rep(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ChoiLuParams key = pts[i];
    key.m = 0;
    auto [it, inserted] = seen.emplace(key.describe(), i);
    if (inserted) unique.push_back(i);
    rep[i] = it->second;
  }
  return rep;
}

}  // namespace

PointVerdict theorem_point_verdict(const std::string& id, const ChoiLuParams& p) {
  return evaluate(rule_of(id), p, VerdictOptions{}.te_rel_tol);
}

TheoremReport theorem_verdict(const std::string& id, const GridSpec& grid, const VerdictOptions& opts) {
  const Rule& r = rule_of(id);
  const auto t0 = std::chrono::steady_clock::now();
  const auto pts = theorem_points(id, grid, opts.add_case_points);
  TheoremReport rep;
  rep.id = r.id;
  rep.statement = r.statement;
  std::vector<std::size_t> unique;
  const auto rep_of = representatives(pts, unique);
  const auto computed = parallel_map<PointVerdict>(
      unique.size(), opts.jobs, [&](std::size_t i) { return evaluate(r, pts[unique[i]], opts.te_rel_tol); });
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < unique.size(); ++i) slot[unique[i]] = i;
  rep.points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    PointVerdict v = computed[slot[rep_of[i]]];
    v.params = pts[i];
    rep.points.push_back(std::move(v));
  }
  for (const auto& v : rep.points)
    if (!v.pass) ++rep.failures;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<CounterexampleHit> counterexample_search(TensorId left, std::optional<TensorId> right,
                                                     const GridSpec& grid, int jobs,
                                                     const std::vector<ChoiLuParams>& seeds) {
  std::vector<ChoiLuParams> pts;
  for (const auto& p : grid.points()) {
    const auto f = branch_flags(p);
    if (!f.umbilical && !f.any_special()) pts.push_back(p);
  }
  pts.insert(pts.end(), seeds.begin(), seeds.end());
  std::vector<std::size_t> unique;
  const auto rep_of = representatives(pts, unique);
  auto computed = parallel_map<std::optional<CounterexampleHit>>(
      unique.size(), jobs, [&](std::size_t u) -> std::optional<CounterexampleHit> {
        const std::size_t i = unique[u];
        PointTensors<Rational> pt(choi_lu_shape_ops(pts[i]));
        if (!right) {
          if (pt.is_zero_tensor(left)) return CounterexampleHit{pts[i], DepKind::LeftZero, "0"};
          return std::nullopt;
        }
        const auto v = dependence_of(pt, left, *right);
        if (!v.dependent()) return std::nullopt;
        return CounterexampleHit{pts[i], v.kind, v.lambda ? v.lambda->to_string() : ""};
      });
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t u = 0; u < unique.size(); ++u) slot[unique[u]] = u;
  std::vector<CounterexampleHit> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& h = computed[slot[rep_of[i]]];
    if (!h) continue;
    out.push_back(*h);
    out.back().params = pts[i];
  }
  return out;
}

}  // namespace wintgen
