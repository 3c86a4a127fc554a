#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wintgen/algebra.hpp"
#include "wintgen/choi_lu.hpp"
#include "wintgen/curvature.hpp"
#include "wintgen/derivations.hpp"
#include "wintgen/grid.hpp"

namespace wintgen {

// Relative tolerance used by float-mode dependence tests unless overridden.
inline constexpr double kFloatTol = 1e-9;

enum class DepKind { BothZero, LeftZero, RightZero, Proportional, Independent };

std::string to_string(DepKind k);

// T1 = λ·T2 is what the classification statements need, so a zero right-hand side with
// a nonzero left is reported separately and does not count as dependent.
template <class S>
struct DependenceVerdict {
  DepKind kind = DepKind::BothZero;
  std::optional<S> lambda;  // set for LeftZero (0) and Proportional; also the trial ratio for Independent
  S residual_max{};         // max |T1 − λT2|; for RightZero max |T1|

  bool dependent() const {
    return kind == DepKind::BothZero || kind == DepKind::LeftZero || kind == DepKind::Proportional;
  }
};

// Exact mode (Rational) is tolerance free. In float mode a tensor counts as zero when
// its largest component is ≤ tol·max(1, scale) and proportionality needs
// residual ≤ tol·scale, scale = max(max|T1|, max|T2|).
template <class S, std::size_t Rank>
DependenceVerdict<S> dependence(const Tensor<S, Rank>& T1, const Tensor<S, Rank>& T2, double tol = kFloatTol) {
  check_same_dim(T1.dim(), T2.dim());
  DependenceVerdict<S> v;
  const auto [m1, idx1] = max_abs_component(T1);
  const auto [m2, pivot] = max_abs_component(T2);
  (void)idx1;
  bool z1, z2;
  double scale = 0.0;
  if constexpr (ScalarTraits<S>::exact) {
    z1 = is_zero(m1);
    z2 = is_zero(m2);
  } else {
    scale = std::max(to_double(m1), to_double(m2));
    const double floor = tol * std::max(1.0, scale);
    z1 = to_double(m1) <= floor;
    z2 = to_double(m2) <= floor;
  }
  if (z1 && z2) return v;
  if (z1) {
    v.kind = DepKind::LeftZero;
    v.lambda = S(0);
    v.residual_max = m1;
    return v;
  }
  if (z2) {
    v.kind = DepKind::RightZero;
    v.residual_max = m1;
    return v;
  }
  const S lambda = T1[pivot] / T2[pivot];
  S worst(0);
  const auto& d1 = T1.data();
  const auto& d2 = T2.data();
  for (std::size_t k = 0; k < d1.size(); ++k) {
    if (is_zero(d1[k]) && is_zero(d2[k])) continue;
    S r = abs_of(d1[k] - lambda * d2[k]);
    if (r > worst) worst = r;
  }
  v.lambda = lambda;
  v.residual_max = worst;
  bool ok;
  if constexpr (ScalarTraits<S>::exact) ok = is_zero(worst);
  else ok = to_double(worst) <= tol * scale;
  v.kind = ok ? DepKind::Proportional : DepKind::Independent;
  return v;
}

// Tensors that enter pseudo-symmetry type conditions.
//   rank 6: R·R, R·C, C·R, C·C, R·C−C·R, Q(g,R), Q(g,C), Q(g,g∧Ricc), Q(Ricc,R), Q(Ricc,C), Q(Ricc,g∧Ricc)
//   rank 4: R·Ricc, Q(g,Ricc)
enum class TensorId { RR, RC, CR, CC, RCmCR, RRicc, QgR, QgC, QgRicc, QgGR, QSR, QSC, QSGS };

std::string to_string(TensorId id);     // "R·C", "Q(g,R)", ...
std::string selector_name(TensorId id);  // "RC", "QgR", ...
std::optional<TensorId> parse_selector(const std::string& s);
int rank_of(TensorId id);

const std::vector<TensorId>& left_tensors();   // rank-6 derivation tensors
const std::vector<TensorId>& right_tensors();  // rank-6 Tachibana tensors

// Named conditions with a proportionality function.
enum class NamedCondition {
  PseudoSymmetric,       // R·R = L Q(g,R)
  WeylPseudoSymmetric,   // R·C = L Q(g,C)
  PseudoSymmetricWeyl,   // C·C = L Q(g,C)
  RicciPseudoSymmetric,  // R·Ricc = L Q(g,Ricc)
  RicciWeyl,             // R·C = L Q(Ricc,C)
};

std::string to_string(NamedCondition c);
std::optional<NamedCondition> parse_named_condition(const std::string& s);
std::pair<TensorId, TensorId> condition_pair(NamedCondition c);

// Lazily built tensors of one model. Not thread safe; use one instance per point.
template <class S>
class PointTensors {
 public:
  explicit PointTensors(SubmanifoldModel<S> model) : model_(std::move(model)) {}

  const SubmanifoldModel<S>& model() const { return model_; }
  int n() const { return model_.n(); }

  const Tensor4<S>& R() {
    if (!R_) R_ = gauss_curvature(model_);
    return *R_;
  }
  const RicciData<S>& ricci() {
    if (!ric_) ric_ = ricci_from_R(R());
    return *ric_;
  }
  const Tensor4<S>& C() {
    if (!C_) C_ = weyl(R(), ricci());
    return *C_;
  }
  const Tensor4<S>& g_wedge_ricc() {
    if (!gR_) gR_ = g_wedge_ricci(ricci());
    return *gR_;
  }

  const Tensor6<S>& tensor6(TensorId id) {
    if (rank_of(id) != 6) throw std::invalid_argument(to_string(id) + " is not a (0,6)-tensor");
    auto it = t6_.find(id);
    if (it != t6_.end()) return it->second;
    return t6_.emplace(id, build6(id)).first->second;
  }

  const Tensor4<S>& tensor4(TensorId id) {
    if (rank_of(id) != 4) throw std::invalid_argument(to_string(id) + " is not a (0,4)-tensor");
    auto it = t4_.find(id);
    if (it != t4_.end()) return it->second;
    Tensor4<S> t = id == TensorId::RRicc ? derive(fR(), ricci().ricc) : derive(fg(), ricci().ricc);
    return t4_.emplace(id, std::move(t)).first->second;
  }

  bool is_zero_tensor(TensorId id) {
    return rank_of(id) == 6 ? tensor6(id).is_zero() : tensor4(id).is_zero();
  }

 private:
  const EndoField<S>& fR() {
    if (!fR_) fR_ = EndoField<S>::from_tensor(R());
    return *fR_;
  }
  const EndoField<S>& fC() {
    if (!fC_) fC_ = EndoField<S>::from_tensor(C());
    return *fC_;
  }
  const EndoField<S>& fg() {
    if (!fg_) fg_ = EndoField<S>::wedge(SymMatrix<S>::identity(n()));
    return *fg_;
  }
  const EndoField<S>& fS() {
    if (!fS_) fS_ = EndoField<S>::wedge(ricci().ricc);
    return *fS_;
  }

  Tensor6<S> build6(TensorId id) {
    switch (id) {
      case TensorId::RR: return derive(fR(), R());
      case TensorId::RC: return derive(fR(), C());
      case TensorId::CR: return derive(fC(), R());
      case TensorId::CC: return derive(fC(), C());
      case TensorId::RCmCR: return tensor6(TensorId::RC) - tensor6(TensorId::CR);
      case TensorId::QgR: return derive(fg(), R());
      case TensorId::QgC: return derive(fg(), C());
      case TensorId::QgGR: return derive(fg(), g_wedge_ricc());
      case TensorId::QSR: return derive(fS(), R());
      case TensorId::QSC: return derive(fS(), C());
      case TensorId::QSGS: return derive(fS(), g_wedge_ricc());
      default: break;
    }
    throw std::invalid_argument("not a (0,6)-tensor");
  }

  SubmanifoldModel<S> model_;
  std::optional<Tensor4<S>> R_, C_, gR_;
  std::optional<RicciData<S>> ric_;
  std::optional<EndoField<S>> fR_, fC_, fg_, fS_;
  std::map<TensorId, Tensor6<S>> t6_;
  std::map<TensorId, Tensor4<S>> t4_;
};

template <class S>
DependenceVerdict<S> dependence_of(PointTensors<S>& pt, TensorId left, TensorId right, double tol = kFloatTol) {
  if (rank_of(left) != rank_of(right))
    throw std::invalid_argument("cannot compare " + to_string(left) + " with " + to_string(right));
  if (rank_of(left) == 6) return dependence(pt.tensor6(left), pt.tensor6(right), tol);
  return dependence(pt.tensor4(left), pt.tensor4(right), tol);
}

template <class S>
struct ConditionReport {
  TensorId left;
  TensorId right;
  std::optional<NamedCondition> named;
  DependenceVerdict<S> verdict;
};

// Every rank-6 left × right pair in the order of left_tensors() × right_tensors(),
// followed by R·Ricc against Q(g,Ricc).
template <class S>
std::vector<ConditionReport<S>> condition_matrix(PointTensors<S>& pt, double tol = kFloatTol) {
  std::vector<ConditionReport<S>> out;
  auto tag = [](TensorId l, TensorId r) -> std::optional<NamedCondition> {
    for (auto c : {NamedCondition::PseudoSymmetric, NamedCondition::WeylPseudoSymmetric,
                   NamedCondition::PseudoSymmetricWeyl, NamedCondition::RicciPseudoSymmetric,
                   NamedCondition::RicciWeyl})
      if (condition_pair(c) == std::make_pair(l, r)) return c;
    return std::nullopt;
  };
  for (TensorId l : left_tensors())
    for (TensorId r : right_tensors()) out.push_back({l, r, tag(l, r), dependence_of(pt, l, r, tol)});
  out.push_back({TensorId::RRicc, TensorId::QgRicc, NamedCondition::RicciPseudoSymmetric,
                 dependence_of(pt, TensorId::RRicc, TensorId::QgRicc, tol)});
  return out;
}

template <class S>
std::vector<ConditionReport<S>> condition_matrix(const SubmanifoldModel<S>& model, double tol = kFloatTol) {
  PointTensors<S> pt(model);
  return condition_matrix(pt, tol);
}

// λ is the value of the condition's proportionality function at this point.
template <class S>
DependenceVerdict<S> extract_L(const SubmanifoldModel<S>& model, NamedCondition c, double tol = kFloatTol) {
  PointTensors<S> pt(model);
  const auto [l, r] = condition_pair(c);
  return dependence_of(pt, l, r, tol);
}

// ---- theorem verification over Choi–Lu parameter grids ----

enum class Hypothesis { Any, KPositive, KNonPositive, KZero };

bool satisfies(Hypothesis h, const Rational& k_tilde);

struct TheoremInfo {
  std::string id;
  Hypothesis hypothesis = Hypothesis::Any;
  std::string statement;
};

class UnknownTheoremError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// T1..T27, C1..C9, TB, TC, TD, TE in that order.
const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(const std::string& id);  // throws UnknownTheoremError

struct PointVerdict {
  ChoiLuParams params;
  std::string branch;     // "umbilical", "special" or "generic"
  bool predicted = false;  // what the statement asserts at this point
  bool observed = false;   // what the computation shows
  std::string kind;        // dependence kind, or "zero"/"nonzero"
  std::string lambda;      // exact rational string when available
  std::string claimed;     // claimed λ where the statement gives one
  std::string residual;
  std::string note;
  bool pass = true;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  std::vector<PointVerdict> points;
  std::size_t failures = 0;
  double seconds = 0.0;

  bool passed() const { return failures == 0; }
};

struct VerdictOptions {
  int jobs = 1;
  bool add_case_points = true;  // append the special-branch builder points to the grid
  double te_rel_tol = 1e-6;
};

// Points of the grid satisfying the theorem's hypothesis, plus special-branch points.
std::vector<ChoiLuParams> theorem_points(const std::string& id, const GridSpec& grid, bool add_case_points);

// Special-branch points built by theorem_case_builder: n ∈ {4,5,6}, μ ∈ {1,2,1/2}.
std::vector<ChoiLuParams> case_points(const std::string& case_id);

PointVerdict theorem_point_verdict(const std::string& id, const ChoiLuParams& p);
TheoremReport theorem_verdict(const std::string& id, const GridSpec& grid, const VerdictOptions& opts = {});

// Frame-independent membership in the special branches of the classification.
struct BranchFlags {
  bool umbilical = false;
  bool weyl_semi_symmetric = false;  // a=b=0, c²+k̃=0, μ≠0
  bool pseudo_umbilical = false;     // a=b=0, μ≠0
  bool mixed = false;                // a²+b²=μ², H²+k̃=2μ²/(n−1), μ≠0
  bool any_special() const { return weyl_semi_symmetric || pseudo_umbilical || mixed; }
};
BranchFlags branch_flags(const ChoiLuParams& p);

struct CounterexampleHit {
  ChoiLuParams params;
  DepKind kind;
  std::string lambda;
};

// Evaluates `left` against `right` (or against zero when right is empty) on every grid
// point that is non-umbilical and outside all special branches, plus every seed point
// unfiltered; returns the points where the condition holds.
std::vector<CounterexampleHit> counterexample_search(TensorId left, std::optional<TensorId> right,
                                                     const GridSpec& grid, int jobs,
                                                     const std::vector<ChoiLuParams>& seeds = {});

// a, b ∈ {−2,−1,1,2}/3 (never zero), the other variables as in the default grid.
GridSpec generic_grid();

}  // namespace wintgen
