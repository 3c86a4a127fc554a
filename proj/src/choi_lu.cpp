#include "wintgen/choi_lu.hpp"

#include <algorithm>
#include <sstream>

namespace wintgen {

void ChoiLuParams::validate() const {
  if (n < 4 || n > kMaxDim) throw ConstraintError("Choi-Lu frames need 4 <= n <= " + std::to_string(kMaxDim));
  if (m < 2) throw ConstraintError("Choi-Lu frames need m >= 2");
  if (m < 3 && !c.is_zero()) throw ConstraintError("c != 0 needs a third normal direction (m >= 3)");
}

std::string ChoiLuParams::describe() const {
  std::ostringstream os;
  os << "n=" << n << " m=" << m << " a=" << a << " b=" << b << " c=" << c << " mu=" << mu << " k=" << k_tilde;
  return os.str();
}

SubmanifoldModel<Rational> choi_lu_shape_ops(const ChoiLuParams& p) {
  p.validate();
  std::vector<SymMatrix<Rational>> ops;
  auto A1 = SymMatrix<Rational>::scalar(p.n, p.a);
  A1.set(0, 1, p.mu);
  ops.push_back(A1);
  auto A2 = SymMatrix<Rational>::scalar(p.n, p.b);
  A2.set(0, 0, p.b + p.mu);
  A2.set(1, 1, p.b - p.mu);
  ops.push_back(A2);
  if (p.m >= 3) ops.push_back(SymMatrix<Rational>::scalar(p.n, p.c));
  for (int al = 3; al < p.m; ++al) ops.emplace_back(p.n);
  return SubmanifoldModel<Rational>(p.n, p.m, p.k_tilde, std::move(ops));
}

std::vector<std::pair<std::string, Rational>> ComponentTable::entries() const {
  return {{"R_1221", R_1221},     {"R_1ii1", R_1ii1},     {"R_2ii2", R_2ii2},     {"R_ijji", R_ijji},
          {"R_1ii2", R_1ii2},     {"S_11", S_11},         {"S_12", S_12},         {"S_22", S_22},
          {"S_ii", S_ii},         {"gwR_1221", gwR_1221}, {"gwR_1ii1", gwR_1ii1}, {"gwR_2ii2", gwR_2ii2},
          {"gwR_ijji", gwR_ijji}, {"C_1221", C_1221},     {"C_1ii1", C_1ii1},     {"C_2ii2", C_2ii2},
          {"C_ijji", C_ijji},     {"tau", tau},           {"rho", rho}};
}

ComponentTable closed_form_table(const ChoiLuParams& p) {
  const Rational n(p.n);
  const Rational hk = p.H_sq() + p.k_tilde;
  const Rational mu2 = p.mu * p.mu;
  const Rational bmu = p.b * p.mu;
  ComponentTable t;
  t.R_1221 = hk - 2 * mu2;
  t.R_1ii1 = hk + bmu;
  t.R_2ii2 = hk - bmu;
  t.R_ijji = hk;
  t.R_1ii2 = p.a * p.mu;
  t.S_11 = (n - 1) * hk - 2 * mu2 + (n - 2) * bmu;
  t.S_12 = (n - 2) * p.a * p.mu;
  t.S_22 = (n - 1) * hk - 2 * mu2 - (n - 2) * bmu;
  t.S_ii = (n - 1) * hk;
  t.gwR_1221 = 2 * (n - 1) * hk - 4 * mu2;
  t.gwR_1ii1 = 2 * (n - 1) * hk - 2 * mu2 + (n - 2) * bmu;
  t.gwR_2ii2 = 2 * (n - 1) * hk - 2 * mu2 - (n - 2) * bmu;
  t.gwR_ijji = 2 * (n - 1) * hk;
  t.C_1221 = -2 * (n - 3) * mu2 / (n - 1);
  t.C_1ii1 = 2 * (n - 3) * mu2 / ((n - 1) * (n - 2));
  t.C_2ii2 = 2 * (n - 3) * mu2 / ((n - 1) * (n - 2));
  t.C_ijji = -4 * mu2 / ((n - 1) * (n - 2));
  t.tau = n * (n - 1) * hk - 4 * mu2;
  t.rho = hk - 4 * mu2 / (n * (n - 1));
  return t;
}

namespace {

const std::vector<std::string> kC2kAliases = {"T2ii", "T6ii", "T7ii", "T9ii", "T13ii", "T14ii", "T18ii", "T22ii"};

void require_mu(const CaseArgs& args, const std::string& id) {
  if (args.mu.is_zero()) throw ConstraintError(id + " requires mu != 0");
}

}  // namespace

std::vector<std::string> known_cases() {
  auto out = kC2kAliases;
  for (const char* id : {"C1ii", "T10ii", "T25ii", "T27ii", "umbilical", "geodesic"}) out.emplace_back(id);
  return out;
}

bool is_known_case(const std::string& case_id) {
  auto all = known_cases();
  return std::find(all.begin(), all.end(), case_id) != all.end();
}

ChoiLuParams theorem_case_params(const std::string& id, const CaseArgs& args) {
  ChoiLuParams p;
  p.n = args.n;
  p.m = args.m;
  p.k_tilde = args.k_tilde;
  p.mu = args.mu;
  p.c = args.c;
  if (std::find(kC2kAliases.begin(), kC2kAliases.end(), id) != kC2kAliases.end()) {
    require_mu(args, id);
    if (args.k_tilde.sign() > 0) throw ConstraintError(id + " requires k_tilde <= 0");
    if (!(args.c * args.c == -args.k_tilde)) throw ConstraintError(id + " requires c^2 = -k_tilde");
  } else if (id == "C1ii") {
    require_mu(args, id);
    if (!args.k_tilde.is_zero()) throw ConstraintError("C1ii requires k_tilde = 0");
    p.c = 0;
  } else if (id == "T10ii") {
    require_mu(args, id);
  } else if (id == "T25ii") {
    require_mu(args, id);
    if ((args.c * args.c + args.k_tilde).is_zero()) throw ConstraintError("T25ii requires c^2 + k_tilde != 0");
  } else if (id == "T27ii") {
    require_mu(args, id);
    p.b = args.mu;
    const Rational n(args.n);
    if (!(args.c * args.c == -args.k_tilde - args.mu * args.mu * (n - 3) / (n - 1)))
      throw ConstraintError("T27ii requires c^2 = -k_tilde - mu^2 (n-3)/(n-1)");
  } else if (id == "umbilical") {
    p.mu = 0;
    p.a = args.a;
    p.b = args.b;
  } else if (id == "geodesic") {
    p.mu = 0;
    p.c = 0;
  } else {
    throw std::invalid_argument("unknown case id: " + id);
  }
  p.validate();
  return p;
}

SubmanifoldModel<Rational> theorem_case_builder(const std::string& case_id, const CaseArgs& args) {
  return choi_lu_shape_ops(theorem_case_params(case_id, args));
}

}  // namespace wintgen
