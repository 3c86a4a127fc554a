#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wintgen/curvature.hpp"
#include "wintgen/rational.hpp"

namespace wintgen {

class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters of the canonical shape operators of a Wintgen ideal submanifold.
struct ChoiLuParams {
  Rational a, b, c, mu, k_tilde;
  int n = 4;
  int m = 3;

  Rational H_sq() const { return a * a + b * b + c * c; }
  void validate() const;
  std::string describe() const;  // "n=4 m=3 a=1 b=1 c=1 mu=1 k=0"
};

// A_1 = a·Id + μ(E_1⊗E_2 + E_2⊗E_1), A_2 = b·Id + μ·diag(1,−1,0,…), A_3 = c·Id, A_4.. = 0.
SubmanifoldModel<Rational> choi_lu_shape_ops(const ChoiLuParams& p);

// Closed-form components in a Choi–Lu frame; i, j denote indices ≥ 3.
struct ComponentTable {
  Rational R_1221, R_1ii1, R_2ii2, R_ijji, R_1ii2;
  Rational S_11, S_12, S_22, S_ii;
  Rational gwR_1221, gwR_1ii1, gwR_2ii2, gwR_ijji;
  Rational C_1221, C_1ii1, C_2ii2, C_ijji;
  Rational tau, rho;

  std::vector<std::pair<std::string, Rational>> entries() const;
};

ComponentTable closed_form_table(const ChoiLuParams& p);

// Branch models for the special cases of the classification theorems.
//   c2k  (aliases T2ii T6ii T7ii T9ii T13ii T14ii T18ii T22ii): a=b=0, c²=−k̃, μ≠0
//   C1ii: a=b=c=0, k̃=0, μ≠0
//   T10ii: a=b=0, μ≠0, c free
//   T25ii: a=b=0, μ≠0, c²+k̃≠0
//   T27ii: a=0, b=μ≠0, c² = −k̃ − μ²(n−3)/(n−1)
//   umbilical: μ=0 (a, b, c free); geodesic: a=b=c=μ=0
struct CaseArgs {
  int n = 4;
  int m = 3;
  Rational mu, c, k_tilde;
  Rational a, b;  // used by the umbilical case only
};

bool is_known_case(const std::string& case_id);
std::vector<std::string> known_cases();
ChoiLuParams theorem_case_params(const std::string& case_id, const CaseArgs& args);
SubmanifoldModel<Rational> theorem_case_builder(const std::string& case_id, const CaseArgs& args);

}  // namespace wintgen
