#pragma once

#include <array>
#include <vector>

#include "wintgen/component_tables.hpp"
#include "wintgen/curvature.hpp"
#include "wintgen/rational.hpp"

namespace wintgen {

// Second, independent evaluation path. Nothing here goes through the dense tensors
// of gauss_curvature/weyl/kulkarni_nomizu or the EndoField derivation code: every value
// is obtained by applying the endomorphisms ℛ(X,Y), 𝒞(X,Y), X∧_A Y to vectors.
class OperatorRoute {
 public:
  using Vec = std::vector<Rational>;

  explicit OperatorRoute(const SubmanifoldModel<Rational>& model);

  int n() const { return n_; }
  Vec basis(int i) const;

  // ℛ(X,Y)Z = Σ_α (A_αX ∧ A_αY)Z + k̃ (X∧Y)Z
  Vec curvature_op(const Vec& X, const Vec& Y, const Vec& Z) const;
  // 𝒮X with g(𝒮X, Y) = tr{Z ↦ ℛ(Z,X)Y}
  Vec ricci_op(const Vec& X) const;
  // 𝒞(X,Y) = ℛ(X,Y) − (X∧𝒮Y + 𝒮X∧Y)/(n−2) + τ/((n−1)(n−2)) X∧Y
  Vec weyl_op(const Vec& X, const Vec& Y, const Vec& Z) const;
  const Rational& tau() const { return tau_; }

  Rational R(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const;
  Rational C(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const;
  Rational ricc(const Vec& a, const Vec& b) const;
  // (g∧Ricc)(X1,X2,X3,X4) = g((X1∧𝒮X2 + 𝒮X1∧X2)X3, X4)
  Rational g_wedge_ricc(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const;

  // Component (x1,x2,x3,x4;x,y) (0-based) of a tabulated (0,6)-tensor.
  Rational derived(DerivedId id, const std::array<int, 6>& idx) const;

  static Rational dot(const Vec& x, const Vec& y);
  static Vec wedge_apply(const Vec& X, const Vec& Y, const Vec& Z);  // (X∧Y)Z
  Vec apply_shape(int alpha, const Vec& X) const;

 private:
  enum class Endo { Curvature, Weyl, WedgeG, WedgeRicc };
  enum class Form { R, C, GRicc };

  Vec endo(Endo e, const Vec& X, const Vec& Y, const Vec& Z) const;
  Rational form(Form f, const std::array<Vec, 4>& v) const;
  Rational derivation(Endo e, Form f, const std::array<int, 6>& idx) const;

  int n_ = 0;
  SubmanifoldModel<Rational> model_;
  std::vector<Vec> ricci_cols_;  // 𝒮E_j
  Rational tau_;
};

}  // namespace wintgen
