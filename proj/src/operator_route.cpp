#include "wintgen/operator_route.hpp"

namespace wintgen {

namespace {

using Vec = OperatorRoute::Vec;

void axpy(Vec& acc, const Rational& s, const Vec& x) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!x[i].is_zero()) acc[i] += s * x[i];
}

}  // namespace

OperatorRoute::OperatorRoute(const SubmanifoldModel<Rational>& model) : n_(model.n()), model_(model) {
  // 𝒮E_u = Σ_v Ricc(E_u,E_v) E_v, Ricc(E_u,E_v) = Σ_i g(ℛ(E_i,E_u)E_v, E_i)
  for (int u = 0; u < n_; ++u) {
    Vec col(n_);
    for (int v = 0; v < n_; ++v) {
      Rational s;
      for (int i = 0; i < n_; ++i) s += curvature_op(basis(i), basis(u), basis(v))[i];
      col[v] = s;
    }
    ricci_cols_.push_back(col);
  }
  for (int u = 0; u < n_; ++u) tau_ += ricci_cols_[u][u];
}

Vec OperatorRoute::basis(int i) const {
  Vec e(n_);
  e.at(i) = 1;
  return e;
}

Rational OperatorRoute::dot(const Vec& x, const Vec& y) {
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  return s;
}

Vec OperatorRoute::wedge_apply(const Vec& X, const Vec& Y, const Vec& Z) {
  Vec out(X.size());
  axpy(out, dot(Y, Z), X);
  axpy(out, -dot(X, Z), Y);
  return out;
}

Vec OperatorRoute::apply_shape(int alpha, const Vec& X) const {
  const auto& A = model_.shape_op(alpha);
  Vec out(n_);
  for (int i = 0; i < n_; ++i) {
    Rational s;
    for (int j = 0; j < n_; ++j)
      if (!X[j].is_zero() && !A(i, j).is_zero()) s += A(i, j) * X[j];
    out[i] = s;
  }
  return out;
}

Vec OperatorRoute::curvature_op(const Vec& X, const Vec& Y, const Vec& Z) const {
  Vec out(n_);
  for (int al = 0; al < model_.m(); ++al) {
    Vec AX = apply_shape(al, X);
    Vec AY = apply_shape(al, Y);
    axpy(out, dot(AY, Z), AX);
    axpy(out, -dot(AX, Z), AY);
  }
  if (!model_.k_tilde().is_zero()) axpy(out, model_.k_tilde(), wedge_apply(X, Y, Z));
  return out;
}

Vec OperatorRoute::ricci_op(const Vec& X) const {
  Vec out(n_);
  for (int u = 0; u < n_; ++u) axpy(out, X[u], ricci_cols_[u]);
  return out;
}

Vec OperatorRoute::weyl_op(const Vec& X, const Vec& Y, const Vec& Z) const {
  Vec out = curvature_op(X, Y, Z);
  const Vec SX = ricci_op(X), SY = ricci_op(Y);
  Vec mix = wedge_apply(X, SY, Z);
  axpy(mix, 1, wedge_apply(SX, Y, Z));
  axpy(out, Rational(-1) / Rational(n_ - 2), mix);
  axpy(out, tau_ / Rational((n_ - 1) * (n_ - 2)), wedge_apply(X, Y, Z));
  return out;
}

Rational OperatorRoute::R(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
  return dot(curvature_op(a, b, c), d);
}

Rational OperatorRoute::C(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
  return dot(weyl_op(a, b, c), d);
}

Rational OperatorRoute::ricc(const Vec& a, const Vec& b) const { return dot(ricci_op(a), b); }

Rational OperatorRoute::g_wedge_ricc(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
  Vec v = wedge_apply(a, ricci_op(b), c);
  axpy(v, 1, wedge_apply(ricci_op(a), b, c));
  return dot(v, d);
}

Vec OperatorRoute::endo(Endo e, const Vec& X, const Vec& Y, const Vec& Z) const {
  switch (e) {
    case Endo::Curvature: return curvature_op(X, Y, Z);
    case Endo::Weyl: return weyl_op(X, Y, Z);
    case Endo::WedgeG: return wedge_apply(X, Y, Z);
    case Endo::WedgeRicc: {
      // (X ∧_Ricc Y)Z = Ricc(Y,Z)X − Ricc(X,Z)Y
      Vec out(n_);
      axpy(out, ricc(Y, Z), X);
      axpy(out, -ricc(X, Z), Y);
      return out;
    }
  }
  return Vec(n_);
}

Rational OperatorRoute::form(Form f, const std::array<Vec, 4>& v) const {
  switch (f) {
    case Form::R: return R(v[0], v[1], v[2], v[3]);
    case Form::C: return C(v[0], v[1], v[2], v[3]);
    case Form::GRicc: return g_wedge_ricc(v[0], v[1], v[2], v[3]);
  }
  return {};
}

// (ℬ·T)(X1..X4;X,Y) = −Σ_s T(X1, .., ℬ(X,Y)X_s, .., X4)
Rational OperatorRoute::derivation(Endo e, Form f, const std::array<int, 6>& idx) const {
  const Vec X = basis(idx[4]), Y = basis(idx[5]);
  std::array<Vec, 4> args{basis(idx[0]), basis(idx[1]), basis(idx[2]), basis(idx[3])};
  Rational acc;
  for (int s = 0; s < 4; ++s) {
    auto moved = args;
    moved[s] = endo(e, X, Y, args[s]);
    bool zero = true;
    for (const auto& c : moved[s]) zero = zero && c.is_zero();
    if (!zero) acc -= form(f, moved);
  }
  return acc;
}

Rational OperatorRoute::derived(DerivedId id, const std::array<int, 6>& idx) const {
  switch (id) {
    case DerivedId::RC: return derivation(Endo::Curvature, Form::C, idx);
    case DerivedId::CR: return derivation(Endo::Weyl, Form::R, idx);
    case DerivedId::RCmCR:
      return derivation(Endo::Curvature, Form::C, idx) - derivation(Endo::Weyl, Form::R, idx);
    case DerivedId::QgR: return derivation(Endo::WedgeG, Form::R, idx);
    case DerivedId::QgC: return derivation(Endo::WedgeG, Form::C, idx);
    case DerivedId::QgGR: return derivation(Endo::WedgeG, Form::GRicc, idx);
    case DerivedId::QSR: return derivation(Endo::WedgeRicc, Form::R, idx);
    case DerivedId::QSC: return derivation(Endo::WedgeRicc, Form::C, idx);
    case DerivedId::QSGS: return derivation(Endo::WedgeRicc, Form::GRicc, idx);
  }
  return {};
}

}  // namespace wintgen
