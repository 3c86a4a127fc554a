#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wintgen/algebra.hpp"
#include "wintgen/tensor.hpp"

namespace wintgen {

// Pointwise data of a submanifold M^n of a real space form of curvature k_tilde,
// in an orthonormal tangent frame E_1..E_n and normal frame xi_1..xi_m.
template <class S>
class SubmanifoldModel {
 public:
  SubmanifoldModel() = default;
  SubmanifoldModel(int n, int m, S k_tilde, std::vector<SymMatrix<S>> shape_ops)
      : n_(n), m_(m), k_tilde_(std::move(k_tilde)), ops_(std::move(shape_ops)) {
    if (n < 4 || n > kMaxDim)
      throw DimensionError("tangent dimension must lie in 4.." + std::to_string(kMaxDim));
    if (m < 1) throw DimensionError("codimension must be at least 1");
    if (static_cast<int>(ops_.size()) != m)
      throw DimensionError("expected " + std::to_string(m) + " shape operators, got " + std::to_string(ops_.size()));
    for (const auto& A : ops_) check_same_dim(n, A.dim());
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const S& k_tilde() const { return k_tilde_; }
  const std::vector<SymMatrix<S>>& shape_ops() const { return ops_; }
  const SymMatrix<S>& shape_op(int alpha) const { return ops_.at(static_cast<std::size_t>(alpha)); }

  template <class T>
  SubmanifoldModel<T> cast() const {
    std::vector<SymMatrix<T>> ops;
    for (const auto& A : ops_) ops.push_back(A.template cast<T>());
    T k;
    if constexpr (std::is_same_v<T, S>) k = k_tilde_;
    else k = ScalarTraits<T>::from(k_tilde_);
    return SubmanifoldModel<T>(n_, m_, k, std::move(ops));
  }

 private:
  int n_ = 0;
  int m_ = 0;
  S k_tilde_{};
  std::vector<SymMatrix<S>> ops_;
};

template <class S>
struct MeanCurvatureData {
  std::vector<S> H_vec;
  S H_sq;
};

// In an orthonormal frame the Ricci operator has the same matrix as Ricc.
// tau is the scalar curvature (also written kappa).
template <class S>
struct RicciData {
  SymMatrix<S> ricc;
  SymMatrix<S> ricci_op;
  S tau;
};

// A real number that is kept exact when possible (square roots of non-squares are not).
struct RealValue {
  std::optional<Rational> exact;
  double approx = 0.0;

  static RealValue of(const Rational& q) { return {q, q.to_double()}; }
  static RealValue of(double x) { return {std::nullopt, x}; }
  std::string to_string() const;
};

template <class S>
struct ScalarInvariants {
  S rho;
  RealValue rho_perp;
  std::optional<double> inf_K;
};

// Minimal models are reported as Minimal even though A_H = 0 is trivially a multiple of Id.
enum class Umbilicity { TotallyGeodesic, TotallyUmbilical, Minimal, PseudoUmbilical, Generic };

std::string to_string(Umbilicity u);

template <class S>
Tensor4<S> gauss_curvature(const SubmanifoldModel<S>& model) {
  const int n = model.n();
  Tensor4<S> R(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          S v(0);
          for (const auto& A : model.shape_ops()) {
            const S& ad = A(a, d);
            const S& ac = A(a, c);
            if (!is_zero(ad)) v = v + ad * A(b, c);
            if (!is_zero(ac)) v = v - ac * A(b, d);
          }
          if (a == d && b == c) v = v + model.k_tilde();
          if (a == c && b == d) v = v - model.k_tilde();
          R(a, b, c, d) = v;
        }
  return R;
}

// S_uv = sum_i R(E_i, E_u, E_v, E_i)
template <class S>
RicciData<S> ricci_from_R(const Tensor4<S>& R) {
  const int n = R.dim();
  SymMatrix<S> ric(n);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      S s(0);
      for (int i = 0; i < n; ++i) s = s + R(i, u, v, i);
      ric.set(u, v, s);
    }
  S tau = ric.trace();
  return {ric, ric, tau};
}

template <class S>
Tensor4<S> g_wedge_ricci(const RicciData<S>& ricci) {
  return kulkarni_nomizu(SymMatrix<S>::identity(ricci.ricc.dim()), ricci.ricc);
}

// C = R − (1/(n−2)) g∧Ricc + (τ/(2(n−1)(n−2))) g∧g
template <class S>
Tensor4<S> weyl(const Tensor4<S>& R, const RicciData<S>& ricci) {
  const int n = R.dim();
  if (n < 4) throw DimensionError("Weyl tensor requires n >= 4");
  check_same_dim(n, ricci.ricc.dim());
  const auto g = SymMatrix<S>::identity(n);
  const auto gR = kulkarni_nomizu(g, ricci.ricc);
  const auto gg = kulkarni_nomizu(g, g);
  const S c1 = S(-1) / S(n - 2);
  const S c2 = ricci.tau / S(2 * (n - 1) * (n - 2));
  return linear_combination<S, 4>({{S(1), &R}, {c1, &gR}, {c2, &gg}});
}

// R⊥(E_i,E_j;ξ_α,ξ_β) = g([A_α,A_β]E_i, E_j)
template <class S>
NormalTensor4<S> normal_curvature(const SubmanifoldModel<S>& model) {
  const int n = model.n();
  const int m = model.m();
  NormalTensor4<S> out(n, m);
  for (int al = 0; al < m; ++al)
    for (int be = 0; be < m; ++be) {
      if (al == be) continue;
      const auto& A = model.shape_op(al);
      const auto& B = model.shape_op(be);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          S v(0);
          for (int k = 0; k < n; ++k) v = v + A(j, k) * B(k, i) - B(j, k) * A(k, i);
          out(i, j, al, be) = v;
        }
    }
  return out;
}

template <class S>
MeanCurvatureData<S> mean_curvature(const SubmanifoldModel<S>& model) {
  MeanCurvatureData<S> out{{}, S(0)};
  for (const auto& A : model.shape_ops()) {
    S h = A.trace() / S(model.n());
    out.H_sq = out.H_sq + h * h;
    out.H_vec.push_back(h);
  }
  return out;
}

// Σ_{i<j} Σ_{α<β} R⊥(E_i,E_j;ξ_α,ξ_β)²
template <class S>
S normal_radicand(const NormalTensor4<S>& Rp) {
  S sum(0);
  for (int i = 0; i < Rp.dim(); ++i)
    for (int j = i + 1; j < Rp.dim(); ++j)
      for (int a = 0; a < Rp.codim(); ++a)
        for (int b = a + 1; b < Rp.codim(); ++b) {
          const S& v = Rp(i, j, a, b);
          if (!is_zero(v)) sum = sum + v * v;
        }
  return sum;
}

template <class S>
RealValue rho_perp(const NormalTensor4<S>& Rp) {
  const int n = Rp.dim();
  S rad = normal_radicand(Rp);
  if constexpr (ScalarTraits<S>::exact) {
    Rational factor(2, static_cast<long long>(n) * (n - 1));
    if (auto root = rad.exact_sqrt()) return RealValue::of(factor * *root);
    return RealValue::of(factor.to_double() * std::sqrt(rad.to_double()));
  } else {
    return RealValue::of(2.0 / (n * (n - 1.0)) * std::sqrt(rad));
  }
}

template <class S>
ScalarInvariants<S> scalar_invariants(const SubmanifoldModel<S>& model, const Tensor4<S>& /*R*/,
                                      const RicciData<S>& ricci, const NormalTensor4<S>& Rp) {
  const int n = model.n();
  return {ricci.tau / S(n * (n - 1)), rho_perp(Rp), std::nullopt};
}

template <class S>
Umbilicity classify_umbilicity(const SubmanifoldModel<S>& model) {
  const auto mc = mean_curvature(model);
  const int n = model.n();
  bool geodesic = true;
  bool umbilical = true;
  for (int al = 0; al < model.m(); ++al) {
    const auto& A = model.shape_op(al);
    if (!A.is_zero()) geodesic = false;
    if (!(A == SymMatrix<S>::scalar(n, mc.H_vec[al]))) umbilical = false;
  }
  if (geodesic) return Umbilicity::TotallyGeodesic;
  if (umbilical) return Umbilicity::TotallyUmbilical;
  bool minimal = true;
  for (const auto& h : mc.H_vec)
    if (!is_zero(h)) minimal = false;
  if (minimal) return Umbilicity::Minimal;
  SymMatrix<S> AH(n);
  for (int al = 0; al < model.m(); ++al) AH = AH + mc.H_vec[al] * model.shape_op(al);
  if (AH == SymMatrix<S>::scalar(n, AH(0, 0))) return Umbilicity::PseudoUmbilical;
  return Umbilicity::Generic;
}

inline bool is_umbilical_class(Umbilicity u) {
  return u == Umbilicity::TotallyGeodesic || u == Umbilicity::TotallyUmbilical;
}

// H² − ρ⊥ + k̃ − ρ
template <class S>
RealValue ddvv_gap(const SubmanifoldModel<S>& model) {
  const auto R = gauss_curvature(model);
  const auto ric = ricci_from_R(R);
  const auto Rp = normal_curvature(model);
  const auto inv = scalar_invariants(model, R, ric, Rp);
  const auto mc = mean_curvature(model);
  S base = mc.H_sq + model.k_tilde() - inv.rho;
  if constexpr (ScalarTraits<S>::exact) {
    if (inv.rho_perp.exact) return RealValue::of(base - *inv.rho_perp.exact);
    return RealValue::of(base.to_double() - inv.rho_perp.approx);
  } else {
    return RealValue::of(base - inv.rho_perp.approx);
  }
}

}  // namespace wintgen
