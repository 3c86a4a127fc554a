#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wintgen/algebra.hpp"
#include "wintgen/curvature.hpp"

namespace wintgen {

// Family of endomorphisms ℬ(E_x,E_y), stored row-wise: row(x,y,z) lists the
// nonzero coordinates w of ℬ(E_x,E_y)E_z = Σ_w B(x,y,z,w) E_w.
template <class S>
class EndoField {
 public:
  struct Entry {
    int w;
    S value;
  };

  // B must be skew in both index pairs (R, C and their combinations are).
  static EndoField from_tensor(const Tensor4<S>& B) {
    if (!is_pair_skew(B)) throw std::invalid_argument("endomorphism source must be skew in both index pairs");
    const int n = B.dim();
    EndoField f(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          for (int w = 0; w < n; ++w) {
            const S& v = B(x, y, z, w);
            if (!is_zero(v)) f.entries_.push_back({w, v});
          }
          f.start_.push_back(static_cast<std::uint32_t>(f.entries_.size()));
        }
    return f;
  }

  // ℬ(E_x,E_y) = E_x ∧_A E_y.
  static EndoField wedge(const SymMatrix<S>& A) {
    const int n = A.dim();
    EndoField f(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const auto v = wedge_endomorphism(A, x, y, z);
          for (int w = 0; w < n; ++w)
            if (!is_zero(v[w])) f.entries_.push_back({w, v[w]});
          f.start_.push_back(static_cast<std::uint32_t>(f.entries_.size()));
        }
    return f;
  }

  int dim() const { return n_; }

  std::span<const Entry> row(int x, int y, int z) const {
    std::size_t k = (static_cast<std::size_t>(x) * n_ + y) * n_ + z;
    return {entries_.data() + start_[k], entries_.data() + start_[k + 1]};
  }

 private:
  explicit EndoField(int n) : n_(n) { start_.push_back(0); }

  int n_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::uint32_t> start_;
};

// One component of ℬ·T for T of rank 4: −Σ_s Σ_w B(x,y,x_s,w) T(.., w at s, ..).
template <class S>
S derive_component(const EndoField<S>& B, const Tensor4<S>& T, const std::array<int, 6>& i) {
  S acc(0);
  const int x = i[4], y = i[5];
  for (const auto& e : B.row(x, y, i[0])) {
    const S& t = T(e.w, i[1], i[2], i[3]);
    if (!is_zero(t)) acc = acc - e.value * t;
  }
  for (const auto& e : B.row(x, y, i[1])) {
    const S& t = T(i[0], e.w, i[2], i[3]);
    if (!is_zero(t)) acc = acc - e.value * t;
  }
  for (const auto& e : B.row(x, y, i[2])) {
    const S& t = T(i[0], i[1], e.w, i[3]);
    if (!is_zero(t)) acc = acc - e.value * t;
  }
  for (const auto& e : B.row(x, y, i[3])) {
    const S& t = T(i[0], i[1], i[2], e.w);
    if (!is_zero(t)) acc = acc - e.value * t;
  }
  return acc;
}

// One component of ℬ·T for a symmetric rank-2 T, indexed (x1,x2;x,y).
template <class S>
S derive_component(const EndoField<S>& B, const SymMatrix<S>& T, const std::array<int, 4>& i) {
  S acc(0);
  for (const auto& e : B.row(i[2], i[3], i[0])) {
    const S& t = T(e.w, i[1]);
    if (!is_zero(t)) acc = acc - e.value * t;
  }
  for (const auto& e : B.row(i[2], i[3], i[1])) {
    const S& t = T(i[0], e.w);
    if (!is_zero(t)) acc = acc - e.value * t;
  }
  return acc;
}

// Full ℬ·T. Every EndoField is skew in (x,y), so only x<y is evaluated; when T is
// skew in both of its pairs, so is the output and only x1<x2, x3<x4 are evaluated.
template <class S>
Tensor6<S> derive(const EndoField<S>& B, const Tensor4<S>& T) {
  check_same_dim(B.dim(), T.dim());
  const int n = T.dim();
  Tensor6<S> out(n);
  const bool skew = is_pair_skew(T);
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = skew ? x1 + 1 : 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3)
        for (int x4 = skew ? x3 + 1 : 0; x4 < n; ++x4)
          for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
              S v = derive_component(B, T, {x1, x2, x3, x4, x, y});
              if (is_zero(v)) continue;
              S nv = -v;
              out(x1, x2, x3, x4, x, y) = v;
              out(x1, x2, x3, x4, y, x) = nv;
              if (skew) {
                out(x2, x1, x3, x4, x, y) = nv;
                out(x2, x1, x3, x4, y, x) = v;
                out(x1, x2, x4, x3, x, y) = nv;
                out(x1, x2, x4, x3, y, x) = v;
                out(x2, x1, x4, x3, x, y) = v;
                out(x2, x1, x4, x3, y, x) = nv;
              }
            }
  return out;
}

template <class S>
Tensor4<S> derive(const EndoField<S>& B, const SymMatrix<S>& T) {
  check_same_dim(B.dim(), T.dim());
  const int n = T.dim();
  Tensor4<S> out(n);
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          S v = derive_component(B, T, {x1, x2, x, y});
          if (is_zero(v)) continue;
          out(x1, x2, x, y) = v;
          out(x1, x2, y, x) = -v;
        }
  return out;
}

// B·T with B = R gives R·T, with B = C gives C·T.
template <class S>
Tensor6<S> endo_derive(const Tensor4<S>& B, const Tensor4<S>& T) {
  return derive(EndoField<S>::from_tensor(B), T);
}

template <class S>
Tensor4<S> endo_derive(const Tensor4<S>& B, const SymMatrix<S>& T) {
  return derive(EndoField<S>::from_tensor(B), T);
}

// Q(A,T): derivation by the endomorphisms E_x ∧_A E_y.
template <class S>
Tensor6<S> tachibana(const SymMatrix<S>& A, const Tensor4<S>& T) {
  return derive(EndoField<S>::wedge(A), T);
}

template <class S>
Tensor4<S> tachibana(const SymMatrix<S>& A, const SymMatrix<S>& T) {
  return derive(EndoField<S>::wedge(A), T);
}

enum class PTensorForm {
  Corrected,  // every slot follows δ_{x,x_s} R(..𝒮E_y..) − δ_{y,x_s} R(..𝒮E_x..)
  Literal,    // third slot subtracts R(..𝒮E_y..)
};

// P(x1..x4;x,y) = Σ_s [δ_{x,x_s} R(.., 𝒮(E_y) at s, ..) − δ_{y,x_s} R(.., 𝒮(E_x) at s, ..)]
template <class S>
Tensor6<S> p_tensor(const Tensor4<S>& R, const RicciData<S>& ricci, PTensorForm form = PTensorForm::Corrected) {
  const int n = R.dim();
  check_same_dim(n, ricci.ricc.dim());
  const auto& Sm = ricci.ricc;
  // R with 𝒮(E_u) substituted into slot s: RS[s](..u at s..) = Σ_v S_uv R(..v at s..)
  std::array<Tensor4<S>, 4> RS{Tensor4<S>(n), Tensor4<S>(n), Tensor4<S>(n), Tensor4<S>(n)};
  for_each_index<4>(n, [&](const std::array<int, 4>& i) {
    for (int s = 0; s < 4; ++s) {
      S acc(0);
      auto j = i;
      for (int v = 0; v < n; ++v) {
        if (is_zero(Sm(i[s], v))) continue;
        j[s] = v;
        const S& r = R[j];
        if (!is_zero(r)) acc = acc + Sm(i[s], v) * r;
      }
      RS[s][i] = acc;
    }
  });
  Tensor6<S> out(n);
  for_each_index<6>(n, [&](const std::array<int, 6>& i) {
    const int x = i[4], y = i[5];
    S acc(0);
    for (int s = 0; s < 4; ++s) {
      std::array<int, 4> j{i[0], i[1], i[2], i[3]};
      if (i[s] == x) {
        j[s] = y;
        acc = acc + RS[s][j];
      }
      if (i[s] == y) {
        j[s] = (form == PTensorForm::Literal && s == 2) ? y : x;
        acc = acc - RS[s][j];
      }
    }
    out[i] = acc;
  });
  return out;
}

// (A∧D)(x1,x2,x3,x4;x,y) = A[x1][x4]D(x2,x3;x,y) + A[x2][x3]D(x1,x4;x,y)
//                          − A[x1][x3]D(x2,x4;x,y) − A[x2][x4]D(x1,x3;x,y)
template <class S>
Tensor6<S> extended_kulkarni(const SymMatrix<S>& A, const Tensor4<S>& D) {
  check_same_dim(A.dim(), D.dim());
  const int n = A.dim();
  Tensor6<S> out(n);
  for_each_index<6>(n, [&](const std::array<int, 6>& i) {
    const int a = i[0], b = i[1], c = i[2], d = i[3], x = i[4], y = i[5];
    S acc(0);
    if (!is_zero(A(a, d))) acc = acc + A(a, d) * D(b, c, x, y);
    if (!is_zero(A(b, c))) acc = acc + A(b, c) * D(a, d, x, y);
    if (!is_zero(A(a, c))) acc = acc - A(a, c) * D(b, d, x, y);
    if (!is_zero(A(b, d))) acc = acc - A(b, d) * D(a, c, x, y);
    out[i] = acc;
  });
  return out;
}

struct CommutationConvention {
  int extension_sign = +1;  // sign with which g∧(R·Ricc) enters the residual
  PTensorForm p_form = PTensorForm::Corrected;
};

// (n−2)(R·C − C·R) − Q(Ricc − τ/(n−1) g, R) + sign·g∧(R·Ricc) − P
template <class S>
Tensor6<S> commutation_residual(const SubmanifoldModel<S>& model, CommutationConvention conv = {}) {
  const int n = model.n();
  const auto R = gauss_curvature(model);
  const auto ric = ricci_from_R(R);
  const auto C = weyl(R, ric);
  const auto g = SymMatrix<S>::identity(n);
  const auto fR = EndoField<S>::from_tensor(R);
  const auto fC = EndoField<S>::from_tensor(C);
  const auto RC = derive(fR, C);
  const auto CR = derive(fC, R);
  const auto shifted = ric.ricc + (S(-1) * ric.tau / S(n - 1)) * g;
  const auto Q = tachibana(shifted, R);
  const auto ext = extended_kulkarni(g, derive(fR, ric.ricc));
  const auto P = p_tensor(R, ric, conv.p_form);
  const auto diff = RC - CR;
  return linear_combination<S, 6>(
      {{S(n - 2), &diff}, {S(-1), &Q}, {S(conv.extension_sign), &ext}, {S(-1), &P}});
}

}  // namespace wintgen
