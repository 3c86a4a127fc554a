#pragma once

#include <array>
#include <string>
#include <vector>

#include "wintgen/choi_lu.hpp"
#include "wintgen/curvature.hpp"
#include "wintgen/random_model.hpp"

namespace wintgen::testing {

inline Rational Q(const std::string& s) { return Rational::parse(s); }

inline ChoiLuParams params(const std::string& a, const std::string& b, const std::string& c, const std::string& mu,
                           const std::string& k, int n = 4, int m = 3) {
  ChoiLuParams p{Q(a), Q(b), Q(c), Q(mu), Q(k), n, m};
  return p;
}

inline SubmanifoldModel<Rational> choi_lu(const std::string& a, const std::string& b, const std::string& c,
                                          const std::string& mu, const std::string& k, int n = 4, int m = 3) {
  return choi_lu_shape_ops(params(a, b, c, mu, k, n, m));
}

// The frame everyone uses in the examples: n=4, m=3, k̃=0, a=b=c=μ=1.
inline SubmanifoldModel<Rational> unit_model() { return choi_lu("1", "1", "1", "1", "0"); }

inline SubmanifoldModel<Rational> geodesic(int n, const Rational& k, int m = 2) {
  return SubmanifoldModel<Rational>(n, m, k, std::vector<SymMatrix<Rational>>(m, SymMatrix<Rational>(n)));
}

// Plain-loop oracles written straight from the defining formulas. They share no code
// with the library beyond the tensor containers.

inline Tensor4<Rational> oracle_kn(const SymMatrix<Rational>& A, const SymMatrix<Rational>& B) {
  const int n = A.dim();
  Tensor4<Rational> T(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          // A(X1,X4)B(X2,X3) + A(X2,X3)B(X1,X4) − A(X1,X3)B(X2,X4) − A(X2,X4)B(X1,X3)
          Rational v = A(a, d) * B(b, c);
          v += A(b, c) * B(a, d);
          v -= A(a, c) * B(b, d);
          v -= A(b, d) * B(a, c);
          T(a, b, c, d) = v;
        }
  return T;
}

inline Tensor4<Rational> oracle_gauss(const SubmanifoldModel<Rational>& M) {
  const int n = M.n();
  Tensor4<Rational> R(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Rational v = 0;
          for (const auto& A : M.shape_ops()) v += A(a, d) * A(b, c) - A(a, c) * A(b, d);
          Rational dad = a == d ? 1 : 0, dbc = b == c ? 1 : 0, dac = a == c ? 1 : 0, dbd = b == d ? 1 : 0;
          R(a, b, c, d) = v + M.k_tilde() * (dad * dbc - dac * dbd);
        }
  return R;
}

// (B·T)(x1..x4;x,y) = −Σ_s Σ_w B(x,y,x_s,w) T(.., w at s, ..)
inline Tensor6<Rational> oracle_derive(const Tensor4<Rational>& B, const Tensor4<Rational>& T) {
  const int n = T.dim();
  Tensor6<Rational> out(n);
  for_each_index<6>(n, [&](const std::array<int, 6>& i) {
    Rational acc = 0;
    for (int s = 0; s < 4; ++s)
      for (int w = 0; w < n; ++w) {
        std::array<int, 4> j{i[0], i[1], i[2], i[3]};
        j[s] = w;
        acc -= B(i[4], i[5], i[s], w) * T[j];
      }
    out[i] = acc;
  });
  return out;
}

// Q(A,T)(x1..x4;x,y) = −Σ_s T(.., (E_x∧_A E_y)E_{x_s}, ..), (X∧_A Y)Z = A(Y,Z)X − A(X,Z)Y
inline Tensor6<Rational> oracle_tachibana(const SymMatrix<Rational>& A, const Tensor4<Rational>& T) {
  const int n = T.dim();
  Tensor6<Rational> out(n);
  for_each_index<6>(n, [&](const std::array<int, 6>& i) {
    const int x = i[4], y = i[5];
    Rational acc = 0;
    for (int s = 0; s < 4; ++s) {
      std::array<int, 4> jx{i[0], i[1], i[2], i[3]}, jy = jx;
      jx[s] = x;
      jy[s] = y;
      acc -= A(y, i[s]) * T[jx] - A(x, i[s]) * T[jy];
    }
    out[i] = acc;
  });
  return out;
}

}  // namespace wintgen::testing
