#pragma once

#include <utility>
#include <vector>

#include "wintgen/tensor.hpp"

namespace wintgen {

// (A ∧ B)(x1,x2,x,y) = A[x1][y]B[x2][x] + A[x2][x]B[x1][y] − A[x1][x]B[x2][y] − A[x2][y]B[x1][x]
template <class S>
Tensor4<S> kulkarni_nomizu(const SymMatrix<S>& A, const SymMatrix<S>& B) {
  check_same_dim(A.dim(), B.dim());
  const int n = A.dim();
  Tensor4<S> out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          out(a, b, x, y) = A(a, y) * B(b, x) + A(b, x) * B(a, y) - A(a, x) * B(b, y) - A(b, y) * B(a, x);
  return out;
}

// Coordinates of (E_x ∧_A E_y)E_z = A(y,z)E_x − A(x,z)E_y. Indices are 0-based.
template <class S>
std::vector<S> wedge_endomorphism(const SymMatrix<S>& A, int x, int y, int z) {
  const int n = A.dim();
  if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) throw IndexError("wedge index out of range");
  std::vector<S> v(static_cast<std::size_t>(n), S(0));
  v[x] = v[x] + A(y, z);
  v[y] = v[y] - A(x, z);
  return v;
}

template <class S, std::size_t Rank>
Tensor<S, Rank> linear_combination(const std::vector<std::pair<S, const Tensor<S, Rank>*>>& terms) {
  if (terms.empty()) throw DimensionError("empty linear combination");
  const int n = terms.front().second->dim();
  Tensor<S, Rank> out(n);
  for (const auto& [coef, t] : terms) {
    check_same_dim(n, t->dim());
    if (is_zero(coef)) continue;
    auto& dst = out.data();
    const auto& src = t->data();
    for (std::size_t k = 0; k < src.size(); ++k)
      if (!is_zero(src[k])) dst[k] = dst[k] + coef * src[k];
  }
  return out;
}

template <class S, std::size_t Rank>
Tensor<S, Rank> linear_combination(std::initializer_list<std::pair<S, const Tensor<S, Rank>*>> terms) {
  return linear_combination(std::vector<std::pair<S, const Tensor<S, Rank>*>>(terms));
}

// Largest |component| and the lexicographically first index where it occurs.
// Zero tensors return 0 at the all-zeros index.
template <class S, std::size_t Rank>
std::pair<S, typename Tensor<S, Rank>::Index> max_abs_component(const Tensor<S, Rank>& t) {
  S best(0);
  std::size_t where = 0;
  const auto& d = t.data();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (is_zero(d[k])) continue;
    S v = abs_of(d[k]);
    if (v > best) {
      best = v;
      where = k;
    }
  }
  return {best, t.unflatten(where)};
}

// Exhaustive symmetry checks, exact in rational mode.
template <class S>
bool is_pair_skew(const Tensor4<S>& t) {
  const int n = t.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const S& v = t(a, b, c, d);
          if (!(v == -t(b, a, c, d)) || !(v == -t(a, b, d, c))) return false;
        }
  return true;
}

template <class S>
bool satisfies_first_bianchi(const Tensor4<S>& t) {
  const int n = t.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (!is_zero(t(a, b, c, d) + t(b, c, a, d) + t(c, a, b, d))) return false;
  return true;
}

template <class S>
bool has_pair_symmetry(const Tensor4<S>& t) {
  const int n = t.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (!(t(a, b, c, d) == t(c, d, a, b))) return false;
  return true;
}

template <class S>
bool is_curvature_like(const Tensor4<S>& t) {
  return is_pair_skew(t) && has_pair_symmetry(t) && satisfies_first_bianchi(t);
}

// Skew in (x1,x2), (x3,x4) and (x,y).
template <class S>
bool is_derived_skew(const Tensor6<S>& t) {
  bool ok = true;
  for_each_index<6>(t.dim(), [&](const std::array<int, 6>& i) {
    if (!ok) return;
    const S& v = t[i];
    if (!(v == -t(i[1], i[0], i[2], i[3], i[4], i[5])) || !(v == -t(i[0], i[1], i[3], i[2], i[4], i[5])) ||
        !(v == -t(i[0], i[1], i[2], i[3], i[5], i[4])))
      ok = false;
  });
  return ok;
}

}  // namespace wintgen
