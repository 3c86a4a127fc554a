#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wintgen/scalar.hpp"

namespace wintgen {

inline constexpr int kMaxDim = 12;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline void check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw DimensionError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
}

inline void check_same_dim(int a, int b) {
  if (a != b) throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Symmetric n x n matrix. Writes go through set(), which keeps both halves equal.
template <class S>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, S(0)) { check_dim(n); }

  static SymMatrix identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, S(1));
    return m;
  }

  static SymMatrix scalar(int n, const S& v) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, v);
    return m;
  }

  static SymMatrix from_rows(const std::vector<std::vector<S>>& rows) {
    int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw DimensionError("matrix is not square");
      for (int j = 0; j < n; ++j) m.a_[m.flat(i, j)] = rows[i][j];
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!(m(i, j) == m(j, i)))
          throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
    return m;
  }

  int dim() const { return n_; }
  const S& operator()(int i, int j) const { return a_[flat(i, j)]; }
  const S& at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw IndexError("matrix index out of range");
    return (*this)(i, j);
  }
  void set(int i, int j, const S& v) {
    a_[flat(i, j)] = v;
    a_[flat(j, i)] = v;
  }

  S trace() const {
    S t(0);
    for (int i = 0; i < n_; ++i) t = t + (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!wintgen::is_zero(v)) return false;
    return true;
  }

  template <class T>
  SymMatrix<T> cast() const {
    SymMatrix<T> out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) out.set(i, j, convert<T>((*this)(i, j)));
    return out;
  }

  friend bool operator==(const SymMatrix& x, const SymMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  template <class T>
  static T convert(const S& v) {
    if constexpr (std::is_same_v<T, S>) return v;
    else return ScalarTraits<T>::from(v);
  }
  std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<S> a_;
};

template <class S>
SymMatrix<S> operator+(const SymMatrix<S>& x, const SymMatrix<S>& y) {
  check_same_dim(x.dim(), y.dim());
  SymMatrix<S> r(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = i; j < x.dim(); ++j) r.set(i, j, x(i, j) + y(i, j));
  return r;
}

template <class S>
SymMatrix<S> operator*(const S& c, const SymMatrix<S>& x) {
  SymMatrix<S> r(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = i; j < x.dim(); ++j) r.set(i, j, c * x(i, j));
  return r;
}

// Dense tensor with every index ranging over 0..n-1, row-major.
template <class S, std::size_t Rank>
class Tensor {
 public:
  using Index = std::array<int, Rank>;
  static constexpr std::size_t rank = Rank;

  Tensor() = default;
  explicit Tensor(int n) : n_(n) {
    check_dim(n);
    std::size_t total = 1;
    for (std::size_t r = 0; r < Rank; ++r) total *= static_cast<std::size_t>(n);
    data_.assign(total, S(0));
  }

  int dim() const { return n_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<S>& data() const { return data_; }
  std::vector<S>& data() { return data_; }

  std::size_t offset(const Index& idx) const {
    std::size_t off = 0;
    for (std::size_t r = 0; r < Rank; ++r) off = off * n_ + static_cast<std::size_t>(idx[r]);
    return off;
  }

  Index unflatten(std::size_t off) const {
    Index idx{};
    for (std::size_t r = Rank; r-- > 0;) {
      idx[r] = static_cast<int>(off % n_);
      off /= n_;
    }
    return idx;
  }

  const S& operator[](const Index& idx) const { return data_[offset(idx)]; }
  S& operator[](const Index& idx) { return data_[offset(idx)]; }

  template <class... I>
    requires(sizeof...(I) == Rank)
  const S& operator()(I... i) const {
    return data_[offset(Index{static_cast<int>(i)...})];
  }
  template <class... I>
    requires(sizeof...(I) == Rank)
  S& operator()(I... i) {
    return data_[offset(Index{static_cast<int>(i)...})];
  }

  const S& at(const Index& idx) const {
    for (int v : idx)
      if (v < 0 || v >= n_) throw IndexError("tensor index out of range");
    return (*this)[idx];
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!wintgen::is_zero(v)) return false;
    return true;
  }

  template <class T>
  Tensor<T, Rank> cast() const {
    Tensor<T, Rank> out(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if constexpr (std::is_same_v<T, S>) out.data()[k] = data_[k];
      else out.data()[k] = ScalarTraits<T>::from(data_[k]);
    }
    return out;
  }

  friend bool operator==(const Tensor& x, const Tensor& y) { return x.n_ == y.n_ && x.data_ == y.data_; }

 private:
  int n_ = 0;
  std::vector<S> data_;
};

template <class S>
using Tensor4 = Tensor<S, 4>;
template <class S>
using Tensor6 = Tensor<S, 6>;

template <class S, std::size_t Rank>
Tensor<S, Rank> operator+(const Tensor<S, Rank>& x, const Tensor<S, Rank>& y) {
  check_same_dim(x.dim(), y.dim());
  Tensor<S, Rank> r(x.dim());
  for (std::size_t k = 0; k < x.size(); ++k) r.data()[k] = x.data()[k] + y.data()[k];
  return r;
}

template <class S, std::size_t Rank>
Tensor<S, Rank> operator-(const Tensor<S, Rank>& x, const Tensor<S, Rank>& y) {
  check_same_dim(x.dim(), y.dim());
  Tensor<S, Rank> r(x.dim());
  for (std::size_t k = 0; k < x.size(); ++k) r.data()[k] = x.data()[k] - y.data()[k];
  return r;
}

template <class S, std::size_t Rank>
Tensor<S, Rank> operator*(const S& c, const Tensor<S, Rank>& x) {
  Tensor<S, Rank> r(x.dim());
  if (is_zero(c)) return r;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!is_zero(x.data()[k])) r.data()[k] = c * x.data()[k];
  return r;
}

// Normal curvature storage: (i, j) tangent, (alpha, beta) normal.
template <class S>
class NormalTensor4 {
 public:
  NormalTensor4() = default;
  NormalTensor4(int n, int m) : n_(n), m_(m), data_(static_cast<std::size_t>(n) * n * m * m, S(0)) {
    check_dim(n);
    if (m < 1) throw DimensionError("codimension must be at least 1");
  }

  int dim() const { return n_; }
  int codim() const { return m_; }
  const std::vector<S>& data() const { return data_; }

  const S& operator()(int i, int j, int a, int b) const { return data_[flat(i, j, a, b)]; }
  S& operator()(int i, int j, int a, int b) { return data_[flat(i, j, a, b)]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!wintgen::is_zero(v)) return false;
    return true;
  }

 private:
  std::size_t flat(int i, int j, int a, int b) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * m_ + a) * m_ + b;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<S> data_;
};

// Visits every index tuple in lexicographic order.
template <std::size_t Rank, class F>
void for_each_index(int n, F&& f) {
  std::array<int, Rank> idx{};
  while (true) {
    f(static_cast<const std::array<int, Rank>&>(idx));
    std::size_t r = Rank;
    while (r > 0) {
      --r;
      if (++idx[r] < n) break;
      idx[r] = 0;
      if (r == 0) return;
    }
    if constexpr (Rank == 0) return;
  }
}

}  // namespace wintgen
