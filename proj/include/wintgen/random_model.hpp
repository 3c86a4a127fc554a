#pragma once

#include <vector>

#include "wintgen/curvature.hpp"
#include "wintgen/random.hpp"

namespace wintgen {

// k/8 with k uniform in [−16, 16].
inline Rational random_eighths(Pcg64& rng) { return Rational(rng.uniform_int(-16, 16), 8); }

inline SymMatrix<Rational> random_sym(Pcg64& rng, int n) {
  SymMatrix<Rational> A(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A.set(i, j, random_eighths(rng));
  return A;
}

// General (not Wintgen ideal) model: every shape operator and k̃ drawn entrywise.
inline SubmanifoldModel<Rational> random_model(Pcg64& rng, int n, int m) {
  std::vector<SymMatrix<Rational>> ops;
  for (int al = 0; al < m; ++al) ops.push_back(random_sym(rng, n));
  Rational k = random_eighths(rng);
  return SubmanifoldModel<Rational>(n, m, k, std::move(ops));
}

}  // namespace wintgen
