#pragma once

#include <cstddef>
#include <vector>

#include "wintgen/choi_lu.hpp"
#include "wintgen/rational.hpp"

namespace wintgen {

// Cartesian parameter grid over Choi–Lu frames.
struct GridSpec {
  std::vector<Rational> a, b, c, mu, k_tilde;
  std::vector<int> n_list, m_list;

  // a, b, c, μ, k̃ ∈ {−2,−1,0,1,2}/3, n ∈ {4..7}, m ∈ {2,3,4}
  static GridSpec default_grid();

  // Points in order n, m, a, b, c, μ, k̃ (last varies fastest). m = 2 is paired with c = 0 only.
  std::vector<ChoiLuParams> points() const;
};

}  // namespace wintgen
