#include "wintgen/grid.hpp"

namespace wintgen {

GridSpec GridSpec::default_grid() {
  std::vector<Rational> v;
  for (int k = -2; k <= 2; ++k) v.emplace_back(k, 3);
  return {v, v, v, v, v, {4, 5, 6, 7}, {2, 3, 4}};
}

std::vector<ChoiLuParams> GridSpec::points() const {
  std::vector<ChoiLuParams> out;
  for (int n : n_list)
    for (int m : m_list)
      for (const auto& va : a)
        for (const auto& vb : b)
          for (const auto& vc : c) {
            if (m < 3 && !vc.is_zero()) continue;
            for (const auto& vmu : mu)
              for (const auto& vk : k_tilde) {
                ChoiLuParams p;
                p.a = va;
                p.b = vb;
                p.c = vc;
                p.mu = vmu;
                p.k_tilde = vk;
                p.n = n;
                p.m = m;
                out.push_back(p);
              }
          }
  return out;
}

}  // namespace wintgen
