#pragma once

#include <cstdint>
#include <vector>

#include "wintgen/tensor.hpp"

namespace wintgen {

class DegeneratePlane : public std::invalid_argument {
 public:
  DegeneratePlane() : std::invalid_argument("vectors do not span a 2-plane") {}
};

// K(u,v) = R(u,v,v,u) / (|u|²|v|² − ⟨u,v⟩²)
template <class S>
S sectional_curvature(const Tensor4<S>& R, const std::vector<S>& u, const std::vector<S>& v) {
  const int n = R.dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n) throw DimensionError("vector length");
  S uu(0), vv(0), uv(0);
  for (int i = 0; i < n; ++i) {
    uu = uu + u[i] * u[i];
    vv = vv + v[i] * v[i];
    uv = uv + u[i] * v[i];
  }
  S den = uu * vv - uv * uv;
  if (is_zero(den)) throw DegeneratePlane();
  S num(0);
  for (int a = 0; a < n; ++a) {
    if (is_zero(u[a])) continue;
    for (int b = 0; b < n; ++b) {
      if (is_zero(v[b])) continue;
      for (int c = 0; c < n; ++c) {
        if (is_zero(v[c])) continue;
        for (int d = 0; d < n; ++d) {
          if (is_zero(u[d])) continue;
          const S& r = R(a, b, c, d);
          if (!is_zero(r)) num = num + r * u[a] * v[b] * v[c] * u[d];
        }
      }
    }
  }
  return num / den;
}

struct InfSectionalStrategy {
  bool coordinate_seeds = true;
  int random_restarts = 16;
  double refine_tol = 1e-13;
  int max_iterations = 500;
  std::uint64_t seed = 1;
};

struct InfSectionalResult {
  double value = 0.0;
  std::vector<double> u;  // orthonormal basis of the achieved plane
  std::vector<double> v;
  int starts = 0;
};

// Best-found minimum of the sectional curvature over 2-planes. Not certified.
InfSectionalResult inf_sectional(const Tensor4<double>& R, const InfSectionalStrategy& strategy = {});

}  // namespace wintgen
