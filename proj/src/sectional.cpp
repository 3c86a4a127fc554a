#include "wintgen/sectional.hpp"

#include <Eigen/Dense>
#include <limits>

#include "wintgen/random.hpp"

namespace wintgen {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Q_w[a][d] = Σ_{b,c} R(a,b,c,d) w_b w_c (first-slot form) or Σ_{a,d} R(a,b,c,d) w_a w_d (second-slot form).
MatrixXd contract_outer(const Tensor4<double>& R, const VectorXd& w) {
  const int n = R.dim();
  MatrixXd Q = MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      double s = 0.0;
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) s += R(a, b, c, d) * w[b] * w[c];
      Q(a, d) = s;
    }
  return Q;
}

MatrixXd contract_inner(const Tensor4<double>& R, const VectorXd& w) {
  const int n = R.dim();
  MatrixXd Q = MatrixXd::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      double s = 0.0;
      for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d) s += R(a, b, c, d) * w[a] * w[d];
      Q(b, c) = s;
    }
  return Q;
}

// Unit vector x ⊥ fixed minimizing xᵀQx: lowest eigenvector of Q compressed to fixed⊥.
VectorXd min_on_complement(const MatrixXd& Q, const VectorXd& fixed) {
  const int n = static_cast<int>(Q.rows());
  MatrixXd P = MatrixXd::Identity(n, n) - fixed * fixed.transpose();
  MatrixXd M = P * (0.5 * (Q + Q.transpose())) * P;
  double shift = 1.0 + 2.0 * M.norm();
  M += shift * fixed * fixed.transpose();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(M);
  VectorXd x = es.eigenvectors().col(0);
  x -= x.dot(fixed) * fixed;
  return x.normalized();
}

double plane_value(const Tensor4<double>& R, const VectorXd& u, const VectorXd& v) {
  return u.dot(contract_outer(R, v) * u);
}

struct Plane {
  VectorXd u, v;
  double value;
};

Plane descend(const Tensor4<double>& R, VectorXd u, VectorXd v, const InfSectionalStrategy& st) {
  u.normalize();
  v -= v.dot(u) * u;
  v.normalize();
  double f = plane_value(R, u, v);
  for (int it = 0; it < st.max_iterations; ++it) {
    u = min_on_complement(contract_outer(R, v), v);
    v = min_on_complement(contract_inner(R, u), u);
    double next = plane_value(R, u, v);
    bool done = f - next <= st.refine_tol * (1.0 + std::fabs(f));
    f = std::min(f, next);
    if (done) break;
  }
  return {u, v, f};
}

}  // namespace

InfSectionalResult inf_sectional(const Tensor4<double>& R, const InfSectionalStrategy& strategy) {
  const int n = R.dim();
  InfSectionalResult best;
  best.value = std::numeric_limits<double>::infinity();
  auto consider = [&](const VectorXd& u0, const VectorXd& v0) {
    Plane p = descend(R, u0, v0, strategy);
    ++best.starts;
    if (p.value < best.value) {
      best.value = p.value;
      best.u.assign(p.u.data(), p.u.data() + n);
      best.v.assign(p.v.data(), p.v.data() + n);
    }
  };
  if (strategy.coordinate_seeds) {
    // E_1∧E_2 comes first: it is the distinguished plane of Choi–Lu frames.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) consider(VectorXd::Unit(n, i), VectorXd::Unit(n, j));
  }
  Pcg64 rng(strategy.seed);
  for (int r = 0; r < strategy.random_restarts; ++r) {
    VectorXd u(n), v(n);
    for (int i = 0; i < n; ++i) u[i] = rng.normal();
    for (int i = 0; i < n; ++i) v[i] = rng.normal();
    v -= v.dot(u) / u.squaredNorm() * u;
    if (v.norm() < 1e-12) continue;
    consider(u, v);
  }
  return best;
}

}  // namespace wintgen
