#include <gtest/gtest.h>

#include "support.hpp"
#include "wintgen/derivations.hpp"

using namespace wintgen;
using namespace wintgen::testing;

namespace {

struct Parts {
  Tensor4<Rational> R, C;
  RicciData<Rational> ric;
};

Parts parts(const SubmanifoldModel<Rational>& M) {
  auto R = gauss_curvature(M);
  auto ric = ricci_from_R(R);
  auto C = weyl(R, ric);
  return {R, C, ric};
}

}  // namespace

TEST(Derive, UnitFrameExamples) {
  const auto p = parts(unit_model());
  const auto g = SymMatrix<Rational>::identity(4);
  EXPECT_EQ(endo_derive(p.R, p.C)(0, 1, 2, 0, 0, 2), Rational(1));
  EXPECT_EQ(tachibana(g, p.R)(0, 1, 2, 1, 0, 2), Rational(-1));
}

TEST(Derive, MatchesLoopOracle) {
  Pcg64 rng(31);
  for (int t = 0; t < 4; ++t) {
    const auto M = random_model(rng, 4 + t % 2, 2 + t % 2);
    const auto p = parts(M);
    const auto A = random_sym(rng, M.n());
    EXPECT_EQ(endo_derive(p.R, p.C), oracle_derive(p.R, p.C));
    EXPECT_EQ(endo_derive(p.C, p.R), oracle_derive(p.C, p.R));
    EXPECT_EQ(endo_derive(p.R, p.R), oracle_derive(p.R, p.R));
    EXPECT_EQ(tachibana(A, p.R), oracle_tachibana(A, p.R));
    EXPECT_EQ(tachibana(p.ric.ricc, p.C), oracle_tachibana(p.ric.ricc, p.C));
  }
}

TEST(Derive, NonSkewSourceRejected) {
  Tensor4<Rational> B(4);
  B(0, 1, 2, 3) = 1;
  EXPECT_THROW(endo_derive(B, B), std::invalid_argument);
}

TEST(Derive, MetricIsParallel) {
  Pcg64 rng(32);
  for (int n = 4; n <= 7; ++n) {
    const auto p = parts(random_model(rng, n, 2));
    const auto g = SymMatrix<Rational>::identity(n);
    EXPECT_TRUE(endo_derive(p.R, g).is_zero()) << n;
    EXPECT_TRUE(endo_derive(p.C, g).is_zero()) << n;
  }
}

TEST(Tachibana, Annihilators) {
  Pcg64 rng(33);
  for (int n = 4; n <= 7; ++n) {
    const auto g = SymMatrix<Rational>::identity(n);
    EXPECT_TRUE(tachibana(g, kulkarni_nomizu(g, g)).is_zero()) << n;
    const auto A = random_sym(rng, n);
    EXPECT_TRUE(tachibana(A, kulkarni_nomizu(A, A)).is_zero()) << n;
  }
  const auto A = random_sym(rng, 5);
  EXPECT_TRUE(oracle_tachibana(A, oracle_kn(A, A)).is_zero());
}

TEST(Derive, OutputsSkewInEveryPair) {
  Pcg64 rng(34);
  const auto p = parts(random_model(rng, 5, 3));
  EXPECT_TRUE(is_derived_skew(endo_derive(p.R, p.R)));
  EXPECT_TRUE(is_derived_skew(endo_derive(p.C, p.C)));
  EXPECT_TRUE(is_derived_skew(endo_derive(p.R, p.C)));
  EXPECT_TRUE(is_derived_skew(endo_derive(p.C, p.R)));
  EXPECT_TRUE(is_derived_skew(tachibana(p.ric.ricc, p.R)));
}

TEST(Derive, Bilinear) {
  Pcg64 rng(35);
  const auto p1 = parts(random_model(rng, 4, 2));
  const auto p2 = parts(random_model(rng, 4, 2));
  const Rational x(2, 3), y(-7, 5);
  const auto mix = linear_combination<Rational, 4>({{x, &p1.R}, {y, &p2.R}});
  const auto lhs = endo_derive(mix, p1.C);
  const auto a = endo_derive(p1.R, p1.C), b = endo_derive(p2.R, p1.C);
  EXPECT_EQ(lhs, (linear_combination<Rational, 6>({{x, &a}, {y, &b}})));
  const auto rhs = endo_derive(p1.R, mix);
  const auto c = endo_derive(p1.R, p1.R), d = endo_derive(p1.R, p2.R);
  EXPECT_EQ(rhs, (linear_combination<Rational, 6>({{x, &c}, {y, &d}})));

  const auto A = random_sym(rng, 4), B = random_sym(rng, 4);
  const auto qa = tachibana(A, p1.R), qb = tachibana(B, p1.R);
  EXPECT_EQ(tachibana(x * A + y * B, p1.R), (linear_combination<Rational, 6>({{x, &qa}, {y, &qb}})));
}

TEST(PTensor, RicciFlatGivesZero) {
  Pcg64 rng(36);
  const auto p = parts(random_model(rng, 4, 2));
  RicciData<Rational> flat{SymMatrix<Rational>(4), SymMatrix<Rational>(4), Rational(0)};
  EXPECT_TRUE(p_tensor(p.R, flat).is_zero());
}

TEST(PTensor, ConstantCurvatureMatchesExpansion) {
  // 𝒮 = (n−1)k̃·Id, so P = (n−1)k̃ Σ_s [δ_{x,x_s} R(..y at s..) − δ_{y,x_s} R(..x at s..)]
  const int n = 5;
  const Rational k(2, 3);
  const auto p = parts(geodesic(n, k));
  const auto P = p_tensor(p.R, p.ric);
  const Rational f = Rational(n - 1) * k;
  for_each_index<6>(n, [&](const std::array<int, 6>& i) {
    Rational acc = 0;
    for (int s = 0; s < 4; ++s) {
      std::array<int, 4> j{i[0], i[1], i[2], i[3]};
      if (i[s] == i[4]) {
        j[s] = i[5];
        acc += p.R[j];
      }
      j = {i[0], i[1], i[2], i[3]};
      if (i[s] == i[5]) {
        j[s] = i[4];
        acc -= p.R[j];
      }
    }
    ASSERT_EQ(P[i], f * acc);
  });
}

TEST(ExtendedKulkarni, ZeroAndSingleEntry) {
  const auto g = SymMatrix<Rational>::identity(4);
  EXPECT_TRUE(extended_kulkarni(g, Tensor4<Rational>(4)).is_zero());
  Tensor4<Rational> D(4);
  D(1, 2, 0, 3) = 1;  // D(x1=2,x2=3; x=1,y=4), 1-based
  const auto E = extended_kulkarni(g, D);
  std::size_t nonzero = 0;
  for_each_index<6>(4, [&](const std::array<int, 6>& i) {
    if (!E[i].is_zero()) ++nonzero;
  });
  // each of the four terms has 4 images; four images are hit twice with opposite signs
  EXPECT_EQ(nonzero, 8u);
  EXPECT_EQ(E(0, 1, 2, 0, 0, 3), Rational(1));
  EXPECT_EQ(E(1, 0, 0, 2, 0, 3), Rational(1));
  EXPECT_EQ(E(0, 1, 0, 2, 0, 3), Rational(-1));
  EXPECT_EQ(E(1, 0, 2, 0, 0, 3), Rational(-1));
  EXPECT_EQ(E(1, 1, 2, 1, 0, 3), Rational(0));
}

TEST(Commutation, ZeroOnFramesAndRandomModels) {
  EXPECT_TRUE(commutation_residual(unit_model()).is_zero());
  EXPECT_TRUE(commutation_residual(choi_lu("1/3", "2", "-1", "0", "1/3", 5)).is_zero());
  Pcg64 rng(37);
  for (int t = 0; t < 6; ++t) EXPECT_TRUE(commutation_residual(random_model(rng, 4 + t % 2, 1 + t % 3)).is_zero());
}

TEST(Commutation, OtherConventionsDoNotClose) {
  Pcg64 rng(38);
  const auto M = random_model(rng, 4, 2);
  EXPECT_FALSE(commutation_residual(M, {+1, PTensorForm::Literal}).is_zero());
  EXPECT_FALSE(commutation_residual(M, {-1, PTensorForm::Corrected}).is_zero());
}
