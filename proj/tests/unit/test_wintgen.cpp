#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "wintgen/audit.hpp"
#include "wintgen/classify.hpp"
#include "wintgen/component_tables.hpp"
#include "wintgen/grid.hpp"
#include "wintgen/operator_route.hpp"

using namespace wintgen;
using namespace wintgen::testing;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.a = {Q("-1/3"), Q("2/3")};
  g.b = {Q("0"), Q("1/3")};
  g.c = {Q("0"), Q("-2/3")};
  g.mu = {Q("0"), Q("2/3")};
  g.k_tilde = {Q("-1/3"), Q("1")};
  g.n_list = {4, 5};
  g.m_list = {3};
  return g;
}

}  // namespace

TEST(ShapeOps, UnitFrame) {
  const auto M = unit_model();
  ASSERT_EQ(M.m(), 3);
  const auto& A2 = M.shape_op(1);
  EXPECT_EQ(A2(0, 0), Rational(2));
  EXPECT_EQ(A2(1, 1), Rational(0));
  EXPECT_EQ(A2(2, 2), Rational(1));
  EXPECT_EQ(A2(3, 3), Rational(1));
  EXPECT_EQ(M.shape_op(0)(0, 1), Rational(1));
  EXPECT_EQ(M.shape_op(2), SymMatrix<Rational>::identity(4));
}

TEST(ShapeOps, TracesAndCount) {
  for (int n = 4; n <= 7; ++n)
    for (int m = 3; m <= 5; ++m) {
      const auto p = params("2/3", "-1/3", "1", "5/2", "0", n, m);
      const auto M = choi_lu_shape_ops(p);
      ASSERT_EQ(static_cast<int>(M.shape_ops().size()), m);
      EXPECT_EQ(M.shape_op(0).trace(), Rational(n) * p.a);
      EXPECT_EQ(M.shape_op(1).trace(), Rational(n) * p.b);
      EXPECT_EQ(M.shape_op(2).trace(), Rational(n) * p.c);
      for (int al = 3; al < m; ++al) EXPECT_TRUE(M.shape_op(al).is_zero());
    }
}

TEST(ShapeOps, GeodesicAndCodimensionRules) {
  const auto G = choi_lu("0", "0", "0", "0", "1");
  for (const auto& A : G.shape_ops()) EXPECT_TRUE(A.is_zero());
  EXPECT_THROW(choi_lu("0", "0", "1", "1", "0", 4, 2), ConstraintError);
  EXPECT_EQ(choi_lu("1", "0", "0", "1", "0", 4, 2).m(), 2);
  EXPECT_THROW(choi_lu("1", "0", "0", "1", "0", 4, 1), ConstraintError);
}

TEST(ComponentTable, UnitFrame) {
  const auto t = closed_form_table(params("1", "1", "1", "1", "0"));
  EXPECT_EQ(t.tau, Rational(32));
  EXPECT_EQ(t.rho, Rational(8, 3));
  EXPECT_EQ(t.C_1221, Rational(-2, 3));
  EXPECT_EQ(t.S_12, Rational(2));
  const auto u = closed_form_table(params("1/3", "2", "-1", "0", "1/3", 6));
  EXPECT_TRUE(u.C_1221.is_zero() && u.C_1ii1.is_zero() && u.C_2ii2.is_zero() && u.C_ijji.is_zero());
}

TEST(ComponentTable, AgreesWithPipelineOnSmallGrid) {
  for (const auto& p : small_grid().points()) {
    const auto t = closed_form_table(p);
    const auto M = choi_lu_shape_ops(p);
    const auto R = gauss_curvature(M);
    const auto ric = ricci_from_R(R);
    const auto C = weyl(R, ric);
    const auto gR = g_wedge_ricci(ric);
    ASSERT_EQ(R(0, 1, 1, 0), t.R_1221) << p.describe();
    ASSERT_EQ(R(0, 2, 2, 0), t.R_1ii1) << p.describe();
    ASSERT_EQ(R(1, 3, 3, 1), t.R_2ii2) << p.describe();
    ASSERT_EQ(R(2, 3, 3, 2), t.R_ijji) << p.describe();
    ASSERT_EQ(R(0, 2, 2, 1), t.R_1ii2) << p.describe();
    ASSERT_EQ(ric.ricc(0, 0), t.S_11) << p.describe();
    ASSERT_EQ(ric.ricc(0, 1), t.S_12) << p.describe();
    ASSERT_EQ(ric.ricc(1, 1), t.S_22) << p.describe();
    ASSERT_EQ(ric.ricc(3, 3), t.S_ii) << p.describe();
    ASSERT_EQ(gR(0, 1, 1, 0), t.gwR_1221) << p.describe();
    ASSERT_EQ(gR(0, 3, 3, 0), t.gwR_1ii1) << p.describe();
    ASSERT_EQ(gR(1, 2, 2, 1), t.gwR_2ii2) << p.describe();
    ASSERT_EQ(gR(2, 3, 3, 2), t.gwR_ijji) << p.describe();
    ASSERT_EQ(C(0, 1, 1, 0), t.C_1221) << p.describe();
    ASSERT_EQ(C(0, 2, 2, 0), t.C_1ii1) << p.describe();
    ASSERT_EQ(C(1, 2, 2, 1), t.C_2ii2) << p.describe();
    ASSERT_EQ(C(2, 3, 3, 2), t.C_ijji) << p.describe();
    ASSERT_EQ(ric.tau, t.tau) << p.describe();
  }
}

TEST(Ddvv, ZeroOnFramesNonnegativeOnRandom) {
  for (const auto& p : small_grid().points()) {
    const auto gap = ddvv_gap(choi_lu_shape_ops(p));
    ASSERT_TRUE(gap.exact.has_value()) << p.describe();
    ASSERT_TRUE(gap.exact->is_zero()) << p.describe();
  }
  EXPECT_EQ(ddvv_gap(geodesic(5, Rational(-3))).exact, Rational(0));
  Pcg64 rng(41);
  for (int t = 0; t < 200; ++t) ASSERT_GE(ddvv_gap(random_model(rng, 4, 2)).approx, -1e-9);
}

TEST(Cases, PseudoUmbilicalBranch) {
  CaseArgs args{4, 3, Q("1"), Q("1"), Q("-1"), {}, {}};
  const auto M = theorem_case_builder("T2ii", args);
  EXPECT_EQ(M.shape_op(2), SymMatrix<Rational>::identity(4));
  EXPECT_EQ(classify_umbilicity(M), Umbilicity::PseudoUmbilical);
  const auto R = gauss_curvature(M);
  const auto C = weyl(R, ricci_from_R(R));
  EXPECT_TRUE(endo_derive(R, C).is_zero());
}

TEST(Cases, MinimalBranch) {
  CaseArgs args{5, 3, Q("1"), Q("0"), Q("0"), {}, {}};
  const auto M = theorem_case_builder("C1ii", args);
  EXPECT_TRUE(M.shape_op(2).is_zero());
  EXPECT_EQ(classify_umbilicity(M), Umbilicity::Minimal);
}

TEST(Cases, MixedBranchConstraint) {
  CaseArgs args{4, 3, Q("1"), Q("1"), Q("-4/3"), {}, {}};
  const auto p = theorem_case_params("T27ii", args);
  EXPECT_TRUE(p.a.is_zero());
  EXPECT_EQ(p.b, Rational(1));
  const auto M = choi_lu_shape_ops(p);
  EXPECT_EQ(M.shape_op(1)(0, 0), Rational(2));
  EXPECT_EQ(mean_curvature(M).H_sq + p.k_tilde, Rational(2, 3));
}

TEST(Cases, Rejections) {
  EXPECT_THROW(theorem_case_params("T2ii", {4, 3, Q("1"), Q("1"), Q("1"), {}, {}}), ConstraintError);
  EXPECT_THROW(theorem_case_params("T2ii", {4, 3, Q("1"), Q("1"), Q("-2"), {}, {}}), ConstraintError);
  EXPECT_THROW(theorem_case_params("T2ii", {4, 3, Q("0"), Q("1"), Q("-1"), {}, {}}), ConstraintError);
  EXPECT_THROW(theorem_case_params("T25ii", {4, 3, Q("1"), Q("1"), Q("-1"), {}, {}}), ConstraintError);
  EXPECT_THROW(theorem_case_params("T27ii", {4, 3, Q("1"), Q("1"), Q("0"), {}, {}}), ConstraintError);
  EXPECT_THROW(theorem_case_params("nope", {}), std::invalid_argument);
  const auto u = theorem_case_params("umbilical", {5, 3, Q("7"), Q("1"), Q("2"), Q("1/3"), Q("-1")});
  EXPECT_TRUE(u.mu.is_zero());
  EXPECT_EQ(u.a, Rational(1, 3));
}

TEST(OperatorRoute, AgreesWithDenseTensors) {
  const auto M = choi_lu("1/3", "-2/3", "1", "2/3", "-1/3", 5);
  OperatorRoute op(M);
  PointTensors<Rational> pt(M);
  const auto& R = pt.R();
  const auto& C = pt.C();
  for_each_index<4>(5, [&](const std::array<int, 4>& i) {
    ASSERT_EQ(op.R(op.basis(i[0]), op.basis(i[1]), op.basis(i[2]), op.basis(i[3])), R[i]);
    ASSERT_EQ(op.C(op.basis(i[0]), op.basis(i[1]), op.basis(i[2]), op.basis(i[3])), C[i]);
  });
  const std::pair<DerivedId, TensorId> pairs[] = {{DerivedId::RC, TensorId::RC},   {DerivedId::CR, TensorId::CR},
                                                  {DerivedId::QgR, TensorId::QgR}, {DerivedId::QSC, TensorId::QSC},
                                                  {DerivedId::QSGS, TensorId::QSGS}};
  for (auto [d, t] : pairs) {
    const auto& T = pt.tensor6(t);
    for (const std::array<int, 6>& i : {std::array<int, 6>{0, 1, 2, 0, 0, 2}, {0, 2, 2, 1, 1, 3}, {2, 3, 3, 2, 0, 1},
                                        {0, 1, 1, 0, 0, 4}, {1, 2, 0, 3, 2, 4}})
      EXPECT_EQ(op.derived(d, i), T[i]) << to_string(d);
  }
}

TEST(Audit, TangentTablesCleanOnSmallGrid) {
  const auto rep = audit_tangent_tables(small_grid(), 1);
  EXPECT_GT(rep.checks, 0u);
  EXPECT_TRUE(rep.errata.empty());
}

TEST(Audit, DerivedTablesConfirmedOnSmallGrid) {
  auto g = small_grid();
  g.n_list = {4};
  const auto rep = audit_derived_tables(g, 1);
  EXPECT_GT(rep.checks, 0u);
  EXPECT_TRUE(rep.all_confirmed());
  std::ostringstream os;
  write_errata_csv(os, rep);
  EXPECT_EQ(os.str().substr(0, 10), "label,row,");
}

TEST(Grid, DefaultShape) {
  const auto g = GridSpec::default_grid();
  EXPECT_EQ(g.a.size(), 5u);
  EXPECT_EQ(g.n_list, (std::vector<int>{4, 5, 6, 7}));
  // m = 2 only pairs with c = 0
  for (const auto& p : g.points()) ASSERT_TRUE(p.m >= 3 || p.c.is_zero());
}
