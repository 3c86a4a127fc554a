#pragma once

#include <array>
#include <string>
#include <vector>

#include "wintgen/choi_lu.hpp"
#include "wintgen/rational.hpp"

namespace wintgen {

// Variables available to transcribed coefficients; hk = H² + k̃.
struct TableVars {
  Rational n, a, b, c, mu, k, hk;
  static TableVars of(const ChoiLuParams& p);
};

using CoefFn = Rational (*)(const TableVars&);

// Symbolic frame slots of a transcribed formula. Ei, Ej, Ek are distinct indices ≥ 3;
// AnyX / AnyY range over every basis vector.
enum class Slot { E1, E2, Ei, Ej, Ek, AnyX, AnyY };

struct WedgeTerm {
  CoefFn coef;
  Slot p, q;  // coef · E_p ∧ E_q
};

// Identifiers of the (0,6)-tensors whose components are tabulated.
enum class DerivedId { RC, CR, RCmCR, QgR, QgC, QgGR, QSR, QSC, QSGS };

std::string to_string(DerivedId id);

// One row: T(E_x1, E_x2, Z, W; E_x, E_y) = g((Σ coef E_p∧E_q) Z, W) for all Z, W.
struct DerivedRow {
  std::array<Slot, 4> args;  // x1, x2, x, y
  std::vector<WedgeTerm> terms;
};

struct DerivedTable {
  std::string label;
  DerivedId tensor;
  std::vector<DerivedRow> rows;
};

const std::vector<DerivedTable>& derived_tables();

// A_α(E_x) ∧ A_α(E_y) as a bivector. alpha = 4 stands for every α ≥ 4.
struct BivectorRow {
  int alpha;
  Slot x, y;
  std::vector<WedgeTerm> terms;
};

struct BivectorTable {
  std::string label;
  std::vector<BivectorRow> rows;
};

// ℛ(E_x,E_y) = Σ coef E_p ∧ E_q.
struct CurvatureOpRow {
  Slot x, y;
  std::vector<WedgeTerm> terms;
};

// 𝒮(E_x) = Σ coef E_v.
struct RicciOpRow {
  Slot x;
  std::vector<std::pair<CoefFn, Slot>> terms;
};

const std::vector<BivectorTable>& shape_bivector_tables();
const std::vector<CurvatureOpRow>& curvature_operator_table();
const std::vector<RicciOpRow>& ricci_operator_table();

enum class TangentKind { R, Ricc, GwRicc, C, Scalar };

// Named entry of the closed-form tangent tables: which tensor, which index pattern,
// which ComponentTable field.
struct TangentEntry {
  std::string label;
  std::string name;  // ComponentTable entry name
  TangentKind kind;
  std::vector<Slot> pattern;  // 4 slots (R, gwRicc, C), 2 (Ricc), empty (scalars)
};

const std::vector<TangentEntry>& tangent_entries();

}  // namespace wintgen
