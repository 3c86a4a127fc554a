// Closed-form component tables of Choi–Lu frames, transcribed literally
// (including entries that disagree with brute force; the audit reports those).
#include "wintgen/component_tables.hpp"

namespace wintgen {

TableVars TableVars::of(const ChoiLuParams& p) {
  return {Rational(p.n), p.a, p.b, p.c, p.mu, p.k_tilde, p.H_sq() + p.k_tilde};
}

std::string to_string(DerivedId id) {
  switch (id) {
    case DerivedId::RC: return "R.C";
    case DerivedId::CR: return "C.R";
    case DerivedId::RCmCR: return "R.C-C.R";
    case DerivedId::QgR: return "Q(g,R)";
    case DerivedId::QgC: return "Q(g,C)";
    case DerivedId::QgGR: return "Q(g,g^Ricc)";
    case DerivedId::QSR: return "Q(Ricc,R)";
    case DerivedId::QSC: return "Q(Ricc,C)";
    case DerivedId::QSGS: return "Q(Ricc,g^Ricc)";
  }
  return "?";
}

namespace {

using enum Slot;

// Coefficient lambda with the usual variable names in scope.
#define K(expr)                                                                              \
  [](const TableVars& v) -> Rational {                                                       \
    [[maybe_unused]] const Rational &n = v.n, &a = v.a, &b = v.b, &c = v.c, &mu = v.mu,      \
                                    &k = v.k, &hk = v.hk;                                    \
    [[maybe_unused]] const Rational mu2 = mu * mu, mu3 = mu2 * mu, mu4 = mu2 * mu2;          \
    [[maybe_unused]] const Rational D = (n - 1) * (n - 2);                                   \
    return (expr);                                                                           \
  }

WedgeTerm W(CoefFn f, Slot p, Slot q) { return {f, p, q}; }

DerivedRow row(Slot x1, Slot x2, Slot x, Slot y, std::vector<WedgeTerm> terms = {}) {
  return {{x1, x2, x, y}, std::move(terms)};
}

std::vector<DerivedTable> build_derived() {
  std::vector<DerivedTable> t;

  // ---- R·C
  t.push_back({"r.c_01", DerivedId::RC, {
      row(E1, E2, E1, Ei, {W(K(2 * (n - 3) * mu3 * a / (n - 2)), E1, Ei),
                           W(K(-2 * (n - 3) * mu2 / (n - 2) * (hk + mu * b)), E2, Ei)}),
      row(E1, E2, E2, Ei, {W(K(2 * (n - 3) * mu2 / (n - 2) * (hk - mu * b)), E1, Ei),
                           W(K(-2 * (n - 3) * mu3 * a / (n - 2)), E2, Ei)}),
  }});
  t.push_back({"r.c_02", DerivedId::RC, {
      row(E1, Ei, E1, E2),
      row(E1, Ei, E1, Ej, {W(K(2 * mu2 / (n - 2) * (hk + mu * b)), Ei, Ej)}),
      row(E1, Ei, E2, Ei, {W(K(2 * (n - 3) * mu2 / (n - 2) * (hk - mu * b)), E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"r.c_03", DerivedId::RC, {
      row(E2, Ei, E2, E1),
      row(E2, Ei, E2, Ej, {W(K(2 * mu2 / (n - 2) * (hk - mu * b)), Ei, Ej)}),
      row(E2, Ei, Ei, E1, {W(K(2 * (n - 3) * mu2 / (n - 2) * (hk + mu * b)), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"r.c_04", DerivedId::RC, {
      row(Ei, Ej, Ei, E1, {W(K(2 * mu2 / (n - 2) * (hk + mu * b)), E1, Ej),
                           W(K(2 * mu2 * a / (n - 2)), E2, Ej)}),
      row(Ei, Ej, Ei, E2, {W(K(2 * mu3 * a / (n - 2)), E1, Ej),
                           W(K(2 * mu2 / (n - 2) * (hk - mu * b)), E2, Ej)}),
      row(Ei, Ej, Ei, Ek),
      row(Ei, Ej, Ej, Ek),
  }});

  // ---- C·R
  t.push_back({"c.r_01", DerivedId::CR, {
      row(E1, E2, E1, Ei, {W(K(2 * (n - 3) * mu3 * a / D), E1, Ei),
                           W(K(2 * (n - 3) * mu2 / D * (2 * mu2 - mu * b)), E2, Ei)}),
      row(E1, E2, E2, Ei, {W(K(2 * (n - 3) * mu2 / D * (2 * mu2 + mu * b)), E1, Ei),
                           W(K(2 * (n - 3) * mu3 * a / D), E2, Ei)}),
  }});
  t.push_back({"c.r_02", DerivedId::CR, {
      row(E1, Ei, E1, E2, {W(K(-4 * (n - 3) * mu3 * a / (n - 1)), E1, Ei),
                           W(K(4 * (n - 3) * mu3 * b / (n - 1)), E2, Ei)}),
      row(E1, Ei, E1, Ej, {W(K(2 * (n - 3) * mu3 * b / D), Ei, Ej)}),
      row(E1, Ei, E2, Ei, {W(K(2 * (n - 3) * mu2 / D * (2 * mu2 + mu * b)), E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"c.r_03", DerivedId::CR, {
      row(E2, Ei, E2, E1, {W(K(-4 * (n - 3) * mu3 * b / (n - 1)), E1, Ei),
                           W(K(-4 * (n - 3) * mu3 * a / (n - 1)), E2, Ei)}),
      row(E2, Ei, E2, Ej, {W(K(-2 * (n - 3) * mu3 * b / D), Ei, Ej)}),
      row(E2, Ei, Ei, E1, {W(K(2 * (n - 3) * mu2 / D * (2 * mu2 - b * mu)), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"c.r_04", DerivedId::CR, {
      row(Ei, Ej, Ei, E1, {W(K(2 * (n - 3) * mu3 * b / D), E1, Ej),
                           W(K(2 * (n - 3) * mu3 * a / D), E2, Ej)}),
      row(Ei, Ej, Ei, E2, {W(K(2 * (n - 3) * mu3 * a / D), E1, Ei),
                           W(K(-2 * (n - 3) * mu3 * b / D), E2, Ei)}),
      row(Ei, Ej, Ei, Ek),
      row(Ei, Ej, Ej, Ek),
  }});

  // ---- R·C − C·R
  t.push_back({"r.c-c.r_01", DerivedId::RCmCR, {
      row(E1, E2, E1, Ei, {W(K(2 * (n - 3) * mu3 * a / (n - 1)), E1, Ei),
                           W(K(-2 * (n - 3) * mu2 / D * ((n - 1) * hk + (n - 2) * mu * b + 2 * mu2)), E2, Ei)}),
      row(E1, E2, E2, Ei, {W(K(-2 * n * (n - 3) * mu3 * a / D), E2, Ei),
                           W(K(2 * (n - 3) * mu2 / D * ((n - 1) * hk - n * mu * b - 2 * mu2)), E1, Ei)}),
  }});
  t.push_back({"r.c-c.r_02", DerivedId::RCmCR, {
      row(E1, Ei, E1, E2, {W(K(4 * (n - 3) * mu3 * a / (n - 1)), E1, Ei),
                           W(K(-4 * (n - 3) * mu3 * b / (n - 1)), E2, Ei)}),
      row(E1, Ei, E1, Ej, {W(K(2 * mu2 / D * ((n - 1) * hk + 2 * mu * b)), Ei, Ej)}),
      row(E1, Ei, E2, Ei, {W(K(2 * (n - 3) * mu2 / D * ((n - 1) * hk - n * mu * b - 2 * mu2)), E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"r.c-c.r_03", DerivedId::RCmCR, {
      row(E2, Ei, E2, E1, {W(K(4 * (n - 3) * mu3 * b / (n - 1)), E1, Ei),
                           W(K(4 * (n - 3) * mu3 * a / (n - 1)), E2, Ei)}),
      row(E2, Ei, E2, Ej, {W(K(2 * mu2 / D * ((n - 1) * hk - 2 * mu * b)), Ei, Ej)}),
      row(E2, Ei, Ei, E1, {W(K(2 * (n - 3) * mu2 / D * ((n - 1) * hk + n * mu * b)), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"r.c-c.r_04", DerivedId::RCmCR, {
      row(Ei, Ej, Ei, E1, {W(K(2 * mu2 / D * ((n - 1) * hk + 2 * mu * b)), E1, Ei),
                           W(K(4 * mu3 * a / D), E2, Ei)}),
      row(Ei, Ej, Ei, E2, {W(K(4 * mu3 * a / D), E1, Ei),
                           W(K(2 * mu2 / D * ((n - 1) * hk - 2 * mu * b)), E2, Ei)}),
      row(Ei, Ej, Ei, Ek),
      row(Ei, Ej, Ej, Ek),
  }});

  // ---- Q(g,R)
  t.push_back({"Qgr_01", DerivedId::QgR, {
      row(E1, E2, E1, Ei, {W(K(b * mu - 2 * mu2), E2, Ei)}),
      row(E1, E2, E2, Ei, {W(K(b * mu + 2 * mu2), E1, Ei), W(K(-a * mu), E2, Ei)}),
  }});
  t.push_back({"Qgr_02", DerivedId::QgR, {
      row(E1, Ei, E1, E2, {W(K(a * mu), E1, Ei), W(K(-2 * b * mu), E2, Ei)}),
      row(E1, Ei, E1, Ej, {W(K(b * mu), Ei, Ej)}),
      row(E1, Ei, E2, Ei, {W(K(b * mu + 2 * mu2), E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"Qgr_03", DerivedId::QgR, {
      row(E2, Ei, E1, E2, {W(K(2 * b * mu), E1, Ei), W(K(-a * mu), E2, Ei)}),
      row(E2, Ei, E2, Ej, {W(K(-b * mu), Ei, Ej)}),
      row(E2, Ei, Ei, E1, {W(K(-b * mu + 2 * mu2), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"Qgr_04", DerivedId::QgR, {
      row(Ei, Ej, Ei, E1, {W(K(b * mu), E1, Ej)}),
      row(Ei, Ej, Ei, E2, {W(K(a * mu), E1, Ej), W(K(-b * mu), E2, Ej)}),
      row(Ei, Ej, Ei, Ek),
      row(Ei, Ej, Ej, Ek),
  }});

  // ---- Q(g,C)
  t.push_back({"QgC_01", DerivedId::QgC, {
      row(E1, E2, E1, Ei, {W(K(-2 * (n - 3) * mu2 / (n - 2)), E2, Ei)}),
      row(E1, E2, E2, Ei, {W(K(2 * (n - 3) * mu2 / (n - 2)), E1, Ei)}),
  }});
  t.push_back({"QgC_02", DerivedId::QgC, {
      row(E1, Ei, E1, E2),
      row(E1, Ei, E1, Ej, {W(K(2 * mu2 / (n - 2)), Ei, Ej)}),
      row(E1, Ei, E2, Ei, {W(K(2 * (n - 3) * mu2 / (n - 2)), E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"QgC_03", DerivedId::QgC, {
      row(E2, Ei, E2, E1),
      row(E2, Ei, E2, Ej, {W(K(2 * mu2 / (n - 2)), Ei, Ej)}),
      row(E2, Ei, Ei, E1, {W(K(2 * (n - 3) * mu2 / (n - 2)), E1, E2)}),
      row(E2, Ei, Ei, E1),
  }});
  t.push_back({"QgC_04", DerivedId::QgC, {
      row(Ei, Ej, Ei, E1, {W(K(2 * mu2 / (n - 2)), E1, Ej)}),
      row(Ei, Ej, Ei, E2, {W(K(2 * mu2 / (n - 2)), E2, Ej)}),
      row(AnyX, AnyY, Ei, Ek),
      row(AnyX, AnyY, Ej, Ek),
  }});

  // ---- Q(g, g∧Ricc)
  t.push_back({"QgGvS01", DerivedId::QgGR, {
      row(E1, E2, E1, Ei, {W(K((n - 2) * b * mu - 2 * mu2), E2, Ei)}),
      row(E1, E2, E2, Ei, {W(K((n - 2) * b * mu + 2 * mu2), E1, Ei)}),
  }});
  t.push_back({"QgGvS02", DerivedId::QgGR, {
      row(E1, Ei, E1, E2, {W(K(-2 * (n - 2) * b * mu), E2, Ei)}),
      row(E1, Ei, E1, Ej, {W(K(-(n - 2) * b * mu + 2 * mu2), Ei, Ej)}),
      row(E1, Ei, E2, Ei, {W(K((n - 2) * b * mu + 2 * mu2), E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"QgGvS03", DerivedId::QgGR, {
      row(E2, Ei, E2, E1, {W(K(2 * (n - 2) * b * mu), E1, Ei)}),
      row(E2, Ei, E2, Ej, {W(K(-(n - 2) * b * mu - 2 * mu2), Ei, Ej)}),
      row(E2, Ei, Ei, E1, {W(K(-(n - 2) * b * mu + 2 * mu2), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"QgGvS04", DerivedId::QgGR, {
      row(Ei, Ej, Ei, E1, {W(K((n - 2) * b * mu - 2 * mu2), E1, Ej)}),
      row(Ei, Ej, Ei, E2, {W(K(-(n - 2) * b * mu - 2 * mu2), E2, Ei)}),
      row(Ei, Ej, Ei, Ej),
      row(Ei, Ej, Ej, Ek),
  }});

  // ---- Q(Ricc,R)
  t.push_back({"QSR_01", DerivedId::QSR, {
      row(E1, E2, E1, Ei,
          {W(K(a * mu * (-hk + 2 * mu2)), E1, Ei),
           W(K((n - 2) * (a * a + b * b) * mu2 - 2 * b * mu3 - (2 * n - 4) * mu2 * hk + b * mu * hk), E2, Ei)}),
      row(E1, E2, E2, Ei,
          {W(K(-2 * b * mu3 - (n - 2) * (a * a + b * b) * mu2 + (2 * n - 4) * mu2 * hk + b * mu * hk), E1, Ei),
           W(K(-2 * a * mu3 + a * mu * hk), E2, Ei)}),
  }});
  t.push_back({"QSR_02", DerivedId::QSR, {
      row(E1, Ei, E1, E2, {W(K(2 * a * mu * (hk - 2 * mu2)), E1, Ei), W(K(2 * b * mu * (-hk + 2 * mu2)), E2, Ei)}),
      row(E1, Ei, E1, Ej, {W(K(hk * (b * mu + 2 * mu2)), Ei, Ej)}),
      row(E1, Ei, E2, Ei,
          {W(K(-(n - 2) * (a * a + b * b) * mu2 - 2 * b * mu3 + (2 * n - 4) * mu2 * hk + b * mu * hk), E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"QSR_03", DerivedId::QSR, {
      row(E2, Ei, E2, E1, {W(K(2 * b * mu * hk - 4 * b * mu3), E1, Ei), W(K(2 * a * mu * hk - 4 * a * mu3), E2, Ei)}),
      row(E2, Ei, E2, Ej, {W(K((-b * mu + 2 * mu2) * hk), Ei, Ej)}),
      row(E2, Ei, Ei, E1,
          {W(K(2 * b * mu3 - (n - 2) * (a * a + b * b) * mu2 + (2 * n - 4) * mu2 * hk - b * mu * hk), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"QSR_04", DerivedId::QSR, {
      row(Ei, Ej, Ei, E1, {W(K((b * mu + 2 * mu2) * hk), E1, Ej), W(K(a * mu * hk), E2, Ej)}),
      row(Ei, Ej, Ei, E2, {W(K(a * mu * hk), E1, Ej), W(K((-b * mu + 2 * mu2) * hk), E2, Ej)}),
      row(Ei, Ej, Ei, Ek),
      row(Ei, Ej, Ej, Ek),
  }});

  // ---- Q(Ricc,C)
  t.push_back({"QSC_01", DerivedId::QSC, {
      row(E1, E2, E1, Ei,
          {W(K(2 * (n - 3) * a * mu3 / (n - 1)), E1, Ei),
           W(K(-2 * (n - 3) * mu2 / D * ((n - 1) * (n - 1) * hk + (n - 2) * b * mu - 2 * mu2)), E2, Ei)}),
      row(E1, E2, E2, Ei,
          {W(K(-2 * (n - 3) * a * mu3 / (n - 1)), E2, Ei),
           W(K(2 * (n - 3) * mu2 / D * ((n - 1) * (n - 1) * hk - (n - 2) * b * mu - 2 * mu2)), E1, Ei)}),
  }});
  t.push_back({"QSC_02", DerivedId::QSC, {
      row(E1, Ei, E1, E2,
          {W(K(-4 * (n - 3) * a * mu3 / (n - 1)), E1, Ei), W(K(4 * (n - 3) * b * mu3 / (n - 1)), E2, Ei)}),
      row(E1, Ei, E1, Ej, {W(K(2 * mu2 / D * ((n - 1) * (n - 1) * hk + 2 * (n - 2) * b * mu - 4 * mu2)), Ei, Ej)}),
      row(E1, Ei, E2, Ei,
          {W(K(2 * (n - 3) * mu2 / D * ((n - 1) * (n - 1) * hk - (n - 2) * b * mu - 2 * mu2)), E1, E2)}),
      row(E1, Ei, Ei, Ej, {W(K(-2 * (n - 3) * a * mu3 / (n - 1)), E1, E2)}),
  }});
  t.push_back({"QSC_03", DerivedId::QSC, {
      row(E2, Ei, E2, E1,
          {W(K(4 * (n - 3) * b * mu3 / (n - 1)), E1, Ei), W(K(-4 * (n - 3) * a * mu3 / (n - 1)), E2, Ei)}),
      row(E2, Ei, E2, Ej, {W(K(2 * mu2 / D * ((n - 1) * (n - 1) * hk - 2 * (n - 2) * b * mu - 4 * mu2)), Ei, Ej)}),
      row(E2, Ei, Ei, E1,
          {W(K(2 * (n - 3) * mu2 / D * ((n - 1) * (n - 1) * hk + (n - 2) * b * mu - 2 * mu2)), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"QSC_04", DerivedId::QSC, {
      row(Ei, Ej, Ei, E1,
          {W(K(4 * a * mu3 / (n - 1)), E2, Ej),
           W(K(2 * mu2 / D * ((n - 1) * (n - 1) * hk + 2 * (n - 2) * b * mu - 4 * mu2)), E1, Ej)}),
      row(Ei, Ej, Ei, E2,
          {W(K(4 * a * mu3 / (n - 1)), E1, Ej),
           W(K(2 * mu2 / D * ((n - 1) * (n - 1) * hk - 2 * (n - 2) * b * mu - 4 * mu2)), E2, Ej)}),
      row(Ei, Ej, Ei, Ek),
      row(Ei, Ej, Ej, Ek),
  }});

  // ---- Q(Ricc, g∧Ricc)
  t.push_back({"QS_gS_01", DerivedId::QSGS, {
      row(E1, E2, E1, Ei,
          {W(K((n - 1) * a * mu * (2 * (n - 1) * hk + (n - 2) * b * mu - 2 * mu2)), E1, Ei),
           W(K(-4 * mu4 + (n - 2) * (n - 2) * b * b * mu2 + 2 * (n - 1) * mu2 * hk - (n - 1) * (n - 2) * b * mu * hk),
             E2, Ei)}),
      row(E1, E2, E2, Ei,
          {W(K(4 * mu4 - (n - 2) * (n - 2) * b * b * mu2 - 2 * (n - 1) * mu2 * hk - (n - 1) * (n - 2) * b * mu * hk),
             E1, Ei),
           W(K(-(n - 2) * a * mu * (2 * (n - 1) * hk - (n - 2) * b * mu - 2 * mu2)), E2, Ei)}),
  }});
  t.push_back({"QS_gS_02", DerivedId::QSGS, {
      row(E1, Ei, E1, E2,
          {W(K(-2 * (n - 2) * a * mu * (2 * (n - 1) * hk + (n - 2) * b * mu - 2 * mu2)), E1, Ei),
           W(K(2 * (n - 1) * (n - 2) * b * mu * hk), E2, Ei)}),
      row(E1, Ei, E1, Ej, {W(K(-(n - 1) * (n - 2) * b * mu * hk + 2 * (n - 1) * mu2 * hk), Ei, Ej)}),
      row(E1, Ei, E2, Ej,
          {W(K(4 * mu4 - (n - 2) * (n - 2) * b * b * mu2 - 2 * (n - 1) * mu2 * hk - (n - 1) * (n - 2) * b * mu * hk),
             E1, E2)}),
      row(E1, Ei, Ei, Ej),
  }});
  t.push_back({"QS_gS_03", DerivedId::QSGS, {
      row(E2, Ei, E2, E1,
          {W(K(-2 * (n - 1) * (n - 2) * b * mu * hk), E1, Ei),
           W(K(-2 * (n - 2) * a * mu * (2 * (n - 1) * hk - (n - 2) * b * mu - 2 * mu2)), E2, Ei)}),
      row(E2, Ei, E2, Ej, {W(K((n - 1) * (n - 2) * b * mu * hk + 2 * (n - 1) * mu2 * hk), Ei, Ej)}),
      row(E2, Ei, Ei, E1,
          {W(K(4 * mu4 - (n - 2) * b * b * mu2 + (n - 1) * (n - 2) * b * mu * hk - 2 * (n - 1) * mu2 * hk), E1, E2)}),
      row(E2, Ei, Ei, Ej),
  }});
  t.push_back({"QS_gS_04", DerivedId::QSGS, {
      row(Ei, Ej, Ei, E1,
          {W(K((n - 1) * hk * (-(n - 2) * b * mu + 2 * mu2)), E1, Ej),
           W(K(-2 * (n - 1) * (n - 2) * a * mu * hk), E2, Ej)}),
      row(Ei, Ej, Ei, E2,
          {W(K(-2 * (n - 1) * (n - 2) * a * mu * hk), E1, Ej),
           W(K((n - 1) * (n + 2) * b * mu * hk + 2 * (n - 1) * mu2 * hk), E2, Ej)}),
      row(Ei, Ej, Ei, Ek),
      row(Ei, Ej, Ej, Ek),
  }});
  return t;
}

std::vector<BivectorTable> build_bivector() {
  auto zero = [](int alpha, Slot x, Slot y) { return BivectorRow{alpha, x, y, {}}; };
  std::vector<BivectorTable> t;
  t.push_back({"eqbli3", {
      {1, E1, E2, {W(K(a * a - mu2), E1, E2)}},
      {2, E1, E2, {W(K(b * b - mu2), E1, E2)}},
      {3, E1, E2, {W(K(c * c), E1, E2)}},
      zero(4, E1, E2),
  }});
  t.push_back({"eqbli4", {
      {1, E1, Ei, {W(K(a * a), E1, Ei), W(K(a * mu), E2, Ei)}},
      {2, E1, Ei, {W(K(b * b + b * mu), E1, Ei)}},
      {3, E1, Ei, {W(K(c * c), E1, Ei)}},
      zero(4, E1, Ei),
  }});
  t.push_back({"eqbli5", {
      {1, E2, Ei, {W(K(a * mu), E1, Ei), W(K(a * a), E2, Ei)}},
      {2, E2, Ei, {W(K(b * b - b * mu), E2, Ei)}},
      {3, E2, Ei, {W(K(c * c), E2, Ei)}},
      zero(4, E2, Ei),
  }});
  t.push_back({"eqbli6", {
      {1, Ei, Ej, {W(K(a * a), Ei, Ej)}},
      {2, Ei, Ej, {W(K(b * b), Ei, Ej)}},
      {3, Ei, Ej, {W(K(c * c), Ei, Ej)}},
      zero(4, Ei, Ej),
  }});
  return t;
}

std::vector<CurvatureOpRow> build_curvature_op() {
  return {
      {E1, E2, {W(K(hk - 2 * mu2), E1, E2)}},
      {E1, Ei, {W(K(hk + b * mu), E1, Ei), W(K(a * mu), E2, Ei)}},
      {E2, Ei, {W(K(a * mu), E1, Ei), W(K(hk - b * mu), E2, Ei)}},
      {Ei, Ej, {W(K(hk), Ei, Ej)}},
  };
}

std::vector<RicciOpRow> build_ricci_op() {
  CoefFn s11 = K((n - 1) * hk - 2 * mu2 + (n - 2) * b * mu);
  CoefFn s12 = K((n - 2) * a * mu);
  CoefFn s22 = K((n - 1) * hk - 2 * mu2 - (n - 2) * b * mu);
  return {
      {E1, {{s11, E1}, {s12, E2}}},
      {E2, {{s12, E1}, {s22, E2}}},
      {Ei, {{K((n - 1) * hk), Ei}}},
  };
}

#undef K

}  // namespace

const std::vector<DerivedTable>& derived_tables() {
  static const auto tables = build_derived();
  return tables;
}

const std::vector<BivectorTable>& shape_bivector_tables() {
  static const auto tables = build_bivector();
  return tables;
}

const std::vector<CurvatureOpRow>& curvature_operator_table() {
  static const auto rows = build_curvature_op();
  return rows;
}

const std::vector<RicciOpRow>& ricci_operator_table() {
  static const auto rows = build_ricci_op();
  return rows;
}

const std::vector<TangentEntry>& tangent_entries() {
  using K4 = std::vector<Slot>;
  static const std::vector<TangentEntry> entries = {
      {"eq001*", "R_1221", TangentKind::R, K4{E1, E2, E2, E1}},
      {"eq001*", "R_1ii1", TangentKind::R, K4{E1, Ei, Ei, E1}},
      {"eq001*", "R_2ii2", TangentKind::R, K4{E2, Ei, Ei, E2}},
      {"eq001*", "R_ijji", TangentKind::R, K4{Ei, Ej, Ej, Ei}},
      {"eq001*", "R_1ii2", TangentKind::R, K4{E1, Ei, Ei, E2}},
      {"eq001**", "S_11", TangentKind::Ricc, K4{E1, E1}},
      {"eq001**", "S_12", TangentKind::Ricc, K4{E1, E2}},
      {"eq001**", "S_22", TangentKind::Ricc, K4{E2, E2}},
      {"eq001**", "S_ii", TangentKind::Ricc, K4{Ei, Ei}},
      {"eqgWRICCI001**", "gwR_1221", TangentKind::GwRicc, K4{E1, E2, E2, E1}},
      {"eqgWRICCI001**", "gwR_1ii1", TangentKind::GwRicc, K4{E1, Ei, Ei, E1}},
      {"eqgWRICCI001**", "gwR_2ii2", TangentKind::GwRicc, K4{E2, Ei, Ei, E2}},
      {"eqgWRICCI001**", "gwR_ijji", TangentKind::GwRicc, K4{Ei, Ej, Ej, Ei}},
      {"eq701*", "C_1221", TangentKind::C, K4{E1, E2, E2, E1}},
      {"eq701*", "C_1ii1", TangentKind::C, K4{E1, Ei, Ei, E1}},
      {"eq701*", "C_2ii2", TangentKind::C, K4{E2, Ei, Ei, E2}},
      {"eq701*", "C_ijji", TangentKind::C, K4{Ei, Ej, Ej, Ei}},
      {"eq5", "tau", TangentKind::Scalar, {}},
      {"eq6", "rho", TangentKind::Scalar, {}},
  };
  return entries;
}

}  // namespace wintgen
