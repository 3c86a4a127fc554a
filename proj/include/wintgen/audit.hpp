#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wintgen/choi_lu.hpp"
#include "wintgen/grid.hpp"
#include "wintgen/rational.hpp"

namespace wintgen {

// One transcribed formula (label, row) that disagrees with brute force for some n.
// The witness is the first mismatching component in grid order; the counters cover
// every mismatching component of that (label, row, n).
struct ErratumRow {
  std::string label;
  int row = 0;  // 1-based position within the label
  ChoiLuParams params;
  std::string index;  // 1-based, e.g. "(1,2,3,1;1,3)"
  Rational table_value, brute_value, operator_value;
  std::size_t mismatched_points = 0;
  std::size_t mismatched_entries = 0;
  std::size_t confirmed_entries = 0;  // operator route equals brute force

  bool confirmed() const { return confirmed_entries == mismatched_entries; }
};

// A nonzero brute-force component outside every listed entry of a table that
// declares the remaining components null.
struct OmissionRow {
  std::string label;
  ChoiLuParams params;
  std::string index;
  Rational brute_value;
  std::size_t points = 0;      // grid points with at least one omitted component
  std::size_t components = 0;  // omitted nonzero components in total
};

struct AuditReport {
  std::size_t points = 0;
  std::size_t checks = 0;
  std::vector<ErratumRow> errata;
  std::vector<OmissionRow> omissions;
  double seconds = 0.0;

  bool all_confirmed() const;
  std::size_t errata_for(const std::vector<std::string>& labels) const;
};

// Tables of the tangent frame: eq001*, eq001**, eqgWRICCI001**, eq701*, eq5, eq6,
// plus the bivector (eqbli3–6), curvature operator (eq010) and Ricci operator (eq3) rows.
AuditReport audit_tangent_tables(const GridSpec& grid, int jobs);

// The (0,6)-tensor tables r.c_*, c.r_*, r.c-c.r_*, Qgr_*, QgC_*, QgGvS*, QSR_*, QSC_*, QS_gS_*.
// Only the rows whose label is in `labels` are audited (empty = all).
AuditReport audit_derived_tables(const GridSpec& grid, int jobs, const std::vector<std::string>& labels = {});

// CSV columns: label,row,n,m,a,b,c,mu,k_tilde,index,table_value,bruteforce_value,operator_value,
// mismatched_points,mismatched_entries,confirmed_entries,confirmed
void write_errata_csv(std::ostream& os, const AuditReport& report);
// CSV columns: label,n,m,a,b,c,mu,k_tilde,index,bruteforce_value,points,components
void write_omissions_csv(std::ostream& os, const AuditReport& report);

std::string format_index(const std::vector<int>& zero_based, std::size_t split);

}  // namespace wintgen
