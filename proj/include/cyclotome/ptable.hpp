#pragma once
// The nine-polynomial bound table and the mean-square dichotomy: a value
// with house^2 at most 5 + 1/25 either has mean square below 13/4 or its
// beta * conj(beta) is an exact root of a table polynomial, in which case
// the house is the matching FormB value. Row 8 has a non-abelian splitting
// field, so it never matches a cyclotomic value and carries no mapping.

#include <vector>

#include <gmpxx.h>

#include "cyclotome/rootsum.hpp"
#include "cyclotome/zpoly.hpp"

namespace cyclotome {

struct PTableRow {
  int index;        // 1-based row number
  ZPoly poly;       // monic, irreducible, all roots real positive
  mpq_class alpha;  // logarithm weight (tabulated in thousandths)
  long form_b_n;    // FormB index whose square is the largest root; 0 if none
  bool excluded;    // true for row 8 only
};

const std::vector<PTableRow>& p_table();

enum class MBoundResult { BelowThirteenFourths, IsFormBRoot, Violation };

struct MBoundReport {
  MBoundResult result = MBoundResult::Violation;
  mpq_class m;          // exact mean square of the input
  int table_index = 0;  // row whose polynomial vanishes at beta*conj(beta)
  long form_b_n = 0;    // that row's FormB index
};

// The dichotomy check. Exact: mean square as a rational, root membership by
// exact canonicalization. The caller must have certified house^2 <= 5+1/25
// for Violation to mean anything; on other inputs Violation just reports
// that neither branch holds.
MBoundReport m_upper_bound_check(const RootSum& a);

// Certify that the largest real root of the row's polynomial equals
// FormB(row.form_b_n) squared: both are algebraic integers, so agreement
// beyond the norm bound forces equality. Throws on the excluded row.
bool certify_largest_root_matches(const PTableRow& row, long prec = 512);

}  // namespace cyclotome
