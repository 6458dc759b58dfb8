#pragma once

#include <vector>

#include "lpolya/eulerian.hpp"
#include "lpolya/exec.hpp"
#include "lpolya/jtable.hpp"
#include "lpolya/rational.hpp"
#include "lpolya/report.hpp"

namespace lpolya {

// f(m) = M_m / m! where M_m is the central (maximal) Eulerian number of
// row m.
struct FRecord {
    long m = 0;
    Int max_value;  // M_m
    Rat f;
};

// Cross-checked along three routes: the central Eulerian number (itself
// dual-route), J_{m+1} at 1 or 0 by parity of m, and brute-force enumeration
// for m <= 8. Throws std::logic_error on any disagreement.
FRecord f_value(JTable& table, long m);

// f(1..m_max) as a sweep-friendly cache.
std::vector<FRecord> f_table(JTable& table, long m_max,
                             Exec exec = Exec::parallel);

// Published seven-entry reference table for f(m), kept verbatim for diff
// reports. Known to disagree with the defining identities from m = 3 on;
// never used as ground truth.
Rat printed_f_reference(long m);

struct EulerianRatioBounds {
    Rat lower, upper, ratio;
};

// Consecutive-ratio A(m,l+1)/A(m,l) with its exact sandwich bounds.
// Requires m >= 3 and ceil(m/2) <= l <= m-1.
EulerianRatioBounds eulerian_ratio_bounds(JTable& table, long m, long l);

// Exact sandwich sweep over 3 <= m <= m_max, full l-range per row.
VerificationReport verify_eulerian_ratios(JTable& table, long m_max,
                                          Exec exec = Exec::parallel);

// Ratio bounds and identities along the f sequence: the cited odd-index
// sandwich, its weaker in-house upper bound, the exact even-odd identity,
// the even-index sandwich and its cited stronger upper bound, monotonicity,
// and the diff against the printed reference table.
VerificationReport verify_f_ratios(JTable& table, long p_max,
                                   Exec exec = Exec::parallel);

// Convexity and log-convexity of the parity subsequences, plus the three
// in-proof rational-function inequalities verified as exact statements.
VerificationReport verify_f_convexity(JTable& table, long p_max,
                                      Exec exec = Exec::parallel);

// Even-index log-convexity scan (conjecture) with the proved weaker bound;
// every record carries the exact rational margin as witness.
VerificationReport logconvexity_scan_even(JTable& table, long p_max,
                                          Exec exec = Exec::parallel);

struct Fig2Row {
    long m = 0;
    bool odd = false;
    Rat f;
    double f_float = 0.0, log_f = 0.0;
};
std::vector<Fig2Row> figure2_rows(JTable& table, long m_max);

}  // namespace lpolya
