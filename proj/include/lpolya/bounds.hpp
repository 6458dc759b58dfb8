#pragma once

#include <vector>

#include "lpolya/exec.hpp"
#include "lpolya/jtable.hpp"
#include "lpolya/rational.hpp"
#include "lpolya/report.hpp"

namespace lpolya {

// Lower and upper bounds for the two-step ratio J_n(r+2)/J_n(r), exact
// rationals. Throws std::domain_error when a denominator factor vanishes;
// both are regular on the theorem range n >= 4, -1 <= r <= n-2.
Rat c_bound(long n, long r);
Rat d_bound(long n, long r);

struct BoundRecord {
    long n = 0, r = 0;
    Rat ratio, lower, upper;
    bool lower_ok = false, upper_ok = false, equality_lower = false;
    bool skipped = false;  // J_n(r) = 0: ratio undefined, recorded not judged
};

// Exact sweep of the two-step sandwich over 4 <= n <= n_max, -1 <= r <= n-2.
std::vector<BoundRecord> verify_two_step(JTable& table, long n_max,
                                         Exec exec = Exec::parallel);
// Claims: thm-lower, thm-upper, thm-lower-equality-iff (equality exactly at
// r = -1).
VerificationReport two_step_report(const std::vector<BoundRecord>& records);

// Central-value claim families: the two consequences of the two-step
// sandwich, the sqrt(n/(n+1)) monotonicity estimate, the even-n sandwich,
// and the sqrt(2) maximum. Rational inequalities are compared exactly;
// square-root claims are cross-squared first.
VerificationReport verify_central(JTable& table, long n_max,
                                  Exec exec = Exec::parallel);

// Conjectured sharper central bound plus the cited strengthening active from
// n = 136; empirical scan, labeled conjecture/cited, never a theorem.
VerificationReport conjecture_scan(JTable& table, long n_max,
                                   Exec exec = Exec::parallel);

// p_n(s) = alpha s^3 + beta s^2 + gamma s + delta, the cubic controlling
// positivity of the induction step behind the lower bound.
struct PnPolynomial {
    long n = 0;
    Rat alpha, beta, gamma, delta;
    Rat eval(const Rat& s) const;
};
PnPolynomial pn_polynomial(long n);

// Identity and sign checks backing the lower-bound induction: p_n(1)
// factorization, discriminant negativity, the closed numerator identity
// 8(r+1) p_n((r+1)^2) with its positive denominator, and the assembled
// induction inequality itself.
VerificationReport pn_identities(long n_max, Exec exec = Exec::parallel);

struct Fig1Row {
    long n = 0;
    Rat ratio;       // J_n(2)/J_n(0)
    Rat lower_gap;   // ratio - c_{n,0}
    Rat upper_gap;   // d_{n,0} - ratio
    Rat conjectured_gap;
};
std::vector<Fig1Row> figure1_rows(JTable& table, long n_max);

}  // namespace lpolya
