#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpolya/exec.hpp"
#include "lpolya/jtable.hpp"
#include "lpolya/quadnum.hpp"
#include "lpolya/report.hpp"

namespace lpolya {

// Exact entries of the bordered Hessian of the constrained section-volume
// problem at the k-diagonal direction, over Q(sqrt(k)): border entry
// alpha_k, live-block diagonal beta_k and off-diagonal gamma_k, and
// delta_k = beta_k - gamma_k. Requires k >= 4 (entries reduce to J_{k-2}).
struct HessianDiag {
    long k = 0;
    QuadNum alpha{1}, beta{1}, gamma{1}, delta{1};
};
HessianDiag hessian_diag_entries(JTable& table, long k);

// Leading principal minor of order m of the bordered Hessian at the
// k-diagonal direction: closed form -(m-1) alpha_k^2 delta_k^(m-2) for
// m <= k+1, the last-row expansion recursion above that. Exact.
QuadNum minor_value(JTable& table, long m, long k);

// The same minor as an explicit m x m determinant via fraction-free
// elimination with exact pivoting; the independent oracle. 3 <= m <= 9.
QuadNum minor_direct(JTable& table, long m, long k);

struct MinorSequence {
    long k = 0, n = 0;
    std::vector<QuadNum> values;  // orders m = 3 .. n+1
    std::vector<int> signs;
    long order(std::size_t idx) const { return long(idx) + 3; }
};
MinorSequence minor_sequence(JTable& table, long n, long k);

enum class Verdict { not_extremal, consistent_with_min, consistent_with_max, inconclusive };
const char* to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::inconclusive;
    // Consecutive minor orders (m, m+1) witnessing each pair type; both are
    // required for a NotExtremal verdict.
    std::optional<std::pair<long, long>> same_sign_pair;
    std::optional<std::pair<long, long>> alternating_pair;
    std::optional<MinorSequence> minors;  // absent on the k = 3 route
};

// Second-derivative-test classification of the k-diagonal direction in
// dimension n, 3 <= k <= n-1. k >= 4 goes through the minor sequence and
// the two-pair witness rule over consecutive nonzero minors; k = 3 reduces
// to the hexagon rotation argument (odd-order first nonzero derivative).
Classification classify_diagonal(JTable& table, long n, long k);

// {k, n, minors: [{m, a, b, sign}], verdict, witnesses} with exact strings.
std::string classification_json(const Classification& c, long n, long k);

// Area of the rotated hexagon half (the trapezium) as a function of the
// rotation parameter t in [-1, 1].
double hexagon_area(double t);

// First three derivatives of the area at t = 0 via exact differentiation of
// the squared-area polynomial: a' = P'/(2a), a'' = (P'' - 2a'^2)/(2a),
// a''' = (P''' - 6a'a'')/(2a). All live in Q(sqrt(3)); the first two vanish.
struct HexagonDerivatives {
    QuadNum a1{3}, a2{3}, a3{3};
};
HexagonDerivatives hexagon_derivatives();

// Fixed-range verification sweep: entry signs (k <= 100), closed-form vs
// determinant minors (m <= 9, 4 <= k <= 7), both sign laws (m, k <= 12),
// subdiagonal classification (n <= 12), and the published minor magnitudes
// kept as sign-only references.
VerificationReport verify_hessian(JTable& table, Exec exec = Exec::parallel);

}  // namespace lpolya
