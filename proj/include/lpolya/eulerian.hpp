#pragma once

#include <vector>

#include "lpolya/jtable.hpp"
#include "lpolya/rational.hpp"

namespace lpolya {

// A(m,l) by the alternating binomial sum; zero outside 1 <= l <= m.
Int eulerian_explicit(int m, long l);

// A(m,l) computed along two independent routes — the explicit sum and
// m! * J_{m+1}(2l - m - 1) — returning the value only after the routes
// agree. A disagreement is an implementation bug (std::logic_error).
Int eulerian(JTable& table, int m, long l);

// Ascent-count histogram over all m! permutations of {1..m}: index d holds
// the number of permutations with exactly d ascents. 1 <= m <= 9.
std::vector<Int> eulerian_bruteforce_row(int m);

// Direct enumeration count of permutations with l-1 ascents; 1 <= m <= 9.
Int eulerian_bruteforce(int m, long l);

// A(m, 1..m), every entry dual-route checked.
std::vector<Int> eulerian_row(JTable& table, int m);

}  // namespace lpolya
