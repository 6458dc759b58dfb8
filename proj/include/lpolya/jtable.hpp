#pragma once

#include <atomic>
#include <mutex>
#include <utility>
#include <vector>

#include "lpolya/exec.hpp"
#include "lpolya/rational.hpp"

namespace lpolya {

// J_n(r) by the alternating finite sum, evaluated with exact integers
// (the sum cancels catastrophically in floating point once n grows).
// Evenness in r is applied up front; zero outside |r| < n. Requires n >= 2:
// the n = 1 boundary values are deliberately not exposed.
Rat jn_explicit(int n, long r);

// Central-value asymptotic, relative error O(n^-4). The only floating-point
// producer in the exact core; meant for sanity comparisons, never as data.
double jn0_asymptotic(long n);

// Memo table for J_n(r), keyed by (n, r >= 0); evenness is applied at
// lookup, so the storage is triangular. Rows fill in order of n through the
// three-term recursion in n, the n = 2 base row coming from jn_explicit.
//
// Concurrency: fills are serialized internally (single writer); reads are
// lock-free and safe once the covering ensure() has completed. Sweep drivers
// prefill, then share the table read-only across threads.
class JTable {
  public:
    void ensure(int n_max, Exec exec = Exec::serial);
    int filled() const { return filled_.load(std::memory_order_acquire); }

    // J_n(r), n >= 2, any integer r. Requires a completed ensure(n).
    Rat at(int n, long r) const;

  private:
    std::vector<std::vector<Rat>> rows_;  // rows_[n][r] for 0 <= r <= n
    std::atomic<int> filled_{1};
    mutable std::mutex fill_mu_;
};

// Memoized J_n(r); fills `table` on demand.
Rat jn(JTable& table, int n, long r);

// Both sides of the central identity J_n(0) = n/(n-1) * J_{n-1}(1), n >= 3,
// evaluated exactly. The caller asserts equality.
std::pair<Rat, Rat> jn0_central_identity(JTable& table, int n);

}  // namespace lpolya
