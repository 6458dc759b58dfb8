#include "lpolya/jtable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpolya {

Rat jn_explicit(int n, long r) {
    if (n < 2) throw std::invalid_argument("jn_explicit: n >= 2 required");
    const long a = r < 0 ? -r : r;
    if (a >= n) return Rat(0);
    const std::vector<Int> binom = binomial_row(static_cast<unsigned long>(n));
    Int sum = 0;
    const long top = (n + a) / 2;
    for (long i = 0; i <= top; ++i) {
        Int term = binom[static_cast<std::size_t>(i)] *
                   int_pow(Int(n + a - 2 * i), static_cast<unsigned long>(n - 1));
        if (i & 1)
            sum -= term;
        else
            sum += term;
    }
    Int den = int_pow(Int(2), static_cast<unsigned long>(n - 1)) *
              factorial(static_cast<unsigned long>(n - 1));
    return rat(sum, den);
}

double jn0_asymptotic(long n) {
    if (n < 1) throw std::invalid_argument("jn0_asymptotic: n >= 1 required");
    const double x = static_cast<double>(n);
    const double series =
        1.0 - 3.0 / (20.0 * x) - 13.0 / (1120.0 * x * x) + 27.0 / (3200.0 * x * x * x);
    return std::sqrt(6.0 / (std::numbers::pi * x)) * series;
}

void JTable::ensure(int n_max, Exec exec) {
    if (n_max < 2) return;
    if (filled_.load(std::memory_order_acquire) >= n_max) return;
    std::lock_guard<std::mutex> lock(fill_mu_);
    int have = filled_.load(std::memory_order_relaxed);
    if (have >= n_max) return;
    if (rows_.size() < static_cast<std::size_t>(n_max) + 1)
        rows_.resize(static_cast<std::size_t>(n_max) + 1);
    if (have < 2) {
        rows_[2] = {jn_explicit(2, 0), jn_explicit(2, 1), Rat(0)};
        have = 2;
        filled_.store(2, std::memory_order_release);
    }
    for (int n = have + 1; n <= n_max; ++n) {
        const std::vector<Rat>& prev = rows_[static_cast<std::size_t>(n - 1)];
        std::vector<Rat> row(static_cast<std::size_t>(n) + 1);  // row[n] stays 0
        const Rat scale = rat(1, 2L * (n - 1));
        auto prev_at = [&](long idx) -> Rat {
            return idx >= n - 1 ? Rat(0) : prev[static_cast<std::size_t>(idx)];
        };
        const bool par = exec == Exec::parallel && n >= 64;
#pragma omp parallel for schedule(static) if (par)
        for (long r = 0; r <= n - 1; ++r) {
            Rat up = prev_at(r + 1);
            Rat down = prev_at(r >= 1 ? r - 1 : 1);  // evenness at r = 0
            row[static_cast<std::size_t>(r)] =
                scale * (Rat(n + r) * up + Rat(n - r) * down);
        }
        rows_[static_cast<std::size_t>(n)] = std::move(row);
        filled_.store(n, std::memory_order_release);
    }
}

Rat JTable::at(int n, long r) const {
    if (n < 2) throw std::invalid_argument("JTable::at: n >= 2 required");
    const long a = r < 0 ? -r : r;
    if (a >= n) return Rat(0);
    if (filled_.load(std::memory_order_acquire) < n)
        throw std::logic_error("JTable::at: row not filled; call ensure(n) first");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)];
}

Rat jn(JTable& table, int n, long r) {
    if (n < 2) throw std::invalid_argument("jn: n >= 2 required");
    table.ensure(n);
    return table.at(n, r);
}

std::pair<Rat, Rat> jn0_central_identity(JTable& table, int n) {
    if (n < 3) throw std::invalid_argument("jn0_central_identity: n >= 3 required");
    Rat lhs = jn(table, n, 0);
    Rat rhs = rat(n, n - 1) * jn(table, n - 1, 1);
    return {lhs, rhs};
}

}  // namespace lpolya
