#include "lpolya/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lpolya {

Int eulerian_explicit(int m, long l) {
    if (m < 1) throw std::invalid_argument("eulerian: m >= 1 required");
    if (l < 1 || l > m) return Int(0);
    const std::vector<Int> binom = binomial_row(static_cast<unsigned long>(m) + 1);
    Int sum = 0;
    for (long i = 0; i <= l; ++i) {
        Int term = binom[static_cast<std::size_t>(i)] *
                   int_pow(Int(l - i), static_cast<unsigned long>(m));
        if (i & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Int eulerian(JTable& table, int m, long l) {
    Int direct = eulerian_explicit(m, l);
    Rat via_j = factorial(static_cast<unsigned long>(m)) * jn(table, m + 1, 2 * l - m - 1);
    if (via_j.get_den() != 1 || via_j.get_num() != direct)
        throw std::logic_error("eulerian: explicit sum and J-route disagree");
    return direct;
}

std::vector<Int> eulerian_bruteforce_row(int m) {
    if (m < 1 || m > 9)
        throw std::invalid_argument("eulerian_bruteforce: 1 <= m <= 9 required");
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Int> hist(static_cast<std::size_t>(m), Int(0));
    do {
        int ascents = 0;
        for (int i = 1; i < m; ++i)
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i - 1)])
                ++ascents;
        hist[static_cast<std::size_t>(ascents)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hist;
}

Int eulerian_bruteforce(int m, long l) {
    std::vector<Int> hist = eulerian_bruteforce_row(m);
    if (l < 1 || l > m) return Int(0);
    return hist[static_cast<std::size_t>(l - 1)];
}

std::vector<Int> eulerian_row(JTable& table, int m) {
    if (m < 1) throw std::invalid_argument("eulerian_row: m >= 1 required");
    std::vector<Int> row(static_cast<std::size_t>(m));
    for (long l = 1; l <= m; ++l)
        row[static_cast<std::size_t>(l - 1)] = eulerian(table, m, l);
    return row;
}

}  // namespace lpolya
