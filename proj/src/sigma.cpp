#include "lpolya/sigma.hpp"

#include <bit>
#include <stdexcept>

namespace lpolya {

Rat sigma_exact(const DirectionQ& w_in) {
    std::vector<Rat> w;
    w.reserve(w_in.size());
    for (const Rat& q : w_in)
        if (sgn(q) != 0) w.push_back(abs(q));
    if (w.empty())
        throw std::invalid_argument("sigma_exact: direction must be nonzero");
    if (w.size() < 2)
        throw std::invalid_argument("sigma_exact: effective dimension >= 2 required");
    if (w.size() > 25)
        throw std::invalid_argument("sigma_exact: more than 25 nonzero coordinates");
    const int n = static_cast<int>(w.size());

    Rat total = 0;
    for (const Rat& q : w) total += q;
    const Rat half = total / 2;

    // Signed sum of (W/2 - sum_S w_i)_+^(n-1) over all subsets S, walked in
    // Gray-code order so each step toggles a single coordinate.
    Rat acc = rat_pow(half, static_cast<unsigned long>(n - 1));  // S = {}
    Rat subset_sum = 0;
    int parity = 1;
    unsigned long prev_gray = 0;
    const unsigned long subsets = 1ul << n;
    for (unsigned long i = 1; i < subsets; ++i) {
        const unsigned long gray = i ^ (i >> 1);
        const unsigned long flipped = gray ^ prev_gray;
        const int bit = std::countr_zero(flipped);
        if (gray & flipped)
            subset_sum += w[static_cast<std::size_t>(bit)];
        else
            subset_sum -= w[static_cast<std::size_t>(bit)];
        parity = -parity;
        prev_gray = gray;
        Rat x = half - subset_sum;
        if (sgn(x) > 0) {
            Rat term = rat_pow(x, static_cast<unsigned long>(n - 1));
            if (parity > 0)
                acc += term;
            else
                acc -= term;
        }
    }

    Rat denom = Rat(factorial(static_cast<unsigned long>(n - 1)));
    for (const Rat& q : w) denom *= q;
    return acc / denom;
}

}  // namespace lpolya
