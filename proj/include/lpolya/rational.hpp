#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lpolya {

// Exact arbitrary-precision scalars. mpq_class maintains the invariant the
// exact paths rely on everywhere: lowest terms, positive denominator,
// structural equality after reduction.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den = Int(1)) {
    if (sgn(den) == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "num" or "num/den", the forms produced by rat_str.
inline Rat rat_parse(const std::string& s) {
    Rat q;
    try {
        q = Rat(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    }
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;  // already canonical: powers preserve coprimality and den > 0
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, 0..n) via the additive recurrence, exact integers throughout.
inline std::vector<Int> binomial_row(unsigned long n) {
    std::vector<Int> row(n + 1);
    row[0] = 1;
    for (unsigned long i = 1; i <= n; ++i) {
        row[i] = 1;
        for (unsigned long j = i - 1; j >= 1; --j) row[j] += row[j - 1];
    }
    return row;
}

}  // namespace lpolya
