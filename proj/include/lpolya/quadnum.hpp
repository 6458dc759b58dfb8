#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "lpolya/rational.hpp"

namespace lpolya {

// Exact element a + b*sqrt(k) of Q(sqrt(k)) for a fixed positive integer k.
// k need not be square-free: for perfect squares the representation is not
// unique, so equality and sign always go through the exact sign test rather
// than comparing components.
class QuadNum {
  public:
    explicit QuadNum(long k) : k_(check_k(k)) {}
    QuadNum(long k, Rat a, Rat b)
        : k_(check_k(k)), a_(std::move(a)), b_(std::move(b)) {}

    long k() const { return k_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    // Exact sign of a + b*sqrt(k): when the parts disagree in sign, compare
    // a^2 against k b^2; a tie means the value is exactly zero (which forces
    // k to be a perfect square).
    int sign() const {
        const int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = a_ * a_;
        Rat rhs = k_ * b_ * b_;
        const int c = cmp(lhs, rhs);
        if (c > 0) return sa;
        if (c < 0) return sb;
        return 0;
    }

    bool is_zero() const { return sign() == 0; }

    double to_double() const {
        return rat_double(a_) + rat_double(b_) * std::sqrt(double(k_));
    }

    QuadNum operator-() const { return {k_, Rat(-a_), Rat(-b_)}; }

    friend QuadNum operator+(const QuadNum& x, const QuadNum& y) {
        same_field(x, y);
        return {x.k_, Rat(x.a_ + y.a_), Rat(x.b_ + y.b_)};
    }
    friend QuadNum operator-(const QuadNum& x, const QuadNum& y) {
        same_field(x, y);
        return {x.k_, Rat(x.a_ - y.a_), Rat(x.b_ - y.b_)};
    }
    friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
        same_field(x, y);
        Rat a = x.a_ * y.a_ + x.k_ * x.b_ * y.b_;
        Rat b = x.a_ * y.b_ + x.b_ * y.a_;
        return {x.k_, std::move(a), std::move(b)};
    }
    friend QuadNum operator*(const QuadNum& x, const Rat& c) {
        return {x.k_, Rat(x.a_ * c), Rat(x.b_ * c)};
    }
    friend QuadNum operator*(const Rat& c, const QuadNum& x) { return x * c; }

    friend QuadNum operator/(const QuadNum& x, const Rat& c) {
        if (sgn(c) == 0) throw std::domain_error("QuadNum: division by zero");
        return {x.k_, Rat(x.a_ / c), Rat(x.b_ / c)};
    }
    friend QuadNum operator/(const QuadNum& x, const QuadNum& y) {
        same_field(x, y);
        if (y.sign() == 0) throw std::domain_error("QuadNum: division by zero");
        Rat norm = y.a_ * y.a_ - y.k_ * y.b_ * y.b_;
        if (sgn(norm) != 0) {
            QuadNum num = x * QuadNum(y.k_, y.a_, Rat(-y.b_));
            return {x.k_, Rat(num.a_ / norm), Rat(num.b_ / norm)};
        }
        // Nonzero divisor with vanishing conjugate norm: k is a perfect
        // square and the divisor equals the plain rational a + b*sqrt(k).
        Int root;
        Int kk(y.k_);
        mpz_sqrt(root.get_mpz_t(), kk.get_mpz_t());
        if (root * root != kk)
            throw std::logic_error("QuadNum: zero norm over non-square radicand");
        Rat value = y.a_ + y.b_ * root;
        return {x.k_, Rat(x.a_ / value), Rat(x.b_ / value)};
    }

    friend bool operator==(const QuadNum& x, const QuadNum& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const QuadNum& x, const QuadNum& y) {
        return !(x == y);
    }

    QuadNum pow(unsigned long e) const {
        QuadNum result(k_, Rat(1), Rat(0));
        QuadNum base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    std::string str() const {
        if (sgn(b_) == 0) return rat_str(a_);
        std::string root = "(" + rat_str(b_) + ")*sqrt(" + std::to_string(k_) + ")";
        if (sgn(a_) == 0) return root;
        return rat_str(a_) + " + " + root;
    }

  private:
    static long check_k(long k) {
        if (k < 1) throw std::invalid_argument("QuadNum: radicand must be >= 1");
        return k;
    }
    static void same_field(const QuadNum& x, const QuadNum& y) {
        if (x.k_ != y.k_)
            throw std::invalid_argument("QuadNum: mixed radicands");
    }

    long k_;
    Rat a_, b_;
};

}  // namespace lpolya
