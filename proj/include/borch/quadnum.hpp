#pragma once

#include <string>

#include "borch/rational.hpp"

namespace borch {

/* Element a + b*sqrt(D) of Q(sqrt(D)).  D is the squarefree field tag;
   rationals carry D = 0 (and b = 0), so values from different fields can
   be told apart and mixed-field arithmetic rejected.  For D < 0 the
   convention sqrt(D) = i*sqrt(|D|) is implied wherever a numeric value
   is taken. */
struct QuadNum {
    long long D = 0;
    Rational a;
    Rational b;

    QuadNum() : a(0), b(0) {}
    QuadNum(const Rational& x) : a(x), b(0) {}          // NOLINT: implicit on purpose
    QuadNum(long x) : a(rat(x)), b(0) {}                // NOLINT
    QuadNum(long long fieldD, Rational ra, Rational rb);

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return D == 0; }

    QuadNum conj() const;
    Rational norm() const;  // a^2 - D b^2
};

// sqrt(n) as f*sqrt(s) with s squarefree, returned as a QuadNum; n != 0.
QuadNum quad_sqrt_of(long long n);

QuadNum operator+(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x);
QuadNum operator*(const QuadNum& x, const QuadNum& y);
QuadNum operator/(const QuadNum& x, const QuadNum& y);
bool operator==(const QuadNum& x, const QuadNum& y);
inline bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

// "a", "a + b*sqrt(D)", "a - b*sqrt(D)", or "b*sqrt(D)" when a = 0.
std::string quad_str(const QuadNum& x);

}  // namespace borch
