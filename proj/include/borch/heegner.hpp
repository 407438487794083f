#pragma once

#include <string>
#include <vector>

#include "borch/quadnum.hpp"
#include "borch/rational.hpp"

namespace borch {

// Integral binary quadratic form [a, b, c] = aX^2 + bXY + cY^2.
struct BQF {
    long long a = 0;
    long long b = 0;
    long long c = 0;
};

long long bqf_disc(const BQF& q);
bool operator==(const BQF& x, const BQF& y);
inline bool operator!=(const BQF& x, const BQF& y) { return !(x == y); }
std::string bqf_str(const BQF& q);  // "[a, b, c]"

// Unimodular matrix [[p, q], [r, s]] acting on column vectors.
struct Mat2 {
    long long p = 1;
    long long q = 0;
    long long r = 0;
    long long s = 1;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_inv(const Mat2& m);  // requires det = 1

// (Q o M)(x, y) = Q(px + qy, rx + sy).
BQF bqf_apply(const BQF& q, const Mat2& m);

/* SL2(Z) reduction of a definite form.  The reduced representative of
   sign*Q is classical (-a < b <= a <= c, b >= 0 when a = c) and the
   matrix satisfies (sign*Q) o M = reduced. */
struct Reduction {
    BQF reduced;
    Mat2 M;
    int sign = 1;  // +1 positive definite input, -1 negative definite
};
Reduction reduce_form(const BQF& q);

// Proper automorphs of a reduced positive-definite form, +-I included.
std::vector<Mat2> automorphs(const BQF& reduced);

// Whether q2 = q1 o g for some g in Gamma0(N).
bool gamma0_equivalent(const BQF& q1, const BQF& q2, long long N);

/* CM point of [a, b, c]: the root of aX^2 + bX + c in the upper half
   plane, (-b + sqrt(D))/(2a) for a > 0 and (-b - sqrt(D))/(2a) for
   a < 0, stored as the triple (a, b, D). */
struct CMPoint {
    long long a = 1;
    long long b = 0;
    long long D = -3;
};

CMPoint heegner_point(const BQF& q);
QuadNum cm_value(const CMPoint& pt);    // exact value in Q(sqrt(D0))
std::string cm_str(const CMPoint& pt);  // e.g. "(-2 + sqrt(-2))/6"

// Order of the Gamma0(N)-stabilizer of the form: 2, 4, or 6.
int stab_order(const BQF& q, long long N);

struct HeegnerClass {
    BQF rep;
    CMPoint point;
    int w = 2;
};

/* Complete duplicate-free list of Gamma0(N)-orbit representatives of
   forms [a, b, c] with b^2 - 4ac = D, N | a (either sign of a), and
   b = r mod 2N.  Representatives are canonical: |a| minimal over the
   orbit, b translated into (-|a|, |a|], ties broken by smallest (b, c).
   Output sorted by (|a|, a, b, c). */
std::vector<HeegnerClass> classes(long long N, long long D, long long r);

/* Generalized genus character chi_delta of a form [a, b, c] with N | a,
   for a fundamental discriminant delta.  Evaluates the explicit
   factorization formula; returns 0 in all degenerate cases (delta does
   not divide the discriminant, quotient not a square mod 4N, or the
   form and delta share a content). */
int genus_char(long long delta, const BQF& q, long long N);

/* Independent evaluation: (delta | n) for a represented value n coprime
   to delta, searched over |x|, |y| <= 50.  Throws if the search is
   exhausted without finding one. */
int genus_char_oracle(long long delta, const BQF& q, long long N);

/* Twisted Heegner divisor Z_{delta,r}(m, h): classes of discriminant
   d*delta with root r*h, weighted by chi_delta/w.  The flag doubles all
   weights so that generic entries read +-1 instead of +-1/2. */
struct HeegnerDivisor {
    struct Entry {
        HeegnerClass cls;
        Rational weight;
    };
    std::vector<Entry> entries;
    long long delta = 1;
    long long r = 0;
    long long N = 1;
    long long h = 0;
    Rational m;
};

HeegnerDivisor twisted_divisor(long long delta, long long r, long long N,
                               const Rational& m, long long h,
                               bool normalize_w2 = false);

}  // namespace borch
