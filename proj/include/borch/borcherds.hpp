#pragma once

#include <map>

#include "borch/qseries.hpp"

namespace borch {

/* Exponent data for a twisted product: the twist delta (a fundamental
   discriminant), a residue r with r^2 = delta mod 4N, the level N, the
   exponent map n -> c^+(|delta| n^2 / 4N, rn / 2N), and the Weyl
   exponent, which must be 0 unless delta = 1. */
struct ExponentData {
    long long delta = 1;
    long long r = 1;
    long long N = 1;
    std::map<long long, Rational> cplus;
    Rational weyl = rat(0);
};

/* P_delta(X) = exp(-sgn(delta) sqrt(delta) sum_{k>=1} (delta/k) X^k / k)
   to O(X^precX), coefficients in Q(sqrt(delta)).  For delta = 1 this is
   the plain factor 1 - X.  sqrt(delta) = i sqrt(|delta|) when delta < 0. */
QSeries p_delta_series(long long delta, long precX);

/* Psi = q^weyl prod_{n>=1} P_delta(q^n)^{cplus(n)}, assembled through the
   logarithm, to precision prec + weyl.  cplus must carry an entry (zero
   values are fine) for every n below prec; an absent key is an error. */
QSeries twisted_product(const ExponentData& data, long prec);

/* Coefficient series of the canonical differential of Psi divided by
   2 pi i dz:
     weyl - sgn(delta) sqrt(delta)
          * sum_{n>=1} ( sum_{d|n} (n/d) (delta/d) cplus(n/d) ) q^n.
   Same exponent-data requirements as twisted_product. */
QSeries dlog_expansion(const ExponentData& data, long prec);

/* The two built-in exponent systems, with cplus filled for 1 <= n <= nMax:
   delta = 5, r = 1, N = 1 with cplus(n) = c_{-3}(5 n^2) read off the
   weight-1/2 form f_{-3}, and delta = -8, r = 4, N = 6 with
   cplus(n) = (n/3) a(n^2/3) read off the completed mock theta series. */
ExponentData zagier5_data(long nMax);
ExponentData mock6_data(long nMax);

}  // namespace borch
