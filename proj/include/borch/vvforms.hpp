#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "borch/qseries.hpp"
#include "borch/rational.hpp"

namespace borch {

/* Fourier coefficient table of a vector-valued form on Z/2NZ.  Indices
   are pairs (n, h) with 4Nn integral and h mod 2N; the table stores the
   scaled key n4 = 4Nn.  Nonzero entries must sit on the support
   congruence n4 = sigma h^2 mod 4N.  sigma tells the representation
   (+1) from its conjugate (-1); k is the half-integral weight tag the
   Hecke operator reads. */
struct VVCoeffs {
    long long N = 1;
    int sigma = 1;
    Rational k = rat(1, 2);
    std::map<std::pair<long long, long long>, Rational> entries;

    // Store c(n, h); h is reduced mod 2N.  A nonzero value off the
    // support congruence or off the 1/4N grid is rejected.
    void set(const Rational& n, long long h, const Rational& v);

    // c(n, h), zero for absent or off-grid indices.
    Rational at(const Rational& n, long long h) const;
    Rational at_key(long long n4, long long h) const;

    bool on_support(long long n4, long long h) const;
};

// c(n, -h) = sign * c(n, h) for every stored entry.
bool is_symmetric(const VVCoeffs& f, int sign);

/* T(p) for an odd prime p coprime to N:
   b*(n,h) = b(p^2 n, ph) + p^(k-3/2) (4N sigma n / p) b(n,h)
           + p^(2k-2) b(n/p^2, h/p),
   the last term only when p^2 divides the scaled index. */
VVCoeffs hecke_Tp(const VVCoeffs& f, long long p);

/* {g, f} = sum_h sum_{n<=0} c_f(n,h) b_g(-n,h).  Defined between dual
   tables: equal N, opposite sigma. */
Rational pairing(const VVCoeffs& g, const VVCoeffs& f);

/* Weil representation generators on C[Z/2NZ], 53-bit complex entries,
   row-major (2N)x(2N): T_{hh} = e(h^2/4N),
   S_{h'h} = e(-1/8)/sqrt(2N) e(-h h'/2N). */
struct WeilMatrices {
    long long N = 1;
    std::vector<std::complex<double>> T;
    std::vector<std::complex<double>> S;
};

struct WeilReport {
    double t_unitary = 0;  // max |T T* - 1|
    double s_unitary = 0;  // max |S S* - 1|
    double s_squared = 0;  // max |S^2 - Z|
    double st_cubed = 0;   // max |(ST)^3 - Z|
    double worst() const;
};

WeilMatrices weil_matrices(long long N);
// Defects against the relations S^2 = (ST)^3 = Z, Z = e(-1/4) (h -> -h).
WeilReport weil_check(const WeilMatrices& W);

/* The 12-component embedding (0, h0, h2-h1, 0, -h1-h2, -h0, 0, h0,
   h1+h2, 0, h1-h2, -h0) indexed by j/12 cosets. */
std::vector<QSeries> zwegers_embed(const QSeries& h0, const QSeries& h1, const QSeries& h2);

}  // namespace borch
