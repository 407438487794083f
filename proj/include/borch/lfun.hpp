#pragma once

#include <vector>

namespace borch {

/* Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
   over Z with caller-supplied conductor. */
struct EllipticCurve {
    long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    long long conductor = 0;
};

long long curve_c4(const EllipticCurve& E);
long long curve_c6(const EllipticCurve& E);
long long curve_disc(const EllipticCurve& E);

// Global minimal model (Laska-Kraus-Connell), with a1, a3 in {0,1} and
// a2 in {-1,0,1}.  The conductor carries over unchanged.
EllipticCurve minimal_model(const EllipticCurve& E);

/* Trace of Frobenius at a prime p, computed on the minimal model: good
   reduction counts points by the quadratic character of the cubic,
   multiplicative reduction resolves split (+1) against nonsplit (-1)
   by the tangent directions at the node, additive reduction gives 0. */
long long curve_ap(const EllipticCurve& E, long long p);

/* Hecke eigenvalues a_1..a_M of the attached weight-2 newform, plus the
   sign of the untwisted functional equation (read off a_N for prime
   conductor N). */
struct NewformCoeffs {
    long long N = 0;
    std::vector<long long> a;  // index n, valid for 1 <= n <= M
    int sign = 1;
};

NewformCoeffs newform_an(const EllipticCurve& E, long long M);

// Sign of the functional equation of L(G, chi_d, s): epsilon * chi_d(-N).
// d must be a fundamental discriminant coprime to N.
int twist_sign(int epsilon, long long N, long long d);

// Exponential integral E_1(x), x > 0: power series up to x = 1,
// continued fraction beyond.
double expint_e1(double x);

// Series length the tail bound 4A e^(-M/A)/sqrt(M) < tol/2 requires,
// where A = |d| sqrt(N) / 2 pi.
long long lvalue_terms(long long N, long long d, double tol);

/* Central value L(G, chi_d, 1) = 2 sum a_n chi_d(n)/n e^(-n/A) for even
   twisted sign, and the derivative L'(G, chi_d, 1) = 2 sum a_n chi_d(n)/n
   E_1(n/A) for odd sign.  Calling the wrong-parity one is an error, as
   is a coefficient table shorter than the tail bound needs. */
double l_central(const NewformCoeffs& G, long long d, double tol);
double l_derivative(const NewformCoeffs& G, long long d, double tol);

}  // namespace borch
