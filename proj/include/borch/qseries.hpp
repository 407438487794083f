#pragma once

#include <map>
#include <string>

#include "borch/quadnum.hpp"
#include "borch/rational.hpp"

namespace borch {

/* q-series with fractional exponents and a finite principal part.
   The term at map key k has exponent k/den.  prec is a strict scaled
   bound: every term with key < prec is stored (zeros omitted), keys
   >= prec are unknown.  EXACT marks series known to every order.
   Precision propagates pessimistically through arithmetic. */
struct QSeries {
    static constexpr long long EXACT = 1LL << 60;

    long long den = 1;
    long long prec = EXACT;
    std::map<long long, QuadNum> c;

    static QSeries zero();
    static QSeries constant(const QuadNum& v);
    static QSeries monomial(const QuadNum& v, const Rational& e);

    bool is_exact() const { return prec >= EXACT; }
    bool known_empty() const { return c.empty(); }

    // Scaled key of the lowest stored term; EXACT when there is none.
    long long min_key() const { return c.empty() ? EXACT : c.begin()->first; }
    Rational min_exp() const;  // throws on a series with no stored term

    // Exponent form of the precision bound (meaningless when exact).
    Rational prec_exp() const { return rat(prec, den); }

    // Coefficient at exponent e; 0 off the stored support, error at or
    // beyond the precision bound.
    QuadNum coeff(const Rational& e) const;
    QuadNum coeff(long e) const { return coeff(rat(e)); }

    // Reduce den by the gcd of den, keys and (finite) prec.
    void normalize();
};

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f);
QSeries operator*(const QSeries& f, const QSeries& g);

QSeries qs_scal(const QuadNum& v, const QSeries& f);
QSeries qs_shift(const QSeries& f, const Rational& e);  // multiply by q^e

// Truncate to the strict exponent bound e (no-op if already tighter).
QSeries qs_truncate(const QSeries& f, const Rational& e);

// Reciprocal; f needs a stored leading term and finite precision (use the
// two-argument form to bound an exact polynomial first).
QSeries qs_inv(const QSeries& f);
QSeries qs_inv(const QSeries& f, const Rational& bound);

// exp(f) with ord(f) > 0, log(f) with f = 1 + O(q^(>0)); finite precision.
QSeries qs_exp(const QSeries& f);
QSeries qs_log(const QSeries& f);

QSeries qs_pow(const QSeries& f, long e);      // integer powers, e < 0 via inverse
QSeries qs_rescale(const QSeries& f, long m);  // q -> q^m, m >= 1
QSeries qs_qdq(const QSeries& f);              // q d/dq
QSeries qs_conj(const QSeries& f);             // coefficientwise sqrt(D) -> -sqrt(D)

// Equal as far as both are known (compares below the joint precision).
bool qs_agree(const QSeries& f, const QSeries& g);

// One line per stored term: "q^{e}: coeff", ascending exponents.
std::string qs_str(const QSeries& f);

}  // namespace borch
