#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace borch {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical rational p/q: reduced, q > 0. All construction goes through here
// so the invariant holds everywhere downstream.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Exact conversion to long; rejects non-integers and overflow.
inline long rat_long(const Rational& x) {
    if (!is_integer(x)) throw std::invalid_argument("rat_long: not an integer");
    if (!x.get_num().fits_slong_p()) throw std::invalid_argument("rat_long: out of range");
    return x.get_num().get_si();
}

// "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rational& x) {
    if (is_integer(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Accepts the same two shapes rat_str emits.
inline Rational parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    try {
        Rational r(s);
        if (r.get_den() <= 0) {
            if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    }
}

inline Rational rat_pow(const Rational& x, long e) {
    if (e == 0) return rat(1);
    if (x == 0 && e < 0) throw std::invalid_argument("rat_pow: zero to negative power");
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    mpz_pow_ui(acc.get_num_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(acc.get_den_mpz_t(), base.get_den().get_mpz_t(), k);
    return acc;
}

}  // namespace borch
