#include "borch/borcherds.hpp"

#include <stdexcept>
#include <string>

#include "borch/modforms.hpp"
#include "borch/numthy.hpp"

namespace borch {

namespace {

// -sgn(delta) * sqrt(delta), the common scalar of the log expansions.
QuadNum log_scale(long long delta) {
    QuadNum root = quad_sqrt_of(delta);
    return delta > 0 ? -root : root;
}

void validate_data(const ExponentData& data) {
    if (data.N < 1) throw std::invalid_argument("twisted product: level must be positive");
    if (!is_fundamental_discriminant(data.delta))
        throw std::invalid_argument("twisted product: twist must be a fundamental discriminant");
    if (mod_pos(data.r * data.r - data.delta, 4 * data.N) != 0)
        throw std::invalid_argument("twisted product: root does not square to the twist mod 4N");
    if (data.delta != 1 && data.weyl != 0)
        throw std::invalid_argument("twisted product: nonzero Weyl exponent needs trivial twist");
}

// Exponent lookup; a key absent below the precision bound is an error,
// since it cannot be told apart from data that was never computed.
const Rational& exponent_at(const ExponentData& data, long long n) {
    auto it = data.cplus.find(n);
    if (it == data.cplus.end())
        throw std::invalid_argument("twisted product: no exponent data at n = " + std::to_string(n));
    return it->second;
}

QSeries series_one(long prec) {
    return qs_truncate(QSeries::constant(QuadNum(rat(1))), rat(prec));
}

}  // namespace

QSeries p_delta_series(long long delta, long precX) {
    if (!is_fundamental_discriminant(delta))
        throw std::invalid_argument("p_delta_series: twist must be a fundamental discriminant");
    QSeries lg;
    lg.den = 1;
    lg.prec = precX;
    for (long long k = 1; k < precX; ++k) {
        long kr = kronecker(delta, k);
        if (kr != 0) lg.c.emplace(k, QuadNum(rat(kr, k)));
    }
    if (lg.c.empty()) return series_one(precX);
    return qs_exp(qs_scal(log_scale(delta), lg));
}

QSeries twisted_product(const ExponentData& data, long prec) {
    validate_data(data);

    // log Psi - weyl log q = -sgn sqrt(delta) sum_n cplus(n) sum_k (delta/k) q^{nk} / k;
    // gather the q^{nk} terms directly instead of rescaling factor logs.
    std::map<long long, Rational> acc;
    for (long long n = 1; n < prec; ++n) {
        const Rational& cn = exponent_at(data, n);
        if (cn == 0) continue;
        for (long long k = 1; n * k < prec; ++k) {
            long kr = kronecker(data.delta, k);
            if (kr != 0) acc[n * k] += cn * rat(kr, k);
        }
    }

    QSeries lg;
    lg.den = 1;
    lg.prec = prec;
    for (const auto& [key, v] : acc)
        if (v != 0) lg.c.emplace(key, QuadNum(v));

    QSeries psi = lg.c.empty() ? series_one(prec) : qs_exp(qs_scal(log_scale(data.delta), lg));
    if (data.weyl != 0) psi = qs_shift(psi, data.weyl);
    return psi;
}

QSeries dlog_expansion(const ExponentData& data, long prec) {
    validate_data(data);
    QuadNum scale = log_scale(data.delta);

    QSeries out;
    out.den = 1;
    out.prec = prec;
    if (prec > 0 && data.weyl != 0) out.c.emplace(0, QuadNum(data.weyl));
    for (long long n = 1; n < prec; ++n) {
        Rational s(0);
        for (long long d : divisors(n)) s += rat((n / d) * kronecker(data.delta, d)) * exponent_at(data, n / d);
        if (s != 0) out.c.emplace(n, scale * QuadNum(s));
    }
    return out;
}

ExponentData zagier5_data(long nMax) {
    ExponentData data;
    data.delta = 5;
    data.r = 1;
    data.N = 1;
    QSeries f3 = plus_form(-3, rat(5 * nMax * nMax + 5));
    for (long long n = 1; n <= nMax; ++n) data.cplus[n] = f3.coeff(rat(5 * n * n)).a;
    return data;
}

ExponentData mock6_data(long nMax) {
    ExponentData data;
    data.delta = -8;
    data.r = 4;
    data.N = 6;
    MockData md = mock_series(rat(2 * (nMax * nMax + 1), 3));
    for (long long n = 1; n <= nMax; ++n) {
        long kr = kronecker(n, 3);
        data.cplus[n] = kr == 0 ? rat(0) : rat(kr) * md.a.coeff(rat(n * n, 3)).a;
    }
    return data;
}

}  // namespace borch
