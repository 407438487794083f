#include "borch/vvforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "borch/numthy.hpp"

namespace borch {

namespace {

bool scaled_index(const VVCoeffs& f, const Rational& n, long long& out) {
    Rational n4 = rat(4 * f.N) * n;
    if (!is_integer(n4)) return false;
    out = rat_long(n4);
    return true;
}

std::complex<double> unit(double x) {  // e(x) = exp(2 pi i x)
    const double pi = std::acos(-1.0);
    return {std::cos(2 * pi * x), std::sin(2 * pi * x)};
}

using CMat = std::vector<std::complex<double>>;

CMat mat_product(const CMat& a, const CMat& b, long long dim) {
    CMat r(dim * dim, {0, 0});
    for (long long i = 0; i < dim; ++i)
        for (long long l = 0; l < dim; ++l) {
            std::complex<double> v = a[i * dim + l];
            if (v == std::complex<double>(0, 0)) continue;
            for (long long j = 0; j < dim; ++j) r[i * dim + j] += v * b[l * dim + j];
        }
    return r;
}

double max_defect(const CMat& a, const CMat& b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

bool VVCoeffs::on_support(long long n4, long long h) const {
    return mod_pos(n4 - sigma * h * h, 4 * N) == 0;
}

void VVCoeffs::set(const Rational& n, long long h, const Rational& v) {
    long long n4 = 0;
    if (!scaled_index(*this, n, n4))
        throw std::invalid_argument("coefficient table: index not on the 1/4N grid");
    h = mod_pos(h, 2 * N);
    if (v != 0 && !on_support(n4, h))
        throw std::invalid_argument("coefficient table: nonzero entry off the support congruence");
    entries[{n4, h}] = v;
}

Rational VVCoeffs::at(const Rational& n, long long h) const {
    long long n4 = 0;
    if (!scaled_index(*this, n, n4)) return rat(0);
    return at_key(n4, h);
}

Rational VVCoeffs::at_key(long long n4, long long h) const {
    auto it = entries.find({n4, mod_pos(h, 2 * N)});
    return it == entries.end() ? rat(0) : it->second;
}

bool is_symmetric(const VVCoeffs& f, int sign) {
    for (const auto& [key, v] : f.entries)
        if (f.at_key(key.first, -key.second) != rat(sign) * v) return false;
    return true;
}

VVCoeffs hecke_Tp(const VVCoeffs& f, long long p) {
    if (p == 2 || !is_prime_ll(p))
        throw std::invalid_argument("hecke: operator index must be an odd prime");
    if (f.N % p == 0) throw std::invalid_argument("hecke: prime must not divide the level");
    Rational e1 = f.k - rat(3, 2);
    Rational e2 = rat(2) * f.k - rat(2);
    if (!is_integer(e1))
        throw std::invalid_argument("hecke: weight tag must be half integral");
    Rational mid = rat_pow(rat(p), rat_long(e1));
    Rational low = rat_pow(rat(p), rat_long(e2));
    long long pinv = mod_inverse(p, 2 * f.N);

    // candidate output keys: images of the stored support under the
    // three index maps of the operator
    std::map<std::pair<long long, long long>, char> keys;
    for (const auto& [key, v] : f.entries) {
        auto [n4, h] = key;
        keys[{n4, h}] = 1;
        keys[{n4 * p * p, mod_pos(p * h, 2 * f.N)}] = 1;
        if (n4 % (p * p) == 0) keys[{n4 / (p * p), mod_pos(pinv * h, 2 * f.N)}] = 1;
    }

    VVCoeffs out;
    out.N = f.N;
    out.sigma = f.sigma;
    out.k = f.k;
    for (const auto& [key, tag] : keys) {
        auto [n4, h] = key;
        Rational b = f.at_key(n4 * p * p, p * h);
        b += mid * rat(kronecker(f.sigma * n4, p)) * f.at_key(n4, h);
        if (n4 % (p * p) == 0) b += low * f.at_key(n4 / (p * p), pinv * h);
        if (b != 0) out.entries[{n4, h}] = b;
    }
    return out;
}

Rational pairing(const VVCoeffs& g, const VVCoeffs& f) {
    if (g.N != f.N) throw std::invalid_argument("pairing: tables live on different levels");
    if (g.sigma != -f.sigma)
        throw std::invalid_argument("pairing: tables must carry dual representations");
    Rational s(0);
    for (const auto& [key, v] : f.entries) {
        auto [n4, h] = key;
        if (n4 <= 0 && v != 0) s += v * g.at_key(-n4, h);
    }
    return s;
}

double WeilReport::worst() const {
    return std::max(std::max(t_unitary, s_unitary), std::max(s_squared, st_cubed));
}

WeilMatrices weil_matrices(long long N) {
    if (N < 1) throw std::invalid_argument("weil_matrices: level must be positive");
    long long dim = 2 * N;
    WeilMatrices w;
    w.N = N;
    w.T.assign(dim * dim, {0, 0});
    w.S.assign(dim * dim, {0, 0});
    double root = std::sqrt(static_cast<double>(dim));
    for (long long h = 0; h < dim; ++h)
        w.T[h * dim + h] = unit(static_cast<double>(h * h) / static_cast<double>(4 * N));
    for (long long hp = 0; hp < dim; ++hp)
        for (long long h = 0; h < dim; ++h)
            w.S[hp * dim + h] =
                unit(-1.0 / 8) / root * unit(-static_cast<double>(h * hp) / static_cast<double>(2 * N));
    return w;
}

WeilReport weil_check(const WeilMatrices& w) {
    long long dim = 2 * w.N;
    CMat id(dim * dim, {0, 0});
    CMat z(dim * dim, {0, 0});
    for (long long h = 0; h < dim; ++h) {
        id[h * dim + h] = {1, 0};
        z[mod_pos(-h, dim) * dim + h] = unit(-1.0 / 4);
    }
    auto adjoint = [dim](const CMat& a) {
        CMat r(dim * dim);
        for (long long i = 0; i < dim; ++i)
            for (long long j = 0; j < dim; ++j) r[j * dim + i] = std::conj(a[i * dim + j]);
        return r;
    };

    WeilReport rep;
    rep.t_unitary = max_defect(mat_product(w.T, adjoint(w.T), dim), id);
    rep.s_unitary = max_defect(mat_product(w.S, adjoint(w.S), dim), id);
    rep.s_squared = max_defect(mat_product(w.S, w.S, dim), z);
    CMat st = mat_product(w.S, w.T, dim);
    rep.st_cubed = max_defect(mat_product(mat_product(st, st, dim), st, dim), z);
    return rep;
}

std::vector<QSeries> zwegers_embed(const QSeries& h0, const QSeries& h1, const QSeries& h2) {
    QSeries zero = QSeries::zero();
    for (const QSeries* h : {&h0, &h1, &h2})
        if (!h->is_exact() && (zero.is_exact() || h->prec_exp() < zero.prec_exp()))
            zero = qs_truncate(QSeries::zero(), h->prec_exp());
    return {zero, h0, h2 - h1, zero, -(h1 + h2), -h0, zero, h0, h1 + h2, zero, h1 - h2, -h0};
}

}  // namespace borch
