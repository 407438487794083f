#include "borch/qseries.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "borch/numthy.hpp"

namespace borch {

namespace {

long long sat_add(long long a, long long b) {
    if (a >= QSeries::EXACT / 2 || b >= QSeries::EXACT / 2) return QSeries::EXACT;
    return a + b;
}

long long sat_mul(long long a, long long m) {
    if (a >= QSeries::EXACT / 2) return QSeries::EXACT;
    return a * m;
}

// Rewrite f on the scaled grid with denominator L (den | L).
QSeries on_den(const QSeries& f, long long L) {
    if (L == f.den) return f;
    long long m = L / f.den;
    QSeries g;
    g.den = L;
    g.prec = sat_mul(f.prec, m);
    for (const auto& [k, v] : f.c) g.c.emplace(k * m, v);
    return g;
}

long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

void put(QSeries& f, long long k, const QuadNum& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = f.c.emplace(k, v);
    if (!fresh) {
        it->second = it->second + v;
        if (it->second.is_zero()) f.c.erase(it);
    }
}

void drop_tail(QSeries& f) {
    if (f.is_exact()) return;
    f.c.erase(f.c.lower_bound(f.prec), f.c.end());
}

}  // namespace

QSeries QSeries::zero() { return QSeries{}; }

QSeries QSeries::constant(const QuadNum& v) {
    QSeries f;
    if (!v.is_zero()) f.c.emplace(0, v);
    return f;
}

QSeries QSeries::monomial(const QuadNum& v, const Rational& e) {
    QSeries f;
    f.den = e.get_den().get_si();
    if (!v.is_zero()) f.c.emplace(e.get_num().get_si(), v);
    return f;
}

Rational QSeries::min_exp() const {
    if (c.empty()) throw std::invalid_argument("QSeries: no stored term");
    return rat(c.begin()->first, den);
}

QuadNum QSeries::coeff(const Rational& e) const {
    Rational scaled = e * rat(den);
    if (!is_exact() && scaled >= rat(prec)) throw std::invalid_argument("QSeries: coefficient beyond precision");
    if (!is_integer(scaled)) return QuadNum();  // off the grid, known zero below prec
    auto it = c.find(rat_long(scaled));
    return it == c.end() ? QuadNum() : it->second;
}

void QSeries::normalize() {
    long long g = den;
    for (const auto& [k, v] : c) {
        g = gcd_ll(g, k);
        if (g == 1) return;
    }
    if (!is_exact()) g = gcd_ll(g, prec);
    if (g <= 1) return;
    den /= g;
    if (!is_exact()) prec /= g;
    std::map<long long, QuadNum> nc;
    for (const auto& [k, v] : c) nc.emplace(k / g, v);
    c.swap(nc);
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    long long L = lcm_ll(f.den, g.den);
    QSeries a = on_den(f, L), b = on_den(g, L);
    QSeries r;
    r.den = L;
    r.prec = std::min(a.prec, b.prec);
    for (const auto& [k, v] : a.c) put(r, k, v);
    for (const auto& [k, v] : b.c) put(r, k, v);
    drop_tail(r);
    r.normalize();
    return r;
}

QSeries operator-(const QSeries& f) { return qs_scal(QuadNum(rat(-1)), f); }

QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

QSeries operator*(const QSeries& f, const QSeries& g) {
    long long L = lcm_ll(f.den, g.den);
    QSeries a = on_den(f, L), b = on_den(g, L);
    /* prec(fg) = min(prec f + ord g, prec g + ord f): an unknown term of f
       first pollutes exponent prec_f + ord_g, and symmetrically.  For an
       empty map the order is only known to be >= prec. */
    long long orda = a.c.empty() ? std::min(a.prec, QSeries::EXACT) : a.min_key();
    long long ordb = b.c.empty() ? std::min(b.prec, QSeries::EXACT) : b.min_key();
    QSeries r;
    r.den = L;
    r.prec = std::min(sat_add(a.prec, ordb), sat_add(b.prec, orda));
    for (const auto& [i, u] : a.c) {
        if (r.prec < QSeries::EXACT && i + ordb >= r.prec) break;
        for (const auto& [j, v] : b.c) {
            long long k = i + j;
            if (r.prec < QSeries::EXACT && k >= r.prec) break;
            put(r, k, u * v);
        }
    }
    r.normalize();
    return r;
}

QSeries qs_scal(const QuadNum& v, const QSeries& f) {
    if (v.is_zero()) return QSeries::zero();
    QSeries r;
    r.den = f.den;
    r.prec = f.prec;
    for (const auto& [k, u] : f.c) put(r, k, v * u);
    r.normalize();
    return r;
}

QSeries qs_shift(const QSeries& f, const Rational& e) {
    long long q = e.get_den().get_si();
    long long L = lcm_ll(f.den, q);
    QSeries a = on_den(f, L);
    long long off = e.get_num().get_si() * (L / q);
    QSeries r;
    r.den = L;
    r.prec = sat_add(a.prec, off);
    for (const auto& [k, v] : a.c) r.c.emplace(k + off, v);
    r.normalize();
    return r;
}

QSeries qs_truncate(const QSeries& f, const Rational& e) {
    long long q = e.get_den().get_si();
    long long L = lcm_ll(f.den, q);
    QSeries a = on_den(f, L);
    long long bound = e.get_num().get_si() * (L / q);
    if (bound < a.prec) a.prec = bound;
    drop_tail(a);
    a.normalize();
    return a;
}

QSeries qs_inv(const QSeries& f) {
    if (f.c.empty()) throw std::invalid_argument("qs_inv: series with no stored term");
    if (f.is_exact()) throw std::invalid_argument("qs_inv: unbounded precision, truncate first");
    long long m = f.min_key();
    const QuadNum lead = f.c.begin()->second;
    long long len = f.prec - m;  // relative window, preserved by inversion
    if (len <= 0) throw std::invalid_argument("qs_inv: empty precision window");

    /* f = lead q^(m/den) (1 - u) with ord u > 0; invert 1 - u by the
       convolution recurrence g_e = sum_j u_j g_(e-j). */
    std::vector<QuadNum> u(static_cast<size_t>(len));
    for (auto it = std::next(f.c.begin()); it != f.c.end(); ++it)
        u[static_cast<size_t>(it->first - m)] = -(it->second / lead);
    std::vector<QuadNum> g(static_cast<size_t>(len));
    g[0] = QuadNum(rat(1));
    for (long long e = 1; e < len; ++e) {
        QuadNum acc;
        for (auto it = std::next(f.c.begin()); it != f.c.end(); ++it) {
            long long j = it->first - m;
            if (j > e) break;
            const QuadNum& ge = g[static_cast<size_t>(e - j)];
            if (!ge.is_zero()) acc = acc + u[static_cast<size_t>(j)] * ge;
        }
        g[static_cast<size_t>(e)] = acc;
    }

    QSeries r;
    r.den = f.den;
    r.prec = len - m;  // = (prec - m) - m
    QuadNum linv = QuadNum(rat(1)) / lead;
    for (long long e = 0; e < len; ++e)
        if (!g[static_cast<size_t>(e)].is_zero()) r.c.emplace(e - m, linv * g[static_cast<size_t>(e)]);
    r.normalize();
    return r;
}

QSeries qs_inv(const QSeries& f, const Rational& bound) { return qs_inv(qs_truncate(f, bound)); }

QSeries qs_exp(const QSeries& f) {
    if (f.is_exact()) throw std::invalid_argument("qs_exp: unbounded precision, truncate first");
    if (!f.c.empty() && f.min_key() <= 0) throw std::invalid_argument("qs_exp: argument must vanish at q^0");
    if (f.prec <= 0) throw std::invalid_argument("qs_exp: empty precision window");
    long long m = f.c.empty() ? f.prec : f.min_key();
    long long steps = f.prec / m + 1;
    QSeries acc = QSeries::constant(QuadNum(rat(1)));
    acc.den = f.den;
    acc.prec = f.prec;
    for (long long k = steps; k >= 1; --k) {
        acc = qs_scal(QuadNum(rat(1, k)), f * acc);
        acc = acc + QSeries::constant(QuadNum(rat(1)));
        acc = qs_truncate(acc, rat(f.prec, f.den));
    }
    return acc;
}

QSeries qs_log(const QSeries& f) {
    if (f.coeff(rat(0)) != QuadNum(rat(1)) || f.min_key() != 0)
        throw std::invalid_argument("qs_log: argument must be 1 + O(q^(>0))");
    /* log f = integral of (q d/dq f)/f with respect to q d/dq, i.e. divide
       the e-th coefficient of qdq(f)/f by e; constant of integration 0. */
    QSeries d = qs_qdq(f) * qs_inv(f);
    QSeries r;
    r.den = d.den;
    r.prec = d.prec;
    for (const auto& [k, v] : d.c) r.c.emplace(k, v / QuadNum(rat(k, d.den)));
    r.normalize();
    return r;
}

QSeries qs_pow(const QSeries& f, long e) {
    if (e == 0) return QSeries::constant(QuadNum(rat(1)));
    QSeries base = e > 0 ? f : qs_inv(f);
    long k = e > 0 ? e : -e;
    QSeries acc = base;
    for (long i = 1; i < k; ++i) acc = acc * base;
    return acc;
}

QSeries qs_rescale(const QSeries& f, long m) {
    if (m < 1) throw std::invalid_argument("qs_rescale: factor must be >= 1");
    QSeries r;
    r.den = f.den;
    r.prec = sat_mul(f.prec, m);
    for (const auto& [k, v] : f.c) r.c.emplace(k * m, v);
    r.normalize();
    return r;
}

QSeries qs_qdq(const QSeries& f) {
    QSeries r;
    r.den = f.den;
    r.prec = f.prec;
    for (const auto& [k, v] : f.c)
        if (k != 0) r.c.emplace(k, QuadNum(rat(k, f.den)) * v);
    r.normalize();
    return r;
}

QSeries qs_conj(const QSeries& f) {
    QSeries r = f;
    for (auto& [k, v] : r.c) v = v.conj();
    return r;
}

bool qs_agree(const QSeries& f, const QSeries& g) {
    QSeries d = f - g;
    return d.c.empty();
}

std::string qs_str(const QSeries& f) {
    std::string out;
    for (const auto& [k, v] : f.c) {
        long long g = k == 0 ? f.den : gcd_ll(k, f.den);
        long long p = k / g, q = f.den / g;
        out += "q^{" + std::to_string(p);
        if (q != 1) out += "/" + std::to_string(q);
        out += "}: " + quad_str(v) + "\n";
    }
    return out;
}

}  // namespace borch
