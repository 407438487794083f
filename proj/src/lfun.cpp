#include "borch/lfun.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "borch/numthy.hpp"

namespace borch {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

struct BInvariants {
    long long b2, b4, b6;
};

BInvariants b_invariants(const EllipticCurve& E) {
    return {E.a1 * E.a1 + 4 * E.a2, 2 * E.a4 + E.a1 * E.a3, E.a3 * E.a3 + 4 * E.a6};
}

// Kraus: (c4, c6) comes from an integral model iff c6 != +-9 mod 27 and
// either c6 = -1 mod 4 or (c4 = 0 mod 16 and c6 = 0 or 8 mod 32).
bool kraus_admissible(long long c4, long long c6) {
    long long r = mod_pos(c6, 27);
    if (r == 9 || r == 18) return false;
    if (mod_pos(c6, 4) == 3) return true;
    return mod_pos(c4, 16) == 0 && (mod_pos(c6, 32) == 0 || mod_pos(c6, 32) == 8);
}

// quadratic-character table mod an odd prime: chi[v] in {-1, 0, +1}
std::vector<signed char> legendre_table(long long p) {
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (long long x = 1; x <= p / 2; ++x) chi[x * x % p] = 1;
    return chi;
}

long long cubic_mod(const BInvariants& b, long long x, long long p) {
    return mod_pos(((4 * x + mod_pos(b.b2, p)) * x + mod_pos(2 * b.b4, p)) * x + b.b6, p);
}

// a_p on a model already known to be minimal
long long minimal_ap(const EllipticCurve& E, long long p) {
    bool bad = E.conductor % p == 0;
    if (bad && (E.conductor / p) % p == 0) return 0;

    if (p == 2) {
        long long affine = 0;
        bool has_node = false;
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y) {
                long long f = y * y + E.a1 * x * y + E.a3 * y - x * x * x - E.a2 * x * x -
                              E.a4 * x - E.a6;
                long long fx = E.a1 * y - 3 * x * x - 2 * E.a2 * x - E.a4;
                long long fy = 2 * y + E.a1 * x + E.a3;
                if (mod_pos(f, 2) != 0) continue;
                ++affine;
                if (mod_pos(fx, 2) == 0 && mod_pos(fy, 2) == 0) has_node = true;
            }
        if (!bad) return 2 + 1 - (affine + 1);
        // the smooth locus keeps the point at infinity; split means order p - 1
        long long nonsingular = affine - (has_node ? 1 : 0) + 1;
        return nonsingular == p - 1 ? 1 : -1;
    }

    BInvariants b = b_invariants(E);
    if (!bad) {
        std::vector<signed char> chi = legendre_table(p);
        long long s = 0;
        for (long long x = 0; x < p; ++x) s += chi[cubic_mod(b, x, p)];
        return -s;
    }
    // node: the double root of the completed-square cubic mod p, with
    // tangent directions split by the character of b2 + 12 x0
    for (long long x = 0; x < p; ++x) {
        if (cubic_mod(b, x, p) != 0) continue;
        long long deriv = mod_pos((12 * x + mod_pos(2 * b.b2, p)) * x + 2 * b.b4, p);
        if (deriv == 0) return kronecker(mod_pos(b.b2 + 12 * x, p), p);
    }
    throw std::runtime_error("curve_ap: conductor marks the prime bad but no node exists");
}

}  // namespace

long long curve_c4(const EllipticCurve& E) {
    BInvariants b = b_invariants(E);
    return b.b2 * b.b2 - 24 * b.b4;
}

long long curve_c6(const EllipticCurve& E) {
    BInvariants b = b_invariants(E);
    return -b.b2 * b.b2 * b.b2 + 36 * b.b2 * b.b4 - 216 * b.b6;
}

long long curve_disc(const EllipticCurve& E) {
    BInvariants b = b_invariants(E);
    long long b8 = E.a1 * E.a1 * E.a6 + 4 * E.a2 * E.a6 - E.a1 * E.a3 * E.a4 +
                   E.a2 * E.a3 * E.a3 - E.a4 * E.a4;
    return -b.b2 * b.b2 * b8 - 8 * b.b4 * b.b4 * b.b4 - 27 * b.b6 * b.b6 + 9 * b.b2 * b.b4 * b.b6;
}

EllipticCurve minimal_model(const EllipticCurve& E) {
    if (curve_disc(E) == 0) throw std::invalid_argument("minimal_model: singular curve");
    long long c4 = curve_c4(E), c6 = curve_c6(E);

    long long bound = 1;
    if (c4 != 0)
        while ((bound + 1) * (bound + 1) * (bound + 1) * (bound + 1) <= std::llabs(c4)) ++bound;
    else
        while (std::pow(static_cast<double>(bound + 1), 6) <= static_cast<double>(std::llabs(c6)))
            ++bound;

    for (long long u = bound; u >= 1; --u) {
        long long u4 = u * u * u * u, u6 = u4 * u * u;
        if (c4 % u4 != 0 || c6 % u6 != 0) continue;
        long long c4m = c4 / u4, c6m = c6 / u6;
        if ((c4m * c4m * c4m - c6m * c6m) % 1728 != 0) continue;
        if (!kraus_admissible(c4m, c6m)) continue;

        for (long long b2 : {-4LL, -3LL, 0LL, 1LL, 4LL, 5LL}) {
            if ((b2 * b2 - c4m) % 24 != 0) continue;
            long long b4 = (b2 * b2 - c4m) / 24;
            long long n6 = -b2 * b2 * b2 + 36 * b2 * b4 - c6m;
            if (n6 % 216 != 0) continue;
            long long b6 = n6 / 216;
            long long a1 = mod_pos(b2, 2);
            long long a2 = (b2 - a1) / 4;
            long long a3 = mod_pos(b6, 2);
            if ((b6 - a3) % 4 != 0 || mod_pos(b4 - a1 * a3, 2) != 0) continue;
            return {a1, a2, a3, (b4 - a1 * a3) / 2, (b6 - a3) / 4, E.conductor};
        }
    }
    throw std::runtime_error("minimal_model: no admissible invariant scaling found");
}

long long curve_ap(const EllipticCurve& E, long long p) {
    if (!is_prime_ll(p)) throw std::invalid_argument("curve_ap: index must be prime");
    return minimal_ap(minimal_model(E), p);
}

NewformCoeffs newform_an(const EllipticCurve& E, long long M) {
    if (M < 1) throw std::invalid_argument("newform_an: need at least one coefficient");
    if (E.conductor < 1) throw std::invalid_argument("newform_an: conductor must be positive");
    EllipticCurve Em = minimal_model(E);

    NewformCoeffs F;
    F.N = E.conductor;
    F.a.assign(M + 1, 0);
    F.a[1] = 1;

    std::vector<long long> spf(M + 1, 0);  // smallest prime factor
    for (long long i = 2; i <= M; ++i)
        if (spf[i] == 0)
            for (long long j = i; j <= M; j += i)
                if (spf[j] == 0) spf[j] = i;

    for (long long p = 2; p <= M; ++p) {
        if (spf[p] != p) continue;
        long long ap = minimal_ap(Em, p);
        bool good = F.N % p != 0;
        long long prev = 1, cur = ap;
        for (long long q = p; q <= M; q *= p) {
            F.a[q] = cur;
            long long next = ap * cur - (good ? p * prev : 0);
            prev = cur;
            cur = next;
            if (q > M / p) break;
        }
    }
    for (long long n = 2; n <= M; ++n) {
        long long p = spf[n], q = p;
        while ((n / q) % p == 0) q *= p;
        if (q != n) F.a[n] = F.a[q] * F.a[n / q];
    }

    F.sign = is_prime_ll(F.N) ? static_cast<int>(minimal_ap(Em, F.N)) : 1;
    return F;
}

int twist_sign(int epsilon, long long N, long long d) {
    if (epsilon != 1 && epsilon != -1)
        throw std::invalid_argument("twist_sign: epsilon must be +1 or -1");
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("twist_sign: twist must be a fundamental discriminant");
    if (gcd_ll(d, N) != 1)
        throw std::invalid_argument("twist_sign: twist must be coprime to the level");
    return epsilon * kronecker(d, -N);
}

double expint_e1(double x) {
    if (!(x > 0)) throw std::invalid_argument("expint_e1: positive argument required");
    if (x <= 1) {
        // E1(x) = -gamma - log x - sum (-x)^k / (k k!)
        double s = -kEulerGamma - std::log(x);
        double pw = 1;
        for (int k = 1; k < 64; ++k) {
            pw *= -x / k;
            double term = pw / k;
            s -= term;
            if (std::fabs(term) < 1e-18 * std::fabs(s)) break;
        }
        return s;
    }
    // E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...)))), modified Lentz
    const double tiny = 1e-300;
    double f = x + 1, c = f, dnm = 0;
    for (int j = 1; j < 200; ++j) {
        double aj = -static_cast<double>(j) * j;
        double bj = x + 2 * j + 1;
        dnm = bj + aj * dnm;
        if (std::fabs(dnm) < tiny) dnm = tiny;
        c = bj + aj / c;
        if (std::fabs(c) < tiny) c = tiny;
        dnm = 1 / dnm;
        double delta = c * dnm;
        f *= delta;
        if (std::fabs(delta - 1) < 1e-16) break;
    }
    return std::exp(-x) / f;
}

long long lvalue_terms(long long N, long long d, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("lvalue_terms: tolerance must be positive");
    const double pi = std::acos(-1.0);
    double A = std::fabs(static_cast<double>(d)) * std::sqrt(static_cast<double>(N)) / (2 * pi);
    long long M = 1;
    while (4 * A * std::exp(-static_cast<double>(M) / A) / std::sqrt(static_cast<double>(M)) >=
           tol / 2)
        ++M;
    return M;
}

namespace {

double twisted_sum(const NewformCoeffs& G, long long d, double tol, bool derivative) {
    int parity = twist_sign(G.sign, G.N, d);
    if (parity != (derivative ? -1 : 1))
        throw std::invalid_argument("l-value: functional equation parity mismatch");
    long long M = lvalue_terms(G.N, d, tol);
    if (static_cast<long long>(G.a.size()) - 1 < M)
        throw std::invalid_argument("l-value: coefficient table shorter than the tail bound needs");

    const double pi = std::acos(-1.0);
    double A = std::fabs(static_cast<double>(d)) * std::sqrt(static_cast<double>(G.N)) / (2 * pi);
    double sum = 0, comp = 0;  // Kahan compensation
    for (long long n = 1; n <= M; ++n) {
        int chi = kronecker(d, n);
        if (chi == 0 || G.a[n] == 0) continue;
        double x = static_cast<double>(n) / A;
        double weight = derivative ? expint_e1(x) : std::exp(-x);
        double term = 2.0 * static_cast<double>(G.a[n]) * chi / static_cast<double>(n) * weight;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

double l_central(const NewformCoeffs& G, long long d, double tol) {
    return twisted_sum(G, d, tol, false);
}

double l_derivative(const NewformCoeffs& G, long long d, double tol) {
    return twisted_sum(G, d, tol, true);
}

}  // namespace borch
