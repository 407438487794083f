#include "borch/heegner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "borch/numthy.hpp"

namespace borch {

namespace {

long long fdiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long isqrt_ll(long long n) {
    if (n < 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

BQF bqf_scale(const BQF& q, long long s) { return {s * q.a, s * q.b, s * q.c}; }

const Mat2 kShiftS{0, -1, 1, 0};  // [[0,-1],[1,0]]

Mat2 translation(long long t) { return {1, t, 0, 1}; }

// Points of P^1(Z/N) as first-column classes (x : z), one per orbit.
std::vector<std::pair<long long, long long>> proj_line(long long N) {
    std::vector<long long> units;
    for (long long u = 1; u < N; ++u)
        if (gcd_ll(u, N) == 1) units.push_back(u);
    if (N == 1) units.push_back(0);

    std::vector<char> seen(static_cast<size_t>(N * N), 0);
    std::vector<std::pair<long long, long long>> reps;
    for (long long x = 0; x < N; ++x)
        for (long long z = 0; z < N; ++z) {
            if (gcd_ll(gcd_ll(x, z), N) != 1) continue;
            if (seen[static_cast<size_t>(x * N + z)]) continue;
            reps.push_back({x, z});
            for (long long u : units)
                seen[static_cast<size_t>(mod_pos(u * x, N) * N + mod_pos(u * z, N))] = 1;
        }
    return reps;
}

// Lift (x : z) to an SL2(Z) matrix with first column = (x, z) mod N.
Mat2 coset_rep(long long x, long long z, long long N) {
    if (z == 0) {
        z = N;
        if (x == 0) x = 1;  // only for N = 1
    } else {
        while (gcd_ll(x, z) != 1) x += N;
    }
    long long X, Y;
    ext_gcd(x, z, X, Y);  // x X + z Y = 1
    return {x, -Y, z, X};
}

/* Smallest |a'| over the Gamma0(N)-orbit of Q, then b' translated into
   (-|a'|, |a'|], ties broken by smallest |b'| with positive b' ahead of
   negative.  The minimum is located on the SL2-reduced shape of Q,
   where the box bounds stay small, with the level constraint carried
   through the reduction matrix; the search bound escalates
   geometrically until a candidate appears, so the result is the exact
   orbit minimum. */
BQF canonical_rep(const BQF& q, long long N) {
    Reduction red = reduce_form(q);
    const BQF& R = red.reduced;
    const Mat2& M = red.M;
    long long D = bqf_disc(q);

    std::vector<std::pair<long long, long long>> cols;
    long long best = 0;
    for (long long B = N * isqrt_ll((-D) / 3) + N;; B *= 2) {
        long long ub = isqrt_ll(fdiv(4 * R.c * B, -D)) + 1;
        long long vb = isqrt_ll(fdiv(4 * R.a * B, -D)) + 1;
        for (long long v = 0; v <= vb; ++v)
            for (long long u = (v == 0 ? 1 : -ub); u <= ub; ++u) {
                long long x = M.p * u + M.q * v;
                long long z = M.r * u + M.s * v;
                if (z % N != 0 || gcd_ll(x, z) != 1) continue;
                long long val = R.a * u * u + R.b * u * v + R.c * v * v;
                if (val > B) continue;
                if (cols.empty() || val < best) {
                    best = val;
                    cols.clear();
                }
                if (val == best) cols.push_back({x, z});
            }
        if (!cols.empty()) break;
    }

    bool have = false;
    BQF out;
    long long key = 0;
    for (auto& [x, z] : cols) {
        long long X, Y;
        ext_gcd(x, z, X, Y);
        BQF cand = bqf_apply(q, {x, -Y, z, X});
        long long w = best;  // = |cand.a|
        long long b = mod_pos(cand.b, 2 * w);
        if (b > w) b -= 2 * w;
        long long k = 2 * (b > 0 ? b : -b) + (b < 0 ? 1 : 0);
        if (!have || k < key) {
            out = {cand.a, b, (b * b - D) / (4 * cand.a)};
            key = k;
            have = true;
        }
    }
    return out;
}

struct CharSplit {
    long long d1, d2, n1, n2;
};

/* Factorizations delta = d1*d2 into discriminants and N = n1*n2 with
   gcd(d1, n1*(a/N)) = gcd(d2, n2*c) = 1, the domain of the explicit
   genus character formula. */
std::vector<CharSplit> char_splits(long long delta, const BQF& q, long long N) {
    std::vector<CharSplit> out;
    long long a0 = q.a / N;
    for (long long dv : divisors(delta))
        for (long long d1 : {dv, -dv}) {
            long long d2 = delta / d1;
            if (!is_discriminant(d1) || !is_discriminant(d2)) continue;
            for (long long n1 : divisors(N)) {
                long long n2 = N / n1;
                if (gcd_ll(d1, n1 * a0) != 1 || gcd_ll(d2, n2 * q.c) != 1) continue;
                out.push_back({d1, d2, n1, n2});
            }
        }
    return out;
}

// Shared degenerate-case gates of the genus character; true means chi = 0.
bool char_degenerate(long long delta, const BQF& q, long long N) {
    long long disc = bqf_disc(q);
    if (disc % delta != 0) return true;
    if (!is_square_mod(disc / delta, 4 * N)) return true;
    long long g = gcd_ll(gcd_ll(q.a / N, q.b), gcd_ll(q.c, delta));
    return g != 1;
}

void char_validate(long long delta, const BQF& q, long long N) {
    if (N < 1) throw std::invalid_argument("genus_char: level must be positive");
    if (!is_fundamental_discriminant(delta))
        throw std::invalid_argument("genus_char: twist must be a fundamental discriminant");
    if (q.a % N != 0)
        throw std::invalid_argument("genus_char: level must divide the leading coefficient");
}

}  // namespace

long long bqf_disc(const BQF& q) { return q.b * q.b - 4 * q.a * q.c; }

bool operator==(const BQF& x, const BQF& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }

std::string bqf_str(const BQF& q) {
    return "[" + std::to_string(q.a) + ", " + std::to_string(q.b) + ", " + std::to_string(q.c) + "]";
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s,
            x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
}

Mat2 mat_inv(const Mat2& m) { return {m.s, -m.q, -m.r, m.p}; }

BQF bqf_apply(const BQF& q, const Mat2& m) {
    long long a = q.a * m.p * m.p + q.b * m.p * m.r + q.c * m.r * m.r;
    long long b = 2 * q.a * m.p * m.q + q.b * (m.p * m.s + m.q * m.r) + 2 * q.c * m.r * m.s;
    long long c = q.a * m.q * m.q + q.b * m.q * m.s + q.c * m.s * m.s;
    return {a, b, c};
}

Reduction reduce_form(const BQF& q) {
    if (bqf_disc(q) >= 0) throw std::invalid_argument("reduce_form: definite form required");
    Reduction out;
    out.sign = q.a > 0 ? 1 : -1;
    BQF w = bqf_scale(q, out.sign);
    out.M = Mat2{};
    for (;;) {
        long long t = fdiv(w.a - w.b, 2 * w.a);
        if (t != 0) {
            w = bqf_apply(w, translation(t));
            out.M = mat_mul(out.M, translation(t));
        }
        if (w.a > w.c) {
            w = bqf_apply(w, kShiftS);
            out.M = mat_mul(out.M, kShiftS);
            continue;
        }
        if (w.a == w.c && w.b < 0) {
            w = bqf_apply(w, kShiftS);
            out.M = mat_mul(out.M, kShiftS);
        }
        break;
    }
    out.reduced = w;
    return out;
}

std::vector<Mat2> automorphs(const BQF& r) {
    std::vector<Mat2> out = {Mat2{}, {-1, 0, 0, -1}};
    if (r.b == 0 && r.a == r.c) {
        out.push_back(kShiftS);
        out.push_back({0, 1, -1, 0});
    } else if (r.a == r.b && r.b == r.c) {
        for (Mat2 u : {Mat2{0, -1, 1, 1}, Mat2{-1, -1, 1, 0}}) {
            out.push_back(u);
            out.push_back({-u.p, -u.q, -u.r, -u.s});
        }
    }
    return out;
}

bool gamma0_equivalent(const BQF& q1, const BQF& q2, long long N) {
    if (bqf_disc(q1) != bqf_disc(q2)) return false;
    Reduction r1 = reduce_form(q1);
    Reduction r2 = reduce_form(q2);
    if (r1.sign != r2.sign || r1.reduced != r2.reduced) return false;
    Mat2 m2i = mat_inv(r2.M);
    for (const Mat2& u : automorphs(r1.reduced)) {
        Mat2 g = mat_mul(mat_mul(r1.M, u), m2i);
        if (mod_pos(g.r, N) == 0) return true;
    }
    return false;
}

CMPoint heegner_point(const BQF& q) {
    if (q.a == 0) throw std::invalid_argument("heegner_point: leading coefficient must not vanish");
    if (bqf_disc(q) >= 0) throw std::invalid_argument("heegner_point: negative discriminant required");
    return {q.a, q.b, bqf_disc(q)};
}

QuadNum cm_value(const CMPoint& pt) {
    long long f;
    long long d0 = squarefree_part(pt.D, f);
    long long aa = pt.a > 0 ? pt.a : -pt.a;
    return QuadNum(d0, rat(static_cast<long>(-pt.b), static_cast<long>(2 * pt.a)),
                   rat(static_cast<long>(f), static_cast<long>(2 * aa)));
}

std::string cm_str(const CMPoint& pt) {
    long long f;
    long long d0 = squarefree_part(pt.D, f);
    long long aa = pt.a > 0 ? pt.a : -pt.a;
    long long re = pt.a > 0 ? -pt.b : pt.b;
    long long den = 2 * aa;
    long long g = gcd_ll(gcd_ll(re, f), den);
    re /= g;
    f /= g;
    den /= g;
    std::string surd = (f == 1 ? "" : std::to_string(f) + "*") + "sqrt(" + std::to_string(d0) + ")";
    std::string num = re == 0 ? surd : std::to_string(re) + " + " + surd;
    if (den == 1) return re == 0 ? surd : "(" + num + ")";
    return "(" + num + ")/" + std::to_string(den);
}

int stab_order(const BQF& q, long long N) {
    Reduction red = reduce_form(q);
    Mat2 mi = mat_inv(red.M);
    int count = 0;
    for (const Mat2& u : automorphs(red.reduced)) {
        Mat2 g = mat_mul(mat_mul(red.M, u), mi);
        if (mod_pos(g.r, N) == 0) ++count;
    }
    return count;
}

std::vector<HeegnerClass> classes(long long N, long long D, long long r) {
    if (N < 1) throw std::invalid_argument("classes: level must be positive");
    if (D >= 0) throw std::invalid_argument("classes: negative discriminant required");
    if (mod_pos(r * r - D, 4 * N) != 0)
        throw std::invalid_argument("classes: discriminant does not match the root mod 4N");

    std::vector<BQF> reduced;
    for (long long a = 1; 3 * a * a <= -D; ++a)
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a || (a == c && b < 0)) continue;
            reduced.push_back({a, b, c});
        }

    std::vector<BQF> kept;
    for (auto& [x, z] : proj_line(N)) {
        Mat2 g = coset_rep(x, z, N);
        for (const BQF& R : reduced)
            for (int s : {1, -1}) {
                BQF cand = bqf_scale(bqf_apply(R, g), s);
                if (cand.a % N != 0 || mod_pos(cand.b - r, 2 * N) != 0) continue;
                bool dup = false;
                for (const BQF& p : kept)
                    if (gamma0_equivalent(p, cand, N)) {
                        dup = true;
                        break;
                    }
                if (!dup) kept.push_back(cand);
            }
    }

    std::vector<HeegnerClass> out;
    for (const BQF& q : kept) {
        BQF rep = canonical_rep(q, N);
        out.push_back({rep, heegner_point(rep), stab_order(rep, N)});
    }
    std::sort(out.begin(), out.end(), [](const HeegnerClass& x, const HeegnerClass& y) {
        long long ax = x.rep.a > 0 ? x.rep.a : -x.rep.a;
        long long ay = y.rep.a > 0 ? y.rep.a : -y.rep.a;
        return std::tie(ax, x.rep.a, x.rep.b, x.rep.c) < std::tie(ay, y.rep.a, y.rep.b, y.rep.c);
    });
    return out;
}

int genus_char(long long delta, const BQF& q, long long N) {
    char_validate(delta, q, N);
    if (char_degenerate(delta, q, N)) return 0;
    for (const CharSplit& sp : char_splits(delta, q, N))
        return kronecker(sp.d1, sp.n1 * (q.a / N)) * kronecker(sp.d2, sp.n2 * q.c);
    return 0;
}

int genus_char_oracle(long long delta, const BQF& q, long long N) {
    char_validate(delta, q, N);
    if (char_degenerate(delta, q, N)) return 0;
    std::vector<CharSplit> splits = char_splits(delta, q, N);
    if (splits.empty()) return 0;
    for (const CharSplit& sp : splits) {
        long long a = sp.n1 * (q.a / N);
        long long c = sp.n2 * q.c;
        for (long long x = -50; x <= 50; ++x)
            for (long long y = -50; y <= 50; ++y) {
                long long n = a * x * x + q.b * x * y + c * y * y;
                if (n == 0 || gcd_ll(n, delta) != 1) continue;
                return kronecker(delta, n);
            }
    }
    throw std::runtime_error("genus_char_oracle: no represented value coprime to the twist in range");
}

HeegnerDivisor twisted_divisor(long long delta, long long r, long long N, const Rational& m,
                               long long h, bool normalize_w2) {
    if (N < 1) throw std::invalid_argument("twisted_divisor: level must be positive");
    if (!is_fundamental_discriminant(delta))
        throw std::invalid_argument("twisted_divisor: twist must be a fundamental discriminant");
    if (mod_pos(r * r - delta, 4 * N) != 0)
        throw std::invalid_argument("twisted_divisor: twist does not match the root mod 4N");
    long long sgn = delta > 0 ? 1 : -1;
    Rational frac = m - rat(static_cast<long>(sgn * h * h), static_cast<long>(4 * N));
    if (!is_integer(frac))
        throw std::invalid_argument("twisted_divisor: index must lie in Z + sgn(delta) h^2/4N");
    long long d = rat_long(rat(static_cast<long>(4 * N * sgn)) * m);
    long long D = d * delta;
    if (D >= 0) throw std::invalid_argument("twisted_divisor: negative discriminant required");

    HeegnerDivisor out;
    out.delta = delta;
    out.r = r;
    out.N = N;
    out.h = h;
    out.m = m;
    long long rh = r * h;
    if (mod_pos(rh * rh - D, 4 * N) != 0) return out;  // empty support
    for (const HeegnerClass& cls : classes(N, D, rh)) {
        int chi = genus_char(delta, cls.rep, N);
        Rational weight = rat(normalize_w2 ? 2 * chi : chi, cls.w);
        out.entries.push_back({cls, weight});
    }
    return out;
}

}  // namespace borch
