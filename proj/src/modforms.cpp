#include "borch/modforms.hpp"

#include <stdexcept>

#include "borch/numthy.hpp"

namespace borch {

namespace {

long ceil_exp(const Rational& e) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), e.get_num().get_mpz_t(), e.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::invalid_argument("precision bound out of range");
    return q.get_si();
}

// prod(1 - q^(mn)) by the pentagonal number theorem, truncated at prec.
QSeries eta_unit(long m, const Rational& prec) {
    QSeries u = QSeries::zero();
    for (long k = 0;; ++k) {
        bool in_range = false;
        for (long s : {k, -k}) {
            long long g = static_cast<long long>(s) * (3 * s - 1) / 2;
            Rational e = rat(static_cast<long>(m * g));
            if (e >= prec) continue;
            in_range = true;
            QuadNum coef(rat(k % 2 == 0 ? 1 : -1));
            u = u + QSeries::monomial(coef, e);
            if (s == 0) break;  // k = -k, single term
        }
        if (!in_range && k > 0) break;
    }
    return qs_truncate(u, prec);
}

QSeries geometric_inverse(long e, long sign, const Rational& prec) {
    // 1/(1 - sign q^e) = sum sign^k q^(ke)
    QSeries s = QSeries::zero();
    long v = 1;
    for (long long k = 0; rat(static_cast<long>(k * e)) < prec; ++k) {
        s = s + QSeries::monomial(QuadNum(rat(v)), rat(static_cast<long>(k * e)));
        v *= sign;
    }
    return qs_truncate(s, prec);
}

struct LinSolve {
    int status = 0;  // 0 unique, 1 underdetermined, 2 inconsistent
    std::vector<std::vector<Rational>> x;  // cols x solutions, x[j][s]
};

// Gauss-Jordan on an exact rational system with several right-hand sides.
LinSolve solve_exact(std::vector<std::vector<Rational>> A, long ncols) {
    long nrows = static_cast<long>(A.size());
    long width = nrows ? static_cast<long>(A[0].size()) : 0;
    long nsol = width - ncols;
    std::vector<long> pivot_row(ncols, -1);
    long row = 0;
    for (long col = 0; col < ncols && row < nrows; ++col) {
        long p = -1;
        for (long i = row; i < nrows; ++i)
            if (A[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[row], A[p]);
        Rational inv = Rational(1) / A[row][col];
        for (long j = col; j < width; ++j) A[row][j] *= inv;
        for (long i = 0; i < nrows; ++i) {
            if (i == row || A[i][col] == 0) continue;
            Rational f = A[i][col];
            for (long j = col; j < width; ++j) A[i][j] -= f * A[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    LinSolve out;
    for (long i = row; i < nrows; ++i)
        for (long j = ncols; j < width; ++j)
            if (A[i][j] != 0) {
                out.status = 2;
                return out;
            }
    for (long col = 0; col < ncols; ++col)
        if (pivot_row[col] < 0) {
            out.status = 1;
            return out;
        }
    out.x.assign(ncols, std::vector<Rational>(nsol, Rational(0)));
    for (long col = 0; col < ncols; ++col)
        for (long s = 0; s < nsol; ++s) out.x[col][s] = A[pivot_row[col]][ncols + s];
    return out;
}

bool plus_supported(long long n) {
    long r = static_cast<long>(mod_pos(n, 4));
    return r == 0 || r == 1;
}

}  // namespace

QSeries eta_q(long m, const Rational& prec) {
    if (m < 1) throw std::invalid_argument("eta_q: argument multiplier must be positive");
    return qs_truncate(qs_shift(eta_unit(m, prec - rat(m, 24)), rat(m, 24)), prec);
}

QSeries eta_quotient(const std::vector<std::pair<long, long>>& factors, const Rational& prec) {
    Rational shift(0);
    for (const auto& [m, e] : factors) shift += rat(m, 24) * rat(e);
    Rational rel = prec - shift;
    if (!(rel > 0)) throw std::invalid_argument("eta_quotient: precision below the leading exponent");
    QSeries u = qs_truncate(QSeries::constant(QuadNum(rat(1))), rel);
    for (const auto& [m, e] : factors) {
        if (m < 1) throw std::invalid_argument("eta_quotient: argument multiplier must be positive");
        u = u * qs_pow(eta_unit(m, rel), e);
    }
    return qs_truncate(qs_shift(u, shift), prec);
}

QSeries eisenstein4(const Rational& prec) {
    long P = std::max(ceil_exp(prec), 0L);
    std::vector<long long> sig(static_cast<size_t>(P), 0);
    for (long long d = 1; d < P; ++d)
        for (long long n = d; n < P; n += d) sig[static_cast<size_t>(n)] += d * d * d;
    QSeries f = QSeries::constant(QuadNum(rat(1)));
    for (long n = 1; n < P; ++n)
        f = f + QSeries::monomial(QuadNum(rat(240) * rat(static_cast<long>(sig[static_cast<size_t>(n)]))), rat(n));
    return qs_truncate(f, prec);
}

QSeries eisenstein6(const Rational& prec) {
    long P = std::max(ceil_exp(prec), 0L);
    std::vector<long long> sig(static_cast<size_t>(P), 0);
    for (long long d = 1; d < P; ++d) {
        long long d5 = d * d * d * d * d;
        for (long long n = d; n < P; n += d) sig[static_cast<size_t>(n)] += d5;
    }
    QSeries f = QSeries::constant(QuadNum(rat(1)));
    for (long n = 1; n < P; ++n)
        f = f + QSeries::monomial(QuadNum(rat(-504) * rat(static_cast<long>(sig[static_cast<size_t>(n)]))), rat(n));
    return qs_truncate(f, prec);
}

QSeries j_series(const Rational& prec) {
    Rational work = prec + rat(4);
    QSeries e4 = eisenstein4(work);
    QSeries delta = qs_pow(eta_q(1, work), 24);
    QSeries j = e4 * e4 * e4 * qs_inv(delta);
    return qs_truncate(j, prec);
}

QSeries theta_series(const Rational& prec) {
    QSeries f = QSeries::constant(QuadNum(rat(1)));
    for (long n = 1; rat(n) * rat(n) < prec; ++n)
        f = f + QSeries::monomial(QuadNum(rat(2)), rat(n) * rat(n));
    return qs_truncate(f, prec);
}

Level6Forms level6_forms(const Rational& prec) {
    Level6Forms out;
    QSeries head = eta_quotient({{1, 4}, {2, 4}, {3, -4}, {6, -4}}, prec);
    QSeries tail = eta_quotient({{3, 4}, {6, 4}, {1, -4}, {2, -4}}, prec);
    out.j6star = head + qs_truncate(QSeries::constant(QuadNum(rat(4))), prec) + qs_scal(QuadNum(rat(81)), tail);
    out.delta6 = eta_quotient({{1, 2}, {2, 2}, {3, 2}, {6, 2}}, prec);
    return out;
}

std::vector<PlusForm> plus_space_basis(long dMin, const Rational& prec) {
    if (dMin >= 0 || !plus_supported(dMin))
        throw std::invalid_argument("plus_space_basis: dMin must be negative and 0 or 1 mod 4");
    long K = -dMin;
    if (!(prec > rat(K + 20))) throw std::invalid_argument("plus_space_basis: precision must exceed |dMin| + 20");

    std::vector<long> ds;
    for (long d = dMin; d < 0; ++d)
        if (plus_supported(d)) ds.push_back(d);

    for (int attempt = 0;; ++attempt) {
        long bound = K + 20 + 20 * attempt;
        long J = K / 4 + 1 + attempt;
        long Pw = std::max(ceil_exp(prec), bound + 1) + 2;
        Rational Pbig = rat(Pw + K);

        /* Ambient spanning set: theta times a rational function of the
           Hauptmodul t = eta(z)^8/eta(4z)^8.  Powers t^k carry the pole at
           the cusp infinity; 1/t and 1/(t+16) carry poles at the cusps 0
           and 1/2, where t takes the values 0 and -16.  Within the stated
           pole bounds this exhausts the weakly holomorphic weight-1/2
           forms on Gamma0(4), so the support conditions below can single
           out each basis element. */
        QSeries t = eta_quotient({{1, 8}, {4, -8}}, Pbig);
        QSeries theta = theta_series(Pbig);
        std::vector<QSeries> B;
        B.push_back(theta);
        for (long k = 1; k <= K; ++k) B.push_back(B.back() * t);
        QSeries tinv = qs_inv(t);
        QSeries sinv = qs_inv(t + QSeries::constant(QuadNum(rat(16))));
        for (QSeries pole : {tinv, sinv}) {
            QSeries acc = theta;
            for (long j = 1; j <= J; ++j) {
                acc = acc * pole;
                B.push_back(acc);
            }
        }
        long ncols = static_cast<long>(B.size());

        /* Conditions: exact principal part and constant term on the plus
           exponents in [dMin, 0], vanishing on 2,3 mod 4 exponents up to
           the working bound. */
        std::vector<std::vector<Rational>> rows;
        for (long mm = dMin; mm <= bound; ++mm) {
            bool plus = plus_supported(mm);
            if (plus && mm > 0) continue;
            std::vector<Rational> row(static_cast<size_t>(ncols + static_cast<long>(ds.size())), Rational(0));
            for (long k = 0; k < ncols; ++k) {
                QuadNum v = B[static_cast<size_t>(k)].coeff(rat(mm));
                row[static_cast<size_t>(k)] = v.a;
            }
            if (plus)
                for (size_t s = 0; s < ds.size(); ++s)
                    if (ds[s] == mm) row[static_cast<size_t>(ncols) + s] = Rational(1);
            rows.push_back(std::move(row));
        }

        LinSolve sol = solve_exact(std::move(rows), ncols);
        bool ok = sol.status == 0;

        std::vector<PlusForm> out;
        if (ok) {
            for (size_t s = 0; s < ds.size(); ++s) {
                QSeries f = QSeries::zero();
                for (long k = 0; k < ncols; ++k)
                    f = f + qs_scal(QuadNum(sol.x[static_cast<size_t>(k)][s]), B[static_cast<size_t>(k)]);
                // full-expansion support check, not only at the imposed rows
                for (const auto& [key, v] : f.c) {
                    if (!plus_supported(key)) ok = false;
                    if (key <= 0 && key != ds[s]) ok = false;
                }
                if (f.coeff(rat(ds[s])) != QuadNum(rat(1))) ok = false;
                if (!ok) break;
                out.push_back({ds[s], qs_truncate(f, prec)});
            }
        }
        if (ok) return out;
        if (attempt >= 3)
            throw std::runtime_error("plus_space_basis: support conditions do not determine a unique solution");
    }
}

QSeries plus_form(long d, const Rational& prec) {
    Rational work = prec > rat(-d + 21) ? prec : rat(-d + 21);
    for (const PlusForm& pf : plus_space_basis(d, work))
        if (pf.d == d) return qs_truncate(pf.series, prec);
    throw std::runtime_error("plus_form: basis did not contain the requested form");
}

MockData mock_series(const Rational& prec) {
    MockData out;
    Rational P = prec;

    QSeries omega = qs_truncate(QSeries::zero(), P);
    QSeries inv_poch = qs_truncate(QSeries::constant(QuadNum(rat(1))), P);
    for (long n = 0; rat(2 * n * n + 2 * n) < P; ++n) {
        QSeries g = geometric_inverse(2 * n + 1, 1, P);
        inv_poch = inv_poch * g * g;
        omega = omega + qs_shift(inv_poch, rat(2 * n * n + 2 * n));
    }
    out.omega = qs_truncate(omega, P);

    QSeries f = qs_truncate(QSeries::constant(QuadNum(rat(1))), P);
    QSeries inv_f = qs_truncate(QSeries::constant(QuadNum(rat(1))), P);
    for (long n = 1; rat(n * n) < P; ++n) {
        QSeries g = geometric_inverse(n, -1, P);
        inv_f = inv_f * g * g;
        f = f + qs_shift(inv_f, rat(n * n));
    }
    out.f = f;

    // a(n) series: -2 q^(1/3) (omega(q^(1/2)) + omega(-q^(1/2)))
    QSeries half = out.omega;
    half.den *= 2;  // substitute q -> q^(1/2)
    QSeries half_neg = half;
    for (auto& [key, v] : half_neg.c)
        if (key % 2 != 0) v = -v;
    out.a = qs_scal(QuadNum(rat(-2)), qs_shift(half + half_neg, rat(1, 3)));
    return out;
}

}  // namespace borch
