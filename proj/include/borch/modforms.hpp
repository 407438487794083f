#pragma once

#include <utility>
#include <vector>

#include "borch/qseries.hpp"

namespace borch {

// eta(m z) = q^(m/24) prod(1 - q^(mn)), pentagonal sparse form; den | 24.
QSeries eta_q(long m, const Rational& prec);

// prod over (m, e) of eta(m z)^e.
QSeries eta_quotient(const std::vector<std::pair<long, long>>& factors, const Rational& prec);

QSeries eisenstein4(const Rational& prec);  // 1 + 240 sum sigma_3(n) q^n
QSeries eisenstein6(const Rational& prec);  // 1 - 504 sum sigma_5(n) q^n
QSeries j_series(const Rational& prec);     // E4^3 / eta^24
QSeries theta_series(const Rational& prec);  // 1 + 2 sum q^(n^2)

struct Level6Forms {
    QSeries j6star;  // q^-1 + 79q + 352q^2 + ..., Hauptmodul, no constant term
    QSeries delta6;  // q - 2q^2 - 3q^3 + ..., weight-4 cusp form
};
Level6Forms level6_forms(const Rational& prec);

/* Weight-1/2 basis form f_d = q^d + O(q) with Fourier support on
   n = 0, 1 (mod 4); d < 0, d = 0, 1 (mod 4). */
struct PlusForm {
    long d = 0;
    QSeries series;
};

// All f_d for dMin <= d < 0, ascending d; requires prec > |dMin| + 20.
std::vector<PlusForm> plus_space_basis(long dMin, const Rational& prec);
QSeries plus_form(long d, const Rational& prec);

struct MockData {
    QSeries omega;  // third-order omega(q), integer exponents
    QSeries f;      // third-order f(q), integer exponents
    QSeries a;      // -2 q^(1/3) (omega(q^(1/2)) + omega(-q^(1/2))), exponents in Z + 1/3
};
MockData mock_series(const Rational& prec);

}  // namespace borch
