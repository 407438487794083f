#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "borch/modforms.hpp"
#include "borch/numthy.hpp"

using namespace borch;

static QuadNum one() { return QuadNum(rat(1)); }

TEST_CASE("eta: pentagonal expansion against the literal product") {
    const long P = 120;
    QSeries eta = eta_q(1, rat(P));
    CHECK(eta.min_exp() == rat(1, 24));

    // 1, -1, -1, 0, 0, +1 at offsets 0..5 past the q^(1/24) prefactor
    long expected[6] = {1, -1, -1, 0, 0, 1};
    for (long n = 0; n < 6; ++n) CHECK(eta.coeff(rat(1, 24) + rat(n)) == QuadNum(rat(expected[n])));

    QSeries prod = QSeries::constant(one());
    for (long n = 1; n < P; ++n)
        prod = qs_truncate(prod * (QSeries::constant(one()) - QSeries::monomial(one(), rat(n))), rat(P));
    CHECK(qs_agree(eta, qs_shift(prod, rat(1, 24))));
}

TEST_CASE("eta rescaling matches direct construction") {
    QSeries e6 = qs_rescale(eta_q(1, rat(20)), 6);
    CHECK(e6.min_exp() == rat(1, 4));
    CHECK(qs_agree(e6, eta_q(6, rat(120))));
}

TEST_CASE("discriminant function as eta power and as Eisenstein combination") {
    const Rational P = rat(40);
    QSeries delta = qs_pow(eta_q(1, P), 24);
    CHECK(delta.min_exp() == rat(1));
    CHECK(delta.coeff(1) == one());
    CHECK(delta.coeff(2) == QuadNum(rat(-24)));
    CHECK(delta.coeff(3) == QuadNum(rat(252)));

    QSeries e4 = eisenstein4(P);
    QSeries e6 = eisenstein6(P);
    CHECK(e4.coeff(1) == QuadNum(rat(240)));
    CHECK(e6.coeff(1) == QuadNum(rat(-504)));
    QSeries lhs = qs_scal(QuadNum(rat(1, 1728)), e4 * e4 * e4 - e6 * e6);
    CHECK(qs_agree(lhs, delta));
}

TEST_CASE("j-invariant expansion") {
    QSeries j = j_series(rat(3));
    CHECK(j.coeff(-1) == one());
    CHECK(j.coeff(0) == QuadNum(rat(744)));
    CHECK(j.coeff(1) == QuadNum(rat(196884)));
    CHECK(j.coeff(2) == QuadNum(rat(21493760)));
}

TEST_CASE("theta series support") {
    QSeries th = theta_series(rat(30));
    CHECK(th.coeff(0) == one());
    CHECK(th.coeff(1) == QuadNum(rat(2)));
    CHECK(th.coeff(2) == QuadNum(rat(0)));
    CHECK(th.coeff(4) == QuadNum(rat(2)));
    CHECK(th.coeff(9) == QuadNum(rat(2)));
    for (const auto& [k, v] : th.c) CHECK((mod_pos(k, 4) == 0 || mod_pos(k, 4) == 1));
}

TEST_CASE("level 6 Hauptmodul and cusp form expansions") {
    Level6Forms l6 = level6_forms(rat(9));
    CHECK(l6.j6star.coeff(-1) == one());
    CHECK(l6.j6star.coeff(0) == QuadNum(rat(0)));
    CHECK(l6.j6star.coeff(1) == QuadNum(rat(79)));
    CHECK(l6.j6star.coeff(2) == QuadNum(rat(352)));
    CHECK(l6.j6star.coeff(3) == QuadNum(rat(1431)));

    long d6[9] = {0, 1, -2, -3, 4, 6, 6, -16, -8};
    for (long n = 1; n < 9; ++n) CHECK(l6.delta6.coeff(n) == QuadNum(rat(d6[n])));
}

TEST_CASE("plus space: published expansion of the d = -3 form") {
    QSeries f = plus_form(-3, rat(25));
    CHECK(f.min_exp() == rat(-3));
    CHECK(f.coeff(-3) == one());
    CHECK(f.coeff(0) == QuadNum(rat(0)));
    CHECK(f.coeff(1) == QuadNum(rat(-248)));
    CHECK(f.coeff(2) == QuadNum(rat(0)));
    CHECK(f.coeff(3) == QuadNum(rat(0)));
    CHECK(f.coeff(4) == QuadNum(rat(26752)));
    CHECK(f.coeff(5) == QuadNum(rat(-85995)));
    CHECK(f.coeff(8) == QuadNum(rat(1707264)));
    CHECK(f.coeff(9) == QuadNum(rat(-4096248)));
}

TEST_CASE("plus space: basis through d = -8, support and integrality") {
    std::vector<PlusForm> basis = plus_space_basis(-8, rat(60));
    REQUIRE(basis.size() == 4);
    long ds[4] = {-8, -7, -4, -3};
    for (size_t i = 0; i < 4; ++i) {
        CHECK(basis[i].d == ds[i]);
        const QSeries& f = basis[i].series;
        CHECK(f.coeff(rat(ds[i])) == one());
        for (const auto& [k, v] : f.c) {
            CHECK((mod_pos(k, 4) == 0 || mod_pos(k, 4) == 1));
            if (k <= 0) CHECK(k == ds[i]);
            CHECK(is_integer(v.a));
            CHECK(v.b == 0);
        }
    }
}

TEST_CASE("plus space input validation") {
    CHECK_THROWS_AS(plus_space_basis(-2, rat(60)), std::invalid_argument);
    CHECK_THROWS_AS(plus_space_basis(-3, rat(20)), std::invalid_argument);
    CHECK_THROWS_AS(plus_space_basis(4, rat(60)), std::invalid_argument);
}

// dense integer polynomial helpers for the independent mock-theta oracle
static std::vector<long long> poly_mul(const std::vector<long long>& x, const std::vector<long long>& y, size_t P) {
    std::vector<long long> r(P, 0);
    for (size_t i = 0; i < x.size() && i < P; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size() && i + j < P; ++j) r[i + j] += x[i] * y[j];
    }
    return r;
}

static std::vector<long long> poly_inv(const std::vector<long long>& d, size_t P) {
    // constant term 1 assumed
    std::vector<long long> g(P, 0);
    g[0] = 1;
    for (size_t e = 1; e < P; ++e) {
        long long acc = 0;
        for (size_t j = 1; j <= e && j < d.size(); ++j) acc -= d[j] * g[e - j];
        g[e] = acc;
    }
    return g;
}

TEST_CASE("mock theta f(q) against direct convolution") {
    const size_t P = 60;
    MockData mock = mock_series(rat(static_cast<long>(P)));

    std::vector<long long> acc(P, 0);
    acc[0] = 1;
    std::vector<long long> den{1};
    for (size_t n = 1; n * n < P; ++n) {
        std::vector<long long> factor(2 * n + 1, 0);
        factor[0] = 1;
        factor[n] = 2;
        factor[2 * n] = 1;  // (1 + q^n)^2
        den = poly_mul(den, factor, P);
        std::vector<long long> inv = poly_inv(den, P);
        for (size_t e = 0; e + n * n < P; ++e) acc[e + n * n] += inv[e];
    }
    for (size_t n = 0; n < P; ++n) CHECK(mock.f.coeff(static_cast<long>(n)) == QuadNum(rat(static_cast<long>(acc[n]))));
}

TEST_CASE("mock theta omega positivity and the a(n) table") {
    MockData mock = mock_series(rat(280));
    CHECK(mock.omega.coeff(0) == one());
    for (long n = 0; n < 100; ++n) {
        QuadNum v = mock.omega.coeff(n);
        CHECK(v.b == 0);
        CHECK(is_integer(v.a));
        CHECK(v.a > 0);
    }

    CHECK(mock.a.coeff(rat(1, 3)) == QuadNum(rat(-4)));
    CHECK(mock.a.coeff(rat(4, 3)) == QuadNum(rat(-12)));
    CHECK(mock.a.coeff(rat(7, 3)) == QuadNum(rat(-24)));
    CHECK(mock.a.coeff(rat(10, 3)) == QuadNum(rat(-40)));
    CHECK(mock.a.coeff(rat(2, 3)) == QuadNum(rat(0)));
    CHECK(mock.a.coeff(rat(5, 3)) == QuadNum(rat(0)));
    for (const auto& [k, v] : mock.a.c) {
        Rational e = rat(k, mock.a.den) - rat(1, 3);
        CHECK(is_integer(e));
    }
}
