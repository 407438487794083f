#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "borch/lfun.hpp"
#include "borch/numthy.hpp"

using namespace borch;

namespace {

const EllipticCurve kCurve = {0, 10, 0, -20, 8, 37};

// Point count straight from the long Weierstrass equation, no shortcuts.
long long brute_ap(const EllipticCurve& E, long long p) {
    long long affine = 0;
    for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y) {
            long long lhs = y * y + E.a1 * x * y + E.a3 * y;
            long long rhs = ((x + E.a2) * x + E.a4) * x + E.a6;
            if (mod_pos(lhs - rhs, p) == 0) ++affine;
        }
    return p - affine;
}

// Smooth locus of the reduction, point at infinity included.
long long smooth_count(const EllipticCurve& E, long long p) {
    long long total = 1;
    for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y) {
            long long f = y * y + E.a1 * x * y + E.a3 * y -
                          (((x + E.a2) * x + E.a4) * x + E.a6);
            if (mod_pos(f, p) != 0) continue;
            long long fx = E.a1 * y - (3 * x + 2 * E.a2) * x - E.a4;
            long long fy = 2 * y + E.a1 * x + E.a3;
            if (mod_pos(fx, p) == 0 && mod_pos(fy, p) == 0) continue;
            ++total;
        }
    return total;
}

// E1 by its power series around 0, nothing shared with the library routine.
double e1_series(double x) {
    double gamma = 0.57721566490153286060651209008240243;
    double s = -gamma - std::log(x);
    double pw = 1;
    for (int k = 1; k < 80; ++k) {
        pw *= -x / k;
        s -= pw / k;
    }
    return s;
}

// E1 by backward recurrence through the classical continued fraction.
double e1_fraction(double x) {
    double f = 0;
    for (int j = 80; j >= 1; --j) f = static_cast<double>(j) * j / (x + 2 * j + 1 - f);
    return std::exp(-x) / (x + 1 - f);
}

}  // namespace

TEST_CASE("named curve invariants and the minimal model") {
    CHECK(curve_c4(kCurve) == 2560);
    CHECK(curve_c6(kCurve) == -128512);
    CHECK(curve_disc(kCurve) == 151552);
    CHECK(curve_disc(kCurve) == 4096 * 37);

    EllipticCurve m = minimal_model(kCurve);
    CHECK(m.a1 == 0);
    CHECK(m.a2 == 1);
    CHECK(m.a3 == 1);
    CHECK(m.a4 == -3);
    CHECK(m.a6 == 1);
    CHECK(m.conductor == 37);
    CHECK(curve_disc(m) == 37);

    // (c4, c6) only change by the scaling factor, so the j-line is untouched
    CHECK(curve_c4(kCurve) == 16 * curve_c4(m));
    CHECK(curve_c6(kCurve) == 64 * curve_c6(m));
}

TEST_CASE("minimal model round trip and rejections") {
    // blow the minimal curve up by u = 3 and ask for it back
    EllipticCurve big = {0, 9, 27, -243, 729, 37};
    EllipticCurve m = minimal_model(big);
    CHECK(m.a1 == 0);
    CHECK(m.a2 == 1);
    CHECK(m.a3 == 1);
    CHECK(m.a4 == -3);
    CHECK(m.a6 == 1);

    // an already minimal curve passes through unchanged
    EllipticCurve cube = {0, 0, 0, 0, 1, 36};
    EllipticCurve mc = minimal_model(cube);
    CHECK(mc.a1 == 0);
    CHECK(mc.a2 == 0);
    CHECK(mc.a3 == 0);
    CHECK(mc.a4 == 0);
    CHECK(mc.a6 == 1);

    CHECK_THROWS_AS(minimal_model({0, 0, 0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("trace of Frobenius against brute point counts") {
    EllipticCurve m = minimal_model(kCurve);
    for (long long p = 2; p <= 50; ++p) {
        if (!is_prime_ll(p) || p == 37) continue;
        CHECK(curve_ap(kCurve, p) == brute_ap(m, p));
    }

    CHECK(curve_ap(kCurve, 2) == 0);
    CHECK(curve_ap(kCurve, 3) == 1);
    CHECK(curve_ap(kCurve, 5) == 0);

    CHECK_THROWS_AS(curve_ap(kCurve, 6), std::invalid_argument);
    CHECK_THROWS_AS(curve_ap(kCurve, 1), std::invalid_argument);
}

TEST_CASE("reduction at the conductor prime is split multiplicative") {
    CHECK(curve_ap(kCurve, 37) == 1);
    // split means the smooth locus has p - 1 points
    CHECK(smooth_count(minimal_model(kCurve), 37) == 36);
}

TEST_CASE("multiplicative reduction at two, both tangent splittings") {
    // y^2 + xy = x^3 + 4x + 4 reduces to y^2 + xy = x^3, a node at the
    // origin with tangent cone y(y + x): split, so a_2 = +1
    EllipticCurve split = {1, 0, 0, 4, 4, 4922};
    CHECK(curve_disc(split) == -9844);
    CHECK(curve_ap(split, 2) == 1);

    // y^2 + xy = x^3 + x^2 + 4x + 4 has tangent cone y^2 + xy + x^2,
    // irreducible over F_2: nonsplit, so a_2 = -1
    EllipticCurve nonsplit = {1, 1, 0, 4, 4, 2674};
    CHECK(curve_disc(nonsplit) == -5348);
    CHECK(curve_ap(nonsplit, 2) == -1);
}

TEST_CASE("additive reduction contributes nothing") {
    EllipticCurve cube = {0, 0, 0, 0, 1, 36};
    CHECK(curve_ap(cube, 2) == 0);
    CHECK(curve_ap(cube, 3) == 0);
    CHECK(curve_ap(cube, 5) == brute_ap(cube, 5));
    CHECK(curve_ap(cube, 7) == -4);
}

TEST_CASE("Hasse bound over an interval of good primes") {
    for (long long p = 2; p <= 1000; ++p) {
        if (!is_prime_ll(p)) continue;
        long long ap = curve_ap(kCurve, p);
        if (p == 37) {
            CHECK(std::llabs(ap) == 1);
            continue;
        }
        CHECK(static_cast<double>(ap) * ap <= 4.0 * p);
    }
}

TEST_CASE("newform coefficients: recursion, multiplicativity, sign") {
    NewformCoeffs G = newform_an(kCurve, 200);
    CHECK(G.N == 37);
    CHECK(G.sign == 1);
    CHECK(G.a[1] == 1);
    CHECK(G.a[2] == 0);
    CHECK(G.a[3] == 1);
    CHECK(G.a[4] == G.a[2] * G.a[2] - 2);
    CHECK(G.a[6] == G.a[2] * G.a[3]);
    CHECK(G.a[9] == G.a[3] * G.a[3] - 3);
    CHECK(G.a[37] == 1);
    CHECK(G.a[74] == G.a[2] * G.a[37]);

    for (long long m = 2; m <= 200; ++m)
        for (long long n = 2; m * n <= 200; ++n) {
            if (gcd_ll(m, n) != 1) continue;
            CHECK(G.a[m * n] == G.a[m] * G.a[n]);
        }

    // prime power ladder at a good prime
    for (long long q = 9; q <= 200; q *= 3)
        CHECK(G.a[q] == G.a[3] * G.a[q / 3] - 3 * G.a[q / 9]);
    // and at the bad one the ladder is geometric
    NewformCoeffs H = newform_an(kCurve, 1400);
    CHECK(H.a[37 * 37] == H.a[37] * H.a[37]);

    CHECK_THROWS_AS(newform_an(kCurve, 0), std::invalid_argument);
    CHECK_THROWS_AS(newform_an({0, 10, 0, -20, 8, 0}, 10), std::invalid_argument);
}

TEST_CASE("twist signs of the functional equation") {
    CHECK(twist_sign(1, 37, 1) == 1);
    CHECK(twist_sign(-1, 37, 1) == -1);
    CHECK(twist_sign(1, 37, -3) == -1);
    CHECK(twist_sign(-1, 37, -3) == 1);
    CHECK(twist_sign(1, 37, -4) == -1);
    CHECK(twist_sign(1, 37, 5) == -1);

    CHECK_THROWS_AS(twist_sign(1, 37, -148), std::invalid_argument);
    CHECK_THROWS_AS(twist_sign(1, 37, 9), std::invalid_argument);
    CHECK_THROWS_AS(twist_sign(2, 37, -3), std::invalid_argument);
}

TEST_CASE("exponential integral agrees with two unrelated evaluations") {
    for (double x : {0.05, 0.3, 0.5, 0.9, 1.0}) {
        CHECK(std::fabs(expint_e1(x) - e1_series(x)) < 1e-12);
    }
    for (double x : {1.0, 2.0, 5.0, 12.0, 30.0}) {
        CHECK(std::fabs(expint_e1(x) - e1_fraction(x)) < 1e-12 * std::exp(-x));
    }
    CHECK(std::fabs(expint_e1(1.0) - 0.21938393439552028) < 1e-13);
    CHECK_THROWS_AS(expint_e1(0.0), std::invalid_argument);
    CHECK_THROWS_AS(expint_e1(-2.0), std::invalid_argument);
}

TEST_CASE("term counts scale with the twist and the tolerance") {
    long long small = lvalue_terms(37, -3, 1e-7);
    long long large = lvalue_terms(37, -824, 1e-7);
    CHECK(small < 200);
    CHECK(large > 5000);
    CHECK(large < 30000);
    CHECK(lvalue_terms(37, -3, 1e-9) > small);
    CHECK_THROWS_AS(lvalue_terms(37, -3, 0.0), std::invalid_argument);
}

TEST_CASE("central value and derivative rows") {
    NewformCoeffs G = newform_an(kCurve, lvalue_terms(37, -139, 1e-7));

    CHECK(l_central(G, 1, 1e-7) > 0.1);

    CHECK(std::fabs(l_derivative(G, -3, 1e-7) - 1.47929949207700) < 1e-5);
    CHECK(std::fabs(l_derivative(G, -4, 1e-7) - 1.81299789721820) < 1e-5);
    CHECK(std::fabs(l_derivative(G, -7, 1e-7) - 2.11071898017914) < 1e-5);
    CHECK(std::fabs(l_derivative(G, -11, 1e-7) - 3.65679089534028) < 1e-5);
    CHECK(std::fabs(l_derivative(G, -139, 1e-7)) < 1e-6);

    // wrong parity for the chosen weight of derivative
    CHECK_THROWS_AS(l_derivative(G, 1, 1e-7), std::invalid_argument);
    CHECK_THROWS_AS(l_central(G, -3, 1e-7), std::invalid_argument);

    NewformCoeffs stub = G;
    stub.a.resize(11);
    CHECK_THROWS_AS(l_derivative(stub, -3, 1e-7), std::invalid_argument);
}
