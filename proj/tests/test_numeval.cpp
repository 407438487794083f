#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "borch/heegner.hpp"
#include "borch/numeval.hpp"

using namespace borch;
using cplx = std::complex<double>;

namespace {

const double kPi = std::acos(-1.0);

// plain product with a fixed generous term count, no reduction at all
cplx direct_eta(cplx tau) {
    cplx q = std::exp(cplx(0, 2 * kPi) * tau);
    cplx prod = 1, qn = 1;
    for (int n = 1; n <= 400; ++n) {
        qn *= q;
        prod *= 1.0 - qn;
    }
    return std::exp(cplx(0, kPi / 12) * tau) * prod;
}

cplx unit(double turns) { return std::polar(1.0, 2 * kPi * turns); }

struct Move {
    long long shift;  // translation amount; 0 marks an inversion
    bool invert;
};

// gamma as a left-to-right word of T^n and S moves plus a residual shift
std::vector<Move> word_of(long long a, long long b, long long c, long long d) {
    std::vector<Move> moves;
    while (c != 0) {
        long long n = std::llround(static_cast<double>(a) / static_cast<double>(c));
        moves.push_back({n, false});
        moves.push_back({0, true});
        long long x = a - n * c, y = b - n * d;
        a = c;
        b = d;
        c = -x;
        d = -y;
    }
    moves.push_back({b * d, false});
    return moves;
}

}  // namespace

TEST_CASE("eta at i matches the classical value and a raw product") {
    cplx v = eta_numeric(cplx(0, 1));
    CHECK(std::abs(v - 0.7682254223260566) < 1e-12);
    CHECK(std::abs(v - direct_eta(cplx(0, 1))) < 1e-12);
    CHECK(std::abs(v - std::tgamma(0.25) / (2 * std::pow(kPi, 0.75))) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-14);
}

TEST_CASE("translation and inversion laws") {
    cplx at2i = eta_numeric(cplx(0, 2));
    CHECK(std::abs(eta_numeric(cplx(1, 2)) - unit(1.0 / 24) * at2i) < 1e-12);
    CHECK(std::abs(eta_numeric(-1.0 / cplx(0, 2)) - std::sqrt(2.0) * at2i) < 1e-12);

    cplx tau(0.3, 0.8);
    CHECK(std::abs(eta_numeric(tau + 5.0) - unit(5.0 / 24) * eta_numeric(tau)) < 1e-12);
    cplx slaw = std::sqrt(cplx(0, -1) * tau) * eta_numeric(tau);
    CHECK(std::abs(eta_numeric(-1.0 / tau) - slaw) < 1e-12);

    // a point on the unit circle is already reduced enough
    cplx corner = std::exp(cplx(0, kPi / 3));
    CHECK(std::abs(eta_numeric(corner) - direct_eta(corner)) < 1e-10);

    CHECK_THROWS_AS(eta_numeric(cplx(0.5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(eta_numeric(cplx(0, -1)), std::invalid_argument);
}

TEST_CASE("fifty random points agree with the raw product") {
    std::mt19937 rng(8128);
    std::uniform_real_distribution<double> re(-3, 3), im(0.6, 3);
    for (int trial = 0; trial < 50; ++trial) {
        cplx tau(re(rng), im(rng));
        CHECK(std::abs(eta_numeric(tau) - direct_eta(tau)) < 1e-10);
    }
}

TEST_CASE("multiplier bookkeeping along random modular words") {
    std::mt19937 rng(496);
    std::uniform_int_distribution<long long> entry(-5, 5);
    const cplx tau(1.0 / 3, 0.2);
    int found = 0;
    while (found < 20) {
        long long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        if (a * d - b * c != 1) continue;
        ++found;

        // transport eta along the word, right factor first
        std::vector<Move> moves = word_of(a, b, c, d);
        cplx z = tau;
        cplx v = eta_numeric(tau);
        for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
            if (it->invert) {
                v *= std::sqrt(cplx(0, -1) * z);
                z = -1.0 / z;
            } else {
                z += static_cast<double>(it->shift);
                v *= unit(static_cast<double>(it->shift) / 24);
            }
        }

        cplx direct = (static_cast<double>(a) * tau + static_cast<double>(b)) /
                      (static_cast<double>(c) * tau + static_cast<double>(d));
        CHECK(std::abs(z - direct) < 1e-12);
        CHECK(std::abs(v / eta_numeric(z) - 1.0) < 1e-10);
    }
}

TEST_CASE("CM points as floating-point numbers") {
    cplx plus = cm_complex(heegner_point({6, 4, 1}));
    CHECK(std::abs(plus - cplx(-2.0 / 6, std::sqrt(2.0) / 6)) < 1e-15);
    cplx minus = cm_complex(heegner_point({-6, 4, -1}));
    CHECK(std::abs(minus - cplx(2.0 / 6, std::sqrt(2.0) / 6)) < 1e-15);
}

TEST_CASE("the level 37 function vanishes exactly at the positive classes") {
    for (const BQF& q : {BQF{37, 3, 1}, BQF{185, -71, 7}, BQF{185, 151, 31}}) {
        cplx alpha = cm_complex(heegner_point(q));
        CHECK(std::abs(r37_eval(alpha)) < 1e-8);
    }
    CHECK(std::abs(r37_eval(cplx(0, 2))) > 1.0);
}

TEST_CASE("residue report covers every class and flags the conjugates") {
    std::vector<HeegnerClass> cls = classes(37, -139, 3);
    ResidueReport with_r = heegner_residue_check(37, -139, 3, r37_eval);
    REQUIRE(with_r.rows.size() == cls.size());

    double root = std::sqrt(139.0);
    for (size_t i = 0; i < with_r.rows.size(); ++i) {
        CHECK(with_r.rows[i].rep == cls[i].rep);
        if (with_r.rows[i].rep.a > 0)
            CHECK(std::abs(with_r.rows[i].value) < 1e-8);
        else
            CHECK(std::abs(with_r.rows[i].value + cplx(0, root)) < 1e-6);
    }
    CHECK(with_r.max_abs > 11.0);
    CHECK(with_r.max_abs < 12.5);

    // the conjugate expression vanishes at the primed (negative a) classes
    PointExpr rprime = [root](cplx z) {
        cplx top = eta_numeric(z), bot = eta_numeric(37.0 * z);
        return (top * top) / (bot * bot) - cplx(1.5, -0.5 * root);
    };
    ResidueReport with_conj = heegner_residue_check(cls, rprime);
    for (const ResidueRow& row : with_conj.rows)
        if (row.rep.a < 0) CHECK(std::abs(row.value) < 1e-8);

    ResidueReport empty = heegner_residue_check(std::vector<HeegnerClass>{}, r37_eval);
    CHECK(empty.rows.empty());
    CHECK(empty.max_abs == 0);

    CHECK_THROWS_AS(heegner_residue_check(6, -8, 3, r37_eval), std::invalid_argument);
}
