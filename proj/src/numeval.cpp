#include "borch/numeval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace borch {

namespace {

const double kPi = std::acos(-1.0);

// q^{1/24} prod (1 - q^n) at a point where |q| is already small
std::complex<double> q_product(std::complex<double> tau) {
    double mag = std::exp(-2 * kPi * tau.imag());
    std::complex<double> q = std::polar(mag, 2 * kPi * tau.real());
    std::complex<double> prod = 1;
    std::complex<double> qn = q;
    double qa = mag;
    while (qa > 1e-19) {
        prod *= 1.0 - qn;
        qn *= q;
        qa *= mag;
    }
    return std::polar(std::exp(-kPi * tau.imag() / 12), kPi * tau.real() / 12) * prod;
}

}  // namespace

std::complex<double> eta_numeric(std::complex<double> tau) {
    if (!(tau.imag() > 0))
        throw std::invalid_argument("eta: point must lie in the upper half plane");
    std::complex<double> factor = 1;
    for (;;) {
        long long n = std::llround(tau.real());
        if (n != 0) {
            tau -= static_cast<double>(n);
            factor *= std::polar(1.0, kPi * static_cast<double>(n % 24) / 12);
        }
        if (std::abs(tau) < 1 - 1e-12) {
            factor /= std::sqrt(std::complex<double>(0, -1) * tau);
            tau = -1.0 / tau;
        } else {
            break;
        }
    }
    return factor * q_product(tau);
}

std::complex<double> cm_complex(const CMPoint& pt) {
    double den = 2.0 * static_cast<double>(std::llabs(pt.a));
    double re = static_cast<double>(pt.a > 0 ? -pt.b : pt.b) / den;
    double im = std::sqrt(static_cast<double>(-pt.D)) / den;
    return {re, im};
}

std::complex<double> r37_eval(std::complex<double> tau) {
    std::complex<double> top = eta_numeric(tau);
    std::complex<double> bot = eta_numeric(37.0 * tau);
    return (top * top) / (bot * bot) - std::complex<double>(1.5, 0.5 * std::sqrt(139.0));
}

ResidueReport heegner_residue_check(const std::vector<HeegnerClass>& points,
                                    const PointExpr& expr) {
    ResidueReport report;
    for (const HeegnerClass& cls : points) {
        std::complex<double> value = expr(cm_complex(cls.point));
        report.rows.push_back({cls.rep, value});
        report.max_abs = std::max(report.max_abs, std::abs(value));
    }
    return report;
}

ResidueReport heegner_residue_check(long long N, long long D, long long r,
                                    const PointExpr& expr) {
    return heegner_residue_check(classes(N, D, r), expr);
}

}  // namespace borch
