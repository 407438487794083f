#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "borch/heegner.hpp"

namespace borch {

/* Dedekind eta anywhere in the upper half plane.  The point is walked
   into the fundamental domain with eta(tau+1) = e(1/24) eta(tau) and
   eta(-1/tau) = sqrt(-i tau) eta(tau), the q-product is evaluated where
   it converges fast, and the accumulated multiplier is applied. */
std::complex<double> eta_numeric(std::complex<double> tau);

// CM point of a form, as a floating-point number.
std::complex<double> cm_complex(const CMPoint& pt);

// eta(z)^2 / eta(37z)^2 - (3 + sqrt(-139))/2, whose divisor on X_0(37)
// picks out the positive-a level-37 Heegner classes of discriminant -139.
std::complex<double> r37_eval(std::complex<double> tau);

using PointExpr = std::function<std::complex<double>(std::complex<double>)>;

struct ResidueRow {
    BQF rep;
    std::complex<double> value;
};

struct ResidueReport {
    std::vector<ResidueRow> rows;
    double max_abs = 0;
};

// Evaluate an expression at the CM point of every listed class.
ResidueReport heegner_residue_check(const std::vector<HeegnerClass>& points,
                                    const PointExpr& expr);

// Same, with the classes enumerated from (N, D, r).
ResidueReport heegner_residue_check(long long N, long long D, long long r,
                                    const PointExpr& expr);

}  // namespace borch
