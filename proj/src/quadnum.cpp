#include "borch/quadnum.hpp"

#include <stdexcept>

#include "borch/numthy.hpp"

namespace borch {

QuadNum::QuadNum(long long fieldD, Rational ra, Rational rb) : D(fieldD), a(std::move(ra)), b(std::move(rb)) {
    if (b == 0) {
        D = 0;
        return;
    }
    if (D == 0) throw std::invalid_argument("QuadNum: sqrt(0) component");
    long long f;
    if (squarefree_part(D, f) != D) throw std::invalid_argument("QuadNum: field tag must be squarefree");
    if (D == 1) {  // sqrt(1) = 1 folds into the rational part
        a += b;
        b = 0;
        D = 0;
    }
}

QuadNum QuadNum::conj() const {
    QuadNum r = *this;
    r.b = -r.b;
    return r;
}

Rational QuadNum::norm() const { return a * a - rat(static_cast<long>(D)) * b * b; }

QuadNum quad_sqrt_of(long long n) {
    if (n == 0) throw std::invalid_argument("quad_sqrt_of: zero");
    long long f;
    long long s = squarefree_part(n, f);
    return QuadNum(s, rat(0), rat(f));
}

namespace {

// Common field tag, rejecting genuine cross-field mixes.
long long joint_field(const QuadNum& x, const QuadNum& y) {
    if (x.D == 0) return y.D;
    if (y.D == 0 || x.D == y.D) return x.D;
    throw std::invalid_argument("QuadNum: mixed quadratic fields");
}

QuadNum make(long long D, Rational a, Rational b) {
    if (b == 0) return QuadNum(std::move(a));
    return QuadNum(D, std::move(a), std::move(b));
}

}  // namespace

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    long long D = joint_field(x, y);
    return make(D, x.a + y.a, x.b + y.b);
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
    long long D = joint_field(x, y);
    return make(D, x.a - y.a, x.b - y.b);
}

QuadNum operator-(const QuadNum& x) { return make(x.D, -x.a, -x.b); }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    long long D = joint_field(x, y);
    return make(D, x.a * y.a + rat(static_cast<long>(D)) * x.b * y.b, x.a * y.b + x.b * y.a);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
    if (y.is_zero()) throw std::invalid_argument("QuadNum: division by zero");
    if (y.is_rational()) return make(x.D, x.a / y.a, x.b / y.a);
    long long D = joint_field(x, y);
    Rational n = y.norm();  // nonzero: D squarefree != 1, so a = ±b*sqrt(D) only at 0
    QuadNum num = x * y.conj();
    return make(D, num.a / n, num.b / n);
}

bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.D == y.D && x.a == y.a && x.b == y.b;
}

std::string quad_str(const QuadNum& x) {
    if (x.b == 0) return rat_str(x.a);
    std::string root = "sqrt(" + std::to_string(x.D) + ")";
    std::string bs = rat_str(x.b < 0 ? Rational(-x.b) : x.b);
    std::string tail = (bs == "1" ? root : bs + "*" + root);
    if (x.a == 0) return (x.b < 0 ? "-" : "") + tail;
    return rat_str(x.a) + (x.b < 0 ? " - " : " + ") + tail;
}

}  // namespace borch
