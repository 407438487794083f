#include "borch/numthy.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace borch {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

int kronecker(long long a, long long n) {
    if (n == 0) return a == 1 ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        long long a8 = mod_pos(a, 8);
        int two = (a8 == 1 || a8 == 7) ? 1 : -1;
        while (n % 2 == 0) {
            n /= 2;
            result *= two;
        }
    }
    // Jacobi on odd n > 0 via reciprocity.
    a = mod_pos(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

long long squarefree_part(long long d, long long& f) {
    if (d == 0) throw std::invalid_argument("squarefree_part: zero");
    long long s = d < 0 ? -1 : 1;
    long long m = d < 0 ? -d : d;
    f = 1;
    for (long long p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) {
            m /= p * p;
            f *= p;
        }
    }
    return s * m;
}

bool is_discriminant(long long d) {
    long long r = mod_pos(d, 4);
    return r == 0 || r == 1;
}

bool is_fundamental_discriminant(long long d) {
    if (d == 1) return true;
    if (!is_discriminant(d) || d == 0) return false;
    long long f;
    long long s = squarefree_part(d, f);
    if (mod_pos(s, 4) == 1) return d == s;
    return d == 4 * s;
}

bool is_square_mod(long long v, long long m) {
    if (m <= 0) throw std::invalid_argument("is_square_mod: modulus <= 0");
    long long vm = mod_pos(v, m);
    for (long long x = 0; 2 * x <= m; ++x)
        if ((x * x) % m == vm) return true;
    return false;
}

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (long long q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

std::vector<long long> divisors(long long n) {
    if (n == 0) throw std::invalid_argument("divisors: zero");
    if (n < 0) n = -n;
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long mod_inverse(long long a, long long m) {
    long long x, y;
    long long g = ext_gcd(mod_pos(a, m), m, x, y);
    if (g != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return mod_pos(x, m);
}

}  // namespace borch
