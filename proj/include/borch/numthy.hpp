#pragma once

#include <cstdint>
#include <vector>

namespace borch {

// Kronecker symbol (a|n), fully multiplicative in n, with
// (a|2) = 0, 1, -1 for a even, a = ±1 (8), a = ±3 (8),
// (a|-1) = sign(a) for a != 0, and (a|0) = 1 iff a = 1.
int kronecker(long long a, long long n);

long long gcd_ll(long long a, long long b);

// d = f^2 * s with s squarefree; returns s and stores f.
long long squarefree_part(long long d, long long& f);

bool is_discriminant(long long d);              // d = 0, 1 mod 4
bool is_fundamental_discriminant(long long d);  // includes d = 1

// true iff x^2 = v (mod m) has a solution, m > 0.
bool is_square_mod(long long v, long long m);

bool is_prime_ll(long long p);
std::vector<long long> divisors(long long n);  // positive divisors of |n|

// g = gcd(a,b) = a*x + b*y.
long long ext_gcd(long long a, long long b, long long& x, long long& y);

// inverse of a mod m (m > 0, gcd(a, m) = 1).
long long mod_inverse(long long a, long long m);

long long mod_pos(long long a, long long m);  // representative in [0, m)

}  // namespace borch
