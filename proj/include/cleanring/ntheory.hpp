#pragma once

#include <cstdint>
#include <vector>

namespace cleanring {

using Int = std::int64_t;

/// Prime-power decomposition of a positive integer.
/// Primes are strictly increasing, exponents >= 1, and the product of
/// prime^exponent recovers n. The factorization of 1 has no factors.
struct Factorization {
    Int n = 1;
    std::vector<std::pair<Int, int>> factors;
};

/// Trial division up to sqrt(n). Deterministic; rejects n <= 0.
Factorization factorize(Int n);

/// Divisors of n in increasing order.
std::vector<Int> divisors(Int n);

bool is_prime(Int n);

/// a^e mod m without overflow (m > 0, e >= 0).
Int pow_mod(Int a, Int e, Int m);

/// a^e in plain integers; throws std::overflow_error if it leaves Int range.
Int pow_checked(Int a, int e);

Int euler_phi(Int n);

/// 0 if n is not squarefree, otherwise (-1)^(number of prime factors).
int moebius(Int n);

/// Least k >= 1 with a^k = 1 (mod n). Requires gcd(a, n) = 1; searches the
/// divisors of phi(n) in increasing order.
Int mult_order(Int a, Int n);

bool is_primitive_root(Int a, Int n);

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(Int a, Int p);

/// 1 if r = 1, else 2. Rejects r = 0.
int epsilon(Int r);

}  // namespace cleanring
