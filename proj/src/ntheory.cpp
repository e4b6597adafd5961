#include "cleanring/ntheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cleanring {

Factorization factorize(Int n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    Int m = n;
    for (Int q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
        if (m % q) continue;
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        f.factors.emplace_back(q, e);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

std::vector<Int> divisors(Int n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<Int> ds;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        ds.push_back(i);
        if (i != n / i) ds.push_back(n / i);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

Int pow_mod(Int a, Int e, Int m) {
    if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    a %= m;
    if (a < 0) a += m;
    Int out = 1 % m;
    while (e > 0) {
        if (e & 1) out = Int(__int128(out) * a % m);
        a = Int(__int128(a) * a % m);
        e >>= 1;
    }
    return out;
}

Int pow_checked(Int a, int e) {
    Int out = 1;
    for (int i = 0; i < e; ++i) {
        if (a != 0 && out > std::numeric_limits<Int>::max() / a)
            throw std::overflow_error("pow_checked: result exceeds 64-bit range");
        out *= a;
    }
    return out;
}

Int euler_phi(Int n) {
    Factorization f = factorize(n);
    Int phi = 1;
    for (auto [q, e] : f.factors) phi *= pow_checked(q, e - 1) * (q - 1);
    return phi;
}

int moebius(Int n) {
    Factorization f = factorize(n);
    for (auto [q, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

Int mult_order(Int a, Int n) {
    if (n <= 0) throw std::invalid_argument("mult_order: n must be positive");
    Int r = a % n;
    if (r < 0) r += n;
    if (std::gcd(r, n) != 1) throw std::invalid_argument("mult_order: gcd(a, n) != 1");
    if (n == 1) return 1;
    for (Int k : divisors(euler_phi(n)))
        if (pow_mod(r, k, n) == 1) return k;
    throw std::logic_error("mult_order: no divisor of phi(n) works");
}

bool is_primitive_root(Int a, Int n) {
    return mult_order(a, n) == euler_phi(n);
}

int legendre(Int a, Int p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int epsilon(Int r) {
    if (r <= 0) throw std::invalid_argument("epsilon: r must be positive");
    return r == 1 ? 1 : 2;
}

}  // namespace cleanring
