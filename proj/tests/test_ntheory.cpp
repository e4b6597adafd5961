#include <stdexcept>
#include <numeric>

#include "cleanring/ntheory.hpp"
#include "doctest.h"

using namespace cleanring;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(12).factors == std::vector<std::pair<Int, int>>{{2, 2}, {3, 1}});
    CHECK(factorize(97).factors == std::vector<std::pair<Int, int>>{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n with increasing primes") {
    for (Int n = 1; n <= 2000; ++n) {
        Factorization f = factorize(n);
        Int prod = 1;
        Int last = 1;
        for (auto [q, e] : f.factors) {
            CHECK(q > last);
            CHECK(e >= 1);
            CHECK(is_prime(q));
            last = q;
            prod *= pow_checked(q, e);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("euler_phi examples and brute force") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    for (Int n = 1; n <= 10000; ++n) {
        Int count = 0;
        for (Int a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++count;
        REQUIRE(euler_phi(n) == count);
    }
}

TEST_CASE("moebius examples and sum over divisors") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    for (Int n = 1; n <= 10000; ++n) {
        Int s = 0;
        for (Int d : divisors(n)) s += moebius(d);
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("mult_order examples") {
    CHECK(mult_order(7, 1) == 1);
    CHECK(mult_order(3, 11) == 5);
    CHECK(mult_order(3, 16) == 4);
    CHECK_THROWS_AS(mult_order(6, 9), std::invalid_argument);
}

TEST_CASE("mult_order is the least annihilating exponent and divides phi") {
    for (Int n = 1; n <= 2000; ++n) {
        for (Int a = 1; a <= std::min<Int>(n + 1, 30); ++a) {
            if (std::gcd(a, n) != 1) continue;
            Int k = mult_order(a, n);
            REQUIRE(pow_mod(a, k, n) == 1 % n);
            REQUIRE(euler_phi(n) % k == 0);
            for (Int d : divisors(k))
                if (d != k) REQUIRE(pow_mod(a, d, n) != 1 % n);
        }
    }
}

TEST_CASE("lcm of orders equals order at lcm of moduli") {
    for (Int a = 2; a <= 200; a += 13) {
        for (Int n = 1; n <= 200; n += 3) {
            for (Int n1 = 1; n1 <= 200; n1 += 7) {
                if (std::gcd(a, n) != 1 || std::gcd(a, n1) != 1) continue;
                Int lhs = std::lcm(mult_order(a, n), mult_order(a, n1));
                CHECK(lhs == mult_order(a, std::lcm(n, n1)));
            }
        }
    }
}

TEST_CASE("order of a power") {
    for (Int n = 1; n <= 500; n += 11) {
        for (Int a = 2; a <= 25; ++a) {
            if (std::gcd(a, n) != 1) continue;
            Int k = mult_order(a, n);
            for (Int f = 1; f <= 8; ++f) {
                Int af = pow_mod(a, f, n);
                CHECK(mult_order(af, n) == k / std::gcd(f, k));
            }
        }
    }
}

TEST_CASE("primitive root examples") {
    CHECK(is_primitive_root(2, 5));
    CHECK_FALSE(is_primitive_root(5, 4));
    CHECK(is_primitive_root(10, 1));
}

TEST_CASE("legendre examples and Euler criterion") {
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(5, 11) == 1);
    CHECK(legendre(-4, 3) == -1);
    CHECK(legendre(21, 7) == 0);
    CHECK_THROWS_AS(legendre(3, 15), std::invalid_argument);
    CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);

    for (Int p : {3, 5, 7, 11, 13, 31, 97}) {
        Int residues = 0;
        for (Int a = 1; a < p; ++a) {
            Int ls = legendre(a, p);
            Int euler = pow_mod(a, (p - 1) / 2, p);
            CHECK((ls == 1 ? 1 : p - 1) == euler);
            if (ls == 1) ++residues;
            for (Int b = 1; b < p; ++b)
                REQUIRE(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
        }
        CHECK(residues == (p - 1) / 2);
    }
}

TEST_CASE("legendre via quadratic reciprocity spot check") {
    auto reciprocity = [](Int q, Int p) {
        int sign = (q % 4 == 3 && p % 4 == 3) ? -1 : 1;
        return sign * legendre(p, q);
    };
    for (Int p : {3, 7, 11, 19, 23}) {
        for (Int q : {5, 13, 17, 29, 31, 37}) {
            if (p == q) continue;
            CHECK(legendre(q, p) == reciprocity(q, p));
        }
    }
}

TEST_CASE("epsilon") {
    CHECK(epsilon(1) == 1);
    CHECK(epsilon(2) == 2);
    CHECK(epsilon(7) == 2);
    CHECK_THROWS_AS(epsilon(0), std::invalid_argument);
}
