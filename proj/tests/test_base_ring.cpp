#include <stdexcept>
#include <numeric>

#include "cleanring/base_ring.hpp"
#include "doctest.h"

using namespace cleanring;

TEST_CASE("discriminant examples") {
    CHECK(quadratic_discriminant(5) == 5);
    CHECK(quadratic_discriminant(-1) == -4);
    CHECK(quadratic_discriminant(2) == 8);
    CHECK(quadratic_discriminant(-3) == -3);  // -3 = 1 (mod 4)
    CHECK_THROWS_AS(quadratic_discriminant(0), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_discriminant(1), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_discriminant(12), std::invalid_argument);
}

TEST_CASE("coprime_split examples and postconditions") {
    auto [a1, a2] = coprime_split(7, 1);
    CHECK(a1 == 7);
    CHECK(a2 == 1);
    auto [b1, b2] = coprime_split(4, 5);
    CHECK(b1 == 4);
    CHECK(b2 == 1);
    auto [c1, c2] = coprime_split(12, 10);
    CHECK(c1 == 3);
    CHECK(c2 == 2);

    for (Int n = 1; n <= 500; ++n) {
        for (Int m : {1, 2, 3, 4, 6, 10, 12, 15, 30}) {
            auto [n1, npr] = coprime_split(n, m);
            REQUIRE(std::gcd(n1, m) == 1);
            REQUIRE(n % n1 == 0);
            for (auto [q, e] : factorize(n / n1).factors) REQUIRE(m % q == 0);
            REQUIRE(npr * m * n1 == std::lcm(Int(m), n));
            // maximality: every larger divisor of n shares a factor with m
            for (Int d : divisors(n))
                if (d > n1) REQUIRE(std::gcd(d, Int(m)) > 1);
        }
    }
}

TEST_CASE("residue_size examples") {
    CHECK(BaseRing::rational(7).residue_size() == 7);
    CHECK(BaseRing::cyclotomic(5, 3).residue_size() == 81);
    CHECK(BaseRing::quadratic(-1, 3).residue_size() == 9);
    CHECK(BaseRing::quadratic(-1, 5).residue_size() == 5);   // -4 is a square mod 5
    CHECK(BaseRing::quadratic(5, 5).residue_size() == 5);    // ramified
}

TEST_CASE("base ring constructors enforce preconditions") {
    CHECK_THROWS_AS(BaseRing::rational(6), std::invalid_argument);
    CHECK_THROWS_AS(BaseRing::cyclotomic(10, 5), std::invalid_argument);  // p | m
    CHECK_THROWS_AS(BaseRing::cyclotomic(5, 2), std::invalid_argument);   // p = 2
    CHECK_THROWS_AS(BaseRing::quadratic(12, 5), std::invalid_argument);   // not squarefree
    CHECK_THROWS_AS(BaseRing::quadratic(5, 2), std::invalid_argument);    // p = 2
    CHECK_NOTHROW(BaseRing::rational(2));
}

TEST_CASE("local_cyclotomic_degree examples") {
    CHECK(BaseRing::rational(5).local_cyclotomic_degree(12) == 4);
    CHECK(BaseRing::cyclotomic(3, 5).local_cyclotomic_degree(9) == 3);
    CHECK(BaseRing::quadratic(-1, 3).local_cyclotomic_degree(4) == 1);
}

TEST_CASE("cyclotomic degree consistency over m, d <= 200") {
    for (Int m = 1; m <= 200; ++m) {
        Int p = 0;
        for (Int q : {3, 5, 7, 11, 13})
            if (m % q != 0) {
                p = q;
                break;
            }
        if (!p) continue;
        BaseRing R = BaseRing::cyclotomic(m, p);
        for (Int d = 1; d <= 200; ++d)
            REQUIRE(R.local_cyclotomic_degree(d) * euler_phi(m) == euler_phi(std::lcm(m, d)));
    }
}

TEST_CASE("degree divides phi(d) for every base kind") {
    std::vector<BaseRing> bases = {BaseRing::rational(7),     BaseRing::cyclotomic(12, 7),
                                   BaseRing::cyclotomic(9, 5), BaseRing::quadratic(-1, 5),
                                   BaseRing::quadratic(10, 7), BaseRing::quadratic(-15, 13)};
    for (const auto& R : bases)
        for (Int d = 1; d <= 300; ++d) {
            Int deg = R.local_cyclotomic_degree(d);
            REQUIRE(euler_phi(d) % deg == 0);
        }
}

TEST_CASE("quadratic residue size matches the legendre split") {
    for (Int d = -30; d <= 30; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        for (Int p : {3, 5, 7, 11, 13, 17, 19}) {
            BaseRing R = BaseRing::quadratic(d, p);
            Int N = R.residue_size();
            REQUIRE((N == p || N == p * p));
            CHECK((N == p) == (legendre(R.discriminant(), p) >= 0));
        }
    }
}

TEST_CASE("residue_size overflows loudly instead of wrapping") {
    // ord_199(3) = 99, and 3^99 does not fit in 64 bits
    BaseRing R = BaseRing::cyclotomic(199, 3);
    CHECK(R.residue_exponent() == mult_order(3, 199));
    CHECK_THROWS_AS(R.residue_size(), std::overflow_error);
    // the classifier route never materializes the residue size
    CHECK_NOTHROW(R.residue_order(10));
}

TEST_CASE("cyclotomic_poly_irreducible examples") {
    for (Int n : {1, 2, 3, 8, 12, 35}) CHECK(BaseRing::rational(11).cyclotomic_poly_irreducible(n));
    CHECK(BaseRing::cyclotomic(5, 3).cyclotomic_poly_irreducible(4));
    CHECK_FALSE(BaseRing::quadratic(5, 11).cyclotomic_poly_irreducible(5));
}

TEST_CASE("cyclotomic base with m = 1 or 2 behaves like Q") {
    for (Int p : {3, 5, 7, 11}) {
        BaseRing q = BaseRing::rational(p);
        for (Int m : {1, 2}) {
            BaseRing c = BaseRing::cyclotomic(m, p);
            CHECK(c.residue_size() == q.residue_size());
            for (Int d = 1; d <= 100; ++d)
                REQUIRE(c.local_cyclotomic_degree(d) == q.local_cyclotomic_degree(d));
        }
    }
}
